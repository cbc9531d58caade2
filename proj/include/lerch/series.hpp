#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"

namespace lerch {

struct SeriesResult {
    cplx value;
    double error;
    std::size_t terms;
};

// Adds term(0), term(1), ... until bound(N) <= tol, where bound(N) majorizes
// the tail sum from index N on.
template <class Term, class Bound>
SeriesResult sum_with_tail_bound(Term&& term, Bound&& bound, double tol,
                                 std::size_t max_terms = 2000000) {
    cplx sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t n = 0; n <= max_terms; ++n) {
        double b = bound(n);
        if (b <= tol) {
            // rounding in the partial sum is part of the reported error
            double rounding = 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
            return {sum, b + rounding, n};
        }
        cplx t = term(n);
        sum += t;
        abs_sum += std::abs(t);
    }
    throw AccuracyError("series tail bound did not fall below tolerance", sum.real(),
                        sum.imag(), bound(max_terms));
}

}  // namespace lerch
