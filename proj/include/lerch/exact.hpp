#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <string>

#include "lerch/branch.hpp"

namespace lerch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

struct ExactComplex {
    Rational re{0};
    Rational im{0};

    cplx to_complex() const { return {to_double(re), to_double(im)}; }
    bool is_real() const { return im == 0; }
    bool is_integer() const { return im == 0 && lerch::is_integer(re); }
};

// A scalar parameter with an optional exact value. Decimal literals parse to
// exact rationals but keep the approximate flag.
struct Param {
    cplx value{0.0, 0.0};
    std::optional<ExactComplex> exact;
    bool approximate = false;
    bool infinite = false;

    Param() = default;
    Param(cplx v) : value(v) {}  // NOLINT(google-explicit-constructor)
    Param(double v) : value(v) {}  // NOLINT(google-explicit-constructor)
    static Param rational(const Rational& q) {
        Param p;
        p.value = to_double(q);
        p.exact = ExactComplex{q, 0};
        return p;
    }

    bool exact_integer() const {
        if (exact) return exact->is_integer();
        return is_exact_integer(value);
    }
};

}  // namespace lerch
