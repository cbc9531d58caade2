#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace detail {

// Lanczos coefficients, g = 607/128, 15 terms (Godfrey).
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5};

// log Gamma(s) for Re(s) >= 1/2.
inline cplx lanczos_log_gamma(cplx s) {
    cplx z = s - 1.0;
    cplx a = lanczos_c[0];
    for (std::size_t k = 1; k < lanczos_c.size(); ++k) a += lanczos_c[k] / (z + double(k));
    cplx t = z + lanczos_g + 0.5;
    return 0.5 * std::log(two_pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

inline void check_pole(cplx s) {
    if (is_exact_integer(s) && s.real() <= 0.0) {
        long n = static_cast<long>(s.real());
        throw PoleError("gamma pole at s = " + std::to_string(n), n);
    }
}

}  // namespace detail

inline cplx complex_gamma(cplx s) {
    detail::check_pole(s);
    if (is_exact_integer(s) && s.real() <= 171.0) {
        double f = 1.0;
        for (int k = 2; k < static_cast<int>(s.real()); ++k) f *= k;
        return f;
    }
    if (s.real() < 0.5) {
        // Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return pi / (sinpi(s) * std::exp(detail::lanczos_log_gamma(1.0 - s)));
    }
    return std::exp(detail::lanczos_log_gamma(s));
}

// Entire; exactly zero at s = 0, -1, -2, ...
inline cplx reciprocal_gamma(cplx s) {
    if (is_exact_integer(s) && s.real() <= 0.0) return 0.0;
    if (s.real() < 0.5) return sinpi(s) * std::exp(detail::lanczos_log_gamma(1.0 - s)) / pi;
    if (is_exact_integer(s) && s.real() <= 171.0) return 1.0 / complex_gamma(s);
    return std::exp(-detail::lanczos_log_gamma(s));
}

}  // namespace lerch
