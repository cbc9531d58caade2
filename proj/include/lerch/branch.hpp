#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "lerch/errors.hpp"

namespace lerch {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

enum class Branch { principal, semi_principal };

struct BranchedComplex {
    cplx value;
    Branch branch;
};

// Im in (-pi, pi]. The negative real axis belongs to the upper half-plane,
// so -1 - 0i still maps to +pi i.
inline cplx principal_log(cplx z) {
    if (z == cplx(0.0, 0.0)) throw DomainError("logarithm of zero");
    double arg;
    if (z.imag() == 0.0)
        arg = z.real() < 0.0 ? pi : 0.0;
    else
        arg = std::atan2(z.imag(), z.real());
    return {std::log(std::abs(z)), arg};
}

// Im in [0, 2pi). The positive real axis belongs to the upper half-plane.
inline cplx semi_principal_log(cplx z) {
    if (z == cplx(0.0, 0.0)) throw DomainError("logarithm of zero");
    double arg;
    if (z.imag() == 0.0) {
        arg = z.real() < 0.0 ? pi : 0.0;
    } else {
        arg = std::atan2(z.imag(), z.real());
        if (arg < 0.0) {
            arg += two_pi;
            if (arg >= two_pi) arg = std::nextafter(two_pi, 0.0);
        }
    }
    return {std::log(std::abs(z)), arg};
}

inline cplx branch_log(cplx z, Branch b) {
    return b == Branch::principal ? principal_log(z) : semi_principal_log(z);
}

inline BranchedComplex branched_log(cplx z, Branch b) { return {branch_log(z, b), b}; }

// Integer powers by repeated squaring; no branch involved.
inline cplx ipow(cplx z, long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx r = 1.0, b = z;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// w^s := exp(s log_b w); small integer exponents bypass the logarithm.
inline cplx branched_power(cplx w, cplx s, Branch b) {
    if (w == cplx(0.0, 0.0)) {
        if (s.real() > 0.0) return 0.0;
        throw DomainError("zero raised to a power with non-positive real part");
    }
    if (s == cplx(0.0, 0.0)) return 1.0;
    if (s.imag() == 0.0 && std::abs(s.real()) <= 64.0 && s.real() == std::round(s.real()))
        return ipow(w, static_cast<long>(s.real()));
    return std::exp(s * branch_log(w, b));
}

inline cplx principal_power(cplx w, cplx s) { return branched_power(w, s, Branch::principal); }


// sin(pi x), cos(pi x) with argument reduction, exact zeros at integers.
inline double sinpi(double x) {
    double n = std::round(x);
    double r = x - n;
    double v = std::sin(pi * r);
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

inline double cospi(double x) {
    double n = std::round(x);
    double r = x - n;
    double v = std::sin(pi * (0.5 - std::abs(r)));  // exact zero at half-integers
    return std::fmod(n, 2.0) == 0.0 ? v : -v;
}

inline cplx sinpi(cplx s) {
    double x = s.real(), y = s.imag();
    return {sinpi(x) * std::cosh(pi * y), cospi(x) * std::sinh(pi * y)};
}

// exp(w) - 1 without cancellation for small w.
inline cplx expm1(cplx w) {
    double x = w.real(), y = w.imag();
    double em1 = std::expm1(x);
    double sh = std::sin(0.5 * y);
    double re = em1 * std::cos(y) - 2.0 * sh * sh;
    double im = std::exp(x) * std::sin(y);
    return {re, im};
}

// exp(2 pi i w), exactly 1 at integer w.
inline cplx exp_2pi_i(cplx w) {
    const double x = 2.0 * (w.real() - std::round(w.real()));
    return std::exp(-two_pi * w.imag()) * cplx(cospi(x), sinpi(x));
}

inline bool is_exact_integer(cplx s) {
    return s.imag() == 0.0 && std::isfinite(s.real()) && s.real() == std::round(s.real());
}

inline bool near_integer(cplx s, double tol) {
    return std::abs(s.imag()) <= tol && std::abs(s.real() - std::round(s.real())) <= tol;
}

}  // namespace lerch
