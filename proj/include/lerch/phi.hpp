#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/point.hpp"
#include "lerch/quadrature.hpp"
#include "lerch/series.hpp"
#include "lerch/special.hpp"

namespace lerch {

enum class Method { series, integral, c_shift, reflection };

inline std::string to_string(Method m) {
    switch (m) {
    case Method::series: return "series";
    case Method::integral: return "integral";
    case Method::c_shift: return "c_shift";
    case Method::reflection: return "reflection";
    }
    return "series";
}

struct EvalResult {
    cplx value;
    Method method;
    double error_estimate;
};

inline constexpr double default_tol = 1e-13;

// Dispatcher thresholds.
inline constexpr double series_radius = 0.75;
inline constexpr double singular_guard = 1e-8;

EvalResult phi(cplx s, cplx z, cplx c, double tol = default_tol);

namespace detail {

inline bool on_positive_cut(cplx z) { return z.imag() == 0.0 && z.real() >= 1.0; }

inline void guard_c_nonpositive(cplx c) {
    if (c.real() < 0.5 && near_integer(c, singular_guard)) {
        long n = static_cast<long>(std::round(c.real()));
        throw SingularStratumError("singular stratum c=" + std::to_string(n));
    }
}

// (x)^{-s} for real x > 0
inline cplx real_power(double x, cplx e) { return std::exp(e * std::log(x)); }

}  // namespace detail

// Sum_{n>=0} z^n (n+c)^{-s}; terms with Re(n+c) <= 0 use the principal power.
inline EvalResult phi_series(cplx s, cplx z, cplx c, double tol = default_tol) {
    double az = std::abs(z);
    if (!(az < 1.0)) throw DomainError("phi_series requires |z| < 1");
    if (is_exact_integer(c) && c.real() <= 0.0)
        throw SingularStratumError("singular stratum c=" + std::to_string(long(c.real())));

    const double sigma = s.real();
    const double tau = std::abs(s.imag());
    cplx zpow = 1.0;
    std::size_t cached = std::size_t(-1);
    cplx cached_term = 0.0;
    cplx running = 0.0;

    auto term_at = [&](std::size_t n) -> cplx {
        if (n == cached) return cached_term;
        // called with consecutive n only
        if (cached != std::size_t(-1)) zpow *= z;
        cplx w = double(n) + c;
        if (w == cplx(0.0, 0.0))
            throw SingularStratumError("series term with n + c = 0");
        cached_term = zpow * principal_power(w, -s);
        cached = n;
        return cached_term;
    };
    // |t_{n+1}/t_n| <= |z| (1 + 1/|n+c|)^{max(0,-sigma)} exp(|tau| / Re(n+c))
    auto ratio_bound = [&](std::size_t N) -> double {
        cplx w = double(N) + c;
        if (w.real() < 1.0) return 2.0;
        double grow = sigma < 0.0 ? std::pow(1.0 + 1.0 / std::abs(w), -sigma) : 1.0;
        return az * grow * std::exp(tau / w.real());
    };
    auto term = [&](std::size_t n) {
        cplx t = term_at(n);
        running += t;
        return t;
    };
    auto bound = [&](std::size_t N) -> double {
        if (az == 0.0 && N >= 1) return 0.0;
        double q = ratio_bound(N);
        if (q >= 1.0) return HUGE_VAL;
        double tail = std::abs(term_at(N)) / (1.0 - q);
        return tail / (1.0 + std::abs(running));
    };
    SeriesResult r = sum_with_tail_bound(term, bound, 0.1 * tol);
    return {r.value, Method::series, r.error * (1.0 + std::abs(r.value))};
}

namespace detail {

// Gamma(s)^{-1} int t^{s-1} e^{-ct} / (1 - z e^{-t}) dt along the ray t = w u,
// |w| = 1, split at u = 1. For Re(s) < 1 the value h(0) is subtracted on
// (0,1) and restored as h(0)/s.
inline EvalResult integral_along(cplx s, cplx z, cplx c, cplx w, double tol) {
    const cplx sm1 = s - 1.0;
    const bool subtract = s.real() < 1.0;
    const cplx h0 = 1.0 / (1.0 - z);
    const cplx cw = c * w;

    auto near = [&](double u) -> cplx {
        cplx et = std::exp(-w * u);
        cplx tp = std::exp(sm1 * std::log(u));
        if (subtract) {
            cplx num = (1.0 - z) * expm1(-cw * u) + z * expm1(-w * u);
            return tp * num / ((1.0 - z * et) * (1.0 - z));
        }
        return tp * std::exp(-cw * u) / (1.0 - z * et);
    };
    auto far = [&](double u) -> cplx {
        return std::exp(sm1 * std::log(u) - cw * u) / (1.0 - z * std::exp(-w * u));
    };
    QuadResult a = tanh_sinh_unit(near, 0.25 * tol);
    QuadResult b = exp_sinh(far, 1.0, 0.25 * tol);
    cplx total = a.value + b.value + (subtract ? h0 / s : cplx(0.0));
    // t^{s-1} dt = w^s u^{s-1} du
    const cplx ws = w == cplx(1.0, 0.0) ? cplx(1.0) : std::exp(s * std::log(w));
    cplx rg = reciprocal_gamma(s) * ws;
    cplx value = rg * total;
    double err = std::abs(rg) * (a.error + b.error) + 1e-16 * std::abs(value);
    if (!a.converged || !b.converged || !finite(value) || err > tol * (1.0 + std::abs(value)))
        throw AccuracyError("integral representation did not converge", value.real(), value.imag(), err);
    return {value, Method::integral, err};
}

// Near the cut the poles t = Log z + 2 pi i k approach the real axis. The
// ray is turned away from the nearest one, halfway to the next pole on the
// other side; no pole is crossed so the value is unchanged.
inline cplx integral_ray(cplx z, cplx c) {
    const double arg = std::arg(z);
    if (!(std::abs(z) > 1.0 && std::abs(arg) < 0.3)) return 1.0;
    double theta = 0.5 * std::atan2(two_pi - std::abs(arg), std::log(std::abs(z)));
    // keep Re(c w) > 0
    theta = std::min(theta, 0.5 * (0.5 * pi - std::abs(std::arg(c))));
    return std::polar(1.0, arg >= 0.0 ? -theta : theta);
}

}  // namespace detail

inline EvalResult phi_integral(cplx s, cplx z, cplx c, double tol = default_tol) {
    if (!(s.real() > 0.0)) throw DomainError("phi_integral requires Re(s) > 0");
    if (!(c.real() > 0.0)) throw DomainError("phi_integral requires Re(c) > 0");
    if (detail::on_positive_cut(z)) throw BranchError("z on the cut [1, inf)");
    return detail::integral_along(s, z, c, detail::integral_ray(z, c), tol);
}

// Phi(s,z,c) = sum_{k<N} z^k (c+k)^{-s} + z^N Phi(s,z,c+N)
inline EvalResult phi_c_shift(cplx s, cplx z, cplx c, long N, double tol = default_tol) {
    if (N < 0) throw DomainError("phi_c_shift requires N >= 0");
    cplx sum = 0.0, zk = 1.0;
    for (long k = 0; k < N; ++k) {
        cplx w = c + double(k);
        if (w == cplx(0.0, 0.0))
            throw SingularStratumError("singular stratum c=" + std::to_string(-k));
        sum += zk * principal_power(w, -s);
        zk *= z;
    }
    EvalResult inner = phi(s, z, c + double(N), tol);
    if (N == 0) return inner;
    cplx value = sum + zk * inner.value;
    double err = std::abs(zk) * inner.error_estimate + 1e-16 * std::abs(sum);
    return {value, Method::c_shift, err};
}

// Euler-Maclaurin summation of sum_{n>=0} (n+c)^{-s}.
EvalResult hurwitz_zeta(cplx s, cplx c, double tol = default_tol);

namespace detail {

// Lerch's transformation with s' = 1 - s and 0 < Re(c) < 1 (not near an integer):
// Phi(s,z,c) = (2pi)^{-s'} Gamma(s') { e^{pi i s'/2} e^{-2pi i a c} Phi(s', e^{-2pi i c}, a)
//                                     + e^{-pi i s'/2} e^{2pi i c(1-a)} Phi(s', e^{2pi i c}, 1-a) }
// with a = Log z / 2pi i. For z in (0,1) a is purely imaginary; the inner
// evaluation then starts with a c-shift in the a slot.
inline EvalResult reflect_strip(cplx s, cplx a, cplx c, double tol) {
    const cplx sp = 1.0 - s;
    EvalResult A = phi(sp, exp_2pi_i(-c), a, tol);
    EvalResult B = phi(sp, exp_2pi_i(c), 1.0 - a, tol);
    cplx pref = std::exp(-sp * std::log(two_pi)) * complex_gamma(sp);
    cplx ea = std::exp(I * pi * sp / 2.0) * exp_2pi_i(-a * c);
    cplx eb = std::exp(-I * pi * sp / 2.0) * exp_2pi_i(c * (1.0 - a));
    cplx value = pref * (ea * A.value + eb * B.value);
    double err = std::abs(pref) * (std::abs(ea) * A.error_estimate + std::abs(eb) * B.error_estimate) +
                 1e-16 * std::abs(pref) * (std::abs(ea * A.value) + std::abs(eb * B.value));
    return {value, Method::reflection, err};
}

// c = 1: the inner functions become Hurwitz zeta values and the phase
// e^{2 pi i c (1-a)} collapses to e^{-2 pi i a}.
inline EvalResult reflect_c_one(cplx s, cplx z, cplx a, double tol) {
    if (s == cplx(0.0, 0.0)) return {1.0 / (1.0 - z), Method::reflection, 1e-16};
    const cplx sp = 1.0 - s;
    EvalResult A = hurwitz_zeta(sp, a, tol);
    EvalResult B = hurwitz_zeta(sp, 1.0 - a, tol);
    cplx pref = std::exp(-sp * std::log(two_pi)) * complex_gamma(sp) * exp_2pi_i(-a);
    cplx ea = std::exp(I * pi * sp / 2.0), eb = std::exp(-I * pi * sp / 2.0);
    cplx value = pref * (ea * A.value + eb * B.value);
    double err = std::abs(pref) * (std::abs(ea) * A.error_estimate + std::abs(eb) * B.error_estimate) +
                 1e-16 * std::abs(pref) * (std::abs(ea * A.value) + std::abs(eb * B.value));
    return {value, Method::reflection, err};
}

// Taylor expansion in c about c0 using the ladder
// d^k/dc^k Phi(s,z,c) = (-1)^k (s)_k Phi(s+k,z,c).
inline EvalResult phi_taylor_c(cplx s, cplx z, cplx c, cplx c0, double tol) {
    const cplx h = c - c0;
    cplx sum = 0.0, coef = 1.0;  // (-h)^k (s)_k / k!
    double err = 0.0;
    int small = 0;
    for (int k = 0; k < 300; ++k) {
        EvalResult t = phi(s + double(k), z, c0, tol);
        cplx term = coef * t.value;
        sum += term;
        err += std::abs(coef) * t.error_estimate;
        if (std::abs(term) <= 0.1 * tol * (1.0 + std::abs(sum)))
            ++small;
        else
            small = 0;
        if (small >= 3) return {sum, Method::reflection, err + std::abs(term)};
        coef *= -h * (s + double(k)) / double(k + 1);
    }
    throw AccuracyError("Taylor expansion in c did not converge", sum.real(), sum.imag(), err);
}

}  // namespace detail

// Re(s) < 1/2 evaluation through Lerch's transformation formula. c is moved
// into the strip 0 < Re(c) <= 1 by a downward shift; integer c goes through
// Hurwitz zeta values and c near an integer through a Taylor expansion.
inline EvalResult phi_reflect(cplx s, cplx z, cplx c, double tol = default_tol) {
    if (!(s.real() < 0.5)) throw DomainError("phi_reflect requires Re(s) < 1/2");
    if (z == cplx(0.0, 0.0)) throw DomainError("phi_reflect requires z != 0");
    if (detail::on_positive_cut(z)) throw BranchError("z on the cut [1, inf)");
    if (!(c.real() > 0.0)) throw DomainError("phi_reflect requires Re(c) > 0; shift c first");

    const cplx a = semi_principal_log(z) / (two_pi * I);
    const double rc = c.real();
    const double nearest = std::round(rc);
    const bool exact_int = is_exact_integer(c);
    if (!exact_int && nearest >= 1.0 && std::abs(rc - nearest) < 0.05)
        return detail::phi_taylor_c(s, z, c, cplx(nearest + 0.5, c.imag()), tol);
    EvalResult base;
    long N;
    cplx cs;
    if (exact_int) {
        N = static_cast<long>(rc) - 1;
        cs = 1.0;
        // the two Hurwitz terms cancel as s -> 0
        if (std::abs(s) < 1e-3 && s != cplx(0.0, 0.0))
            base = detail::phi_taylor_c(s, z, cs, 1.5, tol);
        else
            base = detail::reflect_c_one(s, z, a, tol);
    } else {
        N = rc > 1.0 ? static_cast<long>(std::ceil(rc)) - 1 : 0;
        cs = c - double(N);
        base = detail::reflect_strip(s, a, cs, tol);
    }
    if (N == 0) return base;
    // Phi(c) = z^{-N} [Phi(c - N) - sum_{k<N} z^k (c - N + k)^{-s}]
    cplx sum = 0.0, zk = 1.0;
    for (long k = 0; k < N; ++k) {
        sum += zk * principal_power(cs + double(k), -s);
        zk *= z;
    }
    cplx value = (base.value - sum) / zk;
    double err = (base.error_estimate + 1e-16 * std::abs(sum)) / std::abs(zk);
    return {value, Method::reflection, err};
}

namespace detail {

inline EvalResult phi_route(cplx s, cplx z, cplx c, double tol) {
    if (!std::isfinite(std::abs(z))) throw SingularStratumError("singular stratum z=inf");
    if (std::abs(z - 1.0) < singular_guard) throw SingularStratumError("singular stratum z=1");
    detail::guard_c_nonpositive(c);

    if (std::abs(z) <= series_radius && c.real() > 0.0) return phi_series(s, z, c, tol);
    if (s.real() > 0.0 && c.real() > 0.0 && !detail::on_positive_cut(z))
        return phi_integral(s, z, c, tol);
    if (c.real() <= 0.0) {
        long N = static_cast<long>(std::ceil(1.0 - c.real()));
        return phi_c_shift(s, z, c, N, tol);
    }
    if (detail::on_positive_cut(z)) throw BranchError("z on the cut [1, inf)");
    return phi_reflect(s, z, c, tol);
}

}  // namespace detail

// Real s, z < 1 and c > 0 (or integer s) give a real value; rounding noise in
// the imaginary part is dropped.
inline EvalResult phi(cplx s, cplx z, cplx c, double tol) {
    EvalResult r = detail::phi_route(s, z, c, tol);
    if (s.imag() == 0.0 && z.imag() == 0.0 && c.imag() == 0.0 && z.real() < 1.0 &&
        (c.real() > 0.0 || is_exact_integer(s)))
        r.value.imag(0.0);
    return r;
}

inline EvalResult phi(const LerchPoint& p, double tol = default_tol) {
    StratumClass st = classify_stratum(p);
    if (!st.evaluable() && st.tag != StratumTag::singular_z0)
        throw SingularStratumError("singular stratum " + st.describe());
    return phi(p.s.value, p.z.value, p.c.value, tol);
}

namespace detail {

// B_{2k} / (2k)! for k = 0..K, from exact Bernoulli numbers.
inline const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        const int n_max = 140;
        std::vector<Rational> B(n_max + 1);
        B[0] = 1;
        for (int n = 1; n <= n_max; ++n) {
            Rational acc = 0;
            for (int k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * B[k];
            B[n] = -acc / (n + 1);
        }
        std::vector<double> out;
        for (int k = 0; 2 * k <= n_max; ++k)
            out.push_back(to_double(B[2 * k] / Rational(factorial(2 * k))));
        return out;
    }();
    return table;
}

}  // namespace detail

EvalResult periodic_zeta(cplx a, cplx s, double tol);

inline EvalResult hurwitz_zeta(cplx s, cplx c, double tol) {
    if (s == cplx(1.0, 0.0)) throw PoleError("Hurwitz zeta pole at s = 1", 1);
    if (is_exact_integer(c) && c.real() <= 0.0)
        throw SingularStratumError("singular stratum c=" + std::to_string(long(c.real())));
    if (s.real() < 0.0 && c.imag() == 0.0) {
        // Summation would cancel N^{1-s}-sized terms; use Hurwitz's formula
        // zeta(s,a) = Gamma(1-s)(2pi)^{s-1} [e^{-pi i(1-s)/2} F(a,1-s) + e^{pi i(1-s)/2} F(1-a,1-s)]
        // with 0 < a <= 1 and c = a + N.
        double a = c.real() - std::ceil(c.real()) + 1.0;
        long N = static_cast<long>(std::llround(c.real() - a));
        const cplx sp = 1.0 - s;
        cplx inner;
        double err;
        if (a == 1.0) {
            EvalResult z1 = hurwitz_zeta(sp, 1.0, tol);
            inner = 2.0 * std::cos(pi * sp / 2.0) * z1.value;
            err = 2.0 * std::abs(std::cos(pi * sp / 2.0)) * z1.error_estimate;
        } else {
            EvalResult f1 = periodic_zeta(a, sp, tol), f2 = periodic_zeta(1.0 - a, sp, tol);
            cplx e = std::exp(-I * pi * sp / 2.0);
            inner = e * f1.value + f2.value / e;
            err = std::abs(e) * f1.error_estimate + f2.error_estimate / std::abs(e);
        }
        cplx pref = complex_gamma(sp) * std::exp((s - 1.0) * std::log(two_pi));
        cplx value = pref * inner;
        err = std::abs(pref) * err + 1e-16 * std::abs(value);
        // zeta(s, a + N) = zeta(s, a) - sum_{k<N} (a+k)^{-s}; N < 0 adds terms back
        cplx shift = 0.0;
        for (long k = 0; k < N; ++k) shift += principal_power(a + double(k), -s);
        for (long k = N; k < 0; ++k) shift -= principal_power(a + double(k), -s);
        value -= shift;
        err += 1e-16 * std::abs(shift);
        if (s.imag() == 0.0 && c.real() > 0.0) value.imag(0.0);
        return {value, Method::reflection, err};
    }
    const auto& bf = detail::bernoulli_over_factorial();
    long N = std::max<long>(15, static_cast<long>(std::ceil(std::abs(s))) + 10);
    if (c.real() < 0.0) N += static_cast<long>(std::ceil(-c.real()));
    for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
        cplx sum = 0.0;
        double scale = 0.0;
        for (long n = 0; n < N; ++n) {
            cplx t = principal_power(double(n) + c, -s);
            sum += t;
            scale += std::abs(t);
        }
        cplx x = double(N) + c;
        cplx lx = std::log(x);
        cplx head = std::exp((1.0 - s) * lx) / (s - 1.0);
        sum += head + 0.5 * std::exp(-s * lx);
        scale += std::abs(head);
        cplx poch = s;  // (s)_{2k-1}
        double prev = HUGE_VAL;
        bool diverged = false;
        for (std::size_t k = 1; k < bf.size(); ++k) {
            cplx t = bf[k] * poch * std::exp((-s - double(2 * k - 1)) * lx);
            double mag = std::abs(t);
            if (mag > prev) {
                diverged = true;
                break;
            }
            sum += t;
            prev = mag;
            if (mag <= 0.1 * tol * (1.0 + std::abs(sum)))
                return {sum, Method::series, mag + 2.2e-16 * scale};
            poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
        }
        (void)diverged;
    }
    throw AccuracyError("Euler-Maclaurin summation did not converge", 0.0, 0.0, HUGE_VAL);
}

// Li_s(z, c) = z Phi(s, z, c)
inline EvalResult extended_polylog(cplx s, cplx z, cplx c, double tol = default_tol) {
    if (z == cplx(0.0, 0.0)) {
        detail::guard_c_nonpositive(c);
        return {0.0, Method::series, 0.0};
    }
    EvalResult r = phi(s, z, c, tol);
    return {z * r.value, r.method, std::abs(z) * r.error_estimate};
}

// zeta(s, a, c) = Phi(s, e^{2 pi i a}, c)
inline EvalResult lerch_zeta(cplx s, cplx a, cplx c, double tol = default_tol) {
    if (!(a.real() > 0.0 && a.real() < 1.0)) throw DomainError("lerch_zeta requires 0 < Re(a) < 1");
    return phi(s, exp_2pi_i(a), c, tol);
}

// F(a, s) = sum_{n>=1} e^{2 pi i n a} n^{-s}, entire in s for 0 < Re(a) < 1.
// With w = e^{2 pi i a}, K = ceil(1 - Re s) for Re(s) < 1 and s0 = s + K:
//   F(a, s) = Gamma(s0)^{-1} int_0^inf t^{s0-1} q_K(w e^{-t}) dt,
// q_K = r_K / (1-x)^{K+1} being the K-fold a-derivative of the integrand
// x/(1-x), up to the factor (2 pi i)^K.
inline EvalResult periodic_zeta(cplx a, cplx s, double tol = default_tol) {
    if (!(a.real() > 0.0 && a.real() < 1.0))
        throw DomainError("periodic_zeta requires 0 < Re(a) < 1");
    const cplx w = exp_2pi_i(a);
    const long K = s.real() < 1.0 ? static_cast<long>(std::ceil(1.0 - s.real())) : 0;
    const cplx s0 = s + double(K);
    const IntPolynomial rK = r_poly(static_cast<unsigned>(K));
    std::vector<double> coef;
    for (auto& v : rK.coefficients()) coef.push_back(v.convert_to<double>());
    const cplx sm1 = s0 - 1.0;

    auto qK = [&](cplx x) -> cplx {
        cplx num;
        if (K == 0) {
            num = x;
        } else {
            num = 0.0;
            for (auto it = coef.rbegin(); it != coef.rend(); ++it) num = num * x + *it;
        }
        return num / ipow(1.0 - x, K + 1);
    };
    auto f = [&](double t) -> cplx {
        return std::exp(sm1 * std::log(t)) * qK(w * std::exp(-t));
    };
    QuadResult lo = tanh_sinh_unit(f, 0.25 * tol);
    QuadResult hi = exp_sinh(f, 1.0, 0.25 * tol);
    cplx rg = reciprocal_gamma(s0);
    cplx value = rg * (lo.value + hi.value);
    double err = std::abs(rg) * (lo.error + hi.error) + 1e-16 * std::abs(value);
    if (!lo.converged || !hi.converged || !detail::finite(value))
        throw AccuracyError("periodic zeta integral did not converge", value.real(), value.imag(),
                            err);
    return {value, Method::integral, err};
}

}  // namespace lerch
