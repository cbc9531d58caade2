#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/exact.hpp"
#include "lerch/polynomial.hpp"

namespace lerch {

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// r_m with q_m = r_m / (1-z)^(m+1), q_{m+1} = z q_m'.
// Differentiating gives r_{m+1} = z[(1-z) r_m' + (m+1) r_m].
inline IntPolynomial r_poly(unsigned m) {
    const IntPolynomial z{0, 1};
    const IntPolynomial one_minus_z{1, -1};
    IntPolynomial r{1};
    for (unsigned k = 0; k < m; ++k)
        r = z * (one_minus_z * r.derivative() + r * BigInt(k + 1));
    return r;
}

// q_m = numerator / (1-z)^pole_order
struct RationalQ {
    IntPolynomial numerator;
    unsigned pole_order = 1;

    cplx evaluate(cplx z) const {
        return evaluate_complex(numerator, z) / ipow(1.0 - z, pole_order);
    }
};

inline RationalQ q_rational(unsigned m) { return {r_poly(m), m + 1}; }

// a_{m,k}, k = 0..m+1, with r_m(z) = sum_k a_{m,k} (1-z)^(m+1-k).
inline std::vector<BigInt> laurent_coeffs(unsigned m) {
    std::vector<BigInt> a(m + 2, BigInt(0));
    for (unsigned k = 1; k <= m + 1; ++k) {
        BigInt s = 0;
        for (unsigned l = 0; l < k; ++l) {
            BigInt term = binomial(k - 1, l) * boost::multiprecision::pow(BigInt(l + 1), m);
            if (l % 2) s -= term; else s += term;
        }
        a[k] = (m % 2) ? BigInt(-s) : s;
    }
    return a;
}

inline IntPolynomial laurent_reconstruct(unsigned m, const std::vector<BigInt>& a) {
    const IntPolynomial one_minus_z{1, -1};
    IntPolynomial r;
    for (unsigned k = 0; k < a.size(); ++k) r += one_minus_z.pow(m + 1 - k) * a[k];
    return r;
}

struct RationalEval {
    std::optional<Rational> value;  // empty at a pole
    int pole_order = 0;
};

// numerator(z, c) / (1-z)^pole_order
struct BivariateRational {
    BivariatePolynomial numerator;
    int pole_order = 1;

    RationalEval evaluate(const Rational& z, const Rational& c) const {
        if (z == 1) return {std::nullopt, pole_order};
        Rational d = 1;
        for (int i = 0; i < pole_order; ++i) d *= (1 - z);
        return {numerator.evaluate(z, c) / d, 0};
    }

    cplx evaluate(cplx z, cplx c) const {
        if (z == cplx(1.0, 0.0))
            throw PoleError("negative polylogarithm has a pole at z = 1", 1, pole_order);
        return numerator.evaluate(z, c) / ipow(1.0 - z, pole_order);
    }

    BivariateRational d_dc() const { return {numerator.d_dc(), pole_order}; }
};

// Li_{-m}(z, c) = z sum_k C(m,k) c^k q_{m-k}(z), over the common denominator (1-z)^(m+1).
inline BivariateRational negative_polylog(unsigned m) {
    const IntPolynomial one_minus_z{1, -1};
    BivariatePolynomial num;
    for (unsigned k = 0; k <= m; ++k) {
        IntPolynomial zpart = IntPolynomial{0, 1} * r_poly(m - k) * one_minus_z.pow(k) * binomial(m, k);
        num += BivariatePolynomial::from_z(zpart) *
               BivariatePolynomial::term(0, static_cast<int>(k), 1);
    }
    return {num, static_cast<int>(m) + 1};
}

struct EgfCoefficient {
    unsigned order;
    Rational series;   // Taylor coefficient of the generating function
    Rational expected; // Li_{-m}(z0, c0) / m!
    bool match;
};

struct EgfReport {
    Rational z0, c0;
    std::vector<EgfCoefficient> coefficients;
    bool passed = true;
};

// Taylor coefficients of z0 e^{c0 u} / (1 - z0 e^u) through u^M, by exact
// power-series division, compared with Li_{-m}(z0, c0)/m!.
inline EgfReport egf_check(const Rational& z0, const Rational& c0, unsigned M) {
    if (z0 == 1) throw DomainError("egf_check requires z0 != 1");
    std::vector<Rational> num(M + 1), den(M + 1), q(M + 1);
    Rational fact = 1, cpow = 1;
    for (unsigned n = 0; n <= M; ++n) {
        if (n) {
            fact *= n;
            cpow *= c0;
        }
        num[n] = z0 * cpow / fact;
        den[n] = (n == 0 ? Rational(1) : Rational(0)) - z0 / fact;
    }
    for (unsigned n = 0; n <= M; ++n) {
        Rational acc = num[n];
        for (unsigned k = 0; k < n; ++k) acc -= q[k] * den[n - k];
        q[n] = acc / den[0];
    }
    EgfReport rep{z0, c0, {}, true};
    Rational mf = 1;
    for (unsigned m = 0; m <= M; ++m) {
        if (m) mf *= m;
        Rational expected = *negative_polylog(m).evaluate(z0, c0).value / mf;
        bool ok = (expected == q[m]);
        rep.passed = rep.passed && ok;
        rep.coefficients.push_back({m, q[m], expected, ok});
    }
    return rep;
}

struct IdentityCheck {
    unsigned m;
    std::string identity;  // "reflection", "recursion", "laurent"
    bool passed;
};

struct IdentityReport {
    unsigned m_max;
    std::vector<IdentityCheck> checks;
    bool passed = true;
};

// Exact checks for 1 <= m <= m_max:
//   reflection  z^{m+1} r_m(1/z) = r_m(z)
//   recursion   r_m = z sum_{j=1}^m C(m,j) r_{m-j} (1-z)^{j-1}
//   laurent     sum_k a_{m,k} (1-z)^{m+1-k} = r_m
// Throws IdentityViolation naming the first failure.
inline IdentityReport identity_suite(unsigned m_max) {
    if (m_max < 1) throw DomainError("identity_suite needs m_max >= 1");
    IdentityReport rep{m_max, {}, true};
    std::vector<IntPolynomial> r;
    for (unsigned m = 0; m <= m_max; ++m) r.push_back(r_poly(m));
    const IntPolynomial z{0, 1};
    const IntPolynomial one_minus_z{1, -1};
    for (unsigned m = 1; m <= m_max; ++m) {
        bool refl = r[m].reversed(m + 1) == r[m];
        IntPolynomial rec;
        for (unsigned j = 1; j <= m; ++j) rec += r[m - j] * one_minus_z.pow(j - 1) * binomial(m, j);
        rec = z * rec;
        bool recu = rec == r[m];
        bool laur = laurent_reconstruct(m, laurent_coeffs(m)) == r[m];
        rep.checks.push_back({m, "reflection", refl});
        rep.checks.push_back({m, "recursion", recu});
        rep.checks.push_back({m, "laurent", laur});
        for (auto& c : rep.checks)
            if (!c.passed)
                throw IdentityViolation("identity " + c.identity + " fails at m = " +
                                        std::to_string(c.m));
    }
    return rep;
}

// F(a, -m) = q_m(e^{2 pi i a}) for 0 < a < 1.
inline cplx periodic_zeta_special(const Rational& a, unsigned m) {
    if (a == 0 || a == 1) throw SingularStratumError("a in {0, 1} puts z = e^{2 pi i a} at 1");
    if (a < 0 || a > 1) throw DomainError("periodic_zeta_special requires 0 < a < 1");
    cplx w = exp_2pi_i(to_double(a));
    return q_rational(m).evaluate(w);
}

}  // namespace lerch
