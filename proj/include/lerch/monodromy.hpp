#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"
#include "lerch/phi.hpp"
#include "lerch/word.hpp"

namespace lerch {

struct Contribution {
    std::string term;
    cplx value;
};

struct MonodromyResult {
    cplx value{0.0, 0.0};
    std::vector<Contribution> contributions;
};

struct BranchValue {
    cplx base;
    std::vector<Contribution> contributions;
    cplx total;
};

namespace detail {

// a = Log z / 2 pi i with the semi-principal Log, so 0 <= Re(a) < 1.
// The positive half-line (0,1) is accepted as the upper edge of the cut
// domain; 0 and [1, inf) are rejected.
inline cplx monodromy_a(cplx z) {
    if (z == cplx(0.0, 0.0)) throw BranchError("z = 0 is a branch point of z^{-c}");
    if (z.imag() == 0.0 && z.real() >= 1.0) throw BranchError("z on the cut [1, inf)");
    return semi_principal_log(z) / (two_pi * I);
}

// distance of s from the nearest integer, as a complex offset
inline cplx integer_offset(cplx s) { return s - std::round(s.real()); }

}  // namespace detail

// f_n = e^{pi i(s-1)} e^{2 pi i n c} z^{-c} (n - a)^{s-1}   (n >= 1)
//     = e^{2 pi i n c} z^{-c} (a - n)^{s-1}                (n <= 0)
inline cplx f_elementary(long n, cplx s, cplx z, cplx c) {
    const cplx a = detail::monodromy_a(z);
    const cplx zc = std::exp(-c * semi_principal_log(z));
    const cplx phase = exp_2pi_i(double(n) * c);
    if (n >= 1)
        return std::exp(I * pi * (s - 1.0)) * phase * zc * principal_power(double(n) - a, s - 1.0);
    return phase * zc * principal_power(a - double(n), s - 1.0);
}

// c_n(s) = (2 pi)^{s-1} Gamma(1-s) e^{-+ pi i (1-s)/2}, upper sign for n >= 1.
inline cplx c_coeff(long n, cplx s) {
    if (is_exact_integer(s) && s.real() >= 1.0)
        throw PoleError("c_n(s) has a simple pole at positive integer s", static_cast<long>(s.real()));
    const cplx sign = n >= 1 ? -1.0 : 1.0;
    return std::exp((s - 1.0) * std::log(two_pi)) * complex_gamma(1.0 - s) *
           std::exp(sign * I * pi * (1.0 - s) / 2.0);
}

// (lambda^n - 1)/(lambda - 1) with lambda = e^{2 pi i s}; equals n at integer s.
inline cplx geometric_ratio(long n, cplx s) {
    const cplx d = detail::integer_offset(s);
    if (d == cplx(0.0, 0.0)) return double(n);
    if (std::abs(d) < 1e-8) {
        // expansion of expm1(2 pi i n d) / expm1(2 pi i d)
        const cplx x = two_pi * I * d;
        const double nn = double(n);
        return nn * (1.0 + 0.5 * (nn - 1.0) * x + (nn - 1.0) * (2.0 * nn - 1.0) / 12.0 * x * x);
    }
    return expm1(two_pi * I * double(n) * d) / expm1(two_pi * I * d);
}

// -(2 pi)^s e^{pi i s/2} / Gamma(s); exactly 0 for s in Z_{<=0}.
inline cplx z1_prefactor(cplx s) {
    const cplx rg = reciprocal_gamma(s);
    if (rg == cplx(0.0, 0.0)) return 0.0;
    return -std::exp(s * std::log(two_pi)) * std::exp(I * pi * s / 2.0) * rg;
}

// Monodromy of (Z0^k Z1 Z0^-k)^j applied to the principal branch.
inline cplx monodromy_Z_conj(long k, long j, cplx s, cplx z, cplx c) {
    if (j == 0) return 0.0;
    const cplx f = f_elementary(k, s, z, c);
    const cplx C = z1_prefactor(s);
    if (C == cplx(0.0, 0.0)) return 0.0;
    return C * geometric_ratio(j, s) * f;
}

// Monodromy of Y_n^k: 0 for n >= 1 and (e^{-2 pi i k s} - 1) z^{-n} (c-n)^{-s} for n <= 0.
inline cplx monodromy_Y(long n, long k, cplx s, cplx z, cplx c) {
    if (n >= 1 || k == 0) return 0.0;
    if (c == cplx(double(n), 0.0))
        throw SingularStratumError("monodromy of Y_" + std::to_string(n) + " at c = " + std::to_string(n));
    const cplx d = detail::integer_offset(s);
    const cplx factor = expm1(-two_pi * I * double(k) * d);
    if (factor == cplx(0.0, 0.0)) return 0.0;
    return factor * ipow(z, -n) * principal_power(c - double(n), -s);
}

// The Z part of a word reduces to Z0^t times a product of conjugates
// Z0^k Z1 Z0^-k with net exponents h(k); the trailing Z0^t relabels
// f_k to f_{k-t}. The Y part contributes its exponent sums.
inline MonodromyResult monodromy(const HomotopyWord& w, cplx s, cplx z, cplx c) {
    MonodromyResult r;
    const ZProfile p = z_profile(w.z_part);
    for (auto [k, h] : p.h) {
        if (h == 0) continue;
        const long idx = k - p.t;
        cplx v = 0.0;
        const cplx C = z1_prefactor(s);
        const cplx f = f_elementary(idx, s, z, c);
        if (C != cplx(0.0, 0.0)) v = C * geometric_ratio(h, s) * f;
        std::string term = "(Z0^" + std::to_string(k) + " Z1 Z0^" + std::to_string(-k) + ")^" +
                           std::to_string(h) + " -> f_" + std::to_string(idx);
        r.contributions.push_back({term, v});
        r.value += v;
    }
    for (auto [n, k] : w.y_exponents) {
        cplx v = monodromy_Y(n, k, s, z, c);
        r.contributions.push_back({"Y" + std::to_string(n) + "^" + std::to_string(k), v});
        r.value += v;
    }
    return r;
}

inline BranchValue branch_value(const HomotopyWord& w, cplx s, cplx z, cplx c,
                                double tol = default_tol) {
    MonodromyResult m = monodromy(w, s, z, c);
    cplx base = phi(s, z, c, tol).value;
    return {base, m.contributions, base + m.value};
}

enum class MonodromySpaceKind { generic, positive_integer, nonpositive_integer };

struct MonodromySpaceBasis {
    MonodromySpaceKind kind;
    std::vector<std::string> families;
    std::optional<int> dimension;  // empty when infinite
    std::string description;
};

inline MonodromySpaceBasis monodromy_space_basis(cplx s) {
    if (is_exact_integer(s) && s.real() <= 0.0)
        return {MonodromySpaceKind::nonpositive_integer,
                {"Z~"},
                1,
                "one-dimensional: every monodromy vanishes and the space is spanned by Z~"};
    if (is_exact_integer(s))
        return {MonodromySpaceKind::positive_integer,
                {"M_{Z0^k Z1 Z0^-k}(Z~), k in Z", "Z~"},
                std::nullopt,
                "Z-conjugate monodromies together with Z~; all Y_n monodromies vanish"};
    return {MonodromySpaceKind::generic,
            {"M_{Z0^k Z1 Z0^-k}(Z~), k in Z", "M_{Y_n}(Z~), n <= 0", "Z~"},
            std::nullopt,
            "Z-conjugate monodromies, Y_n monodromies and Z~"};
}

inline std::string to_string(MonodromySpaceKind k) {
    switch (k) {
    case MonodromySpaceKind::generic: return "generic";
    case MonodromySpaceKind::positive_integer: return "positive_integer";
    case MonodromySpaceKind::nonpositive_integer: return "nonpositive_integer";
    }
    return "generic";
}

}  // namespace lerch
