#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/exact.hpp"
#include "lerch/transport.hpp"
#include "lerch/weyl.hpp"
#include "lerch/word.hpp"

namespace lerch {

enum class BasisKind { regular, singular };

inline std::string to_string(BasisKind k) { return k == BasisKind::regular ? "regular" : "singular"; }

struct FuchsianBasis {
    unsigned m;
    Param c;
    BasisKind kind;
    std::vector<std::string> entries;
};

namespace detail {

inline bool param_singular_c(const Param& c) {
    if (c.exact) return c.exact->is_integer() && c.exact->re <= 0;
    return singular_c(c.value);
}

inline std::string param_text(const Param& c) {
    if (c.exact) {
        if (c.exact->is_real()) return to_string(c.exact->re);
        const Rational& im = c.exact->im;
        return "(" + to_string(c.exact->re) + (im < 0 ? "-" : "+") + to_string(im < 0 ? Rational(-im) : im) + "i)";
    }
    auto g = [](double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        return std::string(buf);
    };
    if (c.value.imag() == 0.0) return g(c.value.real());
    return "(" + g(c.value.real()) + (c.value.imag() < 0 ? "-" : "+") + g(std::abs(c.value.imag())) + "i)";
}

inline std::string z_power_text(const Param& c) {
    // z^{1-c}
    if (c.exact && c.exact->is_real()) {
        Rational e = 1 - c.exact->re;
        if (e == 0) return "";
        if (e == 1) return "z";
        if (is_integer(e) && e > 0) return "z^" + to_string(e);
        return "z^(" + to_string(e) + ")";
    }
    return "z^(1-" + param_text(c) + ")";
}

}  // namespace detail

// Solutions {Li_{m,c} or Li*_m(., -k), b_{m-1}, ..., b_0}, b_j = z^{1-c} (log z)^j / j!.
inline FuchsianBasis basis(unsigned m, const Param& c) {
    if (m < 1) throw DomainError("basis requires m >= 1");
    FuchsianBasis b{m, c, detail::param_singular_c(c) ? BasisKind::singular : BasisKind::regular, {}};
    if (b.kind == BasisKind::singular)
        b.entries.push_back("Li*_" + std::to_string(m) + "(z," + detail::param_text(c) + ")");
    else
        b.entries.push_back("Li_{" + std::to_string(m) + "," + detail::param_text(c) + "}(z)");
    const std::string zp = detail::z_power_text(c);
    for (int j = int(m) - 1; j >= 0; --j) {
        std::string lg = j == 0 ? "" : j == 1 ? "log(z)" : "log(z)^" + std::to_string(j) + "/" + std::to_string(j) + "!";
        std::string e;
        if (zp.empty() && lg.empty())
            e = "1";
        else if (zp.empty())
            e = lg;
        else if (lg.empty())
            e = zp;
        else
            e = zp + "*" + lg;
        b.entries.push_back(e);
    }
    return b;
}

struct MonodromyMatrix {
    Eigen::MatrixXcd entries;
    std::string generator;  // "Z0", "Z1" or a word
    BasisKind kind;
};

// Rows act on the basis: the continuation of F_i is sum_j rho_ij F_j, so
// rho(g h) = rho(g) rho(h) for g traversed before h.
inline MonodromyMatrix rho(LetterKind g, unsigned m, const Param& c) {
    if (m < 1) throw DomainError("rho requires m >= 1");
    if (g == LetterKind::Y) throw DomainError("rho is defined for Z0 and Z1");
    const auto n = static_cast<Eigen::Index>(m + 1);
    const BasisKind kind = detail::param_singular_c(c) ? BasisKind::singular : BasisKind::regular;
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Identity(n, n);
    if (g == LetterKind::Z1) {
        R(0, 1) = -two_pi * I;
        return {R, "Z1", kind};
    }
    // (2 pi i)^d / d!
    std::vector<cplx> band(n);
    band[0] = 1.0;
    for (Eigen::Index d = 1; d < n; ++d) band[d] = band[d - 1] * two_pi * I / double(d);
    if (kind == BasisKind::singular) {
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i; j < n; ++j) R(i, j) = band[j - i];
    } else {
        // exact at integer c
        const cplx lam = c.exact && c.exact->is_integer() ? cplx(1.0) : exp_2pi_i(-c.value);
        for (Eigen::Index i = 1; i < n; ++i)
            for (Eigen::Index j = i; j < n; ++j) R(i, j) = lam * band[j - i];
    }
    return {R, "Z0", kind};
}

inline MonodromyMatrix rho_word(const HomotopyWord& w, unsigned m, const Param& c) {
    if (!w.y_exponents.empty()) throw DomainError("rho_word requires a Y-free word");
    const auto n = static_cast<Eigen::Index>(m + 1);
    const MonodromyMatrix r0 = rho(LetterKind::Z0, m, c), r1 = rho(LetterKind::Z1, m, c);
    const Eigen::MatrixXcd r0i = r0.entries.inverse(), r1i = r1.entries.inverse();
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& g : w.z_part) {
        const Eigen::MatrixXcd& M = g.kind == LetterKind::Z0 ? (g.exponent > 0 ? r0.entries : r0i)
                                                             : (g.exponent > 0 ? r1.entries : r1i);
        R = R * M;
    }
    return {R, to_string(w), r0.kind};
}

enum class Unipotency { unipotent, quasi_unipotent, borel };

inline std::string to_string(Unipotency u) {
    switch (u) {
    case Unipotency::unipotent: return "unipotent";
    case Unipotency::quasi_unipotent: return "quasi-unipotent";
    case Unipotency::borel: return "borel";
    }
    return "borel";
}

// Eigenvalues of the monodromy group are {1, e^{-2 pi i c}}. Inexact real
// inputs are treated as the rationals they denote unless flagged irrational.
inline Unipotency unipotency_class(unsigned /*m*/, const Param& c, bool irrational = false) {
    if (irrational) return Unipotency::borel;
    if (c.exact) {
        if (!c.exact->is_real()) return Unipotency::borel;
        return c.exact->is_integer() ? Unipotency::unipotent : Unipotency::quasi_unipotent;
    }
    if (c.value.imag() != 0.0 || !std::isfinite(c.value.real())) return Unipotency::borel;
    return is_exact_integer(c.value) ? Unipotency::unipotent : Unipotency::quasi_unipotent;
}

// Li*_m(z,-k) on C minus (-inf,0] and [1,inf); the series is used for
// |z| <= 0.6 and continuation along the ODE from 0.5 z/|z| otherwise.
inline cplx li_star(unsigned m, unsigned k, cplx z) {
    if (m < 1) throw DomainError("li_star requires m >= 1");
    if (z.imag() == 0.0 && (z.real() <= 0.0 || z.real() >= 1.0))
        throw BranchError("li_star is evaluated off (-inf, 0] and [1, inf)");
    const cplx c = -double(k);
    auto taylor_at = [&](cplx z0) {
        auto F = li_series_taylor(m, c, z0, m, static_cast<long>(k));
        double mf = 1.0;
        for (unsigned i = 2; i <= m; ++i) mf *= i;
        auto G = powerlog_taylor({{1.0 / mf, double(k + 1), int(m)}}, z0, principal_log(z0), m);
        for (unsigned r = 0; r <= m; ++r) F[r] += G[r];
        return F;
    };
    if (std::abs(z) <= 0.6) return taylor_at(z)[0];
    const cplx z0 = 0.5 * z / std::abs(z);
    // path in the upper or lower half plane that avoids the cuts
    std::vector<cplx> path{z0};
    const double r = std::abs(z);
    const double th = std::arg(z);
    if (std::abs(std::sin(th)) * r < 0.3 && std::cos(th) > 0.0) {
        // near [1, inf): go out at a steeper angle, then along the arc
        const double lift = std::copysign(std::max(std::abs(th), 1.0), th);
        const double rmid = std::max(0.6, r);
        path = {0.5 * std::exp(I * lift)};
        path.push_back(rmid * std::exp(I * lift));
        const int arcs = 32;
        for (int i = 1; i <= arcs; ++i) path.push_back(rmid * std::exp(I * (lift + (th - lift) * i / arcs)));
        path.push_back(z);
        return continue_value(m, c, taylor_at(path.front()), path);
    }
    path.push_back(z);
    return continue_value(m, c, taylor_at(z0), path);
}

}  // namespace lerch
