#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/monodromy.hpp"
#include "lerch/parallel.hpp"
#include "lerch/phi.hpp"
#include "lerch/polynomial.hpp"
#include "lerch/special.hpp"

namespace lerch {

// left - right, with relative residual |left - right| / max(1, |right|).
// A check passes iff the relative residual is at most tol.
struct ResidualReport {
    std::string identity;
    std::string point;
    cplx left{0.0, 0.0};
    cplx right{0.0, 0.0};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    double tol = 0.0;
    bool passed = false;
    std::string error;  // non-empty when an evaluation threw

    cplx signed_residual() const { return left - right; }
};

namespace detail {

inline std::string fmt(cplx v) {
    std::ostringstream o;
    o.precision(12);
    if (v.imag() == 0.0)
        o << v.real();
    else
        o << v.real() << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    return o.str();
}

inline std::string fmt_point(std::initializer_list<std::pair<const char*, cplx>> kv) {
    std::string out;
    for (auto& [k, v] : kv) {
        if (!out.empty()) out += ", ";
        out += std::string(k) + "=" + fmt(v);
    }
    return out;
}

inline ResidualReport make_report(std::string id, std::string pt, cplx l, cplx r, double tol) {
    ResidualReport rep{std::move(id), std::move(pt), l, r, 0.0, 0.0, tol, false, {}};
    rep.abs_residual = std::abs(l - r);
    rep.rel_residual = rep.abs_residual / std::max(1.0, std::abs(r));
    rep.passed = std::isfinite(rep.rel_residual) && rep.rel_residual <= tol;
    return rep;
}

inline cplx li2(double x, double eval_tol) { return extended_polylog(2.0, x, 1.0, eval_tol).value; }

// sum_n w(n) z^n (n+c)^{-p}, w(n) = n^q with q in {0, 1}
inline cplx weighted_series(cplx p, cplx z, cplx c, int q, double tol) {
    const double az = std::abs(z);
    if (!(az < 1.0)) throw DomainError("term-wise series needs |z| < 1");
    cplx zpow = 1.0, running = 0.0;
    std::size_t cached = std::size_t(-1);
    cplx cached_t = 0.0;
    auto t_at = [&](std::size_t n) {
        if (n == cached) return cached_t;
        if (cached != std::size_t(-1)) zpow *= z;
        cplx w = double(n) + c;
        cached_t = (q == 1 ? double(n) : 1.0) * zpow * (n == 0 && q == 1 ? 0.0 : principal_power(w, -p));
        cached = n;
        return cached_t;
    };
    auto term = [&](std::size_t n) {
        cplx t = t_at(n);
        running += t;
        return t;
    };
    auto bound = [&](std::size_t N) -> double {
        if (az == 0.0 && N >= 1) return 0.0;
        cplx w = double(N) + c;
        if (w.real() < 1.0 || N < 1) return HUGE_VAL;
        double g = p.real() < 0.0 ? std::pow(1.0 + 1.0 / std::abs(w), -p.real()) : 1.0;
        double qq = az * g * std::exp(std::abs(p.imag()) / w.real()) * (q == 1 ? 1.0 + 1.0 / double(N) : 1.0);
        if (qq >= 1.0) return HUGE_VAL;
        return std::abs(t_at(N)) / (1.0 - qq) / (1.0 + std::abs(running));
    };
    return sum_with_tail_bound(term, bound, tol).value;
}

inline double z_radius(cplx z) {
    double R = z.real() >= 1.0 ? std::abs(z.imag()) : std::abs(z - 1.0);
    return std::min(0.1, 0.25 * R);
}

inline double c_radius(cplx s, cplx c) {
    double R;
    if (is_exact_integer(s)) {
        if (c.real() >= 0.0) {
            R = std::abs(c);
        } else {
            double f = std::floor(c.real()), g = std::min(0.0, f + 1.0);
            R = std::min(std::abs(c - f), std::abs(c - g));
        }
    } else {
        R = c.real() >= 0.0 ? std::abs(c) : std::abs(c.imag());
    }
    if (R == 0.0) throw DomainError("c lies on a cut of Phi in c");
    return std::min(0.1, 0.25 * R);
}

struct PhiDerivatives {
    cplx value, dz, dc, dzdc;  // dz is z d/dz, dzdc is z d/dz d/dc
};

// Term-wise in the series region, otherwise trapezoid sums on small circles
// (a torus for the mixed derivative).
inline PhiDerivatives phi_derivatives(cplx s, cplx z, cplx c, double eval_tol, bool mixed) {
    PhiDerivatives d{};
    if (std::abs(z) <= series_radius && c.real() > 0.0) {
        d.value = phi(s, z, c, eval_tol).value;
        d.dz = weighted_series(s, z, c, 1, eval_tol);
        d.dc = -s * weighted_series(s + 1.0, z, c, 0, eval_tol);
        if (mixed) d.dzdc = -s * weighted_series(s + 1.0, z, c, 1, eval_tol);
        return d;
    }
    const double rz = z_radius(z), rc = c_radius(s, c);
    const int N = 24, M = 20;
    d.value = phi(s, z, c, eval_tol).value;
    cplx acc_z = 0.0, acc_c = 0.0;
    for (int k = 0; k < N; ++k) {
        cplx w = std::exp(I * (two_pi * k / N));
        acc_z += phi(s, z + rz * w, c, eval_tol).value / w;
        acc_c += phi(s, z, c + rc * w, eval_tol).value / w;
    }
    d.dz = z * acc_z / (double(N) * rz);
    d.dc = acc_c / (double(N) * rc);
    if (mixed) {
        cplx acc = 0.0;
        for (int j = 0; j < M; ++j)
            for (int k = 0; k < M; ++k) {
                cplx wj = std::exp(I * (two_pi * j / M)), wk = std::exp(I * (two_pi * k / M));
                acc += phi(s, z + rz * wj, c + rc * wk, eval_tol).value / (wj * wk);
            }
        d.dzdc = z * acc / (double(M) * double(M) * rz * rc);
    }
    return d;
}

template <class F>
ResidualReport guarded(const std::string& id, const std::string& pt, double tol, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        ResidualReport r{id, pt, {}, {}, HUGE_VAL, HUGE_VAL, tol, false, e.what()};
        return r;
    }
}

}  // namespace detail

// (z d/dz + c) Phi(s,z,c) = Phi(s-1,z,c)
inline ResidualReport check_ladder_down(cplx s, cplx z, cplx c, double tol = 1e-9,
                                        double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"s", s}, {"z", z}, {"c", c}});
    return detail::guarded("ladder_down", pt, tol, [&] {
        cplx left, right;
        if (z == cplx(0.0, 0.0)) {
            left = c * principal_power(c, -s);
            right = phi(s - 1.0, z, c, eval_tol).value;
        } else {
            auto d = detail::phi_derivatives(s, z, c, eval_tol, false);
            left = d.dz + c * d.value;
            right = phi(s - 1.0, z, c, eval_tol).value;
        }
        return detail::make_report("ladder_down", pt, left, right, tol);
    });
}

// d/dc Phi(s,z,c) = -s Phi(s+1,z,c)
inline ResidualReport check_ladder_up(cplx s, cplx z, cplx c, double tol = 1e-9,
                                      double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"s", s}, {"z", z}, {"c", c}});
    return detail::guarded("ladder_up", pt, tol, [&] {
        cplx left = detail::phi_derivatives(s, z, c, eval_tol, false).dc;
        cplx right = s == cplx(0.0, 0.0) ? cplx(0.0) : -s * phi(s + 1.0, z, c, eval_tol).value;
        return detail::make_report("ladder_up", pt, left, right, tol);
    });
}

// (z d/dz d/dc + c d/dc) Phi = -s Phi
inline ResidualReport check_pde(cplx s, cplx z, cplx c, double tol = 1e-8,
                                double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"s", s}, {"z", z}, {"c", c}});
    return detail::guarded("pde", pt, tol, [&] {
        auto d = detail::phi_derivatives(s, z, c, eval_tol, true);
        return detail::make_report("pde", pt, d.dzdc + c * d.dc, -s * d.value, tol);
    });
}

// Same PDE on K f_0, K = -(2pi)^s e^{pi i s/2}/Gamma(s), using
// d/dc f_0 = -Log z f_0 and z d/dz f_0 = f_0 (-c + (s-1)/Log z).
inline ResidualReport check_pde_monodromy_term(cplx s, cplx z, cplx c, double tol = 1e-8) {
    const std::string pt = detail::fmt_point({{"s", s}, {"z", z}, {"c", c}});
    return detail::guarded("pde_monodromy_term", pt, tol, [&] {
        const cplx K = z1_prefactor(s);
        const cplx f = K * f_elementary(0, s, z, c);
        const cplx L = semi_principal_log(z);
        const cplx dc = -L * f;
        // z d/dz (-L f) = -f - L z f'
        const cplx zdz = f * (-c + (s - 1.0) / L);
        const cplx dzdc = -f - L * zdz;
        return detail::make_report("pde_monodromy_term", pt, dzdc + c * dc, -s * f, tol);
    });
}

// D+ = d/dc, D- = z d/dz + c; (D+D- - D-D+) f = f on z^j c^k, j, k <= 6.
inline ResidualReport check_commutator() {
    bool ok = true;
    std::string failed;
    for (int j = 0; j <= 6; ++j)
        for (int k = 0; k <= 6; ++k) {
            const BivariatePolynomial f = BivariatePolynomial::term(j, k, 1);
            auto Dm = [](const BivariatePolynomial& g) { return g.d_dz().times_z() + g.times_c(); };
            auto Dp = [](const BivariatePolynomial& g) { return g.d_dc(); };
            BivariatePolynomial lhs = Dp(Dm(f)) - Dm(Dp(f));
            if (!(lhs == f)) {
                ok = false;
                failed = "z^" + std::to_string(j) + " c^" + std::to_string(k);
            }
        }
    ResidualReport r{"commutator", "z^j c^k, j,k <= 6", 1.0, 1.0, ok ? 0.0 : 1.0, ok ? 0.0 : 1.0, 0.0, ok,
                     ok ? "" : "fails on " + failed};
    return r;
}

// zeta(s,a,c) := Phi(s, e^{2 pi i a}, c)
inline cplx zeta_lerch(cplx s, cplx a, cplx c, double eval_tol) {
    return phi(s, exp_2pi_i(a), c, eval_tol).value;
}

// zeta(1-s,a,c) = (2pi)^{-s} Gamma(s) { e^{pi i s/2} e^{-2 pi i a c} zeta(s,1-c,a)
//                                       + e^{-pi i s/2} e^{2 pi i c(1-a)} zeta(s,c,1-a) }
inline ResidualReport check_lerch_three_term(cplx s, cplx a, cplx c, double tol = 1e-8,
                                             double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"s", s}, {"a", a}, {"c", c}});
    return detail::guarded("three_term", pt, tol, [&] {
        if (!(a.real() > 0 && a.real() < 1 && c.real() > 0 && c.real() < 1))
            throw DomainError("three-term check needs 0 < Re(a), Re(c) < 1");
        cplx left = zeta_lerch(1.0 - s, a, c, eval_tol);
        cplx pref = std::exp(-s * std::log(two_pi)) * complex_gamma(s);
        cplx right = pref * (std::exp(I * pi * s / 2.0) * exp_2pi_i(-a * c) * zeta_lerch(s, 1.0 - c, a, eval_tol) +
                             std::exp(-I * pi * s / 2.0) * exp_2pi_i(c * (1.0 - a)) *
                                 zeta_lerch(s, c, 1.0 - a, eval_tol));
        return detail::make_report("three_term", pt, left, right, tol);
    });
}

// With L^{+-}(s,a,c) = zeta(s,a,c) +- e^{-2 pi i a} zeta(s,1-a,1-c) and
// G_k(s) = pi^{-(s+k)/2} Gamma((s+k)/2), k = 0 for + and 1 for -:
//   G_k(s) L(s,a,c) = eps e^{-2 pi i a c} G_k(1-s) L(1-s,1-c,a),  eps = 1 or i.
inline ResidualReport check_four_term(cplx s, cplx a, cplx c, int parity, double tol = 1e-8,
                                      double eval_tol = default_tol) {
    const std::string id = parity >= 0 ? "four_term+" : "four_term-";
    const std::string pt = detail::fmt_point({{"s", s}, {"a", a}, {"c", c}});
    if (!(s.real() > 0 && s.real() < 1 && a.real() > 0 && a.real() < 1 && c.real() > 0 && c.real() < 1))
        throw DomainError("four-term check needs (s, a, c) in the unit polycylinder");
    return detail::guarded(id, pt, tol, [&] {
        const double sign = parity >= 0 ? 1.0 : -1.0;
        const double k = parity >= 0 ? 0.0 : 1.0;
        auto G = [&](cplx x) { return std::exp(-(x + k) / 2.0 * std::log(pi)) * complex_gamma((x + k) / 2.0); };
        auto Lfun = [&](cplx x, cplx aa, cplx cc) {
            return zeta_lerch(x, aa, cc, eval_tol) + sign * exp_2pi_i(-aa) * zeta_lerch(x, 1.0 - aa, 1.0 - cc, eval_tol);
        };
        cplx left = G(s) * Lfun(s, a, c);
        cplx eps = parity >= 0 ? cplx(1.0) : I;
        cplx right = eps * exp_2pi_i(-a * c) * G(1.0 - s) * Lfun(1.0 - s, 1.0 - c, a);
        return detail::make_report(id, pt, left, right, tol);
    });
}

// Li2(xy/((1-x)(1-y))) = Li2(x/(1-y)) + Li2(y/(1-x)) - Li2(x) - Li2(y) - log(1-x) log(1-y)
inline ResidualReport check_spence(double x, double y, double tol = 1e-10, double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"x", x}, {"y", y}});
    for (double v : {x, y, x * y / ((1 - x) * (1 - y)), x / (1 - y), y / (1 - x)})
        if (!(v >= 0.0 && v < 1.0)) throw DomainError("Spence arguments must stay in [0, 1)");
    return detail::guarded("spence", pt, tol, [&] {
        cplx left = detail::li2(x * y / ((1 - x) * (1 - y)), eval_tol);
        cplx right = detail::li2(x / (1 - y), eval_tol) + detail::li2(y / (1 - x), eval_tol) -
                     detail::li2(x, eval_tol) - detail::li2(y, eval_tol) - std::log1p(-x) * std::log1p(-y);
        return detail::make_report("spence", pt, left, right, tol);
    });
}

// Rogers dilogarithm L(x) = Li2(x) + log(x) log(1-x)/2
inline cplx rogers_l(double x, double eval_tol = default_tol) {
    return detail::li2(x, eval_tol) + 0.5 * std::log(x) * std::log1p(-x);
}

// L(x) + L(y) - L(xy) = L((x-xy)/(1-xy)) + L((y-xy)/(1-xy))
inline ResidualReport check_rogers(double x, double y, double tol = 1e-10, double eval_tol = default_tol) {
    const std::string pt = detail::fmt_point({{"x", x}, {"y", y}});
    if (!(x > 0 && x < 1 && y > 0 && y < 1)) throw DomainError("Rogers check needs x, y in (0, 1)");
    return detail::guarded("rogers", pt, tol, [&] {
        const double xy = x * y;
        cplx left = rogers_l(x, eval_tol) + rogers_l(y, eval_tol) - rogers_l(xy, eval_tol);
        cplx right = rogers_l((x - xy) / (1 - xy), eval_tol) + rogers_l((y - xy) / (1 - xy), eval_tol);
        return detail::make_report("rogers", pt, left, right, tol);
    });
}

// Fixed-seed sample of words mixing Z and Y letters.
inline std::vector<HomotopyWord> sample_words(std::size_t count, std::size_t max_len, unsigned seed = 2024) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> len(0, static_cast<int>(max_len)), kind(0, 2), sgn(0, 1), yn(-3, 3);
    std::vector<HomotopyWord> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<GeneratorLetter> raw;
        int L = len(rng);
        for (int j = 0; j < L; ++j) {
            int e = sgn(rng) ? 1 : -1;
            int k = kind(rng);
            raw.push_back(k == 0 ? Z0(e) : k == 1 ? Z1(e) : Y(yn(rng), e));
        }
        out.push_back(reduce_word(raw));
    }
    return out;
}

// Every monodromy vanishes exactly at s = -m.
inline ResidualReport check_monodromy_vanishing(unsigned m, const std::vector<HomotopyWord>& words, cplx z,
                                                cplx c) {
    const cplx s = -double(m);
    const std::string pt = detail::fmt_point({{"s", s}, {"z", z}, {"c", c}}) + ", words=" + std::to_string(words.size());
    return detail::guarded("monodromy_vanishing", pt, 0.0, [&] {
        double worst = 0.0;
        std::string bad;
        for (const auto& w : words) {
            cplx v = monodromy(w, s, z, c).value;
            if (std::abs(v) > worst) {
                worst = std::abs(v);
                bad = to_string(w);
            }
        }
        ResidualReport r{"monodromy_vanishing", pt, worst, 0.0, worst, worst, 0.0, worst == 0.0,
                         worst == 0.0 ? "" : "nonzero on " + bad};
        return r;
    });
}

struct GridPoint {
    cplx s{0.0, 0.0}, z{0.0, 0.0}, c{0.0, 0.0}, a{0.0, 0.0};
    double x = 0.0, y = 0.0;
};

struct SuiteReport {
    std::string name;
    std::vector<ResidualReport> reports;
    std::vector<std::string> warnings;
    bool passed = true;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ladders", "three_term", "four_term", "spence",  "rogers",
                                                "dilog",   "monodromy_vanishing", "commutator", "special", "all"};
    return names;
}

inline std::vector<GridPoint> default_grid(const std::string& name) {
    std::vector<GridPoint> g;
    auto sz = [&](cplx s, cplx z, cplx c) { GridPoint p; p.s = s; p.z = z; p.c = c; g.push_back(p); };
    auto sac = [&](cplx s, cplx a, cplx c) { GridPoint p; p.s = s; p.a = a; p.c = c; g.push_back(p); };
    auto xy = [&](double x, double y) { GridPoint p; p.x = x; p.y = y; g.push_back(p); };
    if (name == "ladders") {
        sz(2.0, 0.5, 0.5);
        sz(1.5, cplx(0.3, 0.2), 0.7);
        sz(0.5, -0.5, 0.5);
        sz(cplx(0.7, 0.3), cplx(-0.2, 0.6), cplx(0.4, 0.1));
        sz(-0.5, 0.6, 0.8);
        sz(3.0, -0.7, 2.0);
        sz(2.5, -2.0, 1.3);
        sz(1.2, cplx(0.6, -0.8), 0.25);
        sz(0.5, cplx(-1.5, 0.5), 0.6);
        sz(-1.5, -0.9, 1.5);
    } else if (name == "three_term") {
        sac(0.3, 0.4, 0.6);
        sac(0.5, 0.5, 0.5);
        sac(cplx(0.3, 0.2), 0.4, 0.6);
        sac(0.7, 0.2, 0.3);
        sac(0.45, 0.8, 0.15);
    } else if (name == "four_term") {
        sac(0.5, 0.5, 0.5);
        sac(0.4, 0.3, 0.7);
        sac(0.25, 0.6, 0.35);
        sac(cplx(0.6, 0.1), 0.45, 0.55);
        sac(0.8, 0.15, 0.9);
    } else if (name == "spence") {
        xy(0.2, 0.3);
        xy(0.49, 0.49);
        xy(0.1, 0.4);
        xy(0.35, 0.05);
        xy(0.25, 0.0);
    } else if (name == "rogers") {
        xy(0.3, 0.5);
        xy(0.5, 0.5);
        xy(0.9, 0.2);
        xy(0.1, 0.8);
        xy(0.7, 0.7);
    } else if (name == "dilog") {
        g = default_grid("spence");
        auto r = default_grid("rogers");
        g.insert(g.end(), r.begin(), r.end());
    } else if (name == "monodromy_vanishing") {
        for (double m : {0.0, 1.0, 2.0, 3.0})
            for (cplx z : {cplx(-1.0), cplx(0.3, 0.4), cplx(-2.0, -1.0)})
                for (cplx c : {cplx(0.5), cplx(0.3, 0.2)}) sz(-m, z, c);
    } else if (name == "special") {
        for (cplx a : {cplx(1.0 / 3.0), cplx(0.4), cplx(0.7)}) sac(0.0, a, 0.0);
        sz(0.0, 0.5, 1.0 / 3.0);
        sz(0.0, -2.0, 1.5);
        sz(0.0, -0.5, 2.0);
    } else if (name == "commutator") {
        g.push_back({});
    } else if (name != "all") {
        throw DomainError("unknown suite '" + name + "'");
    }
    return g;
}

namespace detail {

inline std::vector<ResidualReport> special_checks(const GridPoint& p, double tol) {
    std::vector<ResidualReport> out;
    if (p.a != cplx(0.0, 0.0)) {
        // F(a, -m) = q_m(e^{2 pi i a}) against the integral representation.
        // q_0 = 1/(1-w) carries the n = 0 term, which F(a, 0) = w/(1-w) omits.
        for (unsigned m = 0; m <= 6; ++m) {
            const std::string pt = fmt_point({{"a", p.a}, {"s", -double(m)}});
            out.push_back(guarded("periodic_zeta_special", pt, tol, [&] {
                cplx exact = q_rational(m).evaluate(exp_2pi_i(p.a)) - (m == 0 ? 1.0 : 0.0);
                cplx num = periodic_zeta(p.a, -double(m)).value;
                return make_report("periodic_zeta_special", pt, num, exact, tol);
            }));
        }
        return out;
    }
    // Li_{-m}(z, c) exact rational against z * Phi(-m, z, c) from the numeric routes
    for (unsigned m = 0; m <= 6; ++m) {
        const std::string pt = fmt_point({{"s", -double(m)}, {"z", p.z}, {"c", p.c}});
        out.push_back(guarded("negative_polylog", pt, tol, [&] {
            cplx exact = negative_polylog(m).evaluate(p.z, p.c);
            cplx num = p.z * phi(-double(m), p.z, p.c).value;
            return make_report("negative_polylog", pt, num, exact, tol);
        }));
    }
    return out;
}

inline std::vector<ResidualReport> run_point(const std::string& name, const GridPoint& p, double tol) {
    auto T = [&](double def) { return tol > 0.0 ? tol : def; };
    if (name == "ladders")
        return {check_ladder_down(p.s, p.z, p.c, T(1e-9)), check_ladder_up(p.s, p.z, p.c, T(1e-9)),
                check_pde(p.s, p.z, p.c, T(1e-8))};
    if (name == "three_term")
        return {check_lerch_three_term(p.s, p.a, p.c, T(p.s.imag() != 0.0 ? 1e-7 : 1e-8))};
    if (name == "four_term")
        return {check_four_term(p.s, p.a, p.c, +1, T(1e-8)), check_four_term(p.s, p.a, p.c, -1, T(1e-8))};
    if (name == "spence") return {check_spence(p.x, p.y, T(1e-10))};
    if (name == "rogers") return {check_rogers(p.x, p.y, T(1e-10))};
    if (name == "monodromy_vanishing") {
        static const auto words = sample_words(100, 12);
        long m = std::lround(-p.s.real());
        if (!is_exact_integer(p.s) || m < 0) throw DomainError("monodromy_vanishing needs s in Z_{<=0}");
        return {check_monodromy_vanishing(static_cast<unsigned>(m), words, p.z, p.c)};
    }
    if (name == "commutator") return {check_commutator()};
    if (name == "special") return special_checks(p, T(1e-9));
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace detail

// Runs one suite over a grid; "dilog" is spence then rogers point-wise by
// domain, "all" runs every suite on its default grid. tol <= 0 keeps the
// per-check defaults.
inline SuiteReport run_suite(const std::string& name, const std::vector<GridPoint>& grid, double tol = 0.0,
                             unsigned threads = 1) {
    SuiteReport rep;
    rep.name = name;
    if (name == "all") {
        for (const auto& n : suite_names()) {
            if (n == "all" || n == "dilog") continue;
            SuiteReport sub = run_suite(n, default_grid(n), tol, threads);
            rep.reports.insert(rep.reports.end(), sub.reports.begin(), sub.reports.end());
            rep.warnings.insert(rep.warnings.end(), sub.warnings.begin(), sub.warnings.end());
        }
    } else {
        bool known = false;
        for (const auto& n : suite_names()) known = known || n == name;
        if (!known) throw DomainError("unknown suite '" + name + "'");
        if (grid.empty()) {
            rep.warnings.push_back("suite '" + name + "' ran on an empty grid; vacuous pass");
            return rep;
        }
        auto results = parallel_map<std::vector<ResidualReport>>(
            grid.size(),
            [&](std::size_t i) {
                if (name != "dilog") return detail::run_point(name, grid[i], tol);
                const auto& p = grid[i];
                bool spence_ok = p.x >= 0 && p.y >= 0 && p.x < 0.5 && p.y < 0.5;
                return detail::run_point(spence_ok ? "spence" : "rogers", p, tol);
            },
            threads);
        for (auto& r : results) rep.reports.insert(rep.reports.end(), r.begin(), r.end());
    }
    for (const auto& r : rep.reports) rep.passed = rep.passed && r.passed;
    return rep;
}

inline SuiteReport run_suite(const std::string& name, double tol = 0.0, unsigned threads = 1) {
    return run_suite(name, default_grid(name), tol, threads);
}

}  // namespace lerch
