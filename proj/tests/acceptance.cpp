// One line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lerch/lerch.hpp"

using namespace lerch;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < limit_s;
    const bool ok = o.ok && in_time;
    if (!ok) ++failures;
    std::printf("[%s] %2d %s (%.3f s, limit %g s)%s%s\n", ok ? "PASS" : "FAIL", id, title, dt, limit_s,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    if (!in_time) std::printf("       time limit exceeded\n");
    std::fflush(stdout);
}

std::string sci(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2e", x);
    return b;
}

struct Worst {
    double v = 0.0;
    std::string where;
    void add(double x, const std::string& w) {
        if (!(x <= v)) v = x, where = w;  // NaN propagates
    }
};

Param rat(long p, long q = 1) { return Param::rational(Rational(p, q)); }

}  // namespace

int main() {
    criterion(1, "r_m(z) for m = 1..5 match the Eulerian table", 0.1, [] {
        const std::vector<std::vector<long>> table{
            {0, 1}, {0, 1, 1}, {0, 1, 4, 1}, {0, 1, 11, 11, 1}, {0, 1, 26, 66, 26, 1}};
        for (unsigned m = 1; m <= 5; ++m) {
            std::vector<BigInt> want(table[m - 1].begin(), table[m - 1].end());
            if (r_poly(m).coefficients() != want) return Outcome{false, "mismatch at m=" + std::to_string(m)};
        }
        return Outcome{true, "r_5 = " + r_poly(5).to_string("z")};
    });

    criterion(2, "reflection, recursion and Laurent identities exact for m <= 20", 1.0, [] {
        IdentityReport rep = identity_suite(20);
        return Outcome{rep.passed, std::to_string(rep.checks.size()) + " exact checks"};
    });

    criterion(3, "generating function egf_check(1/3, 2/5, 12)", 1.0, [] {
        EgfReport rep = egf_check(Rational(1, 3), Rational(2, 5), 12);
        return Outcome{rep.passed, std::to_string(rep.coefficients.size()) + " coefficients"};
    });

    criterion(4, "periodic zeta F(a,-m) = q_m(e^{2 pi i a}), a in {1/3,2/5,1/2}, m <= 4", 10.0, [] {
        Worst w;
        for (Rational a : {Rational(1, 3), Rational(2, 5), Rational(1, 2)})
            for (unsigned m = 0; m <= 4; ++m) {
                // the sum starts at n = 1, so q_0 carries an extra 1
                cplx exact = periodic_zeta_special(a, m) - (m == 0 ? 1.0 : 0.0);
                cplx num = periodic_zeta(to_double(a), -double(m)).value;
                w.add(std::abs(num - exact), "a=" + to_string(a) + " m=" + std::to_string(m));
            }
        return Outcome{w.v < 1e-8, "max |err| " + sci(w.v) + " at " + w.where};
    });

    criterion(5, "ladder and PDE residuals: < 1e-9 series region, < 1e-7 integral region", 30.0, [] {
        Worst ser, other;
        int n = 0;
        for (const GridPoint& p : default_grid("ladders")) {
            const bool series = phi(p.s, p.z, p.c).method == Method::series;
            for (const ResidualReport& r :
                 {check_ladder_down(p.s, p.z, p.c), check_ladder_up(p.s, p.z, p.c), check_pde(p.s, p.z, p.c)}) {
                (series ? ser : other).add(r.rel_residual, r.identity + " [" + r.point + "]");
                ++n;
            }
        }
        return Outcome{ser.v < 1e-9 && other.v < 1e-7,
                       std::to_string(n) + " residuals; series max " + sci(ser.v) + ", other max " + sci(other.v)};
    });

    criterion(6, "Lerch transformation and four-term equations < 1e-8", 60.0, [] {
        Worst t3, t4;
        for (const GridPoint& p : default_grid("three_term")) {
            ResidualReport r = check_lerch_three_term(p.s, p.a, p.c);
            t3.add(r.rel_residual, r.point);
        }
        for (const GridPoint& p : default_grid("four_term"))
            for (int parity : {+1, -1}) {
                ResidualReport r = check_four_term(p.s, p.a, p.c, parity);
                t4.add(r.rel_residual, r.identity + " [" + r.point + "]");
            }
        return Outcome{t3.v < 1e-8 && t4.v < 1e-8, "three-term max " + sci(t3.v) + ", four-term max " + sci(t4.v)};
    });

    criterion(7, "rho(Z0), rho(Z1) match numeric transport to 1e-6", 120.0, [] {
        Worst w;
        for (unsigned m = 1; m <= 3; ++m)
            for (Param c : {rat(1), rat(1, 2), Param(cplx(0.3, 0.2)), rat(0), rat(-1)}) {
                double d0 = (numeric_transport(m, c.value, z0_loop()) - rho(LetterKind::Z0, m, c).entries)
                                .cwiseAbs()
                                .maxCoeff();
                double d1 = (numeric_transport(m, c.value, z1_loop()) - rho(LetterKind::Z1, m, c).entries)
                                .cwiseAbs()
                                .maxCoeff();
                std::ostringstream at;
                at << "m=" << m << " c=" << c.value;
                w.add(std::max(d0, d1), at.str());
            }
        return Outcome{w.v < 1e-6, "max entry error " + sci(w.v) + " at " + w.where};
    });

    criterion(8, "monodromy exactly 0 at s in {0,-1,-2}; Y-monodromy exactly 0 at s = 2", 5.0, [] {
        const auto words = sample_words(100, 12);
        const cplx z(-0.3, 0.8), c(0.45, 0.1);
        for (double s : {0.0, -1.0, -2.0})
            for (const auto& w : words)
                if (monodromy(w, s, z, c).value != cplx(0.0))
                    return Outcome{false, "nonzero for " + to_string(w) + " at s=" + std::to_string(s)};
        for (const auto& w : words) {
            HomotopyWord y;
            y.y_exponents = w.y_exponents;
            if (monodromy(y, 2.0, z, c).value != cplx(0.0)) return Outcome{false, "Y part nonzero: " + to_string(y)};
        }
        return Outcome{true, "100 words"};
    });

    criterion(9, "commutator-subgroup elements have monodromy 0 to 1e-12", 10.0, [] {
        std::mt19937 rng(9);
        std::uniform_int_distribution<int> k(-2, 2), coin(0, 1), factors(1, 2);
        // H0 is generated by the conjugates Z0^k Z1 Z0^-k
        auto h0 = [&] {
            std::vector<GeneratorLetter> raw;
            for (int f = factors(rng); f > 0; --f) {
                int kk = k(rng);
                for (int j = 0; j < std::abs(kk); ++j) raw.push_back(Z0(kk > 0 ? 1 : -1));
                raw.push_back(Z1(coin(rng) ? 1 : -1));
                for (int j = 0; j < std::abs(kk); ++j) raw.push_back(Z0(kk > 0 ? -1 : 1));
            }
            return reduce_word(raw);
        };
        const cplx pts[5][3] = {{0.5, -1.0, 0.5},
                                {{0.3, 0.4}, {-0.4, 0.7}, {0.6, -0.2}},
                                {1.5, {0.2, -1.3}, 1.7},
                                {{-0.7, 0.2}, {-2.0, -0.1}, 0.35},
                                {{2.2, -1.0}, {0.5, 0.5}, {0.9, 0.9}}};
        Worst w;
        int built = 0;
        while (built < 50) {
            HomotopyWord g = commutator(h0(), h0());
            if (g.z_part.size() > 16) continue;
            ++built;
            for (const auto& p : pts) w.add(std::abs(monodromy(g, p[0], p[1], p[2]).value), to_string(g));
        }
        return Outcome{w.v <= 1e-12, "50 elements x 5 points, max |M| " + sci(w.v)};
    });

    criterion(10, "series / integral / c-shift agree to 1e-10; negative integer s vs exact to 1e-9", 60.0, [] {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> rs(0.2, 3.0), rsi(-1.0, 1.0), rr(0.0, 0.74), th(-3.1, 3.1),
            rc(0.1, 2.5), rci(-0.5, 0.5);
        Worst cross;
        for (int i = 0; i < 100; ++i) {
            cplx s(rs(rng), rsi(rng)), z = std::polar(rr(rng), th(rng)), c(rc(rng), rci(rng));
            cplx a = phi_series(s, z, c).value;
            double scale = std::max(1.0, std::abs(a));
            cross.add(std::abs(a - phi_integral(s, z, c).value) / scale, "integral");
            cross.add(std::abs(a - phi_c_shift(s, z, c, 3).value) / scale, "c_shift");
        }
        std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
        Worst exact;
        int n = 0;
        while (n < 50) {
            Rational z(num(rng), den(rng)), c(num(rng), den(rng));
            if (z == 0 || z >= 1 || (is_integer(c) && c <= 0)) continue;
            unsigned m = static_cast<unsigned>(n % 5);
            double ref = to_double(*negative_polylog(m).evaluate(z, c).value / z);
            double got = phi(-double(m), to_double(z), to_double(c)).value.real();
            exact.add(std::abs(got - ref) / std::max(1.0, std::abs(ref)), "z=" + to_string(z) + " c=" + to_string(c));
            ++n;
        }
        return Outcome{cross.v < 1e-10 && exact.v < 1e-9,
                       "cross max " + sci(cross.v) + ", exact max " + sci(exact.v)};
    });

    criterion(11, "Spence and Rogers residuals < 1e-10 on a 5x5 grid in (0, 0.49)^2", 5.0, [] {
        Worst w;
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                double x = 0.49 * i / 6.0, y = 0.49 * j / 6.0;
                ResidualReport s = check_spence(x, y), r = check_rogers(x, y);
                w.add(std::max(s.rel_residual, r.rel_residual), s.point);
            }
        return Outcome{w.v < 1e-10, "max " + sci(w.v)};
    });

    criterion(12, "Weyl top coefficient for m <= 6; operator annihilates its basis to order 25", 10.0, [] {
        for (unsigned m = 0; m <= 6; ++m) {
            WeylOperator op = weyl_expand(m);
            if (!(op.alpha[m + 1] == CPolynomial{-1} && op.beta[m + 1] == CPolynomial{1}))
                return Outcome{false, "top coefficient at m=" + std::to_string(m)};
        }
        const unsigned N = 25;
        int solutions = 0;
        for (unsigned m = 1; m <= 3; ++m) {
            WeylOperator op = weyl_expand(m);
            for (Rational c : {Rational(1), Rational(1, 2), Rational(0), Rational(-1)}) {
                PowerLogSeries lead = is_integer(c) && c <= 0
                                          ? li_star_series_exact(m, static_cast<unsigned>((-c).convert_to<long>()), N)
                                          : li_series_exact(m, c, N);
                if (!apply_operator(op, lead, c).truncated(Rational(N)).is_zero())
                    return Outcome{false, "leading solution m=" + std::to_string(m) + " c=" + to_string(c)};
                ++solutions;
                for (unsigned j = 0; j < m; ++j, ++solutions)
                    if (!apply_operator(op, log_basis_exact(j, c), c).is_zero())
                        return Outcome{false, "log solution j=" + std::to_string(j)};
            }
        }
        return Outcome{true, std::to_string(solutions) + " basis solutions, exact"};
    });

    criterion(13, "rho_{1,c}(Z0)_{12} jumps by 2 pi at c = 0", 1.0, [] {
        const cplx a = rho(LetterKind::Z0, 1, Param(1e-6)).entries(0, 1);
        const cplx b = rho(LetterKind::Z0, 1, rat(0)).entries(0, 1);
        const double jump = std::abs(a - b);
        return Outcome{jump >= two_pi - 1e-3, "|jump| = " + std::to_string(jump)};
    });

    std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
