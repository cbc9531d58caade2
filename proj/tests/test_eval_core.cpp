#include <gtest/gtest.h>

#include <random>

#include "lerch/lerch.hpp"

using namespace lerch;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

struct Ref {
    cplx s, z, c, value;
    Method method;
};

// mpmath lerchphi(z, s, c) at 30 digits
const Ref refs[] = {
    {2.0, 0.5, 1.0, {1.1644810529300250118, 0}, Method::series},
    {1.5, {0.3, 0.2}, 0.7, {1.8510800645525349384, 0.12491723131971869269}, Method::series},
    {{0.5, 0.2}, {-3, 1}, 0.7, {0.44757695865751102649, 0.18096789028174199425}, Method::integral},
    {2.5, -2.0, 1.3, {0.37342228795734789737, 0}, Method::integral},
    {-1.5, -0.9, 1.5, {0.50129785039113692001, 0}, Method::reflection},
    {0.5, 0.5, -0.3, {0.92456798414391479334, -1.8257418583505537453}, Method::c_shift},
    {-2.5, {2, 1}, 0.4, {-2.824150458330396588, 1.3426688041171905365}, Method::reflection},
    {3.0, {0, 0.9}, 2.5, {0.056888292946964255859, 0.017622509164209951239}, Method::integral},
    {0.5, {0.6, 0.7}, {0.5, 0.5}, {1.1367693344677630032, 0.40079454325449054116}, Method::integral},
    {-0.5, -2.0, 1.0, {0.21874044429011697538, 0}, Method::reflection},
    {-0.7, -1.5, 1.02, {0.23802412139637150328, 0}, Method::reflection},
    {1.2, {0.6, -0.8}, 0.25, {5.3722873883025079073, -0.85563709212186143086}, Method::integral},
    {2.0, -1.0, -0.5, {0.33613762329112393978, 0}, Method::c_shift},
    {0.3, {-0.5, -2}, {-1.3, 0.4}, {-1.6486246693018652366, 0.13227705209338482865}, Method::c_shift},
};

}  // namespace

TEST(Phi, MatchesReferenceAcrossRoutes) {
    for (const auto& r : refs) {
        EvalResult e = phi(r.s, r.z, r.c);
        EXPECT_LT(rel(e.value, r.value), 5e-13) << "s=" << r.s << " z=" << r.z << " c=" << r.c;
        EXPECT_EQ(e.method, r.method) << "s=" << r.s << " z=" << r.z << " c=" << r.c;
        EXPECT_GE(e.error_estimate, 0.0);
    }
}

TEST(Phi, ClosedFormValues) {
    // Phi(s, 0, c) = c^-s
    EXPECT_LT(rel(phi(2.0, 0.0, 3.0).value, 1.0 / 9.0), 1e-15);
    // Phi(1, z, 1) = -log(1-z)/z
    cplx z(0.3, -0.4);
    EXPECT_LT(rel(phi(1.0, z, 1.0).value, -std::log(1.0 - z) / z), 1e-13);
    // Phi(0, z, c) = 1/(1-z)
    EXPECT_LT(rel(phi(0.0, cplx(-2.0, 1.0), 0.4).value, 1.0 / (1.0 - cplx(-2.0, 1.0))), 1e-12);
    // Phi(-1, 1/2, 1/2) = 3
    EXPECT_LT(rel(phi(-1.0, 0.5, 0.5).value, 3.0), 1e-13);
}

TEST(Phi, RealInputsGiveRealValues) {
    EXPECT_EQ(phi(2.0, 0.5, -0.5).value.imag(), 0.0);
    EXPECT_EQ(phi(2.0, -0.5, 0.5).value.imag(), 0.0);
    EXPECT_EQ(phi(-2.0, -3.0, 0.5).value.imag(), 0.0);
    EXPECT_EQ(phi(1.5, 0.9, 2.0).value.imag(), 0.0);
}

TEST(Phi, SingularStrata) {
    EXPECT_THROW(phi(2.0, 1.0, 1.0), SingularStratumError);
    EXPECT_THROW(phi(2.0, 1.0 + 1e-10, 0.5), SingularStratumError);
    EXPECT_THROW(phi(2.0, 0.5, 0.0), SingularStratumError);
    EXPECT_THROW(phi(2.0, 0.5, -3.0), SingularStratumError);
    EXPECT_THROW(phi(2.0, std::numeric_limits<double>::infinity(), 0.5), SingularStratumError);
}

TEST(Phi, CutIsBranchError) {
    EXPECT_THROW(phi(-0.5, 2.0, 0.5), BranchError);
    EXPECT_THROW(phi(-1.5, 3.0, 1.0), BranchError);
    // just off the cut the two sides differ by the jump of Li_2(z)/z,
    // 2 pi i log(z)/z at c = 1
    cplx above = phi(2.0, cplx(2.0, 1e-9), 1.0).value, below = phi(2.0, cplx(2.0, -1e-9), 1.0).value;
    EXPECT_LT(std::abs((above - below) - two_pi * I * std::log(2.0) / 2.0), 1e-7);
}

TEST(Phi, LerchPointOverloadRejectsSingularClass) {
    LerchPoint p{2.0, 1.0, 0.5};
    EXPECT_THROW(phi(p), SingularStratumError);
    LerchPoint q{2.0, 0.5, Param::rational(Rational(1, 2))};
    EXPECT_LT(rel(phi(q).value, phi(2.0, 0.5, 0.5).value), 1e-15);
}

// All routes that apply at one point must agree.
TEST(Phi, CrossMethodAgreementOnOverlap) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rs(0.2, 3.0), rsi(-1.0, 1.0), rr(0.0, 0.74), th(-3.1, 3.1),
        rc(0.1, 2.5), rci(-0.5, 0.5);
    for (int i = 0; i < 100; ++i) {
        cplx s(rs(rng), rsi(rng)), z = std::polar(rr(rng), th(rng)), c(rc(rng), rci(rng));
        cplx a = phi_series(s, z, c).value;
        cplx b = phi_integral(s, z, c).value;
        cplx d = phi_c_shift(s, z, c, 3).value;
        EXPECT_LT(rel(a, b), 1e-10) << s << " " << z << " " << c;
        EXPECT_LT(rel(a, d), 1e-10) << s << " " << z << " " << c;
    }
}

// Off the disk the integral and the reflection formula overlap for 0 < Re s < 1/2.
TEST(Phi, IntegralAgreesWithReflection) {
    for (cplx s : {cplx(0.4), cplx(0.2, 0.3), cplx(0.45, -0.5)})
        for (cplx z : {cplx(-2.0), cplx(0.3, 1.8), cplx(-1.2, -0.9)})
            for (cplx c : {cplx(0.3), cplx(0.75, 0.2), cplx(1.6)}) {
                cplx a = phi_integral(s, z, c).value, b = phi_reflect(s, z, c).value;
                EXPECT_LT(rel(a, b), 1e-10) << s << " " << z << " " << c;
            }
}

TEST(Phi, NegativeIntegerSMatchesExactRationals) {
    int n = 0;
    for (unsigned m = 0; m <= 4; ++m)
        for (int zi = 0; zi < 5; ++zi)
            for (int ci = 0; ci < 2; ++ci, ++n) {
                // z in {-5/4, -1/2, 1/4, -3, -7/3}
                Rational zq = Rational(-5 + 3 * zi, 4);
                if (zq == 1) zq = Rational(-3);
                if (zq > 1) zq = Rational(-7, 3);
                Rational cq = ci == 0 ? Rational(1, 3) : Rational(5, 2);
                Rational exact = zq == 0 ? Rational(1) : *negative_polylog(m).evaluate(zq, cq).value / zq;
                if (zq == 0)
                    for (unsigned i = 0; i < m; ++i) exact *= cq;
                cplx num = phi(-double(m), to_double(zq), to_double(cq)).value;
                EXPECT_LT(rel(num, to_double(exact)), 1e-9) << "m=" << m << " z=" << zq << " c=" << cq;
            }
    EXPECT_EQ(n, 50);
}

// mpmath zeta(s, a)
TEST(HurwitzZeta, ReferenceValues) {
    EXPECT_LT(rel(hurwitz_zeta(-20.5, 0.7).value, -69.479821553992598535), 1e-12);
    EXPECT_LT(rel(hurwitz_zeta(3.0, 0.4).value, 16.119564311789175853), 1e-13);
    EXPECT_LT(rel(hurwitz_zeta(cplx(0.5, 10), 0.3).value, cplx(0.76125394235629102304, -1.7863229648761983875)),
              1e-12);
}

TEST(HurwitzZeta, ShiftRelation) {
    cplx s(1.7, 0.4), c(0.3, 0.1);
    cplx lhs = hurwitz_zeta(s, c).value;
    cplx rhs = principal_power(c, -s) + hurwitz_zeta(s, c + 1.0).value;
    EXPECT_LT(rel(lhs, rhs), 1e-13);
}

// mpmath polylog(s, e^{2 pi i a})
TEST(PeriodicZeta, ReferenceValues) {
    EXPECT_LT(rel(periodic_zeta(1.0 / 3.0, 0.5).value, cplx(-0.53452684875545457814, 0.41644352082123285904)),
              1e-12);
    EXPECT_LT(rel(periodic_zeta(0.25, -2.5).value, cplx(0.49690441703281456824, -0.47477605327648972625)), 1e-12);
    EXPECT_LT(rel(periodic_zeta(0.4, cplx(1.5, 2)).value, cplx(-0.99355383060189736021, 0.34865535262883296972)),
              1e-12);
}

TEST(PeriodicZeta, MatchesSpecialValuesAtNegativeIntegers) {
    for (Rational a : {Rational(1, 3), Rational(2, 5), Rational(1, 2)})
        for (unsigned m = 1; m <= 4; ++m) {
            cplx num = periodic_zeta(to_double(a), -double(m)).value;
            EXPECT_LT(std::abs(num - periodic_zeta_special(a, m)), 1e-8) << "a=" << a << " m=" << m;
        }
    // the sum starts at n = 1, so F(a, 0) = q_0 - 1
    cplx f0 = periodic_zeta(1.0 / 3.0, 0.0).value;
    EXPECT_LT(std::abs(f0 - cplx(-0.5, 0.5 / std::sqrt(3.0))), 1e-12);
}

TEST(ExtendedPolylog, ClassicalPolylogAtC1) {
    // Li_2(1/2) = pi^2/12 - log(2)^2/2
    double li2 = pi * pi / 12 - 0.5 * std::log(2.0) * std::log(2.0);
    EXPECT_LT(rel(extended_polylog(2.0, 0.5, 1.0).value, li2), default_tol);
    EXPECT_EQ(extended_polylog(2.0, 0.0, 1.0).value, cplx(0.0));
    // Li_1(z) = -log(1-z) continues past the unit disk
    cplx z(-3.0, 2.0);
    EXPECT_LT(rel(extended_polylog(1.0, z, 1.0).value, -std::log(1.0 - z)), 1e-12);
}

TEST(LerchZeta, IsPhiOnTheUnitCircle) {
    cplx s(0.6, 0.1), a(0.3), c(0.45);
    EXPECT_LT(rel(lerch_zeta(s, a, c).value, phi(s, exp_2pi_i(a), c).value), 1e-14);
}

TEST(Phi, ToleranceIsHonoured) {
    EvalResult loose = phi(2.0, 0.7, 0.5, 1e-6);
    EvalResult tight = phi(2.0, 0.7, 0.5, 1e-14);
    EXPECT_LT(std::abs(loose.value - tight.value), 1e-5);
    EXPECT_LE(tight.error_estimate, 1e-12);
}

TEST(Phi, MethodNames) {
    EXPECT_EQ(to_string(Method::series), "series");
    EXPECT_EQ(to_string(Method::integral), "integral");
    EXPECT_EQ(to_string(Method::c_shift), "c_shift");
    EXPECT_EQ(to_string(Method::reflection), "reflection");
}

// mpmath lerchphi just off the cut [1, inf)
TEST(Phi, NearTheCut) {
    const Ref near_cut[] = {
        {{0.7, 0.2}, {3, 1e-8}, 0.4, {-0.18799492109290444665, 2.0996314527386835192}, Method::integral},
        {1.5, {1.05, -1e-7}, 2.0, {1.3522683642283694217, -0.71021883063963471557}, Method::integral},
        {2.5, {50, 0.01}, {0.3, 0.2}, {1.4331164003979694347, -7.8315846775025777664}, Method::integral},
        {0.3, {1.2, 0.3}, 0.8, {-0.15066807147783280835, 2.4770242837081095088}, Method::integral},
    };
    for (const auto& r : near_cut) {
        EvalResult e = phi(r.s, r.z, r.c);
        EXPECT_LT(rel(e.value, r.value), 1e-12) << "z=" << r.z;
        EXPECT_EQ(e.method, r.method);
    }
}
