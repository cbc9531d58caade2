#include <gtest/gtest.h>

#include <limits>

#include "lerch/lerch.hpp"

using namespace lerch;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

TEST(BranchLog, PrincipalAttachesNegativeAxisToUpperHalfPlane) {
    EXPECT_DOUBLE_EQ(principal_log(-1.0).imag(), pi);
    EXPECT_DOUBLE_EQ(principal_log(cplx(-1.0, -0.0)).imag(), pi);
    EXPECT_NEAR(principal_log(cplx(-1.0, -1e-300)).imag(), -pi, 1e-12);
    EXPECT_DOUBLE_EQ(principal_log(cplx(0.0, -1.0)).imag(), -pi / 2);
}

TEST(BranchLog, SemiPrincipalRangeIsZeroToTwoPi) {
    EXPECT_NEAR(semi_principal_log(cplx(0.0, -1.0)).imag(), 1.5 * pi, 1e-15);
    EXPECT_DOUBLE_EQ(semi_principal_log(2.0).imag(), 0.0);
    EXPECT_NEAR(semi_principal_log(cplx(1.0, -1e-12)).imag(), two_pi, 1e-11);
    EXPECT_LT(semi_principal_log(cplx(1.0, -1e-300)).imag(), two_pi);
    EXPECT_DOUBLE_EQ(semi_principal_log(-3.0).imag(), pi);
}

TEST(BranchLog, LogOfZeroIsDomainError) {
    EXPECT_THROW(principal_log(0.0), DomainError);
    EXPECT_THROW(semi_principal_log(0.0), DomainError);
}

TEST(BranchLog, BranchesAgreeInUpperHalfPlane) {
    for (double t = 0.05; t < pi; t += 0.3) {
        cplx z = 1.7 * std::exp(I * t);
        EXPECT_LT(std::abs(principal_log(z) - semi_principal_log(z)), 1e-15);
        cplx w = std::conj(z);
        EXPECT_NEAR((semi_principal_log(w) - principal_log(w)).imag(), two_pi, 1e-14);
    }
}

TEST(BranchedPower, IntegerExponentsAreExact) {
    EXPECT_EQ(branched_power(cplx(-2.0, 0.0), 3.0, Branch::principal), cplx(-8.0, 0.0));
    EXPECT_EQ(principal_power(0.5, -2.0), cplx(4.0, 0.0));
    EXPECT_EQ(ipow(cplx(0.0, 1.0), 4), cplx(1.0, 0.0));
    EXPECT_EQ(principal_power(3.0, 0.0), cplx(1.0, 0.0));
}

TEST(BranchedPower, ZeroBase) {
    EXPECT_EQ(principal_power(0.0, 0.5), cplx(0.0));
    EXPECT_THROW(principal_power(0.0, -0.5), DomainError);
}

TEST(BranchedPower, BranchesDifferByPhase) {
    cplx w(0.3, -0.4), s(0.7, 0.2);
    cplx p = branched_power(w, s, Branch::principal), q = branched_power(w, s, Branch::semi_principal);
    EXPECT_LT(rel(q, p * std::exp(two_pi * I * s)), 1e-14);
}

TEST(Trig, SinpiCospiExactZeros) {
    for (int n = -5; n <= 5; ++n) {
        EXPECT_EQ(sinpi(double(n)), 0.0);
        EXPECT_EQ(cospi(n + 0.5), 0.0);
    }
    EXPECT_EQ(exp_2pi_i(cplx(0.5)), cplx(-1.0, 0.0));
    EXPECT_EQ(exp_2pi_i(cplx(3.0)), cplx(1.0, 0.0));
    EXPECT_EQ(exp_2pi_i(cplx(0.25)), cplx(0.0, 1.0));
}

TEST(Trig, Expm1SmallArgument) {
    cplx w(1e-12, -2e-12);
    EXPECT_LT(rel(expm1(w), w + 0.5 * w * w), 1e-10);
}

// mpmath gamma at 30 digits
TEST(Gamma, MatchesReferenceValues) {
    EXPECT_LT(rel(complex_gamma(cplx(45, 30)), cplx(-1.9421102985733053137e50, 7.2640889939822692902e49)), 1e-12);
    EXPECT_LT(rel(complex_gamma(0.5), cplx(1.7724538509055160273, 0)), 1e-14);
    EXPECT_LT(rel(complex_gamma(cplx(-2.5, 0.1)), cplx(-0.89650770119975877642, -0.099318350500568559142)), 1e-13);
    EXPECT_LT(rel(complex_gamma(cplx(0.1, -7)), cplx(1.8472584713886632525e-5, 5.6256095355659045196e-6)), 1e-12);
}

TEST(Gamma, PolesAndReciprocal) {
    EXPECT_THROW(complex_gamma(0.0), PoleError);
    try {
        complex_gamma(-3.0);
        FAIL();
    } catch (const PoleError& e) {
        EXPECT_EQ(e.location(), -3);
    }
    for (int n = 0; n >= -6; --n) EXPECT_EQ(reciprocal_gamma(double(n)), cplx(0.0));
    EXPECT_EQ(complex_gamma(6.0), cplx(120.0));
    cplx s(0.3, 1.7);
    EXPECT_LT(std::abs(reciprocal_gamma(s) * complex_gamma(s) - 1.0), 1e-14);
}

TEST(Gamma, Reflection) {
    for (cplx s : {cplx(0.25, 0.5), cplx(-1.3, 2.0), cplx(3.7, -0.4)}) {
        cplx lhs = complex_gamma(s) * complex_gamma(1.0 - s);
        EXPECT_LT(rel(lhs, pi / sinpi(s)), 1e-13);
    }
}

TEST(Quadrature, TanhSinhEndpointSingularity) {
    // int_0^1 t^{-1/2} dt = 2
    auto r = tanh_sinh_unit([](double t) { return cplx(1.0 / std::sqrt(t)); }, 1e-14);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.real(), 2.0, 1e-12);
}

TEST(Quadrature, SemiAxis) {
    // int_0^inf t^{3/2} e^{-t} dt = Gamma(5/2)
    cplx v = quad_semiaxis([](double t) { return cplx(std::pow(t, 1.5) * std::exp(-t)); }, 1e-14);
    EXPECT_LT(rel(v, complex_gamma(2.5)), 1e-12);
}

TEST(Series, TailBoundStopsAtTolerance) {
    // sum 2^-n = 2
    auto r = sum_with_tail_bound([](std::size_t n) { return cplx(std::ldexp(1.0, -int(n))); },
                                 [](std::size_t n) { return std::ldexp(2.0, -int(n)); }, 1e-15);
    EXPECT_NEAR(r.value.real(), 2.0, 2e-15);
    // tail bound plus the rounding allowance 4 eps sum|t|
    EXPECT_LE(r.error, 1e-15 + 8.0 * std::numeric_limits<double>::epsilon());
    EXPECT_GT(r.terms, 40u);
}

TEST(Series, NonconvergentThrowsAccuracy) {
    EXPECT_THROW(sum_with_tail_bound([](std::size_t) { return cplx(1.0); }, [](std::size_t) { return 1.0; },
                                     1e-10, 1000),
                 AccuracyError);
}

TEST(Exact, RationalParamAndIntegerTests) {
    Param p = Param::rational(Rational(-3));
    EXPECT_TRUE(p.exact_integer());
    EXPECT_FALSE(Param::rational(Rational(1, 3)).exact_integer());
    EXPECT_TRUE(Param(2.0).exact_integer());
    EXPECT_FALSE(Param(2.0 + 1e-15).exact_integer());
    EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
}

TEST(Stratum, Classification) {
    auto cls = [](Param s, Param z, Param c) { return classify_stratum({s, z, c}); };
    EXPECT_EQ(cls(2.0, 0.5, 0.5).tag, StratumTag::regular);
    EXPECT_EQ(cls(2.0, 1.0, 0.5).tag, StratumTag::singular_z1);
    EXPECT_EQ(cls(2.0, 0.0, 0.5).tag, StratumTag::singular_z0);
    EXPECT_EQ(cls(2.0, 0.5, 3.0).tag, StratumTag::removable_c);
    EXPECT_EQ(cls(2.0, 0.5, -2.0).tag, StratumTag::singular_c);
    EXPECT_EQ(cls(2.0, 1.0, 1.0).tag, StratumTag::multiple);
    Param inf(std::numeric_limits<double>::infinity());
    inf.infinite = true;
    EXPECT_EQ(cls(2.0, inf, 0.5).tag, StratumTag::singular_zinf);
    // exact rationals are classified exactly
    EXPECT_EQ(cls(2.0, 0.5, Param::rational(Rational(1, 1000000000000000LL) - 1)).tag, StratumTag::regular);
    EXPECT_TRUE(cls(2.0, 0.5, 0.5).evaluable());
    EXPECT_FALSE(cls(2.0, 1.0, 0.5).evaluable());
    EXPECT_EQ(cls(2.0, 1.0, 1.0).describe(), "multiple (z=1, c=1)");
}

TEST(Errors, ExitCodes) {
    EXPECT_EQ(exit_code_for(ErrorKind::domain), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::singular_stratum), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::pole), 2);
    EXPECT_EQ(exit_code_for(ErrorKind::accuracy), 3);
    EXPECT_EQ(exit_code_for(ErrorKind::transport), 3);
    EXPECT_EQ(exit_code_for(ErrorKind::branch), 4);
}
