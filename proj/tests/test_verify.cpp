#include <gtest/gtest.h>

#include "lerch/lerch.hpp"

using namespace lerch;

namespace {

void expect_passed(const SuiteReport& rep) {
    EXPECT_TRUE(rep.passed) << rep.name;
    for (const auto& r : rep.reports)
        EXPECT_TRUE(r.passed) << r.identity << " at " << r.point << ": rel " << r.rel_residual << " tol " << r.tol
                              << " " << r.error;
}

}  // namespace

TEST(Suites, LaddersAndPde) {
    SuiteReport rep = run_suite("ladders");
    EXPECT_EQ(rep.reports.size(), 30u);
    expect_passed(rep);
}

TEST(Suites, LerchTransformation) {
    SuiteReport rep = run_suite("three_term");
    EXPECT_EQ(rep.reports.size(), 5u);
    expect_passed(rep);
    ResidualReport half = check_lerch_three_term(0.5, 0.5, 0.5);
    EXPECT_LT(half.rel_residual, 1e-8);
}

TEST(Suites, FourTermBothParities) {
    SuiteReport rep = run_suite("four_term");
    EXPECT_EQ(rep.reports.size(), 10u);
    expect_passed(rep);
}

TEST(Suites, SpenceAndRogersOnGrid) {
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            double x = 0.49 * i / 6.0, y = 0.49 * j / 6.0;
            ResidualReport s = check_spence(x, y), r = check_rogers(x, y);
            EXPECT_LT(s.rel_residual, 1e-10) << x << " " << y;
            EXPECT_LT(r.rel_residual, 1e-10) << x << " " << y;
        }
    expect_passed(run_suite("dilog"));
}

TEST(Suites, MonodromyVanishingAndCommutator) {
    expect_passed(run_suite("monodromy_vanishing"));
    expect_passed(run_suite("commutator"));
}

TEST(Suites, SpecialValues) {
    SuiteReport rep = run_suite("special");
    EXPECT_EQ(rep.reports.size(), 42u);
    expect_passed(rep);
}

// A residual check must be able to fail.
TEST(Checks, DetectWrongRightHandSides) {
    EXPECT_FALSE(detail::make_report("x", "p", 1.0, 1.0 + 1e-6, 1e-9).passed);
    EXPECT_TRUE(detail::make_report("x", "p", 1.0, 1.0 + 1e-10, 1e-9).passed);
    // D+ applied to Phi(s) against Phi(s+1) with the wrong sign
    cplx s = 2.0, z = 0.5, c = 0.5;
    cplx h = 1e-5;
    cplx dc = (phi(s, z, c + h).value - phi(s, z, c - h).value) / (2.0 * h);
    EXPECT_FALSE(detail::make_report("ladder_up", "p", dc, s * phi(s + 1.0, z, c).value, 1e-6).passed);
    EXPECT_TRUE(detail::make_report("ladder_up", "p", dc, -s * phi(s + 1.0, z, c).value, 1e-6).passed);
    // the monodromy term satisfies the same PDE as Phi
    EXPECT_TRUE(check_pde_monodromy_term(cplx(0.4, 0.2), cplx(-0.5, 0.5), 0.7).passed);
    EXPECT_TRUE(check_pde(cplx(0.4, 0.2), cplx(-0.5, 0.5), 0.7).passed);
}

TEST(Checks, DomainGuards) {
    EXPECT_THROW(check_four_term(1.5, 0.5, 0.5, 1), DomainError);
    EXPECT_THROW(check_spence(0.7, 0.6), DomainError);
    EXPECT_THROW(check_rogers(0.0, 0.5), DomainError);
    EXPECT_FALSE(check_lerch_three_term(0.5, 1.5, 0.5).passed);
    EXPECT_THROW(run_suite("nope"), DomainError);
    EXPECT_THROW(default_grid("nope"), DomainError);
}

TEST(Checks, EvaluationFailuresAreReportedNotThrown) {
    // z = 1 is a singular stratum
    ResidualReport r = check_ladder_down(2.0, 1.0, 0.5);
    EXPECT_FALSE(r.passed);
    EXPECT_FALSE(r.error.empty());
}

TEST(Runner, EmptyGridWarns) {
    SuiteReport rep = run_suite("ladders", {}, 0.0, 1);
    EXPECT_TRUE(rep.passed);
    EXPECT_TRUE(rep.reports.empty());
    ASSERT_EQ(rep.warnings.size(), 1u);
}

TEST(Runner, ThreadCountDoesNotChangeResults) {
    SuiteReport a = run_suite("ladders", default_grid("ladders"), 0.0, 1);
    SuiteReport b = run_suite("ladders", default_grid("ladders"), 0.0, 4);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        EXPECT_EQ(a.reports[i].point, b.reports[i].point);
        EXPECT_EQ(a.reports[i].left, b.reports[i].left);
        EXPECT_EQ(a.reports[i].right, b.reports[i].right);
    }
}

TEST(Runner, GlobalToleranceOverridesDefaults) {
    SuiteReport rep = run_suite("ladders", default_grid("ladders"), 1e-30, 1);
    EXPECT_FALSE(rep.passed);
    for (const auto& r : rep.reports) EXPECT_EQ(r.tol, 1e-30);
}

TEST(Runner, SuiteNames) {
    const auto& n = suite_names();
    EXPECT_NE(std::find(n.begin(), n.end(), "all"), n.end());
    EXPECT_NE(std::find(n.begin(), n.end(), "four_term"), n.end());
}
