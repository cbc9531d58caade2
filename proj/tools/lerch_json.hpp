#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "lerch/lerch.hpp"

namespace lerch::kit {

using json = nlohmann::json;

inline constexpr const char* schema_id = "lerch-kit/1";

// JSON has no inf/nan, so those travel as strings.
inline json real_to_json(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

inline double real_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw std::invalid_argument("not a real number: " + s);
    }
    return j.get<double>();
}

inline json cplx_to_json(cplx z) { return json::array({real_to_json(z.real()), real_to_json(z.imag())}); }

inline cplx cplx_from_json(const json& j) { return {real_from_json(j.at(0)), real_from_json(j.at(1))}; }

// integers outside int64 are written as decimal strings
inline json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

inline json bigints_to_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(bigint_to_json(x));
    return a;
}

inline std::vector<BigInt> bigints_from_json(const json& j) {
    std::vector<BigInt> v;
    for (const auto& x : j) v.push_back(bigint_from_json(x));
    return v;
}

inline Method method_from_string(const std::string& s) {
    for (Method m : {Method::series, Method::integral, Method::c_shift, Method::reflection})
        if (to_string(m) == s) return m;
    throw std::invalid_argument("unknown method " + s);
}

inline json to_json(const EvalResult& r) {
    return {{"value", cplx_to_json(r.value)},
            {"method", to_string(r.method)},
            {"error_estimate", real_to_json(r.error_estimate)}};
}

inline EvalResult eval_result_from_json(const json& j) {
    return {cplx_from_json(j.at("value")), method_from_string(j.at("method").get<std::string>()),
            real_from_json(j.at("error_estimate"))};
}

inline json to_json(const BranchValue& b) {
    json cs = json::array();
    for (const auto& c : b.contributions) cs.push_back({{"term", c.term}, {"value", cplx_to_json(c.value)}});
    return {{"base", cplx_to_json(b.base)}, {"contributions", cs}, {"total", cplx_to_json(b.total)}};
}

inline BranchValue branch_value_from_json(const json& j) {
    BranchValue b{cplx_from_json(j.at("base")), {}, cplx_from_json(j.at("total"))};
    for (const auto& c : j.at("contributions"))
        b.contributions.push_back({c.at("term").get<std::string>(), cplx_from_json(c.at("value"))});
    return b;
}

inline json to_json(const ResidualReport& r) {
    return {{"identity", r.identity},
            {"point", r.point},
            {"left", cplx_to_json(r.left)},
            {"right", cplx_to_json(r.right)},
            {"abs_residual", real_to_json(r.abs_residual)},
            {"rel_residual", real_to_json(r.rel_residual)},
            {"tol", real_to_json(r.tol)},
            {"passed", r.passed},
            {"error", r.error}};
}

inline ResidualReport residual_report_from_json(const json& j) {
    ResidualReport r;
    r.identity = j.at("identity").get<std::string>();
    r.point = j.at("point").get<std::string>();
    r.left = cplx_from_json(j.at("left"));
    r.right = cplx_from_json(j.at("right"));
    r.abs_residual = real_from_json(j.at("abs_residual"));
    r.rel_residual = real_from_json(j.at("rel_residual"));
    r.tol = real_from_json(j.at("tol"));
    r.passed = j.at("passed").get<bool>();
    r.error = j.at("error").get<std::string>();
    return r;
}

inline json to_json(const SuiteReport& s) {
    json reps = json::array();
    for (const auto& r : s.reports) reps.push_back(to_json(r));
    return {{"suite", s.name}, {"passed", s.passed}, {"warnings", s.warnings}, {"reports", reps}};
}

inline SuiteReport suite_report_from_json(const json& j) {
    SuiteReport s;
    s.name = j.at("suite").get<std::string>();
    s.passed = j.at("passed").get<bool>();
    s.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& r : j.at("reports")) s.reports.push_back(residual_report_from_json(r));
    return s;
}

struct SpecialTable {
    unsigned m = 0;
    std::vector<BigInt> r;        // r_m, ascending powers of z
    std::vector<BigInt> laurent;  // a_{m,0..m+1}

    friend bool operator==(const SpecialTable&, const SpecialTable&) = default;
};

inline SpecialTable special_table(unsigned m) {
    SpecialTable t;
    t.m = m;
    const auto r = r_poly(m);
    t.r = r.coefficients();
    t.laurent = laurent_coeffs(m);
    return t;
}

inline json to_json(const SpecialTable& t) {
    return {{"m", t.m}, {"r", bigints_to_json(t.r)}, {"laurent", bigints_to_json(t.laurent)}};
}

inline SpecialTable special_table_from_json(const json& j) {
    return {j.at("m").get<unsigned>(), bigints_from_json(j.at("r")), bigints_from_json(j.at("laurent"))};
}

inline json to_json(const WeylOperator& op) {
    json ks = json::array();
    for (unsigned k = 0; k <= op.m + 1; ++k)
        ks.push_back({{"k", k},
                      {"alpha", bigints_to_json(op.alpha[k].coefficients())},
                      {"beta", bigints_to_json(op.beta[k].coefficients())}});
    return {{"m", op.m}, {"coefficients", ks}};
}

inline WeylOperator weyl_operator_from_json(const json& j) {
    WeylOperator op;
    op.m = j.at("m").get<unsigned>();
    for (const auto& k : j.at("coefficients")) {
        op.alpha.emplace_back(bigints_from_json(k.at("alpha")));
        op.beta.emplace_back(bigints_from_json(k.at("beta")));
    }
    return op;
}

// rows of [re, im] pairs
inline json matrix_to_json(const Eigen::MatrixXcd& M) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < M.cols(); ++k) row.push_back(cplx_to_json(M(i, k)));
        rows.push_back(row);
    }
    return rows;
}

inline Eigen::MatrixXcd matrix_from_json(const json& j) {
    const auto n = static_cast<Eigen::Index>(j.size());
    const auto m = n ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
    Eigen::MatrixXcd M(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < m; ++k) M(i, k) = cplx_from_json(j.at(i).at(k));
    return M;
}

inline json to_json(const MonodromyMatrix& M) {
    return {{"generator", M.generator}, {"kind", to_string(M.kind)}, {"entries", matrix_to_json(M.entries)}};
}

inline MonodromyMatrix monodromy_matrix_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>() == "singular" ? BasisKind::singular : BasisKind::regular;
    return {matrix_from_json(j.at("entries")), j.at("generator").get<std::string>(), kind};
}

}  // namespace lerch::kit
