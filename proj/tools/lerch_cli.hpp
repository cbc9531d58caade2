#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lerch/lerch.hpp"
#include "lerch_json.hpp"
#include "lerch_parse.hpp"

namespace lerch::kit {

inline constexpr const char* tol_env = "LERCH_KIT_TOL";

// Thrown inside a command to leave with a given exit status.
struct Exit {
    int code;
    std::string message;
};

inline std::string fmt_real(double x, int digits = 16) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::string fmt_cplx(cplx v, int digits = 16) {
    if (v.imag() == 0.0) return fmt_real(v.real(), digits);
    if (v.real() == 0.0) return fmt_real(v.imag(), digits) + "i";
    std::string im = fmt_real(std::abs(v.imag()), digits);
    return fmt_real(v.real(), digits) + (std::signbit(v.imag()) ? "-" : "+") + im + "i";
}

inline std::string fmt_param(const Param& p) {
    if (p.infinite) return "inf";
    if (!p.exact) return fmt_cplx(p.value);
    if (p.exact->is_real()) return to_string(p.exact->re);
    std::string im = to_string(p.exact->im < 0 ? Rational(-p.exact->im) : p.exact->im);
    return (p.exact->re == 0 ? std::string() : to_string(p.exact->re)) + (p.exact->im < 0 ? "-" : p.exact->re == 0 ? "" : "+") + im + "i";
}

// flag, then environment, then fallback
inline double resolve_tol(const std::optional<double>& flag, double fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv(tol_env)) {
        try {
            std::size_t used = 0;
            double v = std::stod(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw Exit{1, std::string(tol_env) + " must be a positive number"};
    }
    return fallback;
}

inline Param parse_arg(const std::string& name, const std::string& text) {
    try {
        return parse_param(text);
    } catch (const std::invalid_argument& e) {
        throw Exit{1, "--" + name + ": " + e.what()};
    }
}

inline json base_json(const std::string& command) { return {{"schema", schema_id}, {"command", command}}; }

inline std::string stratum_message(const StratumClass& st) {
    std::string cond;
    for (const auto& c : st.conditions)
        // c = 1, 2, ... is removable and not worth naming
        if (c.rfind("c=", 0) != 0 || std::stol(c.substr(2)) <= 0) cond += (cond.empty() ? "" : ", ") + c;
    return "singular stratum " + cond;
}

struct CommonOpts {
    std::optional<double> tol;
    bool json = false;
};

// --- eval ---------------------------------------------------------------

struct EvalOpts : CommonOpts {
    std::string s, z, c;
};

inline int cmd_eval(const EvalOpts& o, std::ostream& out) {
    const Param s = parse_arg("s", o.s), z = parse_arg("z", o.z), c = parse_arg("c", o.c);
    const double tol = resolve_tol(o.tol, default_tol);
    const bool approx = s.approximate || z.approximate || c.approximate;
    const StratumClass st = classify_stratum({s, z, c});
    json j = base_json("eval");
    j["input"] = {{"s", fmt_param(s)}, {"z", fmt_param(z)}, {"c", fmt_param(c)}};
    j["approximate_input"] = approx;
    j["stratum"] = st.describe();

    auto emit = [&](cplx v, const std::string& method, double e, const std::optional<std::string>& exact) {
        j["value"] = cplx_to_json(v);
        j["method"] = method;
        j["error_estimate"] = real_to_json(e);
        if (exact) j["exact"] = *exact;
        if (o.json) {
            out << j.dump(2) << "\n";
            return;
        }
        if (exact)
            out << "value: " << *exact << "\nexact: rational\n";
        else
            out << "value: " << fmt_cplx(v) << "\n";
        out << "method: " << method << "\nerror_estimate: " << fmt_real(e, 3) << "\nstratum: " << st.describe()
            << "\n";
        if (approx) out << "input: approximate\n";
    };

    // non-positive integer s with exact real z, c: the rational closed form
    const bool exact_inputs = s.exact && z.exact && c.exact && !approx && !z.infinite;
    if (exact_inputs && s.exact->is_integer() && s.exact->re <= 0 && z.exact->is_real() && c.exact->is_real()) {
        const unsigned m = static_cast<unsigned>(Rational(-s.exact->re).convert_to<long>());
        const Rational& zq = z.exact->re;
        const Rational& cq = c.exact->re;
        Rational value;
        if (zq == 0) {
            value = 1;
            for (unsigned i = 0; i < m; ++i) value *= cq;
        } else {
            RationalEval r = negative_polylog(m).evaluate(zq, cq);
            if (!r.value) throw Exit{2, "singular stratum z=1 (pole of order " + std::to_string(r.pole_order) + ")"};
            value = *r.value / zq;
        }
        emit(cplx(to_double(value), 0.0), "special_values", 0.0, to_string(value));
        return 0;
    }

    if (z.infinite) throw Exit{2, "singular stratum z=inf"};
    if (!st.evaluable() && st.tag != StratumTag::singular_z0) throw Exit{2, stratum_message(st)};
    const EvalResult r = phi(s.value, z.value, c.value, tol);
    emit(r.value, to_string(r.method), r.error_estimate, std::nullopt);
    return 0;
}

// --- monodromy ------------------------------------------------------------

struct MonodromyOpts : CommonOpts {
    std::string word, s, z, c;
};

inline int cmd_monodromy(const MonodromyOpts& o, std::ostream& out) {
    HomotopyWord w;
    try {
        w = parse_word(o.word);
    } catch (const std::invalid_argument& e) {
        throw Exit{1, std::string("--word: ") + e.what()};
    }
    const Param s = parse_arg("s", o.s), z = parse_arg("z", o.z), c = parse_arg("c", o.c);
    const double tol = resolve_tol(o.tol, default_tol);
    if (z.infinite) throw Exit{2, "singular stratum z=inf"};
    const BranchValue bv = branch_value(w, s.value, z.value, c.value, tol);
    if (o.json) {
        json j = base_json("monodromy");
        j["word"] = to_string(w);
        j["input"] = {{"s", fmt_param(s)}, {"z", fmt_param(z)}, {"c", fmt_param(c)}};
        j.update(to_json(bv));
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "word: " << to_string(w) << "\nbase: " << fmt_cplx(bv.base) << "\n";
    for (const auto& t : bv.contributions) out << "  " << t.term << ": " << fmt_cplx(t.value) << "\n";
    out << "total: " << fmt_cplx(bv.total) << "\n";
    return 0;
}

// --- special ----------------------------------------------------------------

struct SpecialOpts : CommonOpts {
    unsigned m = 0;
    std::optional<std::string> z, c;
};

inline int cmd_special(const SpecialOpts& o, std::ostream& out) {
    const SpecialTable t = special_table(o.m);
    json j = base_json("special");
    j.update(to_json(t));
    std::string li_text;
    if (o.z || o.c) {
        if (!o.z || !o.c) throw Exit{1, "--z and --c go together"};
        const Param z = parse_arg("z", *o.z), c = parse_arg("c", *o.c);
        json li = {{"z", fmt_param(z)}, {"c", fmt_param(c)}};
        const auto F = negative_polylog(o.m);
        if (z.exact && c.exact && z.exact->is_real() && c.exact->is_real()) {
            RationalEval r = F.evaluate(z.exact->re, c.exact->re);
            if (r.value) {
                li["value"] = to_string(*r.value);
                li["exact"] = true;
            } else {
                li["value"] = "inf";
                li["pole_order"] = r.pole_order;
                li["exact"] = true;
            }
        } else if (z.infinite) {
            throw Exit{2, "Li_{-m}(z, c) is evaluated at finite z"};
        } else if (z.value == cplx(1.0, 0.0)) {
            li["value"] = "inf";
            li["pole_order"] = o.m + 1;
            li["exact"] = false;
        } else {
            li["value"] = cplx_to_json(F.evaluate(z.value, c.value));
            li["exact"] = false;
        }
        li["approximate_input"] = z.approximate || c.approximate;
        li_text = "Li_{-" + std::to_string(o.m) + "}(" + fmt_param(z) + ", " + fmt_param(c) + ") = " +
                  (li["value"].is_string() ? li["value"].get<std::string>() : fmt_cplx(cplx_from_json(li["value"])));
        if (li.contains("pole_order"))
            li_text += " (pole of order " + std::to_string(li["pole_order"].get<int>()) + ")";
        j["li"] = li;
    }
    if (o.json) {
        out << j.dump(2) << "\n";
        return 0;
    }
    auto list = [](const std::vector<BigInt>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
        return s + "]";
    };
    out << "m: " << o.m << "\nr_" << o.m << "(z) = " << r_poly(o.m).to_string("z") << "\nr: " << list(t.r)
        << "\nlaurent: " << list(t.laurent) << "\n";
    if (!li_text.empty()) out << li_text << "\n";
    return 0;
}

// --- ode ----------------------------------------------------------------------

struct OdeOpts : CommonOpts {
    unsigned m = 1;
    std::string c = "1";
    bool matrices = false, coeffs = false, klass = false, irrational = false;
};

inline std::string fmt_matrix(const Eigen::MatrixXcd& M) {
    std::string s;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        s += "  [";
        for (Eigen::Index k = 0; k < M.cols(); ++k) {
            cplx v = M(i, k);
            // drop -0 and rounding dust in the display only
            if (std::abs(v.real()) < 1e-300) v.real(0.0);
            if (std::abs(v.imag()) < 1e-300) v.imag(0.0);
            s += (k ? ", " : "") + fmt_cplx(v, 12);
        }
        s += "]\n";
    }
    return s;
}

inline int cmd_ode(OdeOpts o, std::ostream& out) {
    const Param c = parse_arg("c", o.c);
    if (c.infinite) throw Exit{2, "c must be finite"};
    if (!o.matrices && !o.coeffs && !o.klass) o.matrices = o.coeffs = o.klass = true;
    json j = base_json("ode");
    j["m"] = o.m;
    j["c"] = fmt_param(c);
    std::ostringstream text;
    if (o.coeffs) {
        const WeylOperator op = weyl_expand(o.m);
        j.update(to_json(op));
        text << "D_" << o.m + 1 << " = sum_k (alpha_k(c) z + beta_k(c)) z^k (d/dz)^k\n" << to_string(op) << "\n";
    }
    if (o.matrices) {
        const FuchsianBasis b = basis(o.m, c);
        const MonodromyMatrix r0 = rho(LetterKind::Z0, o.m, c), r1 = rho(LetterKind::Z1, o.m, c);
        j["basis"] = {{"kind", to_string(b.kind)}, {"entries", b.entries}};
        j["matrices"] = {{"Z0", to_json(r0)}, {"Z1", to_json(r1)}};
        text << "basis (" << to_string(b.kind) << "):";
        for (std::size_t i = 0; i < b.entries.size(); ++i) text << (i ? ", " : " ") << b.entries[i];
        text << "\nrho(Z0) =\n" << fmt_matrix(r0.entries) << "rho(Z1) =\n" << fmt_matrix(r1.entries);
    }
    if (o.klass) {
        const std::string cls = to_string(unipotency_class(o.m, c, o.irrational));
        j["class"] = cls;
        text << "class: " << cls << "\n";
    }
    if (o.json)
        out << j.dump(2) << "\n";
    else
        out << text.str();
    return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyOpts : CommonOpts {
    std::string suite = "all";
    long points = -1;
    unsigned threads = 1;
};

inline int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
        std::string known;
        for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
        throw Exit{1, "unknown suite '" + o.suite + "' (known: " + known + ")"};
    }
    const double tol = resolve_tol(o.tol, 0.0);
    auto grid = default_grid(o.suite);
    if (o.points >= 0 && static_cast<std::size_t>(o.points) < grid.size()) grid.resize(static_cast<std::size_t>(o.points));
    const SuiteReport rep = run_suite(o.suite, grid, tol, o.threads);
    for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
    if (o.json) {
        json j = base_json("verify");
        j.update(to_json(rep));
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rep.reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.identity << " [" << r.point << "] rel=" << fmt_real(r.rel_residual, 3)
                << " tol=" << fmt_real(r.tol, 3);
            if (!r.error.empty()) out << " error: " << r.error;
            out << "\n";
        }
        out << "suite " << rep.name << ": " << (rep.passed ? "passed" : "FAILED") << " (" << rep.reports.size()
            << " checks)\n";
    }
    return rep.passed ? 0 : 3;
}

// --- sweep ------------------------------------------------------------------

struct GridAxis {
    std::string var;
    ExactComplex start, stop;
    std::size_t count = 0;

    // interpolated in exact arithmetic, rounded once
    cplx at(std::size_t i) const {
        if (count <= 1) return start.to_complex();
        const Rational t(static_cast<long>(i), static_cast<long>(count - 1));
        return ExactComplex{start.re + (stop.re - start.re) * t, start.im + (stop.im - start.im) * t}.to_complex();
    }
};

inline GridAxis parse_grid(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos) throw Exit{1, "--grid expects var=start:stop:count, got '" + arg + "'"};
    GridAxis g;
    g.var = arg.substr(0, eq);
    if (g.var != "s" && g.var != "z" && g.var != "c" && g.var != "a")
        throw Exit{1, "--grid variable must be one of s, z, c, a"};
    std::vector<std::string> parts;
    std::stringstream ss(arg.substr(eq + 1));
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw Exit{1, "--grid expects var=start:stop:count, got '" + arg + "'"};
    const Param a = parse_arg("grid", parts[0]), b = parse_arg("grid", parts[1]);
    if (a.infinite || b.infinite) throw Exit{1, "--grid endpoints must be finite"};
    g.start = *a.exact;
    g.stop = *b.exact;
    try {
        std::size_t used = 0;
        long n = std::stol(parts[2], &used);
        if (used != parts[2].size() || n < 0) throw std::invalid_argument("count");
        g.count = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw Exit{1, "--grid count must be a non-negative integer"};
    }
    return g;
}

struct SweepRow {
    std::size_t index = 0;
    cplx s, z, c, a;
    cplx value{0.0, 0.0};
    std::string method;
    double error_estimate = 0.0;
    std::string error;  // "exit <code>: <message>" when the row failed
    int code = 0;
};

struct SweepOpts : CommonOpts {
    std::string expr = "phi";
    std::vector<std::string> grids;
    std::string s = "2", z = "1/2", c = "1", a = "1/3";
    unsigned m = 1, k = 0;
    long n = 0;
    std::optional<std::string> out_file;
    unsigned threads = 0;
};

inline const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols{"index", "s_re", "s_im", "z_re", "z_im", "c_re", "c_im",
                                               "a_re", "a_im", "value_re", "value_im", "method",
                                               "error_estimate", "error"};
    return cols;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

inline void evaluate_row(const SweepOpts& o, double tol, SweepRow& r) {
    try {
        if (o.expr == "phi") {
            auto e = phi(r.s, r.z, r.c, tol);
            r.value = e.value;
            r.method = to_string(e.method);
            r.error_estimate = e.error_estimate;
        } else if (o.expr == "periodic_zeta") {
            auto e = periodic_zeta(r.a, r.s, tol);
            r.value = e.value;
            r.method = to_string(e.method);
            r.error_estimate = e.error_estimate;
        } else if (o.expr == "li") {
            auto e = extended_polylog(r.s, r.z, r.c, tol);
            r.value = e.value;
            r.method = to_string(e.method);
            r.error_estimate = e.error_estimate;
        } else if (o.expr == "li_star") {
            r.value = li_star(o.m, o.k, r.z);
            r.method = std::abs(r.z) <= 0.6 ? "series" : "continuation";
            r.error_estimate = 0.0;
        } else {
            r.value = f_elementary(o.n, r.s, r.z, r.c);
            r.method = "closed_form";
            r.error_estimate = 0.0;
        }
    } catch (const Error& e) {
        r.code = exit_code_for(e.kind());
        r.error = "exit " + std::to_string(r.code) + ": " + e.what();
    } catch (const std::exception& e) {
        r.code = 3;
        r.error = std::string("exit 3: ") + e.what();
    }
}

inline std::vector<SweepRow> sweep_rows(const SweepOpts& o, double tol) {
    static const std::vector<std::string> exprs{"phi", "periodic_zeta", "li", "li_star", "monodromy-term"};
    if (std::find(exprs.begin(), exprs.end(), o.expr) == exprs.end())
        throw Exit{1, "--expr must be one of phi, periodic_zeta, li, li_star, monodromy-term"};
    std::vector<GridAxis> axes;
    for (const auto& g : o.grids) axes.push_back(parse_grid(g));
    const cplx s0 = parse_arg("s", o.s).value, z0 = parse_arg("z", o.z).value, c0 = parse_arg("c", o.c).value,
               a0 = parse_arg("a", o.a).value;
    std::size_t total = axes.empty() ? 0 : 1;
    for (const auto& g : axes) total *= g.count;
    // first axis outermost
    return parallel_map<SweepRow>(
        total,
        [&](std::size_t idx) {
            SweepRow r;
            r.index = idx;
            r.s = s0, r.z = z0, r.c = c0, r.a = a0;
            std::size_t rem = idx;
            for (std::size_t q = axes.size(); q-- > 0;) {
                const cplx v = axes[q].at(rem % axes[q].count);
                rem /= axes[q].count;
                const auto& n = axes[q].var;
                (n == "s" ? r.s : n == "z" ? r.z : n == "c" ? r.c : r.a) = v;
            }
            evaluate_row(o, tol, r);
            return r;
        },
        o.threads);
}

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
    const auto& cols = sweep_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << "\n";
    for (const auto& r : rows) {
        auto f = [](double x) { return fmt_real(x, 17); };
        os << r.index << "," << f(r.s.real()) << "," << f(r.s.imag()) << "," << f(r.z.real()) << ","
           << f(r.z.imag()) << "," << f(r.c.real()) << "," << f(r.c.imag()) << "," << f(r.a.real()) << ","
           << f(r.a.imag()) << ",";
        if (r.code == 0)
            os << f(r.value.real()) << "," << f(r.value.imag()) << "," << r.method << "," << f(r.error_estimate) << ",";
        else
            os << ",,,,";
        os << csv_field(r.error) << "\n";
    }
}

inline json rows_to_json(const SweepOpts& o, const std::vector<SweepRow>& rows) {
    json j = base_json("sweep");
    j["expr"] = o.expr;
    j["columns"] = sweep_columns();
    json arr = json::array();
    for (const auto& r : rows) {
        json row = {{"index", r.index}, {"s", cplx_to_json(r.s)}, {"z", cplx_to_json(r.z)},
                    {"c", cplx_to_json(r.c)}, {"a", cplx_to_json(r.a)}};
        if (r.code == 0) {
            row["value"] = cplx_to_json(r.value);
            row["method"] = r.method;
            row["error_estimate"] = real_to_json(r.error_estimate);
        } else {
            row["error"] = r.error;
        }
        arr.push_back(row);
    }
    j["rows"] = arr;
    return j;
}

inline int cmd_sweep(const SweepOpts& o, std::ostream& out, std::ostream& err) {
    const double tol = resolve_tol(o.tol, default_tol);
    const auto rows = sweep_rows(o, tol);
    if (rows.empty()) err << "warning: empty grid, no rows written\n";
    const bool as_json = o.json || (o.out_file && o.out_file->size() >= 5 &&
                                    o.out_file->compare(o.out_file->size() - 5, 5, ".json") == 0);
    std::ostringstream buf;
    if (as_json)
        buf << rows_to_json(o, rows).dump(2) << "\n";
    else
        write_csv(rows, buf);
    if (o.out_file) {
        std::ofstream f(*o.out_file);
        if (!f) throw Exit{1, "cannot write " + *o.out_file};
        f << buf.str();
    } else {
        out << buf.str();
    }
    std::size_t ok = 0, failed = 0;
    for (const auto& r : rows) (r.code == 0 ? ok : failed)++;
    if (failed) err << "warning: " << failed << " of " << rows.size() << " rows failed\n";
    if (!rows.empty() && ok == 0) return rows.front().code;
    return 0;
}

// --- entry point --------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"lerch-kit: Lerch transcendent evaluation, monodromy, special values and identity checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lerch-kit 1.0");

    auto add_common = [](CLI::App* sub, CommonOpts& c) {
        sub->add_option("--tol", c.tol, "tolerance (overrides LERCH_KIT_TOL)");
        sub->add_flag("--json", c.json, "machine-readable output");
    };

    EvalOpts ev;
    auto* eval = app.add_subcommand("eval", "evaluate Phi(s, z, c)");
    eval->add_option("--s", ev.s, "s (rational, decimal or re+im i)")->required();
    eval->add_option("--z", ev.z, "z")->required();
    eval->add_option("--c", ev.c, "c")->required();
    add_common(eval, ev);

    MonodromyOpts mo;
    auto* mono = app.add_subcommand("monodromy", "continue Phi along a homotopy word");
    mono->add_option("--word", mo.word, "word such as \"Z0^2 Z1^-1 Y-3\"")->required();
    mono->add_option("--s", mo.s)->required();
    mono->add_option("--z", mo.z)->required();
    mono->add_option("--c", mo.c)->required();
    add_common(mono, mo);

    SpecialOpts sp;
    auto* spv = app.add_subcommand("special", "r_m, Laurent coefficients and Li_{-m}(z, c)");
    spv->add_option("--m", sp.m, "m >= 0")->required();
    spv->add_option("--z", sp.z);
    spv->add_option("--c", sp.c);
    add_common(spv, sp);

    OdeOpts od;
    auto* ode = app.add_subcommand("ode", "deformed polylogarithm operator and monodromy matrices");
    ode->add_option("--m", od.m, "m (operator order m+1)")->required();
    ode->add_option("--c", od.c, "deformation parameter");
    ode->add_flag("--matrices", od.matrices, "rho(Z0), rho(Z1) and the basis");
    ode->add_flag("--coeffs", od.coeffs, "Weyl coefficients alpha_k, beta_k");
    ode->add_flag("--class", od.klass, "unipotency class");
    ode->add_flag("--irrational", od.irrational, "treat real c as irrational");
    add_common(ode, od);

    VerifyOpts vo;
    auto* ver = app.add_subcommand("verify", "run an identity suite");
    ver->add_option("--suite", vo.suite, "suite name");
    ver->add_option("--points", vo.points, "use only the first N grid points");
    ver->add_option("--threads", vo.threads, "worker threads");
    add_common(ver, vo);

    SweepOpts sw;
    auto* swp = app.add_subcommand("sweep", "evaluate an expression on a grid");
    swp->add_option("--expr", sw.expr, "phi, periodic_zeta, li, li_star or monodromy-term")->required();
    swp->add_option("--grid", sw.grids, "var=start:stop:count (repeatable)")->required();
    swp->add_option("--s", sw.s);
    swp->add_option("--z", sw.z);
    swp->add_option("--c", sw.c);
    swp->add_option("--a", sw.a);
    swp->add_option("--m", sw.m, "weight for li_star");
    swp->add_option("--k", sw.k, "li_star order k (c = -k)");
    swp->add_option("--n", sw.n, "index of the monodromy term f_n");
    swp->add_option("--out", sw.out_file, "output file (.csv or .json)");
    swp->add_option("--threads", sw.threads, "worker threads (0 = all cores)");
    add_common(swp, sw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    auto fail = [&](int code, const std::string& msg, const std::string& kind, bool as_json) {
        err << "error: " << msg << "\n";
        if (as_json) {
            json j = base_json(app.get_subcommands().front()->get_name());
            j["error"] = {{"kind", kind}, {"message", msg}, {"exit_code", code}};
            out << j.dump(2) << "\n";
        }
        return code;
    };
    const bool as_json = ev.json || mo.json || sp.json || od.json || vo.json || sw.json;
    try {
        if (*eval) return cmd_eval(ev, out);
        if (*mono) return cmd_monodromy(mo, out);
        if (*spv) return cmd_special(sp, out);
        if (*ode) return cmd_ode(od, out);
        if (*ver) return cmd_verify(vo, out, err);
        return cmd_sweep(sw, out, err);
    } catch (const Exit& e) {
        return fail(e.code, e.message, e.code == 1 ? "usage" : "domain", as_json);
    } catch (const Error& e) {
        static const char* kinds[] = {"domain", "singular_stratum", "pole", "accuracy",
                                      "branch", "identity_violation", "transport"};
        return fail(exit_code_for(e.kind()), e.what(), kinds[static_cast<int>(e.kind())], as_json);
    } catch (const std::exception& e) {
        return fail(3, e.what(), "internal", as_json);
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"lerch-kit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lerch::kit
