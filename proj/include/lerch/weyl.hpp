#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lerch/exact.hpp"
#include "lerch/polynomial.hpp"
#include "lerch/special.hpp"

namespace lerch {

// sum_k (alpha_k(c) z + beta_k(c)) z^k d^k/dz^k, k = 0..m+1, with
// D = z^2 d/dz ((1-z)/z) theta^m = (1-z) theta^{m+1} - (c - (c-1)z) theta^m,
// theta = z d/dz + c - 1.
struct WeylOperator {
    unsigned m = 0;
    std::vector<CPolynomial> alpha;
    std::vector<CPolynomial> beta;

    unsigned order() const { return m + 1; }
};

// theta^j = sum_k f^{(j)}_k(c) z^k d^k; entry [j][k].
inline std::vector<std::vector<CPolynomial>> theta_power_coefficients(unsigned jmax) {
    const CPolynomial cvar{0, 1};
    std::vector<std::vector<CPolynomial>> f(jmax + 1);
    f[0] = {CPolynomial{1}};
    for (unsigned j = 0; j < jmax; ++j) {
        std::vector<CPolynomial> next(j + 2);
        for (unsigned k = 0; k <= j + 1; ++k) {
            CPolynomial v;
            if (k >= 1) v += f[j][k - 1];
            if (k <= j) v += (cvar + CPolynomial{BigInt(long(k) - 1)}) * f[j][k];
            next[k] = v;
        }
        f[j + 1] = std::move(next);
    }
    return f;
}

// alpha_k = -f^{(m+1)}_k + (c-1) f^{(m)}_k,  beta_k = f^{(m+1)}_k - c f^{(m)}_k
inline WeylOperator weyl_expand(unsigned m) {
    const auto f = theta_power_coefficients(m + 1);
    const CPolynomial cvar{0, 1};
    const CPolynomial cm1{-1, 1};
    WeylOperator op;
    op.m = m;
    for (unsigned k = 0; k <= m + 1; ++k) {
        CPolynomial top = f[m + 1][k];
        CPolynomial low = k <= m ? f[m][k] : CPolynomial{};
        op.alpha.push_back(cm1 * low - top);
        op.beta.push_back(top - cvar * low);
    }
    return op;
}

inline std::string to_string(const WeylOperator& op) {
    std::string out;
    for (unsigned k = 0; k <= op.m + 1; ++k) {
        if (k) out += "\n";
        out += "k=" + std::to_string(k) + ": (" + op.alpha[k].to_string("c") + ")*z + (" +
               op.beta[k].to_string("c") + ")";
    }
    return out;
}

// Finite sum of coefficient * z^e (log z)^j with rational e.
class PowerLogSeries {
public:
    using Key = std::pair<Rational, int>;

    void add(const Rational& e, int j, const Rational& v) {
        if (v == 0) return;
        auto it = t_.find({e, j});
        if (it == t_.end()) {
            t_.emplace(Key{e, j}, v);
        } else {
            it->second += v;
            if (it->second == 0) t_.erase(it);
        }
    }
    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    PowerLogSeries& operator+=(const PowerLogSeries& o) {
        for (auto& [k, v] : o.t_) add(k.first, k.second, v);
        return *this;
    }
    PowerLogSeries scaled(const Rational& a) const {
        PowerLogSeries r;
        if (a == 0) return r;
        for (auto& [k, v] : t_) r.t_.emplace(k, v * a);
        return r;
    }
    PowerLogSeries times_z() const {
        PowerLogSeries r;
        for (auto& [k, v] : t_) r.t_.emplace(Key{k.first + 1, k.second}, v);
        return r;
    }
    // z d/dz (z^e L^j) = e z^e L^j + j z^e L^{j-1}
    PowerLogSeries theta0() const {
        PowerLogSeries r;
        for (auto& [k, v] : t_) {
            r.add(k.first, k.second, k.first * v);
            if (k.second > 0) r.add(k.first, k.second - 1, Rational(k.second) * v);
        }
        return r;
    }
    // terms with exponent <= emax
    PowerLogSeries truncated(const Rational& emax) const {
        PowerLogSeries r;
        for (auto& [k, v] : t_)
            if (k.first <= emax) r.t_.emplace(k, v);
        return r;
    }

private:
    std::map<Key, Rational> t_;
};

// Exact action of op at a rational c: z^k d^k = theta0 (theta0 - 1) ... (theta0 - k + 1).
inline PowerLogSeries apply_operator(const WeylOperator& op, const PowerLogSeries& f,
                                     const Rational& c) {
    PowerLogSeries out;
    PowerLogSeries zkdk = f;  // z^k d^k f
    for (unsigned k = 0; k <= op.m + 1; ++k) {
        if (k > 0) {
            PowerLogSeries next = zkdk.theta0();
            next += zkdk.scaled(Rational(-long(k - 1)));
            zkdk = std::move(next);
        }
        Rational a = evaluate_rational(op.alpha[k], c);
        Rational b = evaluate_rational(op.beta[k], c);
        out += zkdk.times_z().scaled(a);
        out += zkdk.scaled(b);
    }
    return out;
}

// theta = z d/dz + c - 1
inline PowerLogSeries apply_theta(const PowerLogSeries& f, const Rational& c) {
    PowerLogSeries r = f.theta0();
    r += f.scaled(c - 1);
    return r;
}

// Li_{m,c}(z) = sum_{n=0}^{N-1} z^{n+1} / (n+c)^m
inline PowerLogSeries li_series_exact(unsigned m, const Rational& c, unsigned N) {
    PowerLogSeries s;
    for (unsigned n = 0; n < N; ++n) {
        Rational d = 1;
        for (unsigned i = 0; i < m; ++i) d *= (Rational(n) + c);
        if (d == 0) throw SingularStratumError("Li_{m,c} undefined: n + c = 0");
        s.add(Rational(n + 1), 0, 1 / d);
    }
    return s;
}

// Li*_m(z,-k) = sum_{n != k, n < N} z^{n+1}/(n-k)^m + z^{k+1} (log z)^m / m!
inline PowerLogSeries li_star_series_exact(unsigned m, unsigned k, unsigned N) {
    PowerLogSeries s;
    for (unsigned n = 0; n < N; ++n) {
        if (n == k) continue;
        Rational d = 1;
        for (unsigned i = 0; i < m; ++i) d *= Rational(long(n) - long(k));
        s.add(Rational(n + 1), 0, 1 / d);
    }
    s.add(Rational(k + 1), static_cast<int>(m), Rational(1) / Rational(factorial(m)));
    return s;
}

// z^{1-c} (log z)^j / j!
inline PowerLogSeries log_basis_exact(unsigned j, const Rational& c) {
    PowerLogSeries s;
    s.add(1 - c, static_cast<int>(j), Rational(1) / Rational(factorial(j)));
    return s;
}

struct FuchsianCoefficientOrders {
    unsigned k;
    int pole_at_0;      // order of pole of c_k = A_k / A_{m+1} at z = 0
    int pole_at_1;
    int zero_at_inf;    // order of zero at infinity; large for c_k = 0
};

struct FuchsianReport {
    std::vector<FuchsianCoefficientOrders> orders;
    bool fuchsian = true;
};

// c_k(z) = (alpha_k z + beta_k) / ((1-z) z^{m+1-k}) for k <= m; the Fuchs
// condition asks for poles of order <= m+1-k at 0 and 1, and a zero of
// order >= m+1-k at infinity.
inline FuchsianReport fuchsian_check(const WeylOperator& op, const Rational& c) {
    FuchsianReport rep;
    const int n = static_cast<int>(op.m) + 1;
    for (unsigned k = 0; k <= op.m; ++k) {
        Rational a = evaluate_rational(op.alpha[k], c);
        Rational b = evaluate_rational(op.beta[k], c);
        FuchsianCoefficientOrders o{k, 0, 0, 1 << 20};
        const int gap = n - static_cast<int>(k);
        if (a != 0 || b != 0) {
            int ord0 = b != 0 ? 0 : 1;
            o.pole_at_0 = std::max(0, gap - ord0);
            o.pole_at_1 = (a + b) != 0 ? 1 : 0;
            int deg = a != 0 ? 1 : 0;
            o.zero_at_inf = gap + 1 - deg;
        }
        bool ok = o.pole_at_0 <= gap && o.pole_at_1 <= gap && o.zero_at_inf >= gap;
        rep.fuchsian = rep.fuchsian && ok;
        rep.orders.push_back(o);
    }
    // the leading coefficient itself must be (1 - z) z^{m+1}
    if (!(op.alpha[op.m + 1] == CPolynomial{-1} && op.beta[op.m + 1] == CPolynomial{1}))
        rep.fuchsian = false;
    return rep;
}

}  // namespace lerch
