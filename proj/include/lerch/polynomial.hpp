#pragma once

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lerch/exact.hpp"

namespace lerch {

// Dense univariate polynomial with coefficients in T, ascending degree.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial monomial(std::size_t k, T a = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& a) {
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& b) { return a *= b; }
    friend Polynomial operator*(const T& b, Polynomial a) { return a *= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned n) const {
        Polynomial r{T(1)};
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    // z^n p(1/z) for n >= degree
    Polynomial reversed(std::size_t n) const {
        std::vector<T> r(n + 1, T(0));
        for (std::size_t i = 0; i < c_.size() && i <= n; ++i) r[n - i] = c_[i];
        return Polynomial(std::move(r));
    }

    template <class U>
    U evaluate(const U& x) const {
        U acc = U(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    std::string to_string(const std::string& var = "z") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using CPolynomial = Polynomial<BigInt>;  // polynomials in c over Z
using RatPolynomial = Polynomial<Rational>;

inline cplx evaluate_complex(const IntPolynomial& p, cplx x) {
    cplx acc = 0.0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

inline Rational evaluate_rational(const IntPolynomial& p, const Rational& x) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

template <class T>
std::string Polynomial<T>::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const T& a = c_[static_cast<std::size_t>(i)];
        if (a == T(0)) continue;
        bool neg = a < T(0);
        T mag = neg ? T(-a) : a;
        std::string ms;
        if constexpr (std::is_same_v<T, Rational>)
            ms = lerch::to_string(mag);
        else
            ms = mag.str();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = (mag == T(1));
        if (i == 0)
            out += ms;
        else {
            if (!unit) out += ms + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Polynomial in two variables (z, c); key (i, j) is the exponent pair of z^i c^j.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;

    BivariatePolynomial() = default;

    static BivariatePolynomial term(int i, int j, const BigInt& a) {
        BivariatePolynomial p;
        if (a != 0) p.t_[{i, j}] = a;
        return p;
    }
    // embed q(z) as a polynomial independent of c
    static BivariatePolynomial from_z(const IntPolynomial& q) {
        BivariatePolynomial p;
        for (std::size_t i = 0; i < q.coefficients().size(); ++i)
            if (q[i] != 0) p.t_[{static_cast<int>(i), 0}] = q[i];
        return p;
    }

    const std::map<Key, BigInt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    BigInt coefficient(int i, int j) const {
        auto it = t_.find({i, j});
        return it == t_.end() ? BigInt(0) : it->second;
    }

    int degree_z() const {
        int d = -1;
        for (auto& [k, v] : t_) d = std::max(d, k.first);
        return d;
    }
    int degree_c() const {
        int d = -1;
        for (auto& [k, v] : t_) d = std::max(d, k.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (auto& [k, v] : o.t_) add(k, v);
        return *this;
    }
    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (auto& [k, v] : o.t_) add(k, -v);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a += b;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        return a -= b;
    }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (auto& [ka, va] : a.t_)
            for (auto& [kb, vb] : b.t_) r.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
        return r;
    }
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.t_ == b.t_;
    }

    BivariatePolynomial d_dz() const {
        BivariatePolynomial r;
        for (auto& [k, v] : t_)
            if (k.first > 0) r.add({k.first - 1, k.second}, v * k.first);
        return r;
    }
    BivariatePolynomial d_dc() const {
        BivariatePolynomial r;
        for (auto& [k, v] : t_)
            if (k.second > 0) r.add({k.first, k.second - 1}, v * k.second);
        return r;
    }
    BivariatePolynomial times_z() const { return shifted(1, 0); }
    BivariatePolynomial times_c() const { return shifted(0, 1); }

    Rational evaluate(const Rational& z, const Rational& c) const {
        Rational acc = 0;
        for (auto& [k, v] : t_) acc += Rational(v) * pow_r(z, k.first) * pow_r(c, k.second);
        return acc;
    }
    cplx evaluate(cplx z, cplx c) const {
        cplx acc = 0.0;
        for (auto& [k, v] : t_) acc += v.convert_to<double>() * ipow(z, k.first) * ipow(c, k.second);
        return acc;
    }

private:
    static Rational pow_r(const Rational& x, int n) {
        Rational r = 1;
        for (int i = 0; i < n; ++i) r *= x;
        return r;
    }
    BivariatePolynomial shifted(int di, int dj) const {
        BivariatePolynomial r;
        for (auto& [k, v] : t_) r.t_[{k.first + di, k.second + dj}] = v;
        return r;
    }
    void add(const Key& k, const BigInt& v) {
        if (v == 0) return;
        auto it = t_.find(k);
        if (it == t_.end()) {
            t_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) t_.erase(it);
        }
    }
    std::map<Key, BigInt> t_;
};

}  // namespace lerch
