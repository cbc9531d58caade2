#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"

namespace lerch {

struct QuadResult {
    cplx value;
    double error;
    int levels;
    bool converged;
};

namespace detail {

inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Sum of node(u) over u = offset + k*h, walking outward in both directions
// until the terms stay negligible or the map leaves double range.
template <class Node>
cplx de_sweep(Node&& node, double h, double offset, double scale) {
    cplx sum = 0.0;
    for (int dir : {1, -1}) {
        int small = 0;
        double u = dir > 0 ? offset : offset - h;
        for (int k = 0; k < 200000; ++k, u += dir * h) {
            bool stop = false;
            cplx v = node(u, stop);
            if (stop) break;
            if (!finite(v)) break;
            sum += v;
            double mag = std::abs(v);
            if (mag <= 1e-18 * (scale + std::abs(sum)))
                ++small;
            else
                small = 0;
            if (small >= 4) break;
        }
    }
    return sum;
}

template <class Node>
QuadResult de_levels(Node&& node, double tol, int max_levels) {
    double h = 1.0;
    cplx sum = de_sweep(node, h, 0.0, 0.0);
    cplx est = h * sum;
    double err = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        // new nodes are the odd multiples of h
        cplx add = 0.0;
        for (int dir : {1, -1}) {
            int small = 0;
            double u = dir > 0 ? h : -h;
            for (int k = 0; k < 400000; ++k, u += dir * 2.0 * h) {
                bool stop = false;
                cplx v = node(u, stop);
                if (stop || !finite(v)) break;
                add += v;
                if (std::abs(v) <= 1e-18 * (std::abs(sum) + std::abs(add)))
                    ++small;
                else
                    small = 0;
                if (small >= 4) break;
            }
        }
        sum += add;
        cplx next = h * sum;
        err = std::abs(next - est);
        est = next;
        if (level >= 3 && err <= tol * (1.0 + std::abs(est))) return {est, err, level, true};
    }
    return {est, err, max_levels, false};
}

}  // namespace detail

// Integral over (0, 1) by the tanh-sinh rule. f receives t; nodes near 0 are
// computed without cancellation so t^(sigma-1) endpoint behaviour is fine.
template <class F>
QuadResult tanh_sinh_unit(F&& f, double tol, int max_levels = 12) {
    auto node = [&](double u, bool& stop) -> cplx {
        double q = pi * std::sinh(u);
        if (std::abs(q) > 700.0) {
            stop = true;
            return 0.0;
        }
        double t = 1.0 / (1.0 + std::exp(-q));
        double omt = 1.0 / (1.0 + std::exp(q));
        double w = pi * std::cosh(u) * t * omt;
        if (t <= 0.0 || omt <= 0.0 || w == 0.0) {
            stop = true;
            return 0.0;
        }
        return w * f(t);
    };
    return detail::de_levels(node, tol, max_levels);
}

// Integral over (a, infinity) by the exp-sinh rule.
template <class F>
QuadResult exp_sinh(F&& f, double a, double tol, int max_levels = 12) {
    auto node = [&](double u, bool& stop) -> cplx {
        double q = 0.5 * pi * std::sinh(u);
        if (q < -700.0 || q > 700.0) {
            stop = true;
            return 0.0;
        }
        double e = std::exp(q);
        double t = a + e;
        if (a == 0.0 && t == 0.0) {
            stop = true;
            return 0.0;
        }
        double w = 0.5 * pi * std::cosh(u) * e;
        return w * f(t);
    };
    return detail::de_levels(node, tol, max_levels);
}

// Integral over (0, infinity); throws AccuracyError when level doubling
// does not settle within tol * (1 + |result|).
template <class F>
cplx quad_semiaxis(F&& f, double tol, double* error_out = nullptr) {
    QuadResult r = exp_sinh(std::forward<F>(f), 0.0, tol);
    if (error_out) *error_out = r.error;
    if (!r.converged || !detail::finite(r.value))
        throw AccuracyError("semi-axis quadrature did not converge", r.value.real(),
                            r.value.imag(), r.error);
    return r.value;
}

}  // namespace lerch
