#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "lerch/branch.hpp"
#include "lerch/errors.hpp"
#include "lerch/weyl.hpp"
#include "lerch/word.hpp"

namespace lerch {

struct TransportOptions {
    int order = 48;              // Taylor order per step
    double tol = 1e-14;          // accepted relative tail per step
    double step_fraction = 0.4;  // step <= fraction * distance to {0, 1}
    double min_distance = 0.1;   // required clearance of the path from {0, 1}; 0 disables the check
    long max_steps = 200000;
};

// Taylor stepping for sum_k (alpha_k z + beta_k) z^k y^(k) = 0 at a fixed
// numeric c. Solutions are carried as normalized derivatives F_n = y^(n)/n!,
// n = 0..m.
class TaylorStepper {
public:
    TaylorStepper(const WeylOperator& op, cplx c) : m_(op.m) {
        for (unsigned k = 0; k <= m_ + 1; ++k) {
            a_.push_back(evaluate_complex(op.alpha[k], c));
            b_.push_back(evaluate_complex(op.beta[k], c));
        }
    }

    unsigned m() const { return m_; }

    // Advances every solution in `frame` from z0 to z0 + w. Returns false when
    // the order-N tail is not negligible.
    bool step(cplx z0, cplx w, std::vector<std::vector<cplx>>& frame, int N, double tol) const {
        const auto A = shifted_coefficients(z0);
        const int top = static_cast<int>(m_) + 1;
        const cplx lead = A[top][0];
        std::vector<std::vector<cplx>> out;
        out.reserve(frame.size());
        for (const auto& init : frame) {
            std::vector<cplx> F(N + 1, 0.0);
            for (unsigned n = 0; n <= m_; ++n) F[n] = init[n];
            for (int p = 0; p + top <= N; ++p) {
                cplx acc = 0.0;
                for (int k = 0; k <= top; ++k)
                    for (int i = 0; i <= k + 1; ++i) {
                        if (k == top && i == 0) continue;
                        int q = p - i + k;
                        if (q < k || q < 0) continue;
                        acc += A[k][i] * F[q] * falling(q, k);
                    }
                F[p + top] = -acc / (lead * falling(p + top, top));
            }
            std::vector<cplx> G(m_ + 1, 0.0);
            double total = 0.0, tail = 0.0;
            for (unsigned j = 0; j <= m_; ++j) {
                cplx wp = 1.0;  // w^{n-j}
                for (int n = static_cast<int>(j); n <= N; ++n) {
                    cplx t = binom(n, static_cast<int>(j)) * F[n] * wp;
                    G[j] += t;
                    double at = std::abs(t);
                    total += at;
                    if (n >= N - 2) tail += at;
                    wp *= w;
                }
            }
            if (!std::isfinite(total) || tail > tol * total) return false;
            out.push_back(std::move(G));
        }
        frame = std::move(out);
        return true;
    }

private:
    static double falling(int q, int k) {
        double r = 1.0;
        for (int i = 0; i < k; ++i) r *= double(q - i);
        return r;
    }
    static double binom(int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
        return r;
    }
    // A_k(z0 + w) = sum_i A[k][i] w^i
    std::vector<std::vector<cplx>> shifted_coefficients(cplx z0) const {
        std::vector<std::vector<cplx>> A(m_ + 2);
        for (unsigned k = 0; k <= m_ + 1; ++k) {
            std::vector<cplx> zk(k + 1);  // (z0 + w)^k
            for (unsigned i = 0; i <= k; ++i) zk[i] = binom(int(k), int(i)) * ipow(z0, long(k - i));
            std::vector<cplx> r(k + 2, 0.0);
            const cplx lin0 = a_[k] * z0 + b_[k];
            for (unsigned i = 0; i <= k; ++i) {
                r[i] += lin0 * zk[i];
                r[i + 1] += a_[k] * zk[i];
            }
            A[k] = std::move(r);
        }
        return A;
    }

    unsigned m_;
    std::vector<cplx> a_, b_;
};

inline double distance_to_singularities(cplx z) { return std::min(std::abs(z), std::abs(z - 1.0)); }

namespace detail {

inline double segment_clearance(cplx p, cplx q, cplx x) {
    cplx d = q - p;
    double L2 = std::norm(d);
    double t = L2 == 0.0 ? 0.0 : std::clamp(((x - p) * std::conj(d)).real() / L2, 0.0, 1.0);
    return std::abs(p + t * d - x);
}

}  // namespace detail

// Continues the solution frame along the polyline `path`.
inline void continue_frame(const TaylorStepper& st, std::vector<std::vector<cplx>>& frame,
                           const std::vector<cplx>& path, const TransportOptions& opt = {}) {
    if (path.empty()) return;
    long steps = 0;
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
        const cplx p = path[s], q = path[s + 1];
        if (opt.min_distance > 0.0) {
            double cl = std::min(detail::segment_clearance(p, q, 0.0), detail::segment_clearance(p, q, 1.0));
            if (cl < opt.min_distance)
                throw DomainError("transport path passes within " + std::to_string(cl) +
                                  " of a singular point");
        }
        cplx pos = p;
        while (pos != q) {
            double d = distance_to_singularities(pos);
            if (d == 0.0) throw TransportError("transport reached a singular point");
            double hmax = opt.step_fraction * d;
            cplx rem = q - pos;
            cplx w = std::abs(rem) <= hmax ? rem : rem / std::abs(rem) * hmax;
            bool ok = false;
            for (int tries = 0; tries < 40 && !ok; ++tries) {
                ok = st.step(pos, w, frame, opt.order, opt.tol);
                if (!ok) w *= 0.5;
            }
            if (!ok) throw TransportError("Taylor step failed to converge");
            pos = (w == rem) ? q : pos + w;
            if (++steps > opt.max_steps) throw TransportError("too many transport steps");
        }
    }
}

// Normalized derivatives y^(r)/r!, r = 0..nder, of sum coef * z^e L^j at z0,
// where L is the chosen value of log z0.
struct PowerLogTerm {
    cplx coef;
    cplx e;
    int j;
};

inline std::vector<cplx> powerlog_taylor(const std::vector<PowerLogTerm>& terms, cplx /*z0*/, cplx L0,
                                         unsigned nder) {
    std::vector<cplx> out(nder + 1, 0.0);
    for (const auto& t : terms) {
        // d^r (z^e L^j) = z^{e-r} sum_i P[i] L^i
        std::vector<cplx> P(t.j + 1, 0.0);
        P[t.j] = 1.0;
        double rf = 1.0;
        for (unsigned r = 0; r <= nder; ++r) {
            if (r > 0) {
                rf *= double(r);
                std::vector<cplx> Q(t.j + 1, 0.0);
                const cplx er = t.e - double(r - 1);
                for (int i = 0; i <= t.j; ++i) {
                    Q[i] += er * P[i];
                    if (i + 1 <= t.j) Q[i] += double(i + 1) * P[i + 1];
                }
                P = std::move(Q);
            }
            cplx poly = 0.0;
            for (int i = t.j; i >= 0; --i) poly = poly * L0 + P[i];
            out[r] += t.coef * std::exp((t.e - double(r)) * L0) * poly / rf;
        }
    }
    return out;
}

// Taylor data at z0 (|z0| <= 0.6) of the series part sum_{n != skip} z^{n+1}/(n+c)^m.
inline std::vector<cplx> li_series_taylor(unsigned m, cplx c, cplx z0, unsigned nder, long skip = -1) {
    std::vector<cplx> out(nder + 1, 0.0);
    const double az = std::abs(z0);
    const int nmax = az == 0.0 ? 1 : static_cast<int>(std::ceil(60.0 / -std::log10(az))) + 60;
    for (unsigned r = 0; r <= nder; ++r) {
        double rf = 1.0;
        for (unsigned i = 2; i <= r; ++i) rf *= i;
        cplx sum = 0.0;
        for (int n = 0; n < nmax; ++n) {
            if (n == skip) continue;
            int e = n + 1;
            if (e < static_cast<int>(r)) continue;
            double ff = 1.0;
            for (unsigned i = 0; i < r; ++i) ff *= double(e - int(i));
            sum += ff * ipow(z0, e - long(r)) / ipow(double(n) + c, long(m));
        }
        out[r] = sum / rf;
    }
    return out;
}

inline bool singular_c(cplx c) { return is_exact_integer(c) && c.real() <= 0.0; }

// Basis frame at z0 with log z0 = L0: rows {Li (or Li*), b_{m-1}, ..., b_0},
// b_j = z^{1-c} (log z)^j / j!.
inline std::vector<std::vector<cplx>> basis_taylor_frame(unsigned m, cplx c, cplx z0, cplx L0) {
    std::vector<std::vector<cplx>> frame;
    if (singular_c(c)) {
        long k = static_cast<long>(-c.real());
        auto F = li_series_taylor(m, c, z0, m, k);
        double mf = 1.0;
        for (unsigned i = 2; i <= m; ++i) mf *= i;
        auto G = powerlog_taylor({{1.0 / mf, double(k + 1), int(m)}}, z0, L0, m);
        for (unsigned r = 0; r <= m; ++r) F[r] += G[r];
        frame.push_back(F);
    } else {
        frame.push_back(li_series_taylor(m, c, z0, m));
    }
    for (int j = int(m) - 1; j >= 0; --j) {
        double jf = 1.0;
        for (int i = 2; i <= j; ++i) jf *= i;
        frame.push_back(powerlog_taylor({{1.0 / jf, 1.0 - c, j}}, z0, L0, m));
    }
    return frame;
}

inline Eigen::MatrixXcd frame_matrix(const std::vector<std::vector<cplx>>& frame) {
    const auto n = static_cast<Eigen::Index>(frame.size());
    Eigen::MatrixXcd S(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) S(i, j) = frame[i][j];
    return S;
}

inline constexpr int loop_chords = 64;

inline void append_circle(std::vector<cplx>& path, cplx center, double radius, double start_angle) {
    for (int k = 1; k <= loop_chords; ++k)
        path.push_back(center + radius * std::exp(I * (start_angle + two_pi * k / loop_chords)));
}

// Counterclockwise loop around 0 based at -1.
inline std::vector<cplx> z0_loop() {
    std::vector<cplx> p{-1.0, -0.5};
    append_circle(p, 0.0, 0.5, pi);
    p.push_back(-1.0);
    return p;
}

// Counterclockwise loop around 1 based at -1, passing above 0.
inline std::vector<cplx> z1_loop() {
    std::vector<cplx> p{-1.0, cplx(-0.5, 0.5), cplx(1.0, 0.5)};
    append_circle(p, 1.0, 0.5, pi / 2.0);
    p.push_back(cplx(-0.5, 0.5));
    p.push_back(-1.0);
    return p;
}

// Path for a Y-free word, letters traversed left to right.
inline std::vector<cplx> word_path(const HomotopyWord& w) {
    if (!w.y_exponents.empty()) throw DomainError("word contains Y letters");
    std::vector<cplx> path{-1.0};
    for (const auto& g : w.z_part) {
        std::vector<cplx> loop = g.kind == LetterKind::Z0 ? z0_loop() : z1_loop();
        if (g.exponent < 0) std::reverse(loop.begin(), loop.end());
        path.insert(path.end(), loop.begin() + 1, loop.end());
    }
    return path;
}

// Frame of the basis at the base point -1, continued from -1/2 where the
// series converge; log(-1/2) = ln(1/2) + i pi.
inline Eigen::MatrixXcd base_frame(const TaylorStepper& st, cplx c, const TransportOptions& opt,
                                   std::vector<std::vector<cplx>>* frame_out = nullptr) {
    const cplx z0 = -0.5;
    auto frame = basis_taylor_frame(st.m(), c, z0, cplx(std::log(0.5), pi));
    continue_frame(st, frame, {z0, -1.0}, opt);
    if (frame_out) *frame_out = frame;
    return frame_matrix(frame);
}

// Matrix rho with (continued basis) = rho * (basis), rows acting on rows,
// for a closed path based at -1.
inline Eigen::MatrixXcd numeric_transport(unsigned m, cplx c, const std::vector<cplx>& path,
                                          int order = 48, double tol = 1e-14) {
    if (m < 1) throw DomainError("numeric_transport requires m >= 1");
    if (!path.empty() && (path.front() != cplx(-1.0) || path.back() != cplx(-1.0)))
        throw DomainError("transport path must start and end at z = -1");
    TransportOptions opt;
    opt.order = order;
    opt.tol = tol;
    TaylorStepper st(weyl_expand(m), c);
    std::vector<std::vector<cplx>> frame;
    Eigen::MatrixXcd S0 = base_frame(st, c, opt, &frame);
    continue_frame(st, frame, path, opt);
    Eigen::MatrixXcd S1 = frame_matrix(frame);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(S0);
    if (lu.rank() < S0.rows()) throw TransportError("degenerate solution frame");
    return S1 * lu.inverse();
}

// Continues one solution given by its Taylor data at path.front() and returns
// its value at path.back(). No clearance requirement.
inline cplx continue_value(unsigned m, cplx c, std::vector<cplx> taylor, const std::vector<cplx>& path) {
    TaylorStepper st(weyl_expand(m), c);
    TransportOptions opt;
    opt.min_distance = 0.0;
    std::vector<std::vector<cplx>> frame{std::move(taylor)};
    continue_frame(st, frame, path, opt);
    return frame[0][0];
}

}  // namespace lerch
