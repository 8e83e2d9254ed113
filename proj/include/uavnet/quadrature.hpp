// SPDX-License-Identifier: Apache-2.0
//
// uavnet - outage analysis for layered aerial networks under beam misalignment
// Copyright 2026 uavnet contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace uavnet {
namespace quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;  // conservative bound on |value - exact|
    long evaluations = 0;
    bool converged = true;
};

// Up to this many integrand components may share one adaptive subdivision.
// The interference transform evaluates all fading-derivative orders and all
// gain cases on the same node set, which is where the bulk of the speedup
// over scalar quadrature comes from.
inline constexpr int kMaxComponents = 64;

struct VecResult {
    std::array<double, kMaxComponents> values{};
    std::array<double, kMaxComponents> errors{};
    int components = 0;
    long evaluations = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (nodes for [-1,1]).
// Positive abscissae only; even indices are the embedded Gauss points.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

// QUADPACK-style per-interval error estimate: sharp enough to drive
// subdivision, conservative enough that the reported sum bounds the truth
// on non-pathological integrands (verified by the analytic test battery).
inline double sharpen_error(double raw, double resabs, double resasc) {
    double err = raw;
    if (resasc != 0.0 && raw != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * raw / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(err, eps50 * resabs);
    return err;
}

struct Interval {
    double a, b;
    double value, error;
    int depth;
};

template <class F>
Interval gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 15> fv;
    fv[7] = f(center);
    double g7 = kWg[3] * fv[7];
    double k15 = kWgk[7] * fv[7];
    double resabs = kWgk[7] * std::fabs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[i] = f1;
        fv[14 - i] = f2;
        k15 += kWgk[i] * (f1 + f2);
        resabs += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) g7 += kWg[i / 2] * (f1 + f2);
    }
    const double mean = k15 * 0.5;
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));

    Interval out;
    out.a = a;
    out.b = b;
    out.value = k15 * half;
    out.error = sharpen_error(std::fabs((k15 - g7) * half),
                              resabs * std::fabs(half), resasc * std::fabs(half));
    out.depth = 0;
    return out;
}

struct VecInterval {
    double a, b;
    std::array<double, kMaxComponents> value;
    std::array<double, kMaxComponents> error;
    int depth;
};

// Vector rule: f(x, out) fills `n` components per node; all components share
// the node set and the subdivision tree.
template <class F>
void gk15_vec(F&& f, int n, double a, double b, VecInterval& out) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<std::array<double, kMaxComponents>, 15> fv;
    std::array<double, kMaxComponents> g7{}, k15{}, resabs{};

    f(center, fv[7].data());
    for (int c = 0; c < n; ++c) {
        g7[c] = kWg[3] * fv[7][c];
        k15[c] = kWgk[7] * fv[7][c];
        resabs[c] = kWgk[7] * std::fabs(fv[7][c]);
    }
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        f(center - dx, fv[i].data());
        f(center + dx, fv[14 - i].data());
        for (int c = 0; c < n; ++c) {
            const double f1 = fv[i][c], f2 = fv[14 - i][c];
            k15[c] += kWgk[i] * (f1 + f2);
            resabs[c] += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
            if (i % 2 == 1) g7[c] += kWg[i / 2] * (f1 + f2);
        }
    }
    out.a = a;
    out.b = b;
    for (int c = 0; c < n; ++c) {
        const double mean = k15[c] * 0.5;
        double resasc = kWgk[7] * std::fabs(fv[7][c] - mean);
        for (int i = 0; i < 7; ++i)
            resasc += kWgk[i] * (std::fabs(fv[i][c] - mean) + std::fabs(fv[14 - i][c] - mean));
        out.value[c] = k15[c] * half;
        out.error[c] = sharpen_error(std::fabs((k15[c] - g7[c]) * half),
                                     resabs[c] * std::fabs(half),
                                     resasc * std::fabs(half));
    }
    out.depth = 0;
}

inline constexpr int kMaxDepth = 52;
inline constexpr long kMaxIntervals = 4096;

}  // namespace detail

// Adaptive integration of f over the finite interval [a, b].
// Subdivision stops once every leaf satisfies
//   err_leaf <= max(abs_tol, rel_tol * |I|) * len_leaf / len_total,
// so the summed leaf errors respect the requested tolerance. Deterministic:
// left-to-right depth-first refinement, no work queues.
template <class F>
Result integrate_finite(F&& f, double a, double b, double rel_tol = 1e-8,
                        double abs_tol = 1e-14) {
    Result res;
    if (!(a < b)) return res;

    detail::Interval whole = detail::gk15(f, a, b);
    res.evaluations = 15;
    const double len_total = b - a;
    double scale = std::fabs(whole.value);

    std::vector<detail::Interval> stack;
    stack.reserve(64);
    stack.push_back(whole);

    long n_intervals = 1;
    while (!stack.empty()) {
        detail::Interval cur = stack.back();
        stack.pop_back();
        const double tol_here =
            std::max(abs_tol, rel_tol * scale) * ((cur.b - cur.a) / len_total);
        if (cur.error <= tol_here || cur.depth >= detail::kMaxDepth ||
            n_intervals >= detail::kMaxIntervals) {
            if (cur.error > tol_here) res.converged = false;
            res.value += cur.value;
            res.error_estimate += cur.error;
            continue;
        }
        const double mid = 0.5 * (cur.a + cur.b);
        detail::Interval right = detail::gk15(f, mid, cur.b);
        detail::Interval left = detail::gk15(f, cur.a, mid);
        left.depth = right.depth = cur.depth + 1;
        res.evaluations += 30;
        n_intervals += 1;
        scale = std::max(scale, std::fabs(whole.value - cur.value + left.value + right.value));
        stack.push_back(right);
        stack.push_back(left);  // processed first: left-to-right accumulation
    }
    return res;
}

// Vector-valued variant: every component is refined on a common subdivision
// until all pass their own scaled tolerance.
template <class F>
VecResult integrate_finite_vec(F&& f, int n, double a, double b,
                               double rel_tol = 1e-8, double abs_tol = 1e-14) {
    VecResult res;
    res.components = n;
    if (!(a < b) || n <= 0) return res;

    std::vector<detail::VecInterval> stack;
    stack.reserve(64);
    stack.emplace_back();
    detail::gk15_vec(f, n, a, b, stack.back());
    res.evaluations = 15;
    const double len_total = b - a;
    std::array<double, kMaxComponents> scale{};
    for (int c = 0; c < n; ++c) scale[c] = std::fabs(stack.back().value[c]);

    long n_intervals = 1;
    detail::VecInterval left, right;
    while (!stack.empty()) {
        detail::VecInterval cur = stack.back();
        stack.pop_back();
        const double frac = (cur.b - cur.a) / len_total;
        bool ok = true;
        for (int c = 0; c < n && ok; ++c)
            ok = cur.error[c] <= std::max(abs_tol, rel_tol * scale[c]) * frac;
        if (ok || cur.depth >= detail::kMaxDepth || n_intervals >= detail::kMaxIntervals) {
            if (!ok) res.converged = false;
            for (int c = 0; c < n; ++c) {
                res.values[c] += cur.value[c];
                res.errors[c] += cur.error[c];
            }
            continue;
        }
        const double mid = 0.5 * (cur.a + cur.b);
        detail::gk15_vec(f, n, mid, cur.b, right);
        detail::gk15_vec(f, n, cur.a, mid, left);
        left.depth = right.depth = cur.depth + 1;
        res.evaluations += 30;
        n_intervals += 1;
        for (int c = 0; c < n; ++c)
            scale[c] = std::max(scale[c], std::fabs(left.value[c]) + std::fabs(right.value[c]));
        stack.push_back(right);
        stack.push_back(left);
    }
    return res;
}

namespace detail {

// Map [a, inf) onto t in [0,1) by z = a + c*((1-t)^-g - 1). For an integrand
// decaying like z^-q the transformed integrand behaves like (1-t)^(g(q-1)-1-g+g)
// near t = 1; g is chosen from the decay hint so that exponent is >= ~2 and the
// transformed function is polynomial-friendly. g = 1 reduces to the familiar
// rational map t/(1-t).
struct TailMap {
    double a, c, g;
    double z(double t) const { return a + c * (std::pow(1.0 - t, -g) - 1.0); }
    double jac(double t) const { return c * g * std::pow(1.0 - t, -g - 1.0); }
};

inline TailMap make_tail_map(double a, double decay_exponent, double scale) {
    TailMap m;
    m.a = a;
    m.c = scale > 0.0 ? scale : std::max(1.0, std::fabs(a));
    m.g = 3.0;
    if (decay_exponent > 1.0)
        m.g = std::clamp(3.0 / (decay_exponent - 1.0), 1.0, 8.0);
    return m;
}

}  // namespace detail

// Adaptive integration of f over [a, inf). `decay_exponent` is a hint that
// f(z) ~ z^-q for large z (q > 1); `scale` is the characteristic length of the
// transition region (defaults to max(1, |a|)).
template <class F>
Result integrate_semi_infinite(F&& f, double a, double rel_tol = 1e-8,
                               double abs_tol = 1e-14, double decay_exponent = 0.0,
                               double scale = 0.0) {
    const detail::TailMap m = detail::make_tail_map(a, decay_exponent, scale);
    auto g = [&f, m](double t) { return f(m.z(t)) * m.jac(t); };
    return integrate_finite(g, 0.0, 1.0, rel_tol, abs_tol);
}

template <class F>
VecResult integrate_semi_infinite_vec(F&& f, int n, double a, double rel_tol = 1e-8,
                                      double abs_tol = 1e-14,
                                      double decay_exponent = 0.0, double scale = 0.0) {
    const detail::TailMap m = detail::make_tail_map(a, decay_exponent, scale);
    auto g = [&f, m, n](double t, double* out) {
        f(m.z(t), out);
        const double j = m.jac(t);
        for (int c = 0; c < n; ++c) out[c] *= j;
    };
    return integrate_finite_vec(g, n, 0.0, 1.0, rel_tol, abs_tol);
}

// Dispatcher used where the upper limit may be the infinity marker.
template <class F>
Result integrate(F&& f, double a, double b, double rel_tol = 1e-8,
                 double abs_tol = 1e-14, double decay_exponent = 0.0,
                 double scale = 0.0) {
    if (std::isinf(b))
        return integrate_semi_infinite(f, a, rel_tol, abs_tol, decay_exponent, scale);
    return integrate_finite(f, a, b, rel_tol, abs_tol);
}

}  // namespace quad
}  // namespace uavnet
