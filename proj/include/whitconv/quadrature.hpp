#pragma once

// Adaptive Gauss-Kronrod (7,15) quadrature, real- or complex-valued,
// plus a tail-doubling integrator for semi-infinite ranges.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <vector>

#include "whitconv/errors.hpp"
#include "whitconv/params.hpp"

namespace whitconv {

namespace gk {
// 15-point Kronrod nodes on [-1,1] (symmetric; first 8 listed, rest mirrored)
// and weights, with the embedded 7-point Gauss weights. Standard constants.
inline constexpr double xk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};
} // namespace gk

template <class T>
struct PanelResult {
    T value{};
    double error = 0;
};

// One GK15 panel on [a,b]; error estimate is |K15 - G7|.
template <class T, class F>
PanelResult<T> gk15_panel(F&& f, double a, double b) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    T resk{}, resg{};
    for (int j = 0; j < 8; ++j) {
        if (j == 7) {
            T fc = f(c);
            resk += gk::wk[7] * fc;
            resg += gk::wg[3] * fc;
            break;
        }
        T f1 = f(c - h * gk::xk[j]);
        T f2 = f(c + h * gk::xk[j]);
        resk += gk::wk[j] * (f1 + f2);
        if (j % 2 == 1) resg += gk::wg[j / 2] * (f1 + f2);
    }
    PanelResult<T> r;
    r.value = resk * h;
    r.error = std::abs((resk - resg) * h);
    return r;
}

template <class T>
struct IntegralResult {
    T value{};
    double error = 0;
    int panels = 0;
    bool converged = true;
};

// Adaptive integration over the union of [breaks[i], breaks[i+1]].
// Worst-panel-first refinement; the final sum is taken left-to-right over the
// surviving panels so the result does not depend on refinement order.
template <class T, class F>
IntegralResult<T> integrate_breaks(F&& f, const std::vector<double>& breaks,
                                   const QuadConfig& cfg) {
    struct Seg {
        double a, b, err;
        T val;
    };
    std::vector<Seg> segs;
    segs.reserve(breaks.size() + 64);
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) continue;
        auto r = gk15_panel<T>(f, breaks[i], breaks[i + 1]);
        segs.push_back({breaks[i], breaks[i + 1], r.error, r.value});
    }
    auto total_err = [&] {
        double e = 0;
        for (auto& s : segs) e += s.err;
        return e;
    };
    auto total_val = [&] {
        T v{};
        for (auto& s : segs) v += s.val;
        return v;
    };
    int splits = 0;
    while (splits < cfg.max_subdivisions) {
        double err = total_err();
        T val = total_val();
        if (err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(val))) break;
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Seg s = segs[worst];
        double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b)) break; // interval exhausted at double precision
        auto r1 = gk15_panel<T>(f, s.a, mid);
        auto r2 = gk15_panel<T>(f, mid, s.b);
        segs[worst] = {s.a, mid, r1.error, r1.value};
        segs.push_back({mid, s.b, r2.error, r2.value});
        ++splits;
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& u, const Seg& v) { return u.a < v.a; });
    IntegralResult<T> out;
    for (auto& s : segs) {
        out.value += s.val;
        out.error += s.err;
    }
    out.panels = static_cast<int>(segs.size());
    out.converged = out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value)) * 4;
    return out;
}

template <class T, class F>
IntegralResult<T> integrate(F&& f, double a, double b, const QuadConfig& cfg) {
    return integrate_breaks<T>(f, std::vector<double>{a, b}, cfg);
}

inline IntegralResult<double> integrate_real(const std::function<double(double)>& f, double a,
                                             double b, const QuadConfig& cfg) {
    return integrate<double>(f, a, b, cfg);
}

// Integral over [a, inf) by panels of geometrically increasing width.
// Stops once three consecutive panels contribute below the truncation tolerance
// (relative to the accumulated value); reports TailError if panel contributions
// keep growing instead.
template <class T, class F>
IntegralResult<T> integrate_tail(F&& f, double a, double h0, const QuadConfig& cfg,
                                 int max_panels = 200) {
    IntegralResult<T> acc;
    double lo = a, h = h0;
    int quiet = 0, growing = 0;
    double prev_mag = -1;
    for (int k = 0; k < max_panels; ++k) {
        auto r = integrate<T>(f, lo, lo + h, cfg);
        acc.value += r.value;
        acc.error += r.error;
        acc.panels += r.panels;
        double mag = std::abs(r.value);
        double scale = std::max(std::abs(acc.value), cfg.abs_tol);
        if (mag <= cfg.truncation_tail_tol * scale) {
            if (++quiet >= 3) return acc;
        } else {
            quiet = 0;
        }
        if (prev_mag >= 0 && mag > prev_mag * 1.5 && mag > scale) {
            if (++growing >= 4)
                throw TailError("integrate_tail: panel contributions keep growing");
        } else {
            growing = 0;
        }
        prev_mag = mag;
        lo += h;
        h *= 1.6;
    }
    throw TailError("integrate_tail: decay not detected within panel budget");
}

struct QuadNode {
    double x, w;
};

// Nodes and weights of an adaptively refined GK15 panel set. The refinement
// driver f should be (a bound on) the roughest integrand the nodes will be
// reused against.
template <class F>
std::vector<QuadNode> adaptive_panel_nodes(F&& f, const std::vector<double>& breaks,
                                           const QuadConfig& cfg, double tol_factor = 0.1) {
    struct P {
        double a, b, err;
    };
    std::vector<P> panels;
    double scale = 0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        auto r = gk15_panel<double>(f, breaks[i], breaks[i + 1]);
        panels.push_back({breaks[i], breaks[i + 1], r.error});
        scale += std::abs(r.value);
    }
    scale = std::max(scale, cfg.abs_tol);
    double tol = std::max(cfg.abs_tol, tol_factor * cfg.rel_tol * scale);
    for (int pass = 0; pass < cfg.max_subdivisions; ++pass) {
        double total = 0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        if (total <= tol) break;
        P s = panels[worst];
        double mid = 0.5 * (s.a + s.b);
        if (!(s.a < mid && mid < s.b)) break;
        panels[worst] = {s.a, mid, gk15_panel<double>(f, s.a, mid).error};
        panels.push_back({mid, s.b, gk15_panel<double>(f, mid, s.b).error});
    }
    std::sort(panels.begin(), panels.end(), [](const P& u, const P& v) { return u.a < v.a; });
    std::vector<QuadNode> nodes;
    nodes.reserve(panels.size() * 15);
    for (const auto& pan : panels) {
        double h = 0.5 * (pan.b - pan.a), c = 0.5 * (pan.a + pan.b);
        for (int j = 0; j < 7; ++j) {
            nodes.push_back({c - h * gk::xk[j], gk::wk[j] * h});
            nodes.push_back({c + h * gk::xk[j], gk::wk[j] * h});
        }
        nodes.push_back({c, gk::wk[7] * h});
    }
    return nodes;
}

// Log-spaced breakpoints from lo to hi (both > 0), n intervals.
inline std::vector<double> log_breaks(double lo, double hi, int n) {
    std::vector<double> b(n + 1);
    double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i <= n; ++i) b[i] = std::exp(llo + (lhi - llo) * i / n);
    b.front() = lo;
    b.back() = hi;
    return b;
}

inline std::vector<double> linear_breaks(double lo, double hi, int n) {
    std::vector<double> b(n + 1);
    for (int i = 0; i <= n; ++i) b[i] = lo + (hi - lo) * i / n;
    return b;
}

} // namespace whitconv
