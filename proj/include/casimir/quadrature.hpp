#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-11;
    double abs_tol = 0.0;
    std::size_t max_intervals = 4000;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo;
    double hi;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment gauss_kronrod_15(F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(center);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kronrod_weights[j] * pair;
        if (j % 2 == 1) gauss += gauss_weights[j / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 15 on [lo, hi]. The interval with the largest
/// error estimate is bisected until the summed estimate drops below
/// max(abs_tol, rel_tol * |value|). Throws QuadratureError naming the worst
/// subinterval when max_intervals is exhausted.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureOptions& opt = {}) {
    QuadratureResult result;
    if (lo == hi) return result;
    if (hi < lo) {
        result = integrate(f, hi, lo, opt);
        result.value = -result.value;
        return result;
    }

    std::priority_queue<detail::Segment> heap;
    heap.push(detail::gauss_kronrod_15(f, lo, hi));
    result.evaluations = 15;
    double value = heap.top().value;
    double error = heap.top().error;

    auto converged = [&] { return error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value)); };

    while (!converged()) {
        if (heap.size() >= opt.max_intervals) {
            const auto& worst = heap.top();
            throw QuadratureError("adaptive quadrature did not converge", worst.lo, worst.hi, error);
        }
        const detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            // Interval collapsed to adjacent doubles; accept what we have.
            heap.push(worst);
            break;
        }
        const auto left = detail::gauss_kronrod_15(f, worst.lo, mid);
        const auto right = detail::gauss_kronrod_15(f, mid, worst.hi);
        result.evaluations += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the leaves so the running update does not leak rounding.
    double v = 0.0, e = 0.0;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    result.value = v;
    result.abs_error = e;
    return result;
}

/// Sum of integrals over consecutive breakpoints [b0,b1], [b1,b2], ...; each
/// piece gets the same relative tolerance.
template <class F>
QuadratureResult integrate_pieces(F&& f, const std::vector<double>& breaks,
                                  const QuadratureOptions& opt = {}) {
    QuadratureResult total;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const auto part = integrate(f, breaks[i], breaks[i + 1], opt);
        total.value += part.value;
        total.abs_error += part.abs_error;
        total.evaluations += part.evaluations;
    }
    return total;
}

}  // namespace casimir
