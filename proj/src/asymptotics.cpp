#include "primelab/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "primelab/quadrature.hpp"

namespace primelab {

double delta_power(double epsilon, double lambda, double x) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0, 1)");
    if (x < 0.0) throw std::invalid_argument("x must be nonnegative");
    if (x == 0.0) return 0.0;
    const double oml = 1.0 - lambda;
    const double shift = epsilon * std::pow(x, lambda - 1.0);
    if (shift <= -1.0)
        throw std::invalid_argument("x + eps x^lambda must stay positive");
    return std::exp(oml * std::log(x)) * std::expm1(oml * std::log1p(shift));
}

LimitProbe power_difference_probe(double epsilon, double lambda,
                         std::span<const double> ladder) {
    LimitProbe probe;
    probe.target = epsilon * (1.0 - lambda);
    for (double x : ladder) {
        probe.sample_points.push_back(x);
        probe.values.push_back(delta_power(epsilon, lambda, x));
        probe.deviations.push_back(std::abs(probe.values.back() - probe.target));
    }
    return probe;
}

IntegralProbePair lemma_integral_probes(double alpha,
                                        const WeightParams& params,
                                        std::span<const double> ladder,
                                        double quad_tol) {
    params.validate();
    IntegralProbePair out;
    const double oml = params.one_minus_lambda();
    out.near_x.target = alpha * params.c * oml;
    out.near_x_plus.target = alpha * params.c * oml * std::exp(params.c * oml);

    for (double x : ladder) {
        if (!(x > 1.0)) throw std::invalid_argument("ladder points must exceed 1");
        const double window = alpha * std::pow(x, params.lambda) / std::log(x);
        const double norm = params.c * std::pow(x, oml);
        const auto integrand = [&](double t) {
            return std::exp(log_weight(params, t) - norm);
        };
        const double tol1 = quad_tol * (1.0 + std::abs(out.near_x.target));
        const double tol2 = quad_tol * (1.0 + std::abs(out.near_x_plus.target));

        out.near_x.sample_points.push_back(x);
        const double v1 =
            alpha == 0.0 ? 0.0 : adaptive_simpson(integrand, x, x + window, tol1);
        out.near_x.values.push_back(v1);
        out.near_x.deviations.push_back(std::abs(v1 - out.near_x.target));

        const double top = x + std::pow(x, params.lambda);
        if (window >= top)
            throw std::invalid_argument("window leaves the positive axis");
        out.near_x_plus.sample_points.push_back(x);
        const double v2 =
            alpha == 0.0 ? 0.0 : adaptive_simpson(integrand, top - window, top, tol2);
        out.near_x_plus.values.push_back(v2);
        out.near_x_plus.deviations.push_back(
            std::abs(v2 - out.near_x_plus.target));
    }
    return out;
}

namespace {

bool inequality_holds(double value, WindowKind kind, double x) {
    if (kind == WindowKind::B) {
        const double lhs = -std::expm1(-value * x) / (value * x);
        return lhs > (x * x + 1.0) / (x + 1.0);
    }
    const double lhs = std::expm1(value * x) / (value * x);
    return lhs < 1.0 + x;
}

bool holds_on_window(double value, WindowKind kind, double delta) {
    for (int i = 1; i <= 64; ++i) {
        const double x = delta * static_cast<double>(i) / 64.0;
        if (!inequality_holds(value, kind, x)) return false;
    }
    return true;
}

}  // namespace

double inequality_window(double value, WindowKind kind) {
    if (!(value > 0.0 && value < 2.0))
        throw std::invalid_argument("parameter must lie in (0, 2)");
    double lo = 0.0, hi = 1.0;
    while (holds_on_window(value, kind, hi) && hi < 1e6) {
        lo = hi;
        hi *= 2.0;
    }
    for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (holds_on_window(value, kind, mid) ? lo : hi) = mid;
    }
    return lo;
}

MonotonicityReport h1_report(double epsilon, double lambda,
                             std::span<const double> grid) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    MonotonicityReport rep;
    const double bound = epsilon * (1.0 - lambda);
    rep.monotone = true;
    rep.bounded = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    double prev = -std::numeric_limits<double>::infinity();
    double prev_x = -1.0;
    for (double x : grid) {
        if (x <= prev_x) throw std::invalid_argument("grid must be increasing");
        prev_x = x;
        const double h = delta_power(epsilon, lambda, x);
        if (h <= prev) rep.monotone = false;
        if (h >= bound) rep.bounded = false;
        rep.worst_margin = std::min(rep.worst_margin, bound - h);
        prev = h;
    }
    return rep;
}

MonotonicityReport h2_report(double epsilon, double lambda,
                             std::span<const double> grid) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const double threshold = std::pow(epsilon, 1.0 / (1.0 - lambda));
    MonotonicityReport rep;
    const double bound = epsilon * (1.0 - lambda);
    rep.monotone = true;
    rep.bounded = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    bool prev_in_tail = false;
    double prev_x = -1.0;
    for (double x : grid) {
        if (x <= prev_x) throw std::invalid_argument("grid must be increasing");
        prev_x = x;
        if (x != 0.0 && x < threshold)
            throw std::invalid_argument("grid point outside Dom(h2)");
        double h;
        if (x == 0.0) {
            h = 0.0;
        } else if (x - epsilon * std::pow(x, lambda) <= 0.0) {
            // At the domain edge the inner base vanishes (up to rounding).
            h = std::pow(x, 1.0 - lambda);
        } else {
            h = -delta_power(-epsilon, lambda, x);
        }
        if (x >= threshold) {
            if (prev_in_tail && h >= prev) rep.monotone = false;
            if (h <= bound) rep.bounded = false;
            rep.worst_margin = std::min(rep.worst_margin, h - bound);
            prev = h;
            prev_in_tail = true;
        }
    }
    return rep;
}

}  // namespace primelab
