#pragma once

#include <span>
#include <vector>

#include "primelab/weights.hpp"

namespace primelab {

// Evaluations along an increasing ladder of x, against a claimed limit.
struct LimitProbe {
    std::vector<double> sample_points;
    std::vector<double> values;
    double target = 0.0;
    std::vector<double> deviations;  // |value - target|
};

// (x + eps x^L)^{1-L} - x^{1-L} -> eps (1-L); evaluated through the
// factored form x^{1-L} [(1 + eps x^{L-1})^{1-L} - 1] so the large-x
// cancellation never happens in the subtraction.
LimitProbe power_difference_probe(double epsilon, double lambda,
                         std::span<const double> ladder);

double delta_power(double epsilon, double lambda, double x);

struct IntegralProbePair {
    LimitProbe near_x;       // window (x, x + a x^L / log x), target a c (1-L)
    LimitProbe near_x_plus;  // window ending at x + x^L, target scaled by
                             // exp(c (1-L))
};

// Both window integrals of w, normalized by exp(c x^{1-L}), by quadrature of
// exp(log w(t) - c x^{1-L}).
IntegralProbePair lemma_integral_probes(double alpha, const WeightParams& params,
                                        std::span<const double> ladder,
                                        double quad_tol = 1e-10);

enum class WindowKind { B, D };

// Largest delta (by bisection, 64 sample points in (0, delta)) on which the
// strict inequality holds:
//   B: (1 - e^{-bx})/(bx) > (x^2 + 1)/(x + 1)
//   D: (e^{dx} - 1)/(dx) < 1 + x
double inequality_window(double value, WindowKind kind);

struct MonotonicityReport {
    bool monotone = false;       // h1 increasing / h2 decreasing on the grid
    bool bounded = false;        // h1 < eps(1-L) / h2 > eps(1-L) on the grid
    double worst_margin = 0.0;   // min distance to the bound eps(1-L)
};

// h1(x) = (x + eps x^L)^{1-L} - x^{1-L} on [0, inf).
MonotonicityReport h1_report(double epsilon, double lambda,
                             std::span<const double> grid);

// h2(x) = x^{1-L} - (x - eps x^L)^{1-L} on {0} union [eps^{1/(1-L)}, inf).
MonotonicityReport h2_report(double epsilon, double lambda,
                             std::span<const double> grid);

}  // namespace primelab
