#include "primelab/weights.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "primelab/summation.hpp"

namespace primelab {

namespace {
// exp() overflows past ~709.78; exp(-745) is the last subnormal.
constexpr double kExpOverflow = 709.0;
constexpr double kExpUnderflow = -745.0;
}  // namespace

void WeightParams::validate() const {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0, 1)");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
}

void WeightParams::require_step2() const {
    validate();
    if (!(c < 2.0 / (1.0 - lambda)))
        throw std::invalid_argument("c must be below 2/(1 - lambda)");
}

double weight(const WeightParams& params, double x) {
    params.validate();
    if (!(x > 0.0)) throw std::invalid_argument("weight requires x > 0");
    const double expo = params.c * std::pow(x, params.one_minus_lambda());
    if (expo > kExpOverflow)
        throw std::overflow_error("weight exponent out of range; use log_weight");
    return params.c * params.one_minus_lambda() * std::log(x) * std::exp(expo) /
           std::pow(x, params.lambda);
}

double log_weight(const WeightParams& params, double x) {
    params.validate();
    if (!(x > 1.0)) throw std::invalid_argument("log_weight requires x > 1");
    return std::log(params.c * params.one_minus_lambda()) +
           std::log(std::log(x)) + params.c * std::pow(x, params.one_minus_lambda()) -
           params.lambda * std::log(x);
}

double weight_increasing_threshold(const WeightParams& params) {
    params.validate();
    const auto slope = [&](double x) {
        // (log w)'(x)
        return 1.0 / (x * std::log(x)) +
               params.c * params.one_minus_lambda() * std::pow(x, -params.lambda) -
               params.lambda / x;
    };
    // Locate a negative stretch, if any; w is increasing near 1 and for large x.
    double neg = 0.0;
    for (double x = 1.0 + 1e-6; x < 1e9; x *= 1.25)
        if (slope(x) < 0.0) neg = x;
    if (neg == 0.0) return 1.0;
    double lo = neg, hi = neg;
    while (slope(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) < 0.0 ? lo : hi) = mid;
    }
    return hi;
}

double substitution_g(const WeightParams& params, double x) {
    params.validate();
    if (x < 0.0) throw std::invalid_argument("substitution_g requires x >= 0");
    const double oml = params.one_minus_lambda();
    return std::pow(1.0 + oml * x, 1.0 / oml);
}

double substitution_g_inverse(const WeightParams& params, double y) {
    params.validate();
    if (y < 1.0) throw std::invalid_argument("substitution_g_inverse requires y >= 1");
    const double oml = params.one_minus_lambda();
    return std::expm1(oml * std::log(y)) / oml;
}

double weight_integral(const WeightParams& params, double x) {
    params.validate();
    if (x < 2.0) throw std::invalid_argument("weight_integral requires x >= 2");
    const double oml = params.one_minus_lambda();
    const double expo = params.c * std::pow(x, oml);
    if (expo > kExpOverflow)
        throw std::overflow_error("weight_integral exponent out of range");
    return std::exp(expo) - std::exp(params.c * std::pow(2.0, oml));
}

BoundEnvelope bound_envelope(const WeightParams& params) {
    params.validate();
    const double b = params.c * params.one_minus_lambda();
    return {-std::expm1(-b) / b, std::expm1(b) / b};
}

NormalizedSum normalized_weight_sum(const WeightParams& params,
                                    const SequenceSource& source, double x) {
    params.validate();
    if (x < 2.0) throw std::invalid_argument("normalized sum requires x >= 2");
    const double cx = params.c * std::pow(x, params.one_minus_lambda());
    NormalizedSum result;
    result.x = x;
    result.max_term_log = -std::numeric_limits<double>::infinity();
    NeumaierSum acc;
    source.visit(static_cast<std::uint64_t>(x), [&](std::uint64_t a) {
        if (a <= 1) return;  // w contributes nothing at 1 (log 1 = 0)
        const double term_log = log_weight(params, static_cast<double>(a)) - cx;
        if (term_log > result.max_term_log) result.max_term_log = term_log;
        if (term_log < kExpUnderflow) {
            ++result.terms_dropped;
            return;
        }
        acc.add(std::exp(term_log));
        ++result.terms_used;
    });
    result.ratio = acc.value();
    return result;
}

double salat_znam_ratio(double omega, double x, const SegmentedSieve& sieve) {
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (x < 2.0) throw std::invalid_argument("ratio requires x >= 2");
    if ((1.0 + omega) * std::log(x) > kExpOverflow)
        throw std::overflow_error("omega * log(x) out of floating range");
    NeumaierSum acc;
    sieve.for_each_prime(2, static_cast<std::uint64_t>(x) + 1, [&](std::uint64_t p) {
        acc.add(std::pow(static_cast<double>(p), omega));
    });
    const double predicted =
        std::pow(x, 1.0 + omega) / ((1.0 + omega) * std::log(x));
    return acc.value() / predicted;
}

}  // namespace primelab
