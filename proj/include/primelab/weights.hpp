#pragma once

#include <cstdint>
#include <utility>

#include "primelab/sequence.hpp"

namespace primelab {

// The pair (lambda, c) steering every weighted object. Any c > 0 is legal;
// operations that rest on the integral-convergence argument additionally
// require c < 2 / (1 - lambda) and must call require_step2().
struct WeightParams {
    double lambda;
    double c;

    void validate() const;
    void require_step2() const;

    double one_minus_lambda() const { return 1.0 - lambda; }
};

// w(x) = c(1-lambda) log(x) exp(c x^{1-lambda}) / x^lambda.
double weight(const WeightParams& params, double x);

// log(w(x)), finite wherever x > 1 even when w itself overflows.
double log_weight(const WeightParams& params, double x);

// Smallest x beyond which w is increasing, found by bisection on the sign of
// (log w)'(x) = 1/(x log x) + c(1-lambda) x^{-lambda} - lambda/x.
double weight_increasing_threshold(const WeightParams& params);

// g(x) = [1 + (1-lambda) x]^{1/(1-lambda)}; g(0) = 1, strictly increasing.
double substitution_g(const WeightParams& params, double x);
// Inverse of g: x = (y^{1-lambda} - 1)/(1-lambda).
double substitution_g_inverse(const WeightParams& params, double y);

// Closed form of the integral of w(t)/log(t) over [2, x]:
// exp(c x^{1-lambda}) - exp(c 2^{1-lambda}).
double weight_integral(const WeightParams& params, double x);

// liminf/limsup envelope for the normalized short-interval count:
// ((1 - e^{c(lambda-1)}) / (c(1-lambda)), (e^{c(1-lambda)} - 1) / (c(1-lambda))).
struct BoundEnvelope {
    double lower;
    double upper;
};
BoundEnvelope bound_envelope(const WeightParams& params);

struct NormalizedSum {
    double x = 0.0;
    double ratio = 0.0;         // sum of w over the source, / exp(c x^{1-lambda})
    std::uint64_t terms_used = 0;
    std::uint64_t terms_dropped = 0;  // exponent below the subnormal floor
    double max_term_log = 0.0;
};

// Ratio sum_{a in A, a <= x} w(a) / exp(c x^{1-lambda}), each term formed in
// log space so nothing overflows; compensated accumulation.
NormalizedSum normalized_weight_sum(const WeightParams& params,
                                    const SequenceSource& source, double x);

// [sum_{p <= x} p^omega] / [x^{1+omega} / ((1+omega) log x)].
double salat_znam_ratio(double omega, double x, const SegmentedSieve& sieve);

}  // namespace primelab
