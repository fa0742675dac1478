#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primelab/sieve.hpp"
#include "primelab/weights.hpp"

namespace primelab {

// One short-interval sample: primes in (x, floor(x + x^L)] against the
// predicted count x^L / log x.
struct ScanRecord {
    double x = 0.0;
    std::uint64_t interval_count = 0;
    double predicted = 0.0;
    double ratio = 0.0;
    double envelope_lo = 0.0;
    double envelope_hi = 0.0;
};

enum class Conjecture { Legendre, Sierpinski, Brocard, Andrica, Oppermann };

std::string conjecture_name(Conjecture c);

// min_margin semantics per conjecture: Legendre/Brocard -- the smallest
// prime count observed in any window; Sierpinski -- smallest count in any
// row; Oppermann -- smallest of the two side counts; Andrica -- the largest
// root gap sqrt(p_{n+1}) - sqrt(p_n) (the quantity that must stay below 1).
struct ConjectureReport {
    Conjecture conjecture;
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    std::vector<std::uint64_t> counterexamples;
    double min_margin = 0.0;

    bool holds() const { return counterexamples.empty(); }
};

std::vector<ScanRecord> interval_scan(const WeightParams& params,
                                      std::span<const double> ladder,
                                      const SegmentedSieve& sieve);

// At least min_primes primes strictly between n^2 and (n+1)^2, 1 <= n <= n_max.
ConjectureReport check_legendre(std::uint64_t n_max, const PrimeCounter& counter,
                                std::uint64_t min_primes = 2);

// Every row k of the n-row triangle {(k-1)n+1, ..., kn} holds a prime,
// 2 <= n <= n_max.
ConjectureReport check_sierpinski(std::uint64_t n_max,
                                  const PrimeCounter& counter);

// At least four primes between p_n^2 and p_{n+1}^2 for consecutive primes;
// starts at n = 2 unless include_first is set (n = 1 gives only two primes).
ConjectureReport check_brocard(std::uint64_t n_max, const SegmentedSieve& sieve,
                               const PrimeCounter& counter,
                               bool include_first = false);

// sqrt(p_{n+1}) - sqrt(p_n) < 1 for all consecutive primes below p_max.
ConjectureReport check_andrica(std::uint64_t p_max, const SegmentedSieve& sieve);

// A prime in (n^2 - n, n^2) and in (n^2, n^2 + n) for 2 <= n <= n_max.
ConjectureReport check_oppermann(std::uint64_t n_max,
                                 const PrimeCounter& counter);

// Histogram of normalized gaps (p_{n+1} - p_n)/log(p_n) over p_{n+1} <= p_max,
// with `bins` equal-width bins on (0, hi]; larger values land in overflow.
struct GapHistogram {
    double hi = 0.0;
    std::vector<std::uint64_t> counts;
    std::uint64_t overflow = 0;
    std::uint64_t total = 0;
};

GapHistogram erdos_gap_histogram(std::uint64_t p_max, std::size_t bins,
                                 double hi, const SegmentedSieve& sieve);

// Samples of the toy sequence x_n = n log n: the normalized gap
// (x_{n+1} - x_n)/log(x_n) and the weighted-sum ratio at x_n.
struct ToySequenceRecord {
    std::uint64_t n = 0;
    double x = 0.0;
    double gap_ratio = 0.0;
    double weight_ratio = 0.0;
};

std::vector<ToySequenceRecord> toy_sequence_scan(
    const WeightParams& params, std::span<const std::uint64_t> n_samples);

}  // namespace primelab
