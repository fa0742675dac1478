#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "primelab/errors.hpp"
#include "primelab/summation.hpp"

namespace primelab {

struct SieveConfig {
    // Hard ceiling for every range query; operations beyond it fail loudly.
    std::uint64_t limit = 10'000'000'000ULL;
    // Number of odd slots per segment (bits). 2^20 keeps a segment in L2.
    std::uint64_t segment_size = 1ULL << 20;
};

// One sieved block of odd integers in [lo, hi), lo and hi even.
// A set bit marks an odd composite with a prime factor <= sqrt(hi).
struct PrimeSegment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<std::uint64_t> odd_composite_flags;

    bool odd_is_composite(std::uint64_t n) const {
        const std::uint64_t idx = (n - lo) >> 1;
        return (odd_composite_flags[idx >> 6] >> (idx & 63)) & 1u;
    }
};

struct SieveStats {
    std::uint64_t limit = 0;
    std::uint64_t pi = 0;
    double theta = 0.0;
};

// Primes <= limit by a plain monolithic sieve. Also serves as the test oracle
// for the segmented machinery.
std::vector<std::uint32_t> simple_sieve(std::uint32_t limit);

class SegmentedSieve {
public:
    explicit SegmentedSieve(SieveConfig config = {});

    std::uint64_t limit() const { return config_.limit; }
    const std::vector<std::uint32_t>& base_primes() const { return base_primes_; }

    // Streams the primes in [lo, hi) in increasing order.
    template <typename F>
    void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& fn) const {
        check_range(lo, hi);
        if (lo <= 2 && hi > 2) fn(std::uint64_t{2});
        std::uint64_t seg_lo = lo & ~1ULL;
        if (seg_lo < 2) seg_lo = 2;
        PrimeSegment seg;
        while (seg_lo < hi) {
            const std::uint64_t seg_hi =
                std::min(hi, seg_lo + 2 * config_.segment_size);
            fill_segment(seg, seg_lo, seg_hi);
            std::uint64_t n = seg_lo | 1ULL;
            if (n < 3) n = 3;
            for (; n < seg_hi; n += 2)
                if (!seg.odd_is_composite(n) && n >= lo) fn(n);
            seg_lo = seg_hi;
        }
    }

    std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

    std::uint64_t pi(std::uint64_t x) const;
    std::uint64_t count_interval(std::uint64_t x, std::uint64_t y) const;
    double theta(std::uint64_t x) const;

    // (pi, theta) at each checkpoint, computed in a single pass. Checkpoints
    // must be ascending. Segments may be sieved by several worker threads;
    // the reduction always merges per-segment partials in segment order, so
    // the result is bit-identical for every thread count.
    std::vector<SieveStats> profile(std::span<const std::uint64_t> checkpoints,
                                    unsigned threads = 1) const;

    // Sieves [lo, hi) into `seg` (flags only, no iteration).
    void fill_segment(PrimeSegment& seg, std::uint64_t lo, std::uint64_t hi) const;

private:
    void check_range(std::uint64_t lo, std::uint64_t hi) const;

    SieveConfig config_;
    std::vector<std::uint32_t> base_primes_;
};

// Random-access pi / interval-count queries backed by a fully materialized
// odd-prime bitmap with per-word cumulative counts.
class PrimeCounter {
public:
    PrimeCounter(const SegmentedSieve& sieve, std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    std::uint64_t pi(std::uint64_t x) const;
    // Number of primes in (x, y].
    std::uint64_t count_interval(std::uint64_t x, std::uint64_t y) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> prime_bits_;  // bit i = 2i+1 is prime
    std::vector<std::uint64_t> cumulative_;  // odd primes before word w
};

// Binary checkpoint file of (limit, pi, theta) records, little-endian,
// header "PGL1".
void write_checkpoint_file(const std::string& path,
                           std::span<const SieveStats> records);
std::vector<SieveStats> read_checkpoint_file(const std::string& path);

}  // namespace primelab
