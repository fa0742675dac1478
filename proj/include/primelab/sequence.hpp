#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

// An abstract strictly increasing stream of positive integers: the primes, an
// explicit list, or a synthetic sequence such as floor(n log n).
class SequenceSource {
public:
    virtual ~SequenceSource() = default;

    // Visits every element <= limit in increasing order.
    virtual void visit(std::uint64_t limit,
                       const std::function<void(std::uint64_t)>& fn) const = 0;
};

class PrimeSequence final : public SequenceSource {
public:
    explicit PrimeSequence(const SegmentedSieve& sieve) : sieve_(&sieve) {}

    void visit(std::uint64_t limit,
               const std::function<void(std::uint64_t)>& fn) const override {
        if (limit < 2) return;
        sieve_->for_each_prime(2, limit + 1, fn);
    }

private:
    const SegmentedSieve* sieve_;
};

class ListSequence final : public SequenceSource {
public:
    explicit ListSequence(std::vector<std::uint64_t> values);

    void visit(std::uint64_t limit,
               const std::function<void(std::uint64_t)>& fn) const override {
        for (std::uint64_t v : values_) {
            if (v > limit) break;
            fn(v);
        }
    }

private:
    std::vector<std::uint64_t> values_;
};

// x_n = floor(n log n) for n >= 2; duplicates collapsed so the stream stays
// strictly increasing.
class ToySequence final : public SequenceSource {
public:
    void visit(std::uint64_t limit,
               const std::function<void(std::uint64_t)>& fn) const override;
};

}  // namespace primelab
