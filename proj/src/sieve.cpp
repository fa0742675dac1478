#include "primelab/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace primelab {

std::vector<std::uint32_t> simple_sieve(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    for (std::uint32_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

SegmentedSieve::SegmentedSieve(SieveConfig config) : config_(config) {
    if (config_.limit < 2 || config_.segment_size == 0)
        throw std::invalid_argument("invalid sieve configuration");
    const auto root =
        static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(config_.limit))));
    base_primes_ = simple_sieve(root + 1);
}

void SegmentedSieve::check_range(std::uint64_t lo, std::uint64_t hi) const {
    if (lo >= hi) throw std::invalid_argument("empty or inverted prime range");
    if (hi > config_.limit + 1)
        throw capacity_error("range exceeds configured sieve limit", hi);
}

void SegmentedSieve::fill_segment(PrimeSegment& seg, std::uint64_t lo,
                                  std::uint64_t hi) const {
    seg.lo = lo & ~1ULL;
    seg.hi = hi;
    const std::uint64_t slots = (hi - seg.lo + 1) >> 1;
    seg.odd_composite_flags.assign((slots + 63) >> 6, 0);
    auto* words = seg.odd_composite_flags.data();
    for (std::uint32_t p : base_primes_) {
        if (p == 2) continue;
        const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
        if (p2 >= hi) break;
        std::uint64_t q = std::max(p2, (seg.lo + p - 1) / p * p);
        if ((q & 1) == 0) q += p;
        for (; q < hi; q += 2ULL * p) {
            const std::uint64_t idx = (q - seg.lo) >> 1;
            words[idx >> 6] |= 1ULL << (idx & 63);
        }
    }
}

std::vector<std::uint64_t> SegmentedSieve::primes_in(std::uint64_t lo,
                                                     std::uint64_t hi) const {
    std::vector<std::uint64_t> out;
    for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

namespace {

struct CheckpointPartial {
    std::size_t index;       // into the checkpoint list
    std::uint64_t count;     // primes in this segment up to the checkpoint
    NeumaierSum theta;
};

struct SegmentResult {
    std::uint64_t count = 0;
    NeumaierSum theta;
    std::vector<CheckpointPartial> partials;
};

}  // namespace

std::vector<SieveStats> SegmentedSieve::profile(
    std::span<const std::uint64_t> checkpoints, unsigned threads) const {
    if (checkpoints.empty()) return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("checkpoints must be ascending");
    const std::uint64_t top = checkpoints.back();
    if (top > config_.limit)
        throw capacity_error("checkpoint exceeds configured sieve limit", top);

    std::vector<SieveStats> stats(checkpoints.size());
    for (std::size_t j = 0; j < checkpoints.size(); ++j)
        if (checkpoints[j] < 2) stats[j] = {checkpoints[j], 0, 0.0};

    const std::uint64_t span = 2 * config_.segment_size;
    const std::uint64_t nseg = top < 2 ? 0 : (top - 2) / span + 1;
    std::vector<SegmentResult> results(nseg);

    auto run_segment = [&](std::uint64_t i) {
        const std::uint64_t lo = 2 + i * span;
        const std::uint64_t hi = std::min(top + 1, lo + span);
        PrimeSegment seg;
        fill_segment(seg, lo, hi);
        SegmentResult& res = results[i];
        // Checkpoints that land inside this segment, in order.
        auto ck = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo);
        auto flush_checkpoints_below = [&](std::uint64_t n) {
            while (ck != checkpoints.end() && *ck < n && *ck < hi) {
                res.partials.push_back({static_cast<std::size_t>(ck - checkpoints.begin()),
                                        res.count, res.theta});
                ++ck;
            }
        };
        if (lo <= 2) {
            flush_checkpoints_below(2);
            res.count = 1;
            res.theta.add(std::log(2.0));
        }
        std::uint64_t n = seg.lo | 1ULL;
        if (n < 3) n = 3;
        for (; n < hi; n += 2) {
            if (seg.odd_is_composite(n)) continue;
            flush_checkpoints_below(n);
            ++res.count;
            res.theta.add(std::log(static_cast<double>(n)));
        }
        flush_checkpoints_below(hi);
    };

    if (threads <= 1) {
        for (std::uint64_t i = 0; i < nseg; ++i) run_segment(i);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t i = next.fetch_add(1); i < nseg;
                     i = next.fetch_add(1))
                    run_segment(i);
            });
        for (auto& t : pool) t.join();
    }

    // Ordered reduction: identical for every thread count.
    std::uint64_t running_count = 0;
    NeumaierSum running_theta;
    for (const SegmentResult& res : results) {
        for (const CheckpointPartial& cp : res.partials) {
            NeumaierSum theta = running_theta;
            theta.merge(cp.theta);
            stats[cp.index] = {checkpoints[cp.index], running_count + cp.count,
                               theta.value()};
        }
        running_count += res.count;
        running_theta.merge(res.theta);
    }
    return stats;
}

std::uint64_t SegmentedSieve::pi(std::uint64_t x) const {
    if (x < 2) return 0;
    const std::uint64_t cp[] = {x};
    return profile(cp)[0].pi;
}

std::uint64_t SegmentedSieve::count_interval(std::uint64_t x, std::uint64_t y) const {
    if (x > y) throw std::invalid_argument("count_interval requires x <= y");
    if (x == y) return 0;
    if (y < 2) return 0;
    if (x < 2) return pi(y);
    const std::uint64_t cp[] = {x, y};
    auto stats = profile(cp);
    return stats[1].pi - stats[0].pi;
}

double SegmentedSieve::theta(std::uint64_t x) const {
    if (x < 2) return 0.0;
    const std::uint64_t cp[] = {x};
    return profile(cp)[0].theta;
}

PrimeCounter::PrimeCounter(const SegmentedSieve& sieve, std::uint64_t limit)
    : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("counter limit must be >= 2");
    if (limit > sieve.limit())
        throw capacity_error("counter limit exceeds sieve limit", limit);
    const std::uint64_t slots = (limit + 1) >> 1;  // odds 1, 3, ..., <= limit
    const std::uint64_t nwords = (slots + 63) >> 6;
    prime_bits_.assign(nwords, 0);
    sieve.for_each_prime(3, limit + 1, [&](std::uint64_t p) {
        const std::uint64_t i = p >> 1;
        prime_bits_[i >> 6] |= 1ULL << (i & 63);
    });
    cumulative_.assign(nwords + 1, 0);
    for (std::uint64_t w = 0; w < nwords; ++w)
        cumulative_[w + 1] = cumulative_[w] + std::popcount(prime_bits_[w]);
}

bool PrimeCounter::is_prime(std::uint64_t n) const {
    if (n > limit_) throw capacity_error("query exceeds counter limit", n);
    if (n == 2) return true;
    if (n < 2 || (n & 1) == 0) return false;
    const std::uint64_t i = n >> 1;
    return (prime_bits_[i >> 6] >> (i & 63)) & 1u;
}

std::uint64_t PrimeCounter::pi(std::uint64_t x) const {
    if (x > limit_) throw capacity_error("query exceeds counter limit", x);
    if (x < 2) return 0;
    const std::uint64_t i = (x - 1) >> 1;  // largest index with 2i+1 <= x
    const std::uint64_t w = i >> 6;
    const std::uint64_t mask = (2ULL << (i & 63)) - 1;
    return 1 + cumulative_[w] + std::popcount(prime_bits_[w] & mask);
}

std::uint64_t PrimeCounter::count_interval(std::uint64_t x, std::uint64_t y) const {
    if (x > y) throw std::invalid_argument("count_interval requires x <= y");
    return pi(y) - pi(std::min(x, y));
}

namespace {
constexpr char kCheckpointMagic[4] = {'P', 'G', 'L', '1'};
}

void write_checkpoint_file(const std::string& path,
                           std::span<const SieveStats> records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open checkpoint file: " + path);
    out.write(kCheckpointMagic, 4);
    const std::uint64_t n = records.size();
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    for (const SieveStats& r : records) {
        out.write(reinterpret_cast<const char*>(&r.limit), sizeof r.limit);
        out.write(reinterpret_cast<const char*>(&r.pi), sizeof r.pi);
        out.write(reinterpret_cast<const char*>(&r.theta), sizeof r.theta);
    }
}

std::vector<SieveStats> read_checkpoint_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint file: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kCheckpointMagic, 4) != 0)
        throw std::runtime_error("bad checkpoint header in " + path);
    std::uint64_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    std::vector<SieveStats> records(n);
    for (SieveStats& r : records) {
        in.read(reinterpret_cast<char*>(&r.limit), sizeof r.limit);
        in.read(reinterpret_cast<char*>(&r.pi), sizeof r.pi);
        in.read(reinterpret_cast<char*>(&r.theta), sizeof r.theta);
    }
    if (!in) throw std::runtime_error("truncated checkpoint file: " + path);
    return records;
}

}  // namespace primelab
