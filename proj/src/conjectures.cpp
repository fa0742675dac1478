#include "primelab/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace primelab {

std::string conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::Legendre: return "legendre";
        case Conjecture::Sierpinski: return "sierpinski";
        case Conjecture::Brocard: return "brocard";
        case Conjecture::Andrica: return "andrica";
        case Conjecture::Oppermann: return "oppermann";
    }
    return "?";
}

std::vector<ScanRecord> interval_scan(const WeightParams& params,
                                      std::span<const double> ladder,
                                      const SegmentedSieve& sieve) {
    params.validate();
    const BoundEnvelope env = bound_envelope(params);
    std::vector<ScanRecord> records;
    records.reserve(ladder.size());
    for (double x : ladder) {
        if (!(x >= 2.0)) throw std::invalid_argument("scan points must be >= 2");
        const double top = x + std::pow(x, params.lambda);
        if (top > static_cast<double>(sieve.limit()))
            throw capacity_error("interval end beyond the sieve limit",
                                 static_cast<std::uint64_t>(top));
        ScanRecord rec;
        rec.x = x;
        rec.interval_count =
            sieve.count_interval(static_cast<std::uint64_t>(x),
                                 static_cast<std::uint64_t>(std::floor(top)));
        rec.predicted = std::pow(x, params.lambda) / std::log(x);
        rec.ratio = static_cast<double>(rec.interval_count) / rec.predicted;
        rec.envelope_lo = env.lower;
        rec.envelope_hi = env.upper;
        records.push_back(rec);
    }
    return records;
}

ConjectureReport check_legendre(std::uint64_t n_max,
                                const PrimeCounter& counter,
                                std::uint64_t min_primes) {
    if ((n_max + 1) * (n_max + 1) > counter.limit())
        throw capacity_error("Legendre scan needs (n_max+1)^2 within limits",
                             (n_max + 1) * (n_max + 1));
    ConjectureReport rep{Conjecture::Legendre, 1, n_max, {}, 0.0};
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        // (n+1)^2 is never prime, so the half-open count equals the open one.
        const std::uint64_t count =
            counter.count_interval(n * n, (n + 1) * (n + 1));
        least = std::min(least, count);
        if (count < min_primes) rep.counterexamples.push_back(n);
    }
    rep.min_margin = static_cast<double>(least);
    return rep;
}

ConjectureReport check_sierpinski(std::uint64_t n_max,
                                  const PrimeCounter& counter) {
    if (n_max * n_max > counter.limit())
        throw capacity_error("Sierpinski scan needs n_max^2 within limits",
                             n_max * n_max);
    ConjectureReport rep{Conjecture::Sierpinski, 2, n_max, {}, 0.0};
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        bool ok = true;
        for (std::uint64_t k = 1; k <= n; ++k) {
            // Row k is [(k-1)n + 1, kn].
            const std::uint64_t count =
                counter.count_interval((k - 1) * n, k * n);
            least = std::min(least, count);
            if (count == 0) ok = false;
        }
        if (!ok) rep.counterexamples.push_back(n);
    }
    rep.min_margin = static_cast<double>(least);
    return rep;
}

ConjectureReport check_brocard(std::uint64_t n_max, const SegmentedSieve& sieve,
                               const PrimeCounter& counter,
                               bool include_first) {
    // p_k < k (log k + log log k) for k >= 6; pad a little and cap at the
    // sieve limit.
    const double k = static_cast<double>(n_max + 6);
    const double guess = 1.2 * k * (std::log(k) + std::log(std::log(k)));
    const auto hunt_to = std::min<std::uint64_t>(
        sieve.limit(), std::max<std::uint64_t>(100, static_cast<std::uint64_t>(guess)));
    std::vector<std::uint64_t> primes;
    sieve.for_each_prime(2, hunt_to, [&](std::uint64_t p) {
        if (primes.size() <= n_max) primes.push_back(p);
    });
    if (primes.size() <= n_max)
        throw capacity_error("not enough primes for the Brocard range", n_max);
    const std::uint64_t top = primes[n_max] * primes[n_max];
    if (top > counter.limit())
        throw capacity_error("Brocard scan needs p_{n_max+1}^2 within limits",
                             top);
    const std::uint64_t first = include_first ? 1 : 2;
    ConjectureReport rep{Conjecture::Brocard, first, n_max, {}, 0.0};
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t n = first; n <= n_max; ++n) {
        const std::uint64_t lo = primes[n - 1] * primes[n - 1];
        const std::uint64_t hi = primes[n] * primes[n];
        // hi is a square, so (lo, hi] counts exactly the open interval.
        const std::uint64_t count = counter.count_interval(lo, hi);
        least = std::min(least, count);
        if (count < 4) rep.counterexamples.push_back(n);
    }
    rep.min_margin = static_cast<double>(least);
    return rep;
}

ConjectureReport check_andrica(std::uint64_t p_max,
                               const SegmentedSieve& sieve) {
    ConjectureReport rep{Conjecture::Andrica, 2, p_max, {}, 0.0};
    double max_gap = 0.0;
    double prev_root = 0.0;
    std::uint64_t index = 0;
    sieve.for_each_prime(2, p_max + 1, [&](std::uint64_t p) {
        const double root = std::sqrt(static_cast<double>(p));
        ++index;
        if (index > 1) {
            const double gap = root - prev_root;
            max_gap = std::max(max_gap, gap);
            if (!(gap < 1.0)) rep.counterexamples.push_back(index - 1);
        }
        prev_root = root;
    });
    rep.min_margin = max_gap;
    return rep;
}

ConjectureReport check_oppermann(std::uint64_t n_max,
                                 const PrimeCounter& counter) {
    if (n_max * n_max + n_max > counter.limit())
        throw capacity_error("Oppermann scan needs n^2 + n within limits",
                             n_max * n_max + n_max);
    ConjectureReport rep{Conjecture::Oppermann, 2, n_max, {}, 0.0};
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::uint64_t sq = n * n;
        // n^2 and n^2 + n are composite for n >= 2, so half-open counts
        // match the open intervals.
        const std::uint64_t below = counter.count_interval(sq - n, sq);
        const std::uint64_t above = counter.count_interval(sq, sq + n);
        least = std::min(least, std::min(below, above));
        if (below == 0 || above == 0) rep.counterexamples.push_back(n);
    }
    rep.min_margin = static_cast<double>(least);
    return rep;
}

GapHistogram erdos_gap_histogram(std::uint64_t p_max, std::size_t bins,
                                 double hi, const SegmentedSieve& sieve) {
    if (bins == 0 || !(hi > 0.0))
        throw std::invalid_argument("need bins > 0 and hi > 0");
    GapHistogram hist;
    hist.hi = hi;
    hist.counts.assign(bins, 0);
    std::uint64_t prev = 0;
    sieve.for_each_prime(2, p_max + 1, [&](std::uint64_t p) {
        if (prev != 0) {
            const double gap = static_cast<double>(p - prev) /
                               std::log(static_cast<double>(prev));
            const auto idx = static_cast<std::size_t>(
                std::ceil(gap / hi * static_cast<double>(bins)) - 1.0);
            if (idx < bins)
                ++hist.counts[idx];
            else
                ++hist.overflow;
            ++hist.total;
        }
        prev = p;
    });
    return hist;
}

std::vector<ToySequenceRecord> toy_sequence_scan(
    const WeightParams& params, std::span<const std::uint64_t> n_samples) {
    params.validate();
    ToySequence sequence;
    std::vector<ToySequenceRecord> records;
    records.reserve(n_samples.size());
    for (std::uint64_t n : n_samples) {
        if (n < 2) throw std::invalid_argument("samples start at n = 2");
        const auto nd = static_cast<double>(n);
        ToySequenceRecord rec;
        rec.n = n;
        rec.x = nd * std::log(nd);
        const double next = (nd + 1.0) * std::log(nd + 1.0);
        rec.gap_ratio = (next - rec.x) / std::log(rec.x);
        // the normalized sum is only defined from x = 2 on; a_2 sits below it
        rec.weight_ratio =
            rec.x >= 2.0
                ? normalized_weight_sum(params, sequence, rec.x).ratio
                : std::numeric_limits<double>::quiet_NaN();
        records.push_back(rec);
    }
    return records;
}

}  // namespace primelab
