#include <doctest.h>

#include <cmath>

#include "primelab/conjectures.hpp"

using namespace primelab;

namespace {
const SegmentedSieve& shared_sieve() {
    static SegmentedSieve sieve({20'000'000ULL, 1ULL << 20});
    return sieve;
}
const PrimeCounter& shared_counter() {
    static PrimeCounter counter(shared_sieve(), 12'000'000);
    return counter;
}
}  // namespace

TEST_CASE("short-interval scan") {
    const double xs[] = {4.0, 100.0};
    const auto records = interval_scan({0.5, 1.0}, xs, shared_sieve());
    REQUIRE(records.size() == 2);
    CHECK(records[0].interval_count == 1);  // (4, 6] holds 5
    CHECK(records[1].interval_count == 4);  // 101 103 107 109
    CHECK(records[1].predicted ==
          doctest::Approx(10.0 / std::log(100.0)).epsilon(1e-14));
    CHECK(records[1].ratio ==
          doctest::Approx(4.0 * std::log(100.0) / 10.0).epsilon(1e-14));
    CHECK(records[1].envelope_lo < 1.0);
    CHECK(records[1].envelope_hi > 1.0);
}

TEST_CASE("Legendre windows") {
    const auto rep = check_legendre(1'000, shared_counter());
    CHECK(rep.holds());
    CHECK(rep.min_margin >= 2.0);
    // demanding far more primes than small windows hold must fail
    const auto impossible = check_legendre(10, shared_counter(), 100);
    CHECK_FALSE(impossible.holds());
}

TEST_CASE("Sierpinski rows") {
    const auto rep = check_sierpinski(300, shared_counter());
    CHECK(rep.holds());
    CHECK(rep.min_margin >= 1.0);
}

TEST_CASE("Brocard windows") {
    const auto rep = check_brocard(100, shared_sieve(), shared_counter());
    CHECK(rep.holds());
    CHECK(rep.range_lo == 2);
    CHECK(rep.min_margin >= 4.0);
    // n = 1 is the documented edge: (4, 9) holds only {5, 7}
    const auto with_first =
        check_brocard(100, shared_sieve(), shared_counter(), true);
    CHECK_FALSE(with_first.holds());
    CHECK(with_first.counterexamples == std::vector<std::uint64_t>{1});
}

TEST_CASE("Andrica root gaps") {
    const auto rep = check_andrica(100'000, shared_sieve());
    CHECK(rep.holds());
    // the global maximum of sqrt(p_{n+1}) - sqrt(p_n) sits at (7, 11)
    CHECK(rep.min_margin ==
          doctest::Approx(std::sqrt(11.0) - std::sqrt(7.0)).epsilon(1e-13));
}

TEST_CASE("Oppermann side windows") {
    const auto rep = check_oppermann(1'000, shared_counter());
    CHECK(rep.holds());
    CHECK(rep.min_margin >= 1.0);
}

TEST_CASE("normalized gap histogram") {
    const auto hist = erdos_gap_histogram(10'000, 12, 3.0, shared_sieve());
    std::uint64_t sum = hist.overflow;
    for (auto c : hist.counts) sum += c;
    CHECK(sum == hist.total);
    CHECK(hist.total == 1'228);  // pi(10^4) - 1 consecutive pairs
    // the gap (2, 3) lands at (3-2)/log 2 in bin (1.25, 1.5]
    CHECK(hist.counts[5] >= 1);
}

TEST_CASE("gap histogram covers every small bin at scale") {
    const auto hist = erdos_gap_histogram(1'000'000, 12, 3.0, shared_sieve());
    for (auto c : hist.counts) CHECK(c > 0);
}

TEST_CASE("toy sequence scan") {
    const std::uint64_t ns[] = {2, 10'000, 1'000'000};
    const auto records = toy_sequence_scan({0.5, 1.0}, ns);
    REQUIRE(records.size() == 3);
    CHECK(records[0].x == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    CHECK(records[2].gap_ratio > 0.85);
    CHECK(records[2].gap_ratio < 1.0);
    // the weighted ratio tightens toward 1 along the scan
    CHECK(std::abs(records[2].weight_ratio - 1.0) <
          std::abs(records[1].weight_ratio - 1.0));
}
