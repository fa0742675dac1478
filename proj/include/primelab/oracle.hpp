#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "primelab/sieve.hpp"

namespace primelab {

// li(x) = integral of 1/log t over [2, x], by adaptive quadrature after the
// substitution t = e^u (integrand e^u / u, no log singularity).
double logarithmic_integral(double x, double tol = 1e-9);

struct EpsilonRecord {
    double x = 0.0;
    double li = 0.0;
    double epsilon = 0.0;   // pi(x) - li(x)
    double rh_ratio = 0.0;  // |epsilon| / (sqrt(x) log x)
};

// A scalar function together with its derivative, as required by the
// partial-summation identity.
struct DifferentiableFn {
    std::function<double(double)> f;
    std::function<double(double)> df;
};

struct RsOptions {
    double quad_tol = 1e-8;                   // relative, per integral
    std::uint64_t exact_split_limit = 100000; // exact jump treatment below this
    std::uint64_t bins = 1'000'000;           // midpoint bins above it
};

// Right-hand side of
//   sum_{p<=x} f(p) = int_2^x f/log + eps(x) f(x) - int_2^x eps f',
// with eps(t) = pi(t) - li(t) taken from the sieve. Below exact_split_limit
// the step part of eps integrates exactly against f' (telescoping over
// consecutive primes); above it a midpoint-binned approximation is used.
class SummationOracle {
public:
    SummationOracle(const SegmentedSieve& sieve, const PrimeCounter& counter)
        : sieve_(&sieve), counter_(&counter) {}

    double rs_rhs(const DifferentiableFn& fn, double x,
                  const RsOptions& options = {}) const;

    std::vector<EpsilonRecord> epsilon_profile(std::span<const double> xs) const;

private:
    const SegmentedSieve* sieve_;
    const PrimeCounter* counter_;
};

// Cumulative table of li over [2, hi]; O(1) point evaluations afterwards.
// Used wherever li appears inside another quadrature.
class LiTable {
public:
    explicit LiTable(double hi, std::size_t cells = 1 << 16);
    double operator()(double t) const;
    double hi() const { return hi_; }

private:
    double hi_;
    double u_lo_, du_;
    std::vector<double> cumulative_;  // li at u_lo_ + i * du_
};

}  // namespace primelab
