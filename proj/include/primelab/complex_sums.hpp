#pragma once

#include <complex>
#include <cstdint>

#include "primelab/sieve.hpp"
#include "primelab/weights.hpp"

namespace primelab {

// The five prime-sum functions. All are sums over primes p of
//   Phi:  log(p) / p^s                                   (Re s > 1)
//   Psi:  log(p) / (p^L exp(s (p^{1-L} - 1)/(1-L)))      (Re s > 0)
//   Xi:   (1-L) log(p) / (p^L exp(s (p^{1-L} - 1)))      (Re s > 0)
//   Tau:  (1-L) log(p) / (p^L exp(s p^{1-L}))            (Re s > 0)
//   T:    (1-L) log(p) / (p^{2-L} exp(s p^{1-L}))        (Re s > 0)
// with L = lambda.
enum class FunctionTag { Phi, Psi, Xi, Tau, T };

struct ComplexSumResult {
    std::complex<double> value;
    double tail_bound = 0.0;    // rigorous bound on |truncation error|
    std::uint64_t cutoff = 0;   // largest prime admitted
};

// Residual of a two-sided identity evaluated over one shared prime stream.
// When `certified` is set both truncation tails were pushed below the
// requested tolerance; otherwise the sides were truncated at the same
// matched cutoff, where the identity still cancels termwise and the residual
// measures pure floating-point error, while tail_bound reports the (possibly
// large) one-sided truncation bound honestly.
struct IdentityCheck {
    double residual = 0.0;
    double tail_bound = 0.0;
    std::uint64_t cutoff = 0;
    bool certified = false;
};

struct SecondDerivativeCheck {
    double residual = 0.0;       // |[T(s-h) - 2T(s) + T(s+h)]/h^2 - tau(s)|
    double residual_half = 0.0;  // same with step h/2
    double ratio = 0.0;          // residual / residual_half, ~4 at order 2
    double roundoff_estimate = 0.0;  // 6 eps |T(s)| / h^2, cancellation floor
    std::uint64_t cutoff = 0;
};

class ComplexSums {
public:
    explicit ComplexSums(const SegmentedSieve& sieve) : sieve_(&sieve) {}

    // Truncation-tail bound after dropping all primes > cutoff, from
    // theta(t) <= log(4) t and integral comparison; sigma = Re(s).
    static double tail_bound(FunctionTag tag, const WeightParams& params,
                             double sigma, double cutoff);

    // Smallest cutoff whose tail bound is <= tol (no capacity check).
    static std::uint64_t required_cutoff(FunctionTag tag,
                                         const WeightParams& params,
                                         double sigma, double tol);

    ComplexSumResult eval(FunctionTag tag, const WeightParams& params,
                          std::complex<double> s, double tol) const;

    // Same sum truncated at an explicit cutoff; the reported tail bound is
    // whatever that cutoff buys.
    ComplexSumResult eval_at_cutoff(FunctionTag tag, const WeightParams& params,
                                    std::complex<double> s,
                                    std::uint64_t cutoff) const;

    // |Xi(s) - (1-L) Psi((1-L) s)|, both sides over one prime stream.
    IdentityCheck identity_xi_psi(const WeightParams& params,
                                  std::complex<double> s, double tol) const;

    // |Xi(s) - exp(s) Tau(s)|, both sides over one prime stream.
    IdentityCheck identity_xi_tau(const WeightParams& params,
                                  std::complex<double> s, double tol) const;

    // Central second difference of T against Tau, plus the same residual at
    // step h/2 for an order-of-accuracy consistency ratio.
    SecondDerivativeCheck identity_tau_Tpp(const WeightParams& params,
                                           std::complex<double> s, double h,
                                           double tol) const;

    // Integral over [0, x_max] of (W(g(x)) e^{-c g(x)^{1-L}} - 1) e^{-s x},
    // with the quadrature split at every x where g(x) crosses a prime.
    // x_max <= 0 selects a cutoff from tol and Re(s).
    std::complex<double> laplace_lhs(const WeightParams& params,
                                     std::complex<double> s, double x_max,
                                     double tol) const;

    // Closed form (1-L) Gamma(z) Phi(1 + (1-L)(z+1)) of the Mellin transform
    // of T.
    std::complex<double> mellin_rhs(const WeightParams& params,
                                    std::complex<double> z, double tol) const;

    // Direct quadrature of the Mellin integral of T(s) s^{z-1}, with T built
    // from primes <= prime_cutoff.
    std::complex<double> mellin_numeric(
        const WeightParams& params, std::complex<double> z, double tol,
        std::uint64_t prime_cutoff = 3'000'000) const;

    // Largest cutoff used when a certified cutoff is out of reach.
    std::uint64_t matched_cutoff_cap = 10'000'000;

private:
    const SegmentedSieve* sieve_;
};

// exp(-s)/s, the singular part split off from tau near s = 0.
std::complex<double> tau_singular_part(std::complex<double> s);

}  // namespace primelab
