#include "primelab/complex_sums.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "primelab/quadrature.hpp"
#include "primelab/special.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

constexpr double kLog4 = 1.3862943611198906;

void check_domain(FunctionTag tag, std::complex<double> s) {
    const double sigma = s.real();
    if (tag == FunctionTag::Phi) {
        if (!(sigma > 1.0))
            throw std::invalid_argument("Phi requires Re(s) > 1");
    } else if (!(sigma > 0.0)) {
        throw std::invalid_argument("this sum requires Re(s) > 0");
    }
}

// One summand at prime p. Exponents are assembled so that the Xi term and
// the (1-L) Psi((1-L)s) term produce identical arguments up to one rounding,
// letting matched-cutoff identity checks cancel to roundoff.
std::complex<double> prime_term(FunctionTag tag, const WeightParams& params,
                                std::complex<double> s, double p) {
    const double logp = std::log(p);
    const double oml = params.one_minus_lambda();
    switch (tag) {
        case FunctionTag::Phi:
            return logp * std::exp(-s * logp);
        case FunctionTag::Psi: {
            const double u = std::expm1(oml * logp) / oml;
            return logp * std::exp(-params.lambda * logp - s * u);
        }
        case FunctionTag::Xi: {
            const double v = std::expm1(oml * logp);
            return oml * logp * std::exp(-params.lambda * logp - s * v);
        }
        case FunctionTag::Tau: {
            const double v = std::exp(oml * logp);
            return oml * logp * std::exp(-params.lambda * logp - s * v);
        }
        case FunctionTag::T: {
            const double v = std::exp(oml * logp);
            return oml * logp *
                   std::exp(-(2.0 - params.lambda) * logp - s * v);
        }
    }
    return 0.0;
}

}  // namespace

// All bounds follow from theta(t) <= log(4) t: if r is positive and
// nonincreasing on [P, inf), partial summation gives
//   sum_{p > P} log(p) r(p) <= log(4) (P r(P) + int_P^inf r(t) dt),
// and each tag's integral has a closed form under u = t^{1-L}.
double ComplexSums::tail_bound(FunctionTag tag, const WeightParams& params,
                               double sigma, double cutoff) {
    const double P = cutoff;
    const double oml = params.one_minus_lambda();
    const double logP = std::log(P);
    switch (tag) {
        case FunctionTag::Phi:
            if (!(sigma > 1.0)) return std::numeric_limits<double>::infinity();
            return kLog4 * std::exp((1.0 - sigma) * logP) * sigma /
                   (sigma - 1.0);
        case FunctionTag::Psi: {
            if (!(sigma > 0.0)) return std::numeric_limits<double>::infinity();
            const double u = std::expm1(oml * logP) / oml;
            return kLog4 * std::exp(-sigma * u) *
                   (1.0 + oml * u + 1.0 / sigma);
        }
        case FunctionTag::Xi: {
            if (!(sigma > 0.0)) return std::numeric_limits<double>::infinity();
            const double v = std::expm1(oml * logP);
            return kLog4 * std::exp(-sigma * v) *
                   (oml * (1.0 + v) + 1.0 / sigma);
        }
        case FunctionTag::Tau: {
            if (!(sigma > 0.0)) return std::numeric_limits<double>::infinity();
            const double v = std::exp(oml * logP);
            return kLog4 * std::exp(-sigma * v) * (oml * v + 1.0 / sigma);
        }
        case FunctionTag::T:
            return tail_bound(FunctionTag::Tau, params, sigma, cutoff) /
                   (P * P);
    }
    return 0.0;
}

std::uint64_t ComplexSums::required_cutoff(FunctionTag tag,
                                           const WeightParams& params,
                                           double sigma, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    double lo = 2.0, hi = 2.0;
    while (tail_bound(tag, params, sigma, hi) > tol) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e19)
            return std::numeric_limits<std::uint64_t>::max();
    }
    while (hi - lo > 1.0) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;  // double spacing exhausted
        (tail_bound(tag, params, sigma, mid) > tol ? lo : hi) = mid;
    }
    return static_cast<std::uint64_t>(std::ceil(hi));
}

ComplexSumResult ComplexSums::eval(FunctionTag tag, const WeightParams& params,
                                   std::complex<double> s, double tol) const {
    if (tag != FunctionTag::Phi) params.validate();
    check_domain(tag, s);
    const std::uint64_t cutoff = required_cutoff(tag, params, s.real(), tol);
    if (cutoff > sieve_->limit())
        throw capacity_error("truncation tail needs primes beyond the sieve "
                             "limit", cutoff);
    return eval_at_cutoff(tag, params, s, cutoff);
}

ComplexSumResult ComplexSums::eval_at_cutoff(FunctionTag tag,
                                             const WeightParams& params,
                                             std::complex<double> s,
                                             std::uint64_t cutoff) const {
    if (tag != FunctionTag::Phi) params.validate();
    check_domain(tag, s);
    ComplexNeumaierSum acc;
    std::uint64_t largest = 0;
    sieve_->for_each_prime(2, cutoff + 1, [&](std::uint64_t p) {
        acc.add(prime_term(tag, params, s, static_cast<double>(p)));
        largest = p;
    });
    return {acc.value(), tail_bound(tag, params, s.real(),
                                    static_cast<double>(cutoff)),
            largest};
}

IdentityCheck ComplexSums::identity_xi_psi(const WeightParams& params,
                                           std::complex<double> s,
                                           double tol) const {
    params.validate();
    check_domain(FunctionTag::Xi, s);
    const double oml = params.one_minus_lambda();
    const std::complex<double> s_psi = oml * s;
    const std::uint64_t needed =
        std::max(required_cutoff(FunctionTag::Xi, params, s.real(), tol),
                 required_cutoff(FunctionTag::Psi, params, s_psi.real(), tol));
    const std::uint64_t cap = std::min<std::uint64_t>(matched_cutoff_cap,
                                                      sieve_->limit());
    const bool certified = needed <= cap;
    const std::uint64_t cutoff = certified ? needed : cap;

    ComplexNeumaierSum xi, psi;
    sieve_->for_each_prime(2, cutoff + 1, [&](std::uint64_t p) {
        const auto pd = static_cast<double>(p);
        xi.add(prime_term(FunctionTag::Xi, params, s, pd));
        psi.add(prime_term(FunctionTag::Psi, params, s_psi, pd));
    });
    const double residual = std::abs(xi.value() - oml * psi.value());
    const double bound =
        tail_bound(FunctionTag::Xi, params, s.real(),
                   static_cast<double>(cutoff)) +
        oml * tail_bound(FunctionTag::Psi, params, s_psi.real(),
                         static_cast<double>(cutoff));
    return {residual, bound, cutoff, certified};
}

IdentityCheck ComplexSums::identity_xi_tau(const WeightParams& params,
                                           std::complex<double> s,
                                           double tol) const {
    params.validate();
    check_domain(FunctionTag::Xi, s);
    const std::uint64_t needed =
        std::max(required_cutoff(FunctionTag::Xi, params, s.real(), tol),
                 required_cutoff(FunctionTag::Tau, params, s.real(), tol));
    const std::uint64_t cap = std::min<std::uint64_t>(matched_cutoff_cap,
                                                      sieve_->limit());
    const bool certified = needed <= cap;
    const std::uint64_t cutoff = certified ? needed : cap;

    const std::complex<double> es = std::exp(s);
    ComplexNeumaierSum xi, tau;
    sieve_->for_each_prime(2, cutoff + 1, [&](std::uint64_t p) {
        const auto pd = static_cast<double>(p);
        xi.add(prime_term(FunctionTag::Xi, params, s, pd));
        tau.add(prime_term(FunctionTag::Tau, params, s, pd));
    });
    const double residual = std::abs(xi.value() - es * tau.value());
    const double bound =
        tail_bound(FunctionTag::Xi, params, s.real(),
                   static_cast<double>(cutoff)) +
        std::abs(es) * tail_bound(FunctionTag::Tau, params, s.real(),
                                  static_cast<double>(cutoff));
    return {residual, bound, cutoff, certified};
}

SecondDerivativeCheck ComplexSums::identity_tau_Tpp(const WeightParams& params,
                                                    std::complex<double> s,
                                                    double h, double tol) const {
    params.validate();
    if (!(h > 0.0) || !(s.real() > 2.0 * h))
        throw std::invalid_argument("need Re(s) > 2h > 0");
    // The widest stencil point s - h has the smallest Re; its cutoff covers
    // every evaluation.
    const double sigma_min = s.real() - h;
    std::uint64_t needed =
        std::max(required_cutoff(FunctionTag::T, params, sigma_min, tol),
                 required_cutoff(FunctionTag::Tau, params, s.real(), tol));
    const std::uint64_t cap = std::min<std::uint64_t>(matched_cutoff_cap,
                                                      sieve_->limit());
    const std::uint64_t cutoff = std::min(needed, cap);

    const std::complex<double> offsets[5] = {-h, -h / 2, 0.0, h / 2, h};
    ComplexNeumaierSum t_sum[5], tau_sum;
    sieve_->for_each_prime(2, cutoff + 1, [&](std::uint64_t p) {
        const auto pd = static_cast<double>(p);
        for (int i = 0; i < 5; ++i)
            t_sum[i].add(prime_term(FunctionTag::T, params, s + offsets[i], pd));
        tau_sum.add(prime_term(FunctionTag::Tau, params, s, pd));
    });
    const std::complex<double> tau = tau_sum.value();
    const std::complex<double> t_mid = t_sum[2].value();
    const std::complex<double> d_full =
        (t_sum[0].value() - 2.0 * t_mid + t_sum[4].value()) / (h * h);
    const std::complex<double> d_half =
        (t_sum[1].value() - 2.0 * t_mid + t_sum[3].value()) / (h * h / 4.0);

    SecondDerivativeCheck out;
    out.residual = std::abs(d_full - tau);
    out.residual_half = std::abs(d_half - tau);
    out.ratio = out.residual_half > 0.0 ? out.residual / out.residual_half
                                        : 0.0;
    out.roundoff_estimate =
        6.0 * std::numeric_limits<double>::epsilon() * std::abs(t_mid) /
        (h * h);
    out.cutoff = cutoff;
    return out;
}

std::complex<double> ComplexSums::laplace_lhs(const WeightParams& params,
                                              std::complex<double> s,
                                              double x_max, double tol) const {
    params.validate();
    const double sigma = s.real();
    if (!(sigma > 0.0)) throw std::invalid_argument("need Re(s) > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (x_max <= 0.0) {
        // |integrand| stays below ratio_sup + 1; 3 is a comfortable stand-in.
        x_max = std::log(3.0 / (sigma * tol)) / sigma;
    }
    const double oml = params.one_minus_lambda();
    const double g_max = substitution_g(params, x_max);
    if (g_max > static_cast<double>(sieve_->limit()))
        throw capacity_error("g(x_max) exceeds the sieve limit",
                             static_cast<std::uint64_t>(g_max));

    // Jump abscissas: x where g(x) crosses a prime, i.e. x = g^{-1}(p).
    std::vector<double> jumps;
    std::vector<double> log_w;
    if (g_max >= 2.0) {
        sieve_->for_each_prime(
            2, static_cast<std::uint64_t>(g_max) + 1, [&](std::uint64_t p) {
                const auto pd = static_cast<double>(p);
                jumps.push_back(substitution_g_inverse(params, pd));
                log_w.push_back(log_weight(params, pd));
            });
    }

    double logW = -std::numeric_limits<double>::infinity();
    const auto piece = [&](double x) -> std::complex<double> {
        // (W(g(x)) e^{-c g(x)^{1-L}} - 1) e^{-s x}; g(x)^{1-L} = 1 + (1-L)x.
        const double log_ratio = logW - params.c * (1.0 + oml * x);
        return std::expm1(log_ratio) * std::exp(-s * x);
    };

    ComplexNeumaierSum total;
    double x_prev = 0.0;
    const double slice_tol = tol / (static_cast<double>(jumps.size()) + 2.0);
    for (std::size_t i = 0; i <= jumps.size(); ++i) {
        const double x_next = i < jumps.size() ? std::min(jumps[i], x_max)
                                               : x_max;
        if (x_next > x_prev)
            total.add(adaptive_simpson(piece, x_prev, x_next, slice_tol));
        if (i < jumps.size()) {
            // logW <- log(e^{logW} + w(p)) without leaving log space.
            const double a = std::max(logW, log_w[i]);
            logW = a + std::log(std::exp(logW - a) + std::exp(log_w[i] - a));
            x_prev = std::max(x_prev, jumps[i]);
        }
        if (x_prev >= x_max) break;
    }
    return total.value();
}

std::complex<double> ComplexSums::mellin_rhs(const WeightParams& params,
                                             std::complex<double> z,
                                             double tol) const {
    params.validate();
    if (!(z.real() > 0.0)) throw std::invalid_argument("need Re(z) > 0");
    const double oml = params.one_minus_lambda();
    const std::complex<double> gamma = gamma_complex(z);
    const std::complex<double> s_phi = 1.0 + oml * (z + 1.0);
    const double phi_tol =
        tol / std::max(1.0, oml * std::abs(gamma));
    const ComplexSumResult phi = eval(FunctionTag::Phi, params, s_phi, phi_tol);
    return oml * gamma * phi.value;
}

std::complex<double> ComplexSums::mellin_numeric(
    const WeightParams& params, std::complex<double> z, double tol,
    std::uint64_t prime_cutoff) const {
    params.validate();
    if (!(z.real() > 0.0)) throw std::invalid_argument("need Re(z) > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const double oml = params.one_minus_lambda();

    // T(s) = sum_i a_i exp(-s b_i) over cached primes, with suffix sums of
    // the a_i so evaluation can stop once the remainder is provably small.
    std::vector<double> a, b;
    sieve_->for_each_prime(2, prime_cutoff + 1, [&](std::uint64_t p) {
        const auto pd = static_cast<double>(p);
        const double logp = std::log(pd);
        a.push_back(oml * logp *
                    std::exp(-(2.0 - params.lambda) * logp));
        b.push_back(std::exp(oml * logp));
    });
    std::vector<double> suffix(a.size() + 1, 0.0);
    for (std::size_t i = a.size(); i-- > 0;)
        suffix[i] = suffix[i + 1] + a[i];

    const double inner_tol = tol * 1e-3;
    const auto t_eval = [&](double s_re_scale,
                            std::complex<double> s) -> std::complex<double> {
        ComplexNeumaierSum acc;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (suffix[i] * std::exp(-s_re_scale * b[i]) < inner_tol) break;
            acc.add(a[i] * std::exp(-s * b[i]));
        }
        return acc.value();
    };

    // Below delta, T(s) ~ T(0) and the integral contributes T(0) delta^z / z
    // up to O(delta^{z+1} log delta).
    const double delta = 1e-4;
    const double s_max = 40.0;
    const std::complex<double> head =
        suffix[0] * std::pow(delta, z) / z;

    const auto integrand = [&](double u) -> std::complex<double> {
        const double sv = std::exp(u);
        return t_eval(sv, std::complex<double>(sv, 0.0)) *
               std::exp(u * z);  // T(s) s^{z-1} ds, s = e^u
    };
    const std::complex<double> body = adaptive_simpson(
        integrand, std::log(delta), std::log(s_max), tol * 0.5);
    return head + body;
}

std::complex<double> tau_singular_part(std::complex<double> s) {
    if (!(s.real() > 0.0)) throw std::invalid_argument("need Re(s) > 0");
    return std::exp(-s) / s;
}

}  // namespace primelab
