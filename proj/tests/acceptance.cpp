// End-to-end acceptance gate: one PASS/FAIL line per criterion, exit code 0
// only when every criterion holds.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "primelab/asymptotics.hpp"
#include "primelab/complex_sums.hpp"
#include "primelab/conjectures.hpp"
#include "primelab/oracle.hpp"
#include "primelab/sequence.hpp"
#include "primelab/sieve.hpp"
#include "primelab/special.hpp"
#include "primelab/taylor.hpp"
#include "primelab/weights.hpp"

using namespace primelab;
using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d  %s  [%s]\n", ok ? "PASS" : "FAIL", idx,
                name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main() {
    SegmentedSieve sieve({1'200'000'000ULL, 1ULL << 20});
    const ComplexSums sums(sieve);

    // 1. sieve correctness and speed
    {
        const auto t0 = clock_type::now();
        bool ok = sieve.pi(1'000'000) == 78'498;
        for (std::uint64_t limit : {1'000ULL, 10'000ULL, 100'000ULL, 1'000'000ULL}) {
            const auto naive = simple_sieve(static_cast<std::uint32_t>(limit));
            const auto fast = sieve.primes_in(2, limit + 1);
            ok = ok && naive.size() == fast.size();
            for (std::size_t i = 0; ok && i < naive.size(); ++i)
                ok = naive[i] == fast[i];
        }
        const std::uint64_t big[] = {1'000'000'000ULL};
        const auto t1 = clock_type::now();
        const auto stats = sieve.profile(big);
        const double big_time = seconds_since(t1);
        ok = ok && stats[0].pi == 50'847'534ULL && big_time < 60.0;
        char buf[128];
        std::snprintf(buf, sizeof buf, "pi(1e9)=%llu in %.1fs, total %.1fs",
                      static_cast<unsigned long long>(stats[0].pi), big_time,
                      seconds_since(t0));
        report(1, "segmented sieve against the naive oracle", ok, buf);
    }

    // 2. theta(x) <= log(4) x on a 1000-point sample to 1e8
    {
        std::vector<std::uint64_t> checkpoints;
        for (std::uint64_t k = 1; k <= 1000; ++k)
            checkpoints.push_back(k * 100'000);
        const auto stats = sieve.profile(checkpoints);
        std::size_t violations = 0;
        double worst = 0.0;
        for (const auto& s : stats) {
            const double ratio =
                s.theta / (std::log(4.0) * static_cast<double>(s.limit));
            worst = std::max(worst, ratio);
            if (ratio > 1.0) ++violations;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "max theta/(log4 x) = %.6f", worst);
        report(2, "Chebyshev bound sampled to 1e8", violations == 0, buf);
    }

    const PrimeCounter counter(sieve, 110'000'000ULL);

    // 3. partial-summation identity across four test functions
    {
        const auto t0 = clock_type::now();
        const SummationOracle oracle(sieve, counter);
        const WeightParams wparams{0.5, 1.0};
        const auto weight_df = [wparams](double t) {
            // w'(t) = w(t) (1/(t log t) + c(1-L) t^{-L} - L/t)
            return weight(wparams, t) *
                   (1.0 / (t * std::log(t)) +
                    wparams.c * wparams.one_minus_lambda() *
                        std::pow(t, -wparams.lambda) -
                    wparams.lambda / t);
        };
        const DifferentiableFn fns[] = {
            {[](double) { return 1.0; }, [](double) { return 0.0; }},
            {[](double t) { return std::log(t); },
             [](double t) { return 1.0 / t; }},
            {[](double t) { return t; }, [](double) { return 1.0; }},
            {[wparams](double t) { return weight(wparams, t); }, weight_df},
        };
        bool ok = true;
        double worst = 0.0;
        for (const auto& fn : fns) {
            for (double x : {1e3, 1e4, 1e5}) {
                NeumaierSum direct;
                sieve.for_each_prime(2, static_cast<std::uint64_t>(x) + 1,
                                     [&](std::uint64_t p) {
                                         direct.add(fn.f(static_cast<double>(p)));
                                     });
                const double rhs = oracle.rs_rhs(fn, x);
                const double rel =
                    std::abs(direct.value() - rhs) / std::abs(direct.value());
                worst = std::max(worst, rel);
                if (!(rel <= 1e-4)) ok = false;
            }
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst relative residual %.2e in %.1fs",
                      worst, seconds_since(t0));
        report(3, "summation identity for {1, log, t, w}", ok, buf);
    }

    // 4. weighted-sum ratio tightens toward 1 along 1e4 -> 1e6 -> 1e8
    {
        const PrimeSequence primes(sieve);
        const WeightParams params{0.5, 1.0};
        const double r4 = normalized_weight_sum(params, primes, 1e4).ratio;
        const double r6 = normalized_weight_sum(params, primes, 1e6).ratio;
        const double r8 = normalized_weight_sum(params, primes, 1e8).ratio;
        const bool ok = std::abs(r8 - 1.0) < std::abs(r6 - 1.0) &&
                        std::abs(r6 - 1.0) < std::abs(r4 - 1.0) &&
                        r4 > 0.5 && r4 < 1.5 && r6 > 0.5 && r6 < 1.5 &&
                        r8 > 0.5 && r8 < 1.5;
        char buf[96];
        std::snprintf(buf, sizeof buf, "ratios %.5f -> %.5f -> %.6f", r4, r6, r8);
        report(4, "weighted prime sum trend toward 1", ok, buf);
    }

    // 5. termwise identities on the full 5x5 grid
    {
        const auto t0 = clock_type::now();
        const double lambdas[] = {0.1, 0.3, 0.5, 0.7, 0.9};
        const cplx points[] = {{0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0},
                               {1.0, 1.0}, {0.3, 2.0}};
        bool ok = true;
        double worst = 0.0;
        for (double lambda : lambdas) {
            for (const cplx& s : points) {
                const double r1 =
                    sums.identity_xi_psi({lambda, 1.0}, s, 1e-10).residual;
                const double r2 =
                    sums.identity_xi_tau({lambda, 1.0}, s, 1e-10).residual;
                worst = std::max({worst, r1, r2});
                if (!(r1 <= 2e-10 && r2 <= 2e-10)) ok = false;
            }
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst residual %.2e in %.1fs", worst,
                      seconds_since(t0));
        report(5, "scaling and shift identities on the 5x5 grid", ok, buf);
    }

    // 6. Laplace transform quadrature vs closed form
    {
        const WeightParams params{0.5, 1.0};
        bool ok = true;
        double worst = 0.0;
        for (double sr : {0.5, 1.0, 2.0}) {
            const cplx s{sr, 0.0};
            const cplx lhs = sums.laplace_lhs(params, s, 0.0, 1e-6);
            const auto psi = sums.eval(FunctionTag::Psi, params, s, 1e-10);
            const double b = params.c * params.one_minus_lambda();
            const cplx rhs = b / (b + s) * psi.value - 1.0 / s;
            const double res = std::abs(lhs - rhs);
            worst = std::max(worst, res);
            if (!(res <= 1e-4)) ok = false;
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst residual %.2e", worst);
        report(6, "Laplace transform closed form", ok, buf);
    }

    // 7. Mellin transform quadrature vs Gamma * Phi closed form
    {
        const auto t0 = clock_type::now();
        const WeightParams params{0.5, 1.0};
        bool ok = true;
        double worst = 0.0;
        for (double zr : {1.0, 1.25, 1.5, 1.75, 2.0}) {
            const cplx z{zr, 0.0};
            const cplx closed = sums.mellin_rhs(params, z, 1e-8);
            const cplx numeric = sums.mellin_numeric(params, z, 1e-7);
            const double rel = std::abs(numeric - closed) / std::abs(closed);
            worst = std::max(worst, rel);
            if (!(rel <= 1e-5)) ok = false;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst relative %.2e in %.1fs", worst,
                      seconds_since(t0));
        report(7, "Mellin transform closed form at 5 points", ok, buf);
    }

    // 8. second-derivative link with second-order convergence
    {
        struct Point { double lambda; cplx s; };
        const Point points[] = {{0.5, {2.0, 0.0}}, {0.5, {1.5, 0.0}},
                                {0.5, {3.0, 0.0}}, {0.7, {1.0, 1.0}},
                                {0.3, {2.0, 0.0}}};
        bool ok = true;
        double worst_res = 0.0, worst_ratio = 4.0;
        for (const auto& pt : points) {
            const auto check =
                sums.identity_tau_Tpp({pt.lambda, 1.0}, pt.s, 1e-3, 1e-10);
            worst_res = std::max(worst_res, check.residual);
            if (std::abs(check.ratio - 4.0) > std::abs(worst_ratio - 4.0))
                worst_ratio = check.ratio;
            if (!(check.residual <= 1e-4 && check.ratio >= 3.5 &&
                  check.ratio <= 4.5))
                ok = false;
        }
        char buf[96];
        std::snprintf(buf, sizeof buf, "worst residual %.2e, worst ratio %.3f",
                      worst_res, worst_ratio);
        report(8, "second difference of T reproduces tau", ok, buf);
    }

    // 9. special-function kernels
    {
        const double g_half = gamma_complex({0.5, 0.0}).real();
        const double e1 = exp_integral_e1({1.0, 0.0}).real();
        const auto deriv = [](double h) {
            return -(exp_integral_e1({1.0 + h, 0.0}).real() -
                     exp_integral_e1({1.0 - h, 0.0}).real()) /
                   (2.0 * h);
        };
        const double d = (4.0 * deriv(5e-5) - deriv(1e-4)) / 3.0;
        const bool ok =
            std::abs(g_half - std::sqrt(std::numbers::pi)) <= 1e-13 &&
            std::abs(e1 - 0.21938393) <= 1e-8 &&
            std::abs(d - std::exp(-1.0)) <= 1e-8;
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "Gamma(1/2) err %.1e, E1(1) err %.1e, deriv err %.1e",
                      std::abs(g_half - std::sqrt(std::numbers::pi)),
                      std::abs(e1 - 0.21938393), std::abs(d - std::exp(-1.0)));
        report(9, "Gamma and E1 kernels", ok, buf);
    }

    // 10. exact polynomial family and its expansion
    {
        PolynomialTable table(64);
        bool ok = table.f_poly(0).coefficients == std::vector<Rational>{1} &&
                  table.f_poly(1).coefficients ==
                      std::vector<Rational>{1, Rational(-1, 2)} &&
                  table.f_poly(2).coefficients ==
                      std::vector<Rational>{1, Rational(-4, 3), Rational(1, 4)};
        for (std::size_t j = 0; ok && j <= 64; ++j)
            ok = table.f_poly(j).coefficients.front() == 1;
        const double at4 = expansion_residual(table, 5.0, {0.3, 0.2}, 0.9, 4);
        const double at10 = expansion_residual(table, 5.0, {0.3, 0.2}, 0.9, 10);
        ok = ok && at10 < at4 && at10 <= 1e-8;
        char buf[96];
        std::snprintf(buf, sizeof buf, "residual J=4: %.2e, J=10: %.2e", at4,
                      at10);
        report(10, "rational polynomial recursion and expansion", ok, buf);
    }

    // 11. limit probes with strictly decreasing deviations
    {
        const double ladder[] = {1e3, 1e6, 1e9};
        const auto power = power_difference_probe(1.0, 0.5, ladder);
        bool ok = power.deviations[1] < power.deviations[0] &&
                  power.deviations[2] < power.deviations[1] &&
                  power.deviations[2] <= 1e-3;
        const double int_ladder[] = {1e4, 1e6, 1e9};
        const auto pair = lemma_integral_probes(1.0, {0.5, 1.0}, int_ladder);
        for (const auto* probe : {&pair.near_x, &pair.near_x_plus})
            ok = ok && probe->deviations[1] < probe->deviations[0] &&
                 probe->deviations[2] < probe->deviations[1];
        double min_window = 1e300;
        for (double v : {0.5, 1.0, 1.5, 1.9}) {
            min_window = std::min(min_window, inequality_window(v, WindowKind::B));
            min_window = std::min(min_window, inequality_window(v, WindowKind::D));
        }
        ok = ok && min_window > 0.0;
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "power dev at 1e9 = %.2e, smallest window %.3f",
                      power.deviations[2], min_window);
        report(11, "limit and window probes", ok, buf);
    }

    // 12. five conjecture scans on their default ranges
    {
        const auto t0 = clock_type::now();
        const auto legendre = check_legendre(10'000, counter);
        const auto sierpinski = check_sierpinski(2'000, counter);
        const auto brocard = check_brocard(1'000, sieve, counter);
        const auto andrica = check_andrica(10'000'000, sieve);
        const auto oppermann = check_oppermann(10'000, counter);
        const bool ok = legendre.holds() && sierpinski.holds() &&
                        brocard.holds() && andrica.holds() &&
                        oppermann.holds() && andrica.min_margin < 1.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "andrica max root gap %.5f in %.1fs",
                      andrica.min_margin, seconds_since(t0));
        report(12, "conjecture scans find no counterexample", ok, buf);
    }

    // 13. short-interval upper bound pi(x+y) - pi(x) <= 2y/log y
    {
        std::size_t violations = 0;
        const double lo = 2.0, hi = 1e7;
        for (int i = 0; i < 100; ++i) {
            const double x = lo + (hi - lo) * i / 99.0;
            for (int j = 0; j < 100; ++j) {
                const double y = lo + (hi - lo) * j / 99.0;
                const auto count = counter.count_interval(
                    static_cast<std::uint64_t>(x),
                    static_cast<std::uint64_t>(x + y));
                if (static_cast<double>(count) > 2.0 * y / std::log(y))
                    ++violations;
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu violations on the 100x100 grid",
                      violations);
        report(13, "short-interval count upper bound", violations == 0, buf);
    }

    // 14. deterministic reduction across thread counts
    {
        std::vector<std::uint64_t> checkpoints;
        for (std::uint64_t k = 1; k <= 20; ++k)
            checkpoints.push_back(k * 500'000);
        const auto one = sieve.profile(checkpoints, 1);
        const auto two = sieve.profile(checkpoints, 2);
        const auto eight = sieve.profile(checkpoints, 8);
        bool ok = true;
        for (std::size_t i = 0; i < one.size(); ++i)
            ok = ok && one[i].pi == two[i].pi && one[i].pi == eight[i].pi &&
                 one[i].theta == two[i].theta && one[i].theta == eight[i].theta;
        report(14, "bit-identical results across thread counts", ok,
               ok ? "1 == 2 == 8 threads" : "mismatch");
    }

    std::printf("%s (%d failing)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                failures);
    return failures == 0 ? 0 : 1;
}
