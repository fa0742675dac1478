#include "primelab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primelab/quadrature.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

double li_integrand(double u) { return std::exp(u) / u; }

// Fixed composite Simpson with `panels` panels (even count enforced).
double composite_simpson(const std::function<double(double)>& f, double a,
                         double b, int panels) {
    if (a == b) return 0.0;
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i)
        sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace

double logarithmic_integral(double x, double tol) {
    if (x < 2.0) throw std::invalid_argument("li requires x >= 2");
    if (x == 2.0) return 0.0;
    const double estimate = x / std::log(x);
    const double abs_tol = tol * std::max(1.0, estimate);
    return adaptive_simpson(li_integrand, std::log(2.0), std::log(x), abs_tol);
}

LiTable::LiTable(double hi, std::size_t cells) : hi_(hi) {
    if (hi < 2.0) throw std::invalid_argument("LiTable requires hi >= 2");
    u_lo_ = std::log(2.0);
    const double u_hi = std::log(std::max(hi, 2.000001));
    du_ = (u_hi - u_lo_) / static_cast<double>(cells);
    cumulative_.resize(cells + 1);
    cumulative_[0] = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double a = u_lo_ + static_cast<double>(i) * du_;
        cumulative_[i + 1] =
            cumulative_[i] + composite_simpson(li_integrand, a, a + du_, 4);
    }
}

double LiTable::operator()(double t) const {
    if (t < 2.0 || t > hi_ * (1.0 + 1e-12))
        throw std::invalid_argument("LiTable evaluation out of range");
    const double u = std::log(t);
    auto i = static_cast<std::size_t>((u - u_lo_) / du_);
    if (i >= cumulative_.size() - 1) i = cumulative_.size() - 2;
    const double a = u_lo_ + static_cast<double>(i) * du_;
    return cumulative_[i] + composite_simpson(li_integrand, a, u, 4);
}

double SummationOracle::rs_rhs(const DifferentiableFn& fn, double x,
                               const RsOptions& options) const {
    if (x < 2.0) throw std::invalid_argument("rs_rhs requires x >= 2");
    if (x > static_cast<double>(counter_->limit()))
        throw capacity_error("rs_rhs requires pi(t) up to x",
                             static_cast<std::uint64_t>(x));

    LiTable li_table(x);
    const auto main_integrand = [&](double u) {
        const double t = std::exp(u);
        return fn.f(t) * t / u;  // f(t)/log t, after t = e^u
    };
    const double rough =
        composite_simpson(main_integrand, std::log(2.0), std::log(x), 128);
    const double abs_tol = options.quad_tol * (1.0 + std::abs(rough));
    const double main_term =
        adaptive_simpson(main_integrand, std::log(2.0), std::log(x), abs_tol);

    const double li_x = li_table(x);
    const double eps_x =
        static_cast<double>(counter_->pi(static_cast<std::uint64_t>(x))) - li_x;

    double eps_integral;
    if (x <= static_cast<double>(options.exact_split_limit)) {
        // Step part of eps integrates exactly: pi is constant between primes,
        // so int pi f' telescopes over consecutive primes.
        const auto primes =
            sieve_->primes_in(2, static_cast<std::uint64_t>(x) + 1);
        NeumaierSum pi_part;
        for (std::size_t k = 0; k + 1 < primes.size(); ++k)
            pi_part.add(static_cast<double>(k + 1) *
                        (fn.f(static_cast<double>(primes[k + 1])) -
                         fn.f(static_cast<double>(primes[k]))));
        if (!primes.empty())
            pi_part.add(static_cast<double>(primes.size()) *
                        (fn.f(x) - fn.f(static_cast<double>(primes.back()))));
        const auto li_integrand_fn = [&](double t) {
            return li_table(t) * fn.df(t);
        };
        const double li_rough = composite_simpson(li_integrand_fn, 2.0, x, 128);
        const double li_part = adaptive_simpson(
            li_integrand_fn, 2.0, x, options.quad_tol * (1.0 + std::abs(li_rough)));
        eps_integral = pi_part.value() - li_part;
    } else {
        // Midpoint bins; eps varies slowly relative to the bin width.
        const std::uint64_t bins = options.bins;
        const double width = (x - 2.0) / static_cast<double>(bins);
        NeumaierSum acc;
        double fa = fn.f(2.0);
        for (std::uint64_t i = 0; i < bins; ++i) {
            const double b = 2.0 + width * static_cast<double>(i + 1);
            const double mid = b - 0.5 * width;
            const double fb = fn.f(b);
            const double eps_mid =
                static_cast<double>(counter_->pi(static_cast<std::uint64_t>(mid))) -
                li_table(mid);
            acc.add(eps_mid * (fb - fa));
            fa = fb;
        }
        eps_integral = acc.value();
    }

    return main_term + eps_x * fn.f(x) - eps_integral;
}

std::vector<EpsilonRecord> SummationOracle::epsilon_profile(
    std::span<const double> xs) const {
    std::vector<EpsilonRecord> records;
    records.reserve(xs.size());
    for (double x : xs) {
        if (x < 2.0) throw std::invalid_argument("epsilon_profile requires x >= 2");
        EpsilonRecord rec;
        rec.x = x;
        rec.li = logarithmic_integral(x);
        rec.epsilon =
            static_cast<double>(counter_->pi(static_cast<std::uint64_t>(x))) -
            rec.li;
        rec.rh_ratio = std::abs(rec.epsilon) / (std::sqrt(x) * std::log(x));
        records.push_back(rec);
    }
    return records;
}

}  // namespace primelab
