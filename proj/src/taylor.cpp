#include "primelab/taylor.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "primelab/errors.hpp"
#include "primelab/summation.hpp"

namespace primelab {

namespace {

void canonicalize(RationalPolynomial& p) {
    while (p.coefficients.size() > 1 && p.coefficients.back() == 0)
        p.coefficients.pop_back();
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    if (boost::multiprecision::denominator(r) == 1)
        out << boost::multiprecision::numerator(r);
    else
        out << boost::multiprecision::numerator(r) << '/'
            << boost::multiprecision::denominator(r);
    return out.str();
}

}  // namespace

std::complex<double> eval_poly(const RationalPolynomial& p,
                               std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t i = p.coefficients.size(); i-- > 0;)
        acc = acc * x + static_cast<double>(p.coefficients[i]);
    return acc;
}

PolynomialTable::PolynomialTable(std::size_t max_order)
    : max_order_(max_order) {
    table_.reserve(max_order_ + 1);
    binomial_.resize(max_order_ + 1);
    for (std::size_t n = 0; n <= max_order_; ++n) {
        binomial_[n].resize(n + 1);
        binomial_[n][0] = binomial_[n][n] = 1;
        for (std::size_t k = 1; k < n; ++k)
            binomial_[n][k] = binomial_[n - 1][k - 1] + binomial_[n - 1][k];
    }
}

const RationalPolynomial& PolynomialTable::f_poly(std::size_t j) {
    std::lock_guard<std::mutex> lock(mutex_);
    return f_poly_locked(j);
}

const RationalPolynomial& PolynomialTable::f_poly_locked(std::size_t j) {
    if (j > max_order_)
        throw capacity_error("polynomial order beyond the configured maximum",
                             j);
    if (table_.empty()) table_.push_back({{Rational(1)}});
    while (table_.size() <= j) {
        const std::size_t n = table_.size() - 1;  // have f_0..f_n, build f_{n+1}
        // correction(x) = x * sum_{k=0}^{n} C(n,k) f_{n-k}(x) / (k+2)
        std::vector<Rational> corr(n + 2, Rational(0));
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational scale =
                Rational(binomial_[n][k]) / Rational(k + 2);
            const auto& prev = table_[n - k].coefficients;
            for (std::size_t d = 0; d < prev.size(); ++d)
                corr[d + 1] += scale * prev[d];  // the leading x shifts degrees
        }
        RationalPolynomial next;
        next.coefficients = table_[n].coefficients;
        next.coefficients.resize(n + 2, Rational(0));
        for (std::size_t d = 0; d < corr.size(); ++d)
            next.coefficients[d] -= corr[d];
        canonicalize(next);
        table_.push_back(std::move(next));
    }
    return table_[j];
}

std::string PolynomialTable::dump_line(std::size_t j) {
    const RationalPolynomial& p = f_poly(j);
    std::ostringstream out;
    out << j << ':';
    for (const Rational& r : p.coefficients) out << ' ' << rational_to_string(r);
    return out.str();
}

void PolynomialTable::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::vector<RationalPolynomial> loaded;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string head;
        if (!(row >> head) || head != std::to_string(loaded.size()) + ":")
            return;  // out-of-order or malformed cache: ignore it wholesale
        RationalPolynomial p;
        std::string token;
        while (row >> token) {
            try {
                p.coefficients.emplace_back(token);
            } catch (const std::exception&) {
                return;
            }
        }
        if (p.coefficients.empty()) return;
        loaded.push_back(std::move(p));
    }
    if (loaded.empty()) return;
    std::lock_guard<std::mutex> lock(mutex_);
    if (loaded.size() > table_.size() &&
        loaded.size() <= max_order_ + 1)
        table_ = std::move(loaded);
}

void PolynomialTable::save_cache(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(path);
    if (!out) return;
    for (std::size_t j = 0; j < table_.size(); ++j) {
        out << j << ':';
        for (const Rational& r : table_[j].coefficients)
            out << ' ' << rational_to_string(r);
        out << '\n';
    }
}

std::string PolynomialTable::default_cache_path() {
    const char* dir = std::getenv("PGL_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/taylor_polys.txt";
}

double expansion_residual(PolynomialTable& table, double p,
                          std::complex<double> s, double lambda,
                          std::size_t J) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0, 1)");
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    const double oml = 1.0 - lambda;
    const double logp = std::log(p);

    // LHS = p^{s+1-L} / exp(s (p^{1-L} - 1)/(1-L)), assembled in log space.
    const std::complex<double> lhs =
        std::exp((s + oml) * logp - s * (std::expm1(oml * logp) / oml));

    ComplexNeumaierSum series;
    double factor = 1.0;  // (1-L)^j log(p)^j / j!
    for (std::size_t j = 0; j <= J; ++j) {
        series.add(factor * eval_poly(table.f_poly(j), s * logp));
        factor *= oml * logp / static_cast<double>(j + 1);
    }
    return std::abs(lhs - series.value());
}

}  // namespace primelab
