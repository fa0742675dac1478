#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace primelab {

using Rational = boost::multiprecision::cpp_rational;

// Exact-rational polynomial, coefficient index = degree, no trailing zeros.
struct RationalPolynomial {
    std::vector<Rational> coefficients;

    std::size_t degree() const {
        return coefficients.empty() ? 0 : coefficients.size() - 1;
    }
};

std::complex<double> eval_poly(const RationalPolynomial& p,
                               std::complex<double> x);

// The recursive family
//   f_0 = 1,   f_{j+1}(x) = f_j(x) - x sum_{k=0}^{j} C(j,k) f_{j-k}(x)/(k+2),
// kept exact. Entries are memoized; an optional disk cache in text form
// ("j: c0 c1/d1 c2/d2 ...") lives under $PGL_CACHE_DIR.
class PolynomialTable {
public:
    explicit PolynomialTable(std::size_t max_order = 64);

    std::size_t max_order() const { return max_order_; }

    // Valid reference for the table's lifetime; thread-safe.
    const RationalPolynomial& f_poly(std::size_t j);

    // One dump line, e.g. "2: 1 -4/3 1/4".
    std::string dump_line(std::size_t j);

    // Best effort: a malformed or missing cache file is ignored.
    void load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

    // Resolves $PGL_CACHE_DIR; empty string when unset.
    static std::string default_cache_path();

private:
    const RationalPolynomial& f_poly_locked(std::size_t j);

    std::size_t max_order_;
    std::vector<RationalPolynomial> table_;  // capacity fixed up front
    std::vector<std::vector<Rational>> binomial_;
    mutable std::mutex mutex_;
};

// | p^{s+1-L} / exp(s (p^{1-L}-1)/(1-L))
//   - sum_{j<=J} (1-L)^j log(p)^j f_j(s log p) / j! |
// with L = lambda.
double expansion_residual(PolynomialTable& table, double p,
                          std::complex<double> s, double lambda,
                          std::size_t J);

}  // namespace primelab
