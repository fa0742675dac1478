#include <doctest.h>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "primelab/errors.hpp"
#include "primelab/taylor.hpp"

using namespace primelab;
using cplx = std::complex<double>;

TEST_CASE("first members of the recursive family, exactly") {
    PolynomialTable table(8);
    CHECK(table.f_poly(0).coefficients == std::vector<Rational>{1});
    CHECK(table.f_poly(1).coefficients ==
          std::vector<Rational>{1, Rational(-1, 2)});
    CHECK(table.f_poly(2).coefficients ==
          std::vector<Rational>{1, Rational(-4, 3), Rational(1, 4)});
    CHECK(table.f_poly(3).coefficients ==
          std::vector<Rational>{1, Rational(-11, 4), Rational(5, 4),
                                Rational(-1, 8)});
}

TEST_CASE("structure holds through order 64") {
    PolynomialTable table(64);
    for (std::size_t j = 0; j <= 64; ++j) {
        const auto& p = table.f_poly(j);
        CHECK(p.coefficients.front() == 1);  // constant term survives exactly
        CHECK(p.degree() == j);
    }
    CHECK_THROWS_AS((void)table.f_poly(65), capacity_error);
}

TEST_CASE("dump format") {
    PolynomialTable table(4);
    CHECK(table.dump_line(0) == "0: 1");
    CHECK(table.dump_line(2) == "2: 1 -4/3 1/4");
}

TEST_CASE("cache round trip") {
    PolynomialTable table(16);
    (void)table.f_poly(12);
    const auto path =
        (std::filesystem::temp_directory_path() / "pgl_fpolys.txt").string();
    table.save_cache(path);
    PolynomialTable reloaded(16);
    reloaded.load_cache(path);
    std::filesystem::remove(path);
    CHECK(reloaded.f_poly(12).coefficients == table.f_poly(12).coefficients);
}

TEST_CASE("polynomial evaluation") {
    PolynomialTable table(4);
    CHECK(eval_poly(table.f_poly(0), {123.0, -4.0}) == cplx{1.0, 0.0});
    CHECK(std::abs(eval_poly(table.f_poly(1), {2.0, 0.0})) < 1e-15);
    CHECK(eval_poly(table.f_poly(2), {0.0, 0.0}) == cplx{1.0, 0.0});
}

TEST_CASE("expansion collapses to the exponential series at s = 0") {
    PolynomialTable table(40);
    const double lambda = 0.6;
    // J = 0 keeps only f_0: the left side is 2^{1-lambda}, the series is 1
    CHECK(expansion_residual(table, 2.0, {0.0, 0.0}, lambda, 0) ==
          doctest::Approx(std::pow(2.0, 1.0 - lambda) - 1.0).epsilon(1e-13));
    CHECK(expansion_residual(table, 2.0, {0.0, 0.0}, lambda, 30) < 1e-14);
}

TEST_CASE("expansion residual shrinks with the truncation order") {
    PolynomialTable table(16);
    const cplx s{0.3, 0.2};
    const double at4 = expansion_residual(table, 5.0, s, 0.9, 4);
    const double at10 = expansion_residual(table, 5.0, s, 0.9, 10);
    CHECK(at10 < at4);
    CHECK(at10 <= 1e-8);
}
