#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "primelab/complex_sums.hpp"
#include "primelab/special.hpp"

using namespace primelab;
using cplx = std::complex<double>;

namespace {
const SegmentedSieve& shared_sieve() {
    static SegmentedSieve sieve({300'000'000ULL, 1ULL << 20});
    return sieve;
}
ComplexSums make_sums() { return ComplexSums(shared_sieve()); }
}  // namespace

TEST_CASE("Phi at real points") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    const auto r2 = sums.eval(FunctionTag::Phi, params, {2.0, 0.0}, 1e-8);
    CHECK(r2.tail_bound <= 1e-8);
    CHECK(r2.value.real() == doctest::Approx(0.493091109368764).epsilon(3e-8));
    CHECK(r2.value.imag() == 0.0);

    const auto r = sums.eval(FunctionTag::Phi, params, {2.125, 0.0}, 1e-8);
    CHECK(r.value.real() == doctest::Approx(0.41177073028768).epsilon(3e-8));
}

TEST_CASE("single-term definitional check for Psi") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    const cplx s{0.7, 0.3};
    const auto r = sums.eval_at_cutoff(FunctionTag::Psi, params, s, 2);
    const double q = (std::pow(2.0, 0.5) - 1.0) / 0.5;
    const cplx expected =
        std::log(2.0) / (std::pow(2.0, 0.5) * std::exp(s * q));
    CHECK(std::abs(r.value - expected) < 1e-15);
    CHECK(r.cutoff == 2);
}

TEST_CASE("Tau high-precision point") {
    const auto sums = make_sums();
    const auto r =
        make_sums().eval(FunctionTag::Tau, {0.5, 1.0}, {1.0, 0.0}, 1e-14);
    CHECK(r.tail_bound <= 1e-14);
    CHECK(r.value.real() ==
          doctest::Approx(0.220817108587558).epsilon(1e-12));
    (void)sums;
}

TEST_CASE("domain checks") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    CHECK_THROWS((void)sums.eval(FunctionTag::Phi, params, {0.9, 0.0}, 1e-6));
    CHECK_THROWS((void)sums.eval(FunctionTag::Tau, params, {-0.1, 0.0}, 1e-6));
    CHECK_THROWS((void)sums.eval(FunctionTag::Psi, params, {1.0, 0.0}, 0.0));
}

TEST_CASE("capacity error reports the required cutoff") {
    SegmentedSieve tiny({10'000, 1ULL << 12});
    const ComplexSums sums(tiny);
    try {
        (void)sums.eval(FunctionTag::Phi, {0.5, 1.0}, {1.05, 0.0}, 1e-10);
        FAIL("expected a capacity error");
    } catch (const capacity_error& e) {
        CHECK(e.required() > 10'000);
    }
}

TEST_CASE("conjugate symmetry is exact under a fixed cutoff") {
    const auto sums = make_sums();
    const WeightParams params{0.3, 1.0};
    const cplx s{1.0, 0.7};
    for (FunctionTag tag : {FunctionTag::Phi, FunctionTag::Psi, FunctionTag::Xi,
                            FunctionTag::Tau, FunctionTag::T}) {
        const cplx s_used = tag == FunctionTag::Phi ? s + 0.5 : s;
        const auto a = sums.eval_at_cutoff(tag, params, s_used, 10'000);
        const auto b = sums.eval_at_cutoff(tag, params, std::conj(s_used), 10'000);
        CHECK(a.value.real() == b.value.real());
        CHECK(a.value.imag() == -b.value.imag());
    }
}

TEST_CASE("tail bounds are sound: doubling the cutoff moves less than the bound") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    const cplx points[] = {{1.5, 0.0}, {2.0, 1.0}, {3.0, -2.0}};
    for (FunctionTag tag : {FunctionTag::Psi, FunctionTag::Xi, FunctionTag::Tau,
                            FunctionTag::T, FunctionTag::Phi}) {
        for (const cplx& s : points) {
            const auto a = sums.eval_at_cutoff(tag, params, s, 1'000);
            const auto b = sums.eval_at_cutoff(tag, params, s, 2'000);
            CHECK(std::abs(b.value - a.value) <= a.tail_bound);
        }
    }
}

TEST_CASE("scaling identity between Xi and Psi") {
    const auto sums = make_sums();
    for (double lambda : {0.1, 0.5, 0.9}) {
        for (const cplx& s : {cplx{1.0, 0.0}, cplx{0.5, 2.0}, cplx{3.0, 0.0}}) {
            const auto check = sums.identity_xi_psi({lambda, 1.0}, s, 1e-10);
            CHECK(check.residual <= 2e-10);
        }
    }
}

TEST_CASE("shift identity between Xi and Tau") {
    const auto sums = make_sums();
    for (double lambda : {0.1, 0.5, 0.9}) {
        for (const cplx& s : {cplx{1.0, 0.0}, cplx{0.5, 2.0}, cplx{3.0, 0.0}}) {
            const auto check = sums.identity_xi_tau({lambda, 1.0}, s, 1e-10);
            CHECK(check.residual <= 2e-10);
        }
    }
}

TEST_CASE("Tau is the second derivative of T") {
    const auto sums = make_sums();
    const auto check = sums.identity_tau_Tpp({0.5, 1.0}, {2.0, 0.0}, 1e-3, 1e-10);
    CHECK(check.residual <= 1e-5);
    CHECK(check.ratio > 3.5);
    CHECK(check.ratio < 4.5);

    const auto off = sums.identity_tau_Tpp({0.7, 1.0}, {1.0, 1.0}, 1e-3, 1e-10);
    CHECK(off.residual <= 1e-4);
}

TEST_CASE("Laplace transform quadrature against its closed form") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    const cplx s{1.0, 0.0};
    const cplx lhs = sums.laplace_lhs(params, s, 0.0, 1e-6);
    const auto psi = sums.eval(FunctionTag::Psi, params, s, 1e-10);
    const double b = params.c * params.one_minus_lambda();
    const cplx rhs = b / (b + s) * psi.value - 1.0 / s;
    CHECK(std::abs(lhs - rhs) <= 1e-4);
}

TEST_CASE("Laplace magnitude decays like 1/s for large real s") {
    const auto sums = make_sums();
    const cplx lhs = sums.laplace_lhs({0.5, 1.0}, {20.0, 0.0}, 0.0, 1e-8);
    CHECK(std::abs(lhs) <= 3.0 / 20.0);
}

TEST_CASE("Mellin closed form against direct quadrature") {
    const auto sums = make_sums();
    const WeightParams params{0.5, 1.0};
    const cplx z{1.5, 0.0};
    const cplx closed = sums.mellin_rhs(params, z, 1e-8);
    const cplx numeric = sums.mellin_numeric(params, z, 1e-7);
    CHECK(std::abs(numeric - closed) / std::abs(closed) <= 1e-5);
}

TEST_CASE("Mellin closed form uses the Gamma kernel") {
    const auto sums = make_sums();
    // at z = 1 the Gamma factor is 1 and the product is (1-L) Phi(2)
    const cplx at1 = sums.mellin_rhs({0.5, 1.0}, {1.0, 0.0}, 1e-8);
    CHECK(at1.real() == doctest::Approx(0.5 * 0.493091109368764).epsilon(1e-7));
}

TEST_CASE("gamma function values and reflection") {
    CHECK(gamma_complex({1.0, 0.0}).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_complex({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_complex({0.5, 0.0}).real() ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
    CHECK_THROWS((void)gamma_complex({-2.0, 0.0}));

    const cplx points[] = {{0.3, 0.0}, {0.7, 1.3}, {-1.4, 0.6},
                           {2.2, -3.0}, {0.5, 5.0}};
    for (const cplx& z : points) {
        const cplx lhs = gamma_complex(z) * gamma_complex(1.0 - z) *
                         std::sin(std::numbers::pi * z) / std::numbers::pi;
        CHECK(std::abs(lhs - 1.0) < 1e-11);
    }
}

TEST_CASE("exponential integral E1") {
    CHECK(exp_integral_e1({1.0, 0.0}).real() ==
          doctest::Approx(0.219383934395520).epsilon(1e-12));
    CHECK_THROWS((void)exp_integral_e1({-1.0, 0.0}));
    // series and continued fraction must agree near the switchover
    const cplx near{3.9, 0.5};
    const cplx far{4.1, 0.5};
    CHECK(std::abs(exp_integral_e1(near) - exp_integral_e1(far)) < 0.1);
}

TEST_CASE("singular part of Tau and the E1 derivative chain") {
    CHECK(tau_singular_part({1.0, 0.0}).real() ==
          doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    // d/ds[-E1(s)] = e^{-s}/s, checked at s = 1 by Richardson differences
    const auto deriv = [](double h) {
        return -(exp_integral_e1({1.0 + h, 0.0}).real() -
                 exp_integral_e1({1.0 - h, 0.0}).real()) /
               (2.0 * h);
    };
    const double d1 = deriv(1e-4);
    const double d2 = deriv(5e-5);
    const double richardson = (4.0 * d2 - d1) / 3.0;
    CHECK(std::abs(richardson - std::exp(-1.0)) < 1e-8);
}
