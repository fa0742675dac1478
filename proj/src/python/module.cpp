#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>

#include "primelab/asymptotics.hpp"
#include "primelab/complex_sums.hpp"
#include "primelab/conjectures.hpp"
#include "primelab/errors.hpp"
#include "primelab/oracle.hpp"
#include "primelab/sequence.hpp"
#include "primelab/sieve.hpp"
#include "primelab/special.hpp"
#include "primelab/taylor.hpp"
#include "primelab/weights.hpp"

namespace py = pybind11;
using namespace primelab;

namespace {

FunctionTag tag_from_name(const std::string& name) {
    if (name == "phi") return FunctionTag::Phi;
    if (name == "psi") return FunctionTag::Psi;
    if (name == "xi") return FunctionTag::Xi;
    if (name == "tau") return FunctionTag::Tau;
    if (name == "T" || name == "t") return FunctionTag::T;
    throw std::invalid_argument("unknown function tag: " + name);
}

// Owns the sieve, a counter sized on demand, and the derived evaluators.
class Lab {
public:
    explicit Lab(std::uint64_t limit = 10'000'000'000ULL)
        : sieve_({limit, 1ULL << 20}), sums_(sieve_) {}

    std::uint64_t pi(std::uint64_t x) { return counter(x).pi(x); }

    std::uint64_t count_interval(std::uint64_t x, std::uint64_t y) {
        return counter(y).count_interval(x, y);
    }

    double theta(std::uint64_t x) const { return sieve_.theta(x); }

    std::vector<std::uint64_t> primes_in(std::uint64_t lo,
                                         std::uint64_t hi) const {
        return sieve_.primes_in(lo, hi);
    }

    std::vector<std::tuple<std::uint64_t, std::uint64_t, double>> profile(
        std::vector<std::uint64_t> checkpoints, unsigned threads) const {
        std::sort(checkpoints.begin(), checkpoints.end());
        std::vector<std::tuple<std::uint64_t, std::uint64_t, double>> out;
        for (const auto& r : sieve_.profile(checkpoints, threads))
            out.emplace_back(r.limit, r.pi, r.theta);
        return out;
    }

    py::dict normalized_sum(double lambda, double c, double x,
                            const std::string& sequence) {
        const WeightParams params{lambda, c};
        std::unique_ptr<SequenceSource> src;
        if (sequence == "primes")
            src = std::make_unique<PrimeSequence>(sieve_);
        else if (sequence == "toy")
            src = std::make_unique<ToySequence>();
        else
            throw std::invalid_argument("sequence must be primes or toy");
        const NormalizedSum s = normalized_weight_sum(params, *src, x);
        py::dict d;
        d["x"] = s.x;
        d["ratio"] = s.ratio;
        d["terms_used"] = s.terms_used;
        d["terms_dropped"] = s.terms_dropped;
        d["max_term_log"] = s.max_term_log;
        return d;
    }

    double rs_rhs(const std::function<double(double)>& f,
                  const std::function<double(double)>& df, double x,
                  double quad_tol) {
        const PrimeCounter& cnt = counter(static_cast<std::uint64_t>(x) + 2);
        const SummationOracle oracle(sieve_, cnt);
        RsOptions options;
        options.quad_tol = quad_tol;
        return oracle.rs_rhs({f, df}, x, options);
    }

    std::vector<std::tuple<double, double, double, double>> epsilon_profile(
        std::vector<double> xs) {
        double top = 2.0;
        for (double x : xs) top = std::max(top, x);
        const PrimeCounter& cnt = counter(static_cast<std::uint64_t>(top) + 2);
        const SummationOracle oracle(sieve_, cnt);
        std::vector<std::tuple<double, double, double, double>> out;
        for (const auto& r : oracle.epsilon_profile(xs))
            out.emplace_back(r.x, r.li, r.epsilon, r.rh_ratio);
        return out;
    }

    py::dict eval(const std::string& tag, double lambda, double c,
                  std::complex<double> s, double tol) {
        const auto r = sums_.eval(tag_from_name(tag), {lambda, c}, s, tol);
        py::dict d;
        d["value"] = r.value;
        d["tail_bound"] = r.tail_bound;
        d["cutoff"] = r.cutoff;
        return d;
    }

    py::dict identity_check(const std::string& which, double lambda, double c,
                            std::complex<double> s, double tol, double h) {
        py::dict d;
        const WeightParams params{lambda, c};
        if (which == "tau-tpp") {
            const auto r = sums_.identity_tau_Tpp(params, s, h, tol);
            d["residual"] = r.residual;
            d["residual_half"] = r.residual_half;
            d["ratio"] = r.ratio;
            d["cutoff"] = r.cutoff;
            return d;
        }
        const auto r = which == "xi-psi" ? sums_.identity_xi_psi(params, s, tol)
                                         : sums_.identity_xi_tau(params, s, tol);
        d["residual"] = r.residual;
        d["tail_bound"] = r.tail_bound;
        d["cutoff"] = r.cutoff;
        d["certified"] = r.certified;
        return d;
    }

    std::complex<double> laplace_lhs(double lambda, double c,
                                     std::complex<double> s, double x_max,
                                     double tol) {
        return sums_.laplace_lhs({lambda, c}, s, x_max, tol);
    }

    std::complex<double> mellin_rhs(double lambda, double c,
                                    std::complex<double> z, double tol) {
        return sums_.mellin_rhs({lambda, c}, z, tol);
    }

    std::complex<double> mellin_numeric(double lambda, double c,
                                        std::complex<double> z, double tol,
                                        std::uint64_t prime_cutoff) {
        return sums_.mellin_numeric({lambda, c}, z, tol, prime_cutoff);
    }

    py::dict conjecture(const std::string& name, std::uint64_t n_max,
                        std::uint64_t p_max, std::uint64_t min_primes) {
        ConjectureReport rep{Conjecture::Legendre, 0, 0, {}, 0.0};
        if (name == "legendre")
            rep = check_legendre(n_max, counter((n_max + 1) * (n_max + 1) + 1),
                                 min_primes);
        else if (name == "sierpinski")
            rep = check_sierpinski(n_max, counter(n_max * n_max + 1));
        else if (name == "brocard") {
            const double k = static_cast<double>(n_max + 6);
            const double pk = 1.2 * k * (std::log(k) + std::log(std::log(k)));
            rep = check_brocard(n_max, sieve_,
                                counter(static_cast<std::uint64_t>(pk * pk) + 1));
        } else if (name == "andrica")
            rep = check_andrica(p_max, sieve_);
        else if (name == "oppermann")
            rep = check_oppermann(n_max,
                                  counter(n_max * n_max + n_max + 1));
        else
            throw std::invalid_argument("unknown conjecture: " + name);
        py::dict d;
        d["conjecture"] = conjecture_name(rep.conjecture);
        d["range"] = py::make_tuple(rep.range_lo, rep.range_hi);
        d["counterexamples"] = rep.counterexamples;
        d["min_margin"] = rep.min_margin;
        d["holds"] = rep.holds();
        return d;
    }

    std::vector<std::tuple<double, std::uint64_t, double, double>>
    interval_scan_py(double lambda, double c, std::vector<double> xs) {
        std::vector<std::tuple<double, std::uint64_t, double, double>> out;
        for (const auto& r : interval_scan({lambda, c}, xs, sieve_))
            out.emplace_back(r.x, r.interval_count, r.predicted, r.ratio);
        return out;
    }

private:
    const PrimeCounter& counter(std::uint64_t need) {
        if (!counter_ || counter_->limit() < need)
            counter_ = std::make_unique<PrimeCounter>(
                sieve_, std::max<std::uint64_t>(need, 1'000'000));
        return *counter_;
    }

    SegmentedSieve sieve_;
    ComplexSums sums_;
    std::unique_ptr<PrimeCounter> counter_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "prime-sum laboratory core";

    py::register_exception<capacity_error>(m, "CapacityError");
    py::register_exception<numeric_error>(m, "NumericError");

    py::class_<Lab>(m, "Lab")
        .def(py::init<std::uint64_t>(), py::arg("limit") = 10'000'000'000ULL)
        .def("pi", &Lab::pi, py::arg("x"))
        .def("count_interval", &Lab::count_interval, py::arg("x"), py::arg("y"))
        .def("theta", &Lab::theta, py::arg("x"))
        .def("primes_in", &Lab::primes_in, py::arg("lo"), py::arg("hi"))
        .def("profile", &Lab::profile, py::arg("checkpoints"),
             py::arg("threads") = 1)
        .def("normalized_sum", &Lab::normalized_sum, py::arg("lambda_"),
             py::arg("c"), py::arg("x"), py::arg("sequence") = "primes")
        .def("rs_rhs", &Lab::rs_rhs, py::arg("f"), py::arg("df"), py::arg("x"),
             py::arg("quad_tol") = 1e-8)
        .def("epsilon_profile", &Lab::epsilon_profile, py::arg("xs"))
        .def("eval", &Lab::eval, py::arg("tag"), py::arg("lambda_"),
             py::arg("c"), py::arg("s"), py::arg("tol") = 1e-8)
        .def("identity_check", &Lab::identity_check, py::arg("which"),
             py::arg("lambda_"), py::arg("c"), py::arg("s"),
             py::arg("tol") = 1e-10, py::arg("h") = 1e-3)
        .def("laplace_lhs", &Lab::laplace_lhs, py::arg("lambda_"), py::arg("c"),
             py::arg("s"), py::arg("x_max") = 0.0, py::arg("tol") = 1e-6)
        .def("mellin_rhs", &Lab::mellin_rhs, py::arg("lambda_"), py::arg("c"),
             py::arg("z"), py::arg("tol") = 1e-8)
        .def("mellin_numeric", &Lab::mellin_numeric, py::arg("lambda_"),
             py::arg("c"), py::arg("z"), py::arg("tol") = 1e-7,
             py::arg("prime_cutoff") = 3'000'000)
        .def("conjecture", &Lab::conjecture, py::arg("name"),
             py::arg("n_max") = 10'000, py::arg("p_max") = 10'000'000,
             py::arg("min_primes") = 2)
        .def("interval_scan", &Lab::interval_scan_py, py::arg("lambda_"),
             py::arg("c"), py::arg("xs"));

    m.def("logarithmic_integral", &logarithmic_integral, py::arg("x"),
          py::arg("tol") = 1e-9);
    m.def("weight",
          [](double lambda, double c, double x) {
              return weight({lambda, c}, x);
          },
          py::arg("lambda_"), py::arg("c"), py::arg("x"));
    m.def("log_weight",
          [](double lambda, double c, double x) {
              return log_weight({lambda, c}, x);
          },
          py::arg("lambda_"), py::arg("c"), py::arg("x"));
    m.def("bound_envelope",
          [](double lambda, double c) {
              const auto env = bound_envelope({lambda, c});
              return std::make_pair(env.lower, env.upper);
          },
          py::arg("lambda_"), py::arg("c"));
    m.def("substitution_g",
          [](double lambda, double c, double x) {
              return substitution_g({lambda, c}, x);
          },
          py::arg("lambda_"), py::arg("c"), py::arg("x"));
    m.def("gamma", &gamma_complex, py::arg("z"));
    m.def("exp_integral_e1", &exp_integral_e1, py::arg("s"));
    m.def("tau_singular_part", &tau_singular_part, py::arg("s"));
    m.def("delta_power", &delta_power, py::arg("epsilon"), py::arg("lambda_"),
          py::arg("x"));
    m.def("inequality_window",
          [](double value, const std::string& kind) {
              return inequality_window(
                  value, kind == "b" ? WindowKind::B : WindowKind::D);
          },
          py::arg("value"), py::arg("kind"));
    m.def("f_poly",
          [](std::size_t j) {
              static PolynomialTable table(64);
              return table.dump_line(j);
          },
          py::arg("j"));
    m.def("eval_f_poly",
          [](std::size_t j, std::complex<double> x) {
              static PolynomialTable table(64);
              return eval_poly(table.f_poly(j), x);
          },
          py::arg("j"), py::arg("x"));
    m.def("expansion_residual",
          [](double p, std::complex<double> s, double lambda, std::size_t J) {
              static PolynomialTable table(64);
              return expansion_residual(table, p, s, lambda, J);
          },
          py::arg("p"), py::arg("s"), py::arg("lambda_"), py::arg("J"));
}
