#include <algorithm>
#include <complex>
#include <cstdio>
#include <limits>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace {

using json = nlohmann::ordered_json;
using namespace primelab;

std::string d2s(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string format = "csv";
    std::string path;

    void emit(const std::vector<json>& rows) const {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::invalid_argument("cannot open output file");
            out = &file;
        }
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(r);
            *out << arr.dump(2) << '\n';
            return;
        }
        if (rows.empty()) return;
        bool first = true;
        for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
            if (!first) *out << ',';
            *out << it.key();
            first = false;
        }
        *out << '\n';
        for (const auto& row : rows) {
            first = true;
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (!first) *out << ',';
                if (it->is_number_float())
                    *out << d2s(it->get<double>());
                else if (it->is_string())
                    *out << it->get<std::string>();
                else
                    *out << it->dump();
                first = false;
            }
            *out << '\n';
        }
    }
};

struct Common {
    std::uint64_t limit = 10'000'000'000ULL;
    std::uint64_t segment_size = 1ULL << 20;
    unsigned threads = 1;
    bool deterministic = false;
    Output output;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--limit", common.limit, "sieve capacity ceiling");
    cmd->add_option("--segment-size", common.segment_size,
                    "odd slots per sieve segment");
    cmd->add_option("--threads", common.threads, "worker threads");
    cmd->add_flag("--deterministic", common.deterministic,
                  "force single-threaded, fixed-order reductions");
    cmd->add_option("--format", common.output.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", common.output.path, "output file (default stdout)");
}

SegmentedSieve make_sieve(const Common& common) {
    return SegmentedSieve({common.limit, common.segment_size});
}

FunctionTag parse_tag(const std::string& name) {
    if (name == "phi") return FunctionTag::Phi;
    if (name == "psi") return FunctionTag::Psi;
    if (name == "xi") return FunctionTag::Xi;
    if (name == "tau") return FunctionTag::Tau;
    if (name == "T" || name == "t") return FunctionTag::T;
    throw std::invalid_argument("unknown function tag: " + name);
}

std::string tag_name(FunctionTag tag) {
    switch (tag) {
        case FunctionTag::Phi: return "phi";
        case FunctionTag::Psi: return "psi";
        case FunctionTag::Xi: return "xi";
        case FunctionTag::Tau: return "tau";
        case FunctionTag::T: return "T";
    }
    return "?";
}

DifferentiableFn parse_fn(const std::string& name) {
    if (name == "log")
        return {[](double t) { return std::log(t); },
                [](double t) { return 1.0 / t; }};
    if (name == "sqrt")
        return {[](double t) { return std::sqrt(t); },
                [](double t) { return 0.5 / std::sqrt(t); }};
    if (name == "invlog")
        return {[](double t) { return 1.0 / std::log(t); },
                [](double t) {
                    const double l = std::log(t);
                    return -1.0 / (t * l * l);
                }};
    if (name == "one")
        return {[](double) { return 1.0; }, [](double) { return 0.0; }};
    throw std::invalid_argument("unknown test function: " + name);
}

int run(int argc, char** argv) {
    CLI::App app{"numerical laboratory for prime sums, short intervals, and "
                 "weighted prime counts"};
    app.require_subcommand(1);

    Common common;

    // --- sieve ---------------------------------------------------------
    auto* sieve_cmd = app.add_subcommand("sieve", "pi/theta checkpoints");
    std::vector<std::uint64_t> checkpoints;
    std::string save_path, load_path;
    sieve_cmd->add_option("--checkpoints", checkpoints, "ascending x values");
    sieve_cmd->add_option("--save", save_path, "write binary checkpoint file");
    sieve_cmd->add_option("--load", load_path, "print a checkpoint file and exit");
    add_common(sieve_cmd, common);

    // --- theta ---------------------------------------------------------
    auto* theta_cmd = app.add_subcommand("theta", "Chebyshev theta at points");
    std::vector<std::uint64_t> theta_xs;
    theta_cmd->add_option("--x", theta_xs, "evaluation points")->required();
    add_common(theta_cmd, common);

    // --- interval-scan ---------------------------------------------------
    auto* scan_cmd = app.add_subcommand(
        "interval-scan", "primes in (x, x + x^lambda] vs x^lambda/log x");
    double lambda = 0.5, c = 1.0;
    std::vector<double> scan_xs;
    scan_cmd->add_option("--lambda", lambda)->check(CLI::Range(1e-9, 1.0));
    scan_cmd->add_option("--c", c);
    scan_cmd->add_option("--x", scan_xs, "scan points")->required();
    add_common(scan_cmd, common);

    // --- weighted-sum ----------------------------------------------------
    auto* wsum_cmd = app.add_subcommand(
        "weighted-sum", "normalized weighted sum over a sequence");
    double wsum_x = 0.0;
    std::string sequence_kind = "primes";
    std::string sequence_file;
    wsum_cmd->add_option("--lambda", lambda);
    wsum_cmd->add_option("--c", c);
    wsum_cmd->add_option("--x", wsum_x)->required();
    wsum_cmd->add_option("--sequence", sequence_kind, "primes, toy, or file")
        ->check(CLI::IsMember({"primes", "toy", "file"}));
    wsum_cmd->add_option("--sequence-file", sequence_file,
                         "one integer per line for --sequence file");
    add_common(wsum_cmd, common);

    // --- rs-check --------------------------------------------------------
    auto* rs_cmd = app.add_subcommand(
        "rs-check", "partial-summation identity for sums of f over primes");
    double rs_x = 0.0, rs_tol = 1e-6, rs_quad_tol = 1e-8;
    std::string rs_fn = "log";
    rs_cmd->add_option("--x", rs_x)->required();
    rs_cmd->add_option("--fn", rs_fn, "log, sqrt, invlog, or one");
    rs_cmd->add_option("--max-residual", rs_tol, "failure threshold (relative)");
    rs_cmd->add_option("--quad-tol", rs_quad_tol);
    add_common(rs_cmd, common);

    // --- epsilon ---------------------------------------------------------
    auto* eps_cmd = app.add_subcommand("epsilon", "pi(x) - li(x) profile");
    std::vector<double> eps_xs;
    eps_cmd->add_option("--x", eps_xs)->required();
    add_common(eps_cmd, common);

    // --- complex-eval ----------------------------------------------------
    auto* ceval_cmd = app.add_subcommand(
        "complex-eval", "one of the prime-sum functions at a complex point");
    std::string fn_name = "phi";
    double s_re = 2.0, s_im = 0.0, tol = 1e-8;
    ceval_cmd->add_option("--fn", fn_name, "phi, psi, xi, tau, or T");
    ceval_cmd->add_option("--re", s_re, "Re(s)");
    ceval_cmd->add_option("--im", s_im, "Im(s)");
    ceval_cmd->add_option("--lambda", lambda);
    ceval_cmd->add_option("--c", c);
    ceval_cmd->add_option("--tol", tol, "certified tail bound target");
    add_common(ceval_cmd, common);

    // --- identity-check --------------------------------------------------
    auto* ident_cmd = app.add_subcommand(
        "identity-check", "termwise and derivative identities between the sums");
    std::string which = "xi-psi";
    double ident_h = 1e-3, ident_max_res = 1e-8;
    ident_cmd->add_option("--which", which, "xi-psi, xi-tau, or tau-tpp")
        ->check(CLI::IsMember({"xi-psi", "xi-tau", "tau-tpp"}));
    ident_cmd->add_option("--re", s_re);
    ident_cmd->add_option("--im", s_im);
    ident_cmd->add_option("--lambda", lambda);
    ident_cmd->add_option("--c", c);
    ident_cmd->add_option("--tol", tol);
    ident_cmd->add_option("--step", ident_h, "step for the second difference");
    ident_cmd->add_option("--max-residual", ident_max_res);
    add_common(ident_cmd, common);

    // --- laplace-check ---------------------------------------------------
    auto* lap_cmd = app.add_subcommand(
        "laplace-check", "transform quadrature against its closed form");
    double lap_x_max = 0.0, lap_max_res = 1e-4;
    lap_cmd->add_option("--re", s_re);
    lap_cmd->add_option("--im", s_im);
    lap_cmd->add_option("--lambda", lambda);
    lap_cmd->add_option("--c", c);
    lap_cmd->add_option("--tol", tol);
    lap_cmd->add_option("--x-max", lap_x_max, "0 = choose from tol");
    lap_cmd->add_option("--max-residual", lap_max_res);
    add_common(lap_cmd, common);

    // --- mellin-check ----------------------------------------------------
    auto* mel_cmd = app.add_subcommand(
        "mellin-check", "Mellin quadrature against the Gamma * Phi form");
    double z_re = 1.5, z_im = 0.0, mel_max_res = 1e-5;
    std::uint64_t mel_cutoff = 3'000'000;
    mel_cmd->add_option("--re", z_re, "Re(z)");
    mel_cmd->add_option("--im", z_im, "Im(z)");
    mel_cmd->add_option("--lambda", lambda);
    mel_cmd->add_option("--c", c);
    mel_cmd->add_option("--tol", tol);
    mel_cmd->add_option("--prime-cutoff", mel_cutoff);
    mel_cmd->add_option("--max-residual", mel_max_res, "relative threshold");
    add_common(mel_cmd, common);

    // --- poly ------------------------------------------------------------
    auto* poly_cmd = app.add_subcommand("poly", "the recursive polynomials f_j");
    std::uint64_t poly_j = 0, poly_max = 64;
    bool poly_all = false;
    poly_cmd->add_option("--j", poly_j)->required();
    poly_cmd->add_option("--max-order", poly_max);
    poly_cmd->add_flag("--all", poly_all, "print f_0 through f_j");
    add_common(poly_cmd, common);

    // --- expansion-check --------------------------------------------------
    auto* exp_cmd = app.add_subcommand(
        "expansion-check", "truncated expansion against its closed left side");
    double exp_p = 2.0, exp_max_res = -1.0;
    std::uint64_t exp_j = 10;
    exp_cmd->add_option("--p", exp_p, "prime (any real > 1 accepted)");
    exp_cmd->add_option("--re", s_re);
    exp_cmd->add_option("--im", s_im);
    exp_cmd->add_option("--lambda", lambda);
    exp_cmd->add_option("--j", exp_j, "truncation order");
    exp_cmd->add_option("--max-residual", exp_max_res,
                        "failure threshold; negative = report only");
    add_common(exp_cmd, common);

    // --- lemma-probe ------------------------------------------------------
    auto* lemma_cmd = app.add_subcommand("lemma-probe", "limit and window probes");
    std::string lemma_which = "power";
    double lemma_eps = 1.0, lemma_alpha = 1.0, lemma_bd = 1.0;
    std::vector<double> lemma_ladder = {1e3, 1e6, 1e9};
    lemma_cmd->add_option("--which", lemma_which,
                          "power, integrals, window-b, window-d, h1, h2")
        ->check(CLI::IsMember(
            {"power", "integrals", "window-b", "window-d", "h1", "h2"}));
    lemma_cmd->add_option("--epsilon", lemma_eps);
    lemma_cmd->add_option("--alpha", lemma_alpha);
    lemma_cmd->add_option("--lambda", lambda);
    lemma_cmd->add_option("--c", c);
    lemma_cmd->add_option("--value", lemma_bd, "b or d for the window probes");
    lemma_cmd->add_option("--ladder", lemma_ladder, "x sample points");
    add_common(lemma_cmd, common);

    // --- conjecture -------------------------------------------------------
    auto* conj_cmd = app.add_subcommand("conjecture", "prime-gap conjecture scans");
    std::string conj_name;
    std::uint64_t conj_n_max = 10'000, conj_p_max = 10'000'000, min_primes = 2;
    bool include_first = false;
    conj_cmd->add_option("name", conj_name,
                         "legendre, sierpinski, brocard, andrica, oppermann")
        ->required()
        ->check(CLI::IsMember(
            {"legendre", "sierpinski", "brocard", "andrica", "oppermann"}));
    conj_cmd->add_option("--n-max", conj_n_max);
    conj_cmd->add_option("--p-max", conj_p_max);
    conj_cmd->add_option("--min-primes", min_primes, "Legendre demand per window");
    conj_cmd->add_flag("--include-first", include_first,
                       "start Brocard at n = 1");
    add_common(conj_cmd, common);

    // --- erdos-hist -------------------------------------------------------
    auto* erdos_cmd =
        app.add_subcommand("erdos-hist", "normalized prime-gap histogram");
    std::uint64_t erdos_p_max = 1'000'000;
    std::uint64_t erdos_bins = 12;
    double erdos_hi = 3.0;
    erdos_cmd->add_option("--p-max", erdos_p_max);
    erdos_cmd->add_option("--bins", erdos_bins);
    erdos_cmd->add_option("--hi", erdos_hi, "upper edge of the binned range");
    add_common(erdos_cmd, common);

    // --- toy-seq ----------------------------------------------------------
    auto* toy_cmd =
        app.add_subcommand("toy-seq", "x_n = n log n gap and weight ratios");
    std::vector<std::uint64_t> toy_ns = {100, 10'000, 1'000'000};
    toy_cmd->add_option("--n", toy_ns, "sample indices");
    toy_cmd->add_option("--lambda", lambda);
    toy_cmd->add_option("--c", c);
    add_common(toy_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (common.deterministic) common.threads = 1;

    if (sieve_cmd->parsed()) {
        if (!load_path.empty()) {
            const auto records = read_checkpoint_file(load_path);
            std::vector<json> rows;
            for (const auto& r : records)
                rows.push_back({{"limit", r.limit}, {"pi", r.pi},
                                {"theta", r.theta}});
            common.output.emit(rows);
            return 0;
        }
        if (checkpoints.empty())
            throw std::invalid_argument("--checkpoints or --load required");
        const auto sieve = make_sieve(common);
        std::sort(checkpoints.begin(), checkpoints.end());
        const auto records = sieve.profile(checkpoints, common.threads);
        if (!save_path.empty()) write_checkpoint_file(save_path, records);
        std::vector<json> rows;
        for (const auto& r : records)
            rows.push_back({{"limit", r.limit}, {"pi", r.pi},
                            {"theta", r.theta}});
        common.output.emit(rows);
        return 0;
    }

    if (theta_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        std::vector<std::uint64_t> xs = theta_xs;
        std::sort(xs.begin(), xs.end());
        const auto records = sieve.profile(xs, common.threads);
        std::vector<json> rows;
        for (const auto& r : records)
            rows.push_back({{"x", r.limit}, {"pi", r.pi}, {"theta", r.theta}});
        common.output.emit(rows);
        return 0;
    }

    if (scan_cmd->parsed()) {
        const WeightParams params{lambda, c};
        const auto sieve = make_sieve(common);
        const auto records = interval_scan(params, scan_xs, sieve);
        std::vector<json> rows;
        for (const auto& r : records)
            rows.push_back({{"x", r.x},
                            {"interval_count", r.interval_count},
                            {"predicted", r.predicted},
                            {"ratio", r.ratio},
                            {"envelope_lo", r.envelope_lo},
                            {"envelope_hi", r.envelope_hi}});
        common.output.emit(rows);
        return 0;
    }

    if (wsum_cmd->parsed()) {
        const WeightParams params{lambda, c};
        const auto sieve = make_sieve(common);
        std::unique_ptr<SequenceSource> source;
        if (sequence_kind == "primes") {
            source = std::make_unique<PrimeSequence>(sieve);
        } else if (sequence_kind == "toy") {
            source = std::make_unique<ToySequence>();
        } else {
            std::ifstream in(sequence_file);
            if (!in) throw std::invalid_argument("cannot open sequence file");
            std::vector<std::uint64_t> values;
            std::uint64_t v;
            while (in >> v) values.push_back(v);
            source = std::make_unique<ListSequence>(std::move(values));
        }
        const NormalizedSum sum = normalized_weight_sum(params, *source, wsum_x);
        common.output.emit({{{"x", sum.x},
                             {"ratio", sum.ratio},
                             {"terms_used", sum.terms_used},
                             {"terms_dropped", sum.terms_dropped},
                             {"max_term_log", sum.max_term_log}}});
        return 0;
    }

    if (rs_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const PrimeCounter counter(sieve,
                                   static_cast<std::uint64_t>(rs_x) + 2);
        const SummationOracle oracle(sieve, counter);
        const DifferentiableFn fn = parse_fn(rs_fn);
        RsOptions options;
        options.quad_tol = rs_quad_tol;
        const double rhs = oracle.rs_rhs(fn, rs_x, options);
        NeumaierSum direct;
        sieve.for_each_prime(2, static_cast<std::uint64_t>(rs_x) + 1,
                             [&](std::uint64_t p) {
                                 direct.add(fn.f(static_cast<double>(p)));
                             });
        const double lhs = direct.value();
        const double residual = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
        common.output.emit({{{"x", rs_x},
                             {"fn", rs_fn},
                             {"direct", lhs},
                             {"identity_rhs", rhs},
                             {"relative_residual", residual}}});
        return residual <= rs_tol ? 0 : 3;
    }

    if (eps_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        double top = 2.0;
        for (double x : eps_xs) top = std::max(top, x);
        const PrimeCounter counter(sieve, static_cast<std::uint64_t>(top) + 2);
        const SummationOracle oracle(sieve, counter);
        std::vector<json> rows;
        for (const auto& r : oracle.epsilon_profile(eps_xs))
            rows.push_back({{"x", r.x},
                            {"li", r.li},
                            {"epsilon", r.epsilon},
                            {"rh_ratio", r.rh_ratio}});
        common.output.emit(rows);
        return 0;
    }

    if (ceval_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const ComplexSums sums(sieve);
        const WeightParams params{lambda, c};
        const FunctionTag tag = parse_tag(fn_name);
        const auto result = sums.eval(tag, params, {s_re, s_im}, tol);
        common.output.emit({{{"tag", tag_name(tag)},
                             {"lambda", lambda},
                             {"c", c},
                             {"re_s", s_re},
                             {"im_s", s_im},
                             {"re_val", result.value.real()},
                             {"im_val", result.value.imag()},
                             {"tail_bound", result.tail_bound},
                             {"cutoff", result.cutoff}}});
        return 0;
    }

    if (ident_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const ComplexSums sums(sieve);
        const WeightParams params{lambda, c};
        const std::complex<double> s{s_re, s_im};
        double residual;
        json row;
        if (which == "tau-tpp") {
            const auto check = sums.identity_tau_Tpp(params, s, ident_h, tol);
            residual = check.residual;
            row = {{"which", which},          {"lambda", lambda},
                   {"re_s", s_re},            {"im_s", s_im},
                   {"h", ident_h},            {"residual", check.residual},
                   {"residual_half", check.residual_half},
                   {"ratio", check.ratio},    {"cutoff", check.cutoff}};
        } else {
            const auto check = which == "xi-psi"
                                   ? sums.identity_xi_psi(params, s, tol)
                                   : sums.identity_xi_tau(params, s, tol);
            residual = check.residual;
            row = {{"which", which},   {"lambda", lambda},
                   {"re_s", s_re},     {"im_s", s_im},
                   {"residual", check.residual},
                   {"tail_bound", check.tail_bound},
                   {"cutoff", check.cutoff},
                   {"certified", check.certified}};
        }
        common.output.emit({row});
        return residual <= ident_max_res ? 0 : 3;
    }

    if (lap_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const ComplexSums sums(sieve);
        const WeightParams params{lambda, c};
        const std::complex<double> s{s_re, s_im};
        const std::complex<double> lhs =
            sums.laplace_lhs(params, s, lap_x_max, tol > 0 ? tol : 1e-6);
        const double b = c * params.one_minus_lambda();
        const auto psi = sums.eval(FunctionTag::Psi, params, s,
                                   tol > 0 ? tol : 1e-10);
        const std::complex<double> rhs = b / (b + s) * psi.value - 1.0 / s;
        const double residual = std::abs(lhs - rhs);
        common.output.emit({{{"lambda", lambda},
                             {"c", c},
                             {"re_s", s_re},
                             {"im_s", s_im},
                             {"re_lhs", lhs.real()},
                             {"im_lhs", lhs.imag()},
                             {"re_rhs", rhs.real()},
                             {"im_rhs", rhs.imag()},
                             {"residual", residual}}});
        return residual <= lap_max_res ? 0 : 3;
    }

    if (mel_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const ComplexSums sums(sieve);
        const WeightParams params{lambda, c};
        const std::complex<double> z{z_re, z_im};
        const std::complex<double> closed =
            sums.mellin_rhs(params, z, tol > 0 ? tol : 1e-8);
        const std::complex<double> numeric = sums.mellin_numeric(
            params, z, (tol > 0 ? tol : 1e-7), mel_cutoff);
        const double residual = std::abs(numeric - closed) / std::abs(closed);
        common.output.emit({{{"lambda", lambda},
                             {"re_z", z_re},
                             {"im_z", z_im},
                             {"re_numeric", numeric.real()},
                             {"im_numeric", numeric.imag()},
                             {"re_closed", closed.real()},
                             {"im_closed", closed.imag()},
                             {"relative_residual", residual}}});
        return residual <= mel_max_res ? 0 : 3;
    }

    if (poly_cmd->parsed()) {
        PolynomialTable table(poly_max);
        const std::string cache = PolynomialTable::default_cache_path();
        if (!cache.empty()) table.load_cache(cache);
        const std::uint64_t first = poly_all ? 0 : poly_j;
        for (std::uint64_t j = first; j <= poly_j; ++j)
            std::cout << table.dump_line(j) << '\n';
        if (!cache.empty()) table.save_cache(cache);
        return 0;
    }

    if (exp_cmd->parsed()) {
        PolynomialTable table(std::max<std::uint64_t>(exp_j, 64));
        const double residual =
            expansion_residual(table, exp_p, {s_re, s_im}, lambda, exp_j);
        common.output.emit({{{"p", exp_p},
                             {"re_s", s_re},
                             {"im_s", s_im},
                             {"lambda", lambda},
                             {"J", exp_j},
                             {"residual", residual}}});
        if (exp_max_res >= 0.0 && residual > exp_max_res) return 3;
        return 0;
    }

    if (lemma_cmd->parsed()) {
        std::vector<json> rows;
        if (lemma_which == "power") {
            const auto probe = power_difference_probe(lemma_eps, lambda, lemma_ladder);
            for (std::size_t i = 0; i < probe.sample_points.size(); ++i)
                rows.push_back({{"lemma", "power-difference"},
                                {"epsilon", lemma_eps},
                                {"lambda", lambda},
                                {"x", probe.sample_points[i]},
                                {"value", probe.values[i]},
                                {"target", probe.target},
                                {"deviation", probe.deviations[i]}});
        } else if (lemma_which == "integrals") {
            const WeightParams params{lambda, c};
            const auto pair =
                lemma_integral_probes(lemma_alpha, params, lemma_ladder);
            const auto push = [&](const char* id, const LimitProbe& p) {
                for (std::size_t i = 0; i < p.sample_points.size(); ++i)
                    rows.push_back({{"lemma", id},
                                    {"alpha", lemma_alpha},
                                    {"lambda", lambda},
                                    {"x", p.sample_points[i]},
                                    {"value", p.values[i]},
                                    {"target", p.target},
                                    {"deviation", p.deviations[i]}});
            };
            push("window-at-x", pair.near_x);
            push("window-at-x-plus", pair.near_x_plus);
        } else if (lemma_which == "window-b" || lemma_which == "window-d") {
            const WindowKind kind =
                lemma_which == "window-b" ? WindowKind::B : WindowKind::D;
            const double delta = inequality_window(lemma_bd, kind);
            rows.push_back({{"lemma", lemma_which},
                            {"value", lemma_bd},
                            {"delta", delta}});
        } else {
            const bool is_h1 = lemma_which == "h1";
            std::vector<double> grid = lemma_ladder;
            const auto rep = is_h1 ? h1_report(lemma_eps, lambda, grid)
                                   : h2_report(lemma_eps, lambda, grid);
            rows.push_back({{"lemma", lemma_which},
                            {"epsilon", lemma_eps},
                            {"lambda", lambda},
                            {"monotone", rep.monotone},
                            {"bounded", rep.bounded},
                            {"worst_margin", rep.worst_margin}});
        }
        common.output.emit(rows);
        return 0;
    }

    if (conj_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        ConjectureReport report{Conjecture::Legendre, 0, 0, {}, 0.0};
        if (conj_name == "legendre") {
            const PrimeCounter counter(sieve, (conj_n_max + 1) * (conj_n_max + 1) + 1);
            report = check_legendre(conj_n_max, counter, min_primes);
        } else if (conj_name == "sierpinski") {
            const PrimeCounter counter(sieve, conj_n_max * conj_n_max + 1);
            report = check_sierpinski(conj_n_max, counter);
        } else if (conj_name == "brocard") {
            const double k = static_cast<double>(conj_n_max + 6);
            const double pk = 1.2 * k * (std::log(k) + std::log(std::log(k)));
            const PrimeCounter counter(
                sieve, static_cast<std::uint64_t>(pk * pk) + 1);
            report = check_brocard(conj_n_max, sieve, counter, include_first);
        } else if (conj_name == "andrica") {
            report = check_andrica(conj_p_max, sieve);
        } else {
            const PrimeCounter counter(sieve,
                                       conj_n_max * conj_n_max + conj_n_max + 1);
            report = check_oppermann(conj_n_max, counter);
        }
        json row = {{"conjecture", conjecture_name(report.conjecture)},
                    {"range_lo", report.range_lo},
                    {"range_hi", report.range_hi},
                    {"counterexamples", report.counterexamples.size()},
                    {"min_margin", report.min_margin}};
        common.output.emit({row});
        for (std::uint64_t n : report.counterexamples)
            std::cerr << "counterexample at index " << n << '\n';
        return report.holds() ? 0 : 1;
    }

    if (erdos_cmd->parsed()) {
        const auto sieve = make_sieve(common);
        const auto hist = erdos_gap_histogram(erdos_p_max, erdos_bins,
                                              erdos_hi, sieve);
        std::vector<json> rows;
        const double width = hist.hi / static_cast<double>(hist.counts.size());
        for (std::size_t i = 0; i < hist.counts.size(); ++i)
            rows.push_back({{"bin_lo", width * static_cast<double>(i)},
                            {"bin_hi", width * static_cast<double>(i + 1)},
                            {"count", hist.counts[i]}});
        rows.push_back({{"bin_lo", hist.hi},
                        {"bin_hi", std::numeric_limits<double>::infinity()},
                        {"count", hist.overflow}});
        common.output.emit(rows);
        return 0;
    }

    if (toy_cmd->parsed()) {
        const WeightParams params{lambda, c};
        const auto records = toy_sequence_scan(params, toy_ns);
        std::vector<json> rows;
        for (const auto& r : records)
            rows.push_back({{"n", r.n},
                            {"x", r.x},
                            {"gap_ratio", r.gap_ratio},
                            {"weight_ratio", r.weight_ratio}});
        common.output.emit(rows);
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const primelab::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << " (needs "
                  << e.required() << ")\n";
        return 2;
    } catch (const primelab::numeric_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
