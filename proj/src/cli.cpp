// cli.cpp

#include "goldbach/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"

#include "goldbach/montecarlo.hpp"
#include "goldbach/probmodel.hpp"
#include "goldbach/sieve.hpp"
#include "goldbach/subsets.hpp"
#include "goldbach/verifier.hpp"

namespace goldbach {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Primes up to `limit`, going through the on-disk cache when
// GOLDBACH_CACHE_DIR is set. A cache that fails validation is rebuilt.
PrimeTable table_with_cache(uint64_t limit, std::ostream& err) {
    const char* dir = std::getenv("GOLDBACH_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return sieve_primes(limit);

    const std::string path =
        std::string(dir) + "/primes_" + std::to_string(limit) + ".bin";
    if (std::filesystem::exists(path)) {
        try {
            PrimeTable t = load_prime_cache(path);
            if (t.limit() == limit) return t;
            err << "warning: prime cache " << path << " has limit " << t.limit()
                << ", expected " << limit << "; rebuilding\n";
        } catch (const std::exception& e) {
            err << "warning: " << e.what() << "; rebuilding\n";
        }
    }
    PrimeTable t = sieve_primes(limit);
    try {
        std::filesystem::create_directories(dir);
        save_prime_cache(t, path);
    } catch (const std::exception& e) {
        err << "warning: could not write prime cache: " << e.what() << "\n";
    }
    return t;
}

struct SubsetFlags {
    std::string kind;
    int64_t t = 0;
    uint64_t seed = 0;
    CLI::Option* t_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "subset kind: primes|shift|jitter")
            ->required()
            ->check(CLI::IsMember({"primes", "shift", "jitter"}));
        t_opt = cmd->add_option("--t", t, "shift amount (kind=shift)");
        seed_opt = cmd->add_option("--seed", seed, "jitter stream seed (kind=jitter)");
    }

    SubsetSpec spec(uint64_t limit) const {
        const SubsetKind k = subset_kind_from_string(kind);
        if (t_opt->count() > 0 && k != SubsetKind::shift)
            throw CLI::ValidationError("--t is only valid with --kind shift");
        if (seed_opt->count() > 0 && k != SubsetKind::jitter)
            throw CLI::ValidationError("--seed is only valid with --kind jitter");
        return SubsetSpec{k, t, seed, limit};
    }
};

struct PaperTableRow {
    std::string quantity;
    std::string paper_value;
    double computed;
    bool pass;
};

std::vector<PaperTableRow> paper_table_rows() {
    std::vector<PaperTableRow> rows;

    const double p1 = disjointness_bound(1e4, BoundForm::exponential).log10();
    rows.push_back({"P(10000)", "<1e-51", p1, p1 < -51.0});
    const double p2 = disjointness_bound(4e4, BoundForm::exponential).log10();
    rows.push_back({"P(40000)", "<1e-154", p2, p2 < -154.0});

    const double s1 = tail_sum(20000, 1e-9).ln_sum / std::numbers::ln10;
    rows.push_back({"sum_P(20000)", "~1e-86", s1, std::fabs(s1 + 86.0) <= 1.0});
    const double s2 = tail_sum(50000, 1e-9).ln_sum / std::numbers::ln10;
    rows.push_back({"sum_P(50000)", "~1e-183", s2, std::fabs(s2 + 183.0) <= 1.0});

    const AlphaSolution a = alpha_solve(4e18);
    rows.push_back({"alpha(4e18)", "~0.8", a.alpha, a.alpha > 0.80 && a.alpha < 0.83});

    const LogProb at = alpha_tail_bound(4e18);
    rows.push_back({"exp(-N^alpha)(4e18)", "<exp(-1e15)", at.log10(), at.ln() <= -1e15});

    const LogProb sq = sqrt_bound(1e18);
    rows.push_back({"exp(-sqrt(N))(1e18)", "exp(-1e9)", sq.log10(), sq.ln() == -1e9});

    return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime-like subsets, Goldbach-style verification, and "
                 "log-space probability bounds"};
    app.require_subcommand(1);

    int exit_code = 0;

    // ---- gen ----------------------------------------------------
    auto* gen = app.add_subcommand("gen", "construct a subset and write it as text");
    SubsetFlags gen_flags;
    gen_flags.attach(gen);
    uint64_t gen_limit = 0;
    std::string gen_out;
    gen->add_option("--limit", gen_limit, "largest admissible element")->required();
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->callback([&] {
        const SubsetSpec spec = gen_flags.spec(gen_limit);
        const PrimeTable table = table_with_cache(gen_limit, err);
        const IntegerSubset q = build_subset(spec, table);
        if (gen_out.empty()) {
            export_subset(q, out);
        } else {
            std::ofstream f(gen_out);
            if (!f) throw std::runtime_error("cannot open output file: " + gen_out);
            export_subset(q, f);
        }
    });

    // ---- similarity ---------------------------------------------
    auto* sim = app.add_subcommand("similarity",
                                   "max deviation of the subset counting function from pi(n)");
    SubsetFlags sim_flags;
    sim_flags.attach(sim);
    uint64_t sim_limit = 0;
    sim->add_option("--limit", sim_limit, "scan upper bound")->required();
    sim->callback([&] {
        const SubsetSpec spec = sim_flags.spec(sim_limit);
        const PrimeTable table = table_with_cache(sim_limit, err);
        const SimilarityReport rep = similarity_deviation(build_subset(spec, table), table);
        out << "c_observed,argmax_n\n" << rep.c_observed << "," << rep.argmax_n << "\n";
    });

    // ---- verify -------------------------------------------------
    auto* ver = app.add_subcommand("verify", "check every even in a range for a two-summand "
                                             "representation in the subset");
    SubsetFlags ver_flags;
    ver_flags.attach(ver);
    uint64_t ver_from = 4, ver_to = 0, ver_tolerate = 0;
    unsigned ver_jobs = 1;
    std::string ver_report;
    ver->add_option("--from", ver_from, "first even (default 4)");
    ver->add_option("--to", ver_to, "last even")->required();
    ver->add_option("--jobs", ver_jobs, "parallel shards");
    ver->add_option("--report", ver_report, "write the JSON report to this file");
    ver->add_option("--tolerate-below", ver_tolerate,
                    "exit 0 if all counterexamples are <= this value");
    ver->callback([&] {
        const SubsetSpec spec = ver_flags.spec(ver_to);
        const PrimeTable table = table_with_cache(ver_to, err);
        const VerificationReport rep =
            verify_range(build_subset(spec, table), ver_from, ver_to, ver_jobs);
        const nlohmann::json j = report_to_json(rep);
        out << j.dump() << "\n";
        if (!ver_report.empty()) {
            std::ofstream f(ver_report);
            if (!f) throw std::runtime_error("cannot open report file: " + ver_report);
            f << j.dump(2) << "\n";
        }
        for (uint64_t cx : rep.counterexamples)
            if (cx > ver_tolerate) exit_code = 2;
    });

    // ---- prob ---------------------------------------------------
    auto* prob = app.add_subcommand("prob", "disjointness probability or bound, log10");
    double prob_n = 0;
    std::string prob_form = "exact";
    uint64_t prob_k1 = 0, prob_k2 = 0;
    prob->add_option("--n", prob_n, "model size")->required();
    prob->add_option("--form", prob_form, "exact|product|exp")
        ->check(CLI::IsMember({"exact", "product", "exp"}));
    auto* k1_opt = prob->add_option("--k1", prob_k1, "first subset size (exact form)");
    auto* k2_opt = prob->add_option("--k2", prob_k2, "second subset size (exact form)");
    prob->callback([&] {
        LogProb p = LogProb::one();
        if (prob_form == "exact") {
            if (k1_opt->count() != k2_opt->count())
                throw CLI::ValidationError("--k1 and --k2 must be given together");
            if (!(prob_n >= 0) || prob_n != std::floor(prob_n))
                throw CLI::ValidationError("--n must be a nonnegative integer for exact form");
            const uint64_t n = static_cast<uint64_t>(prob_n);
            uint64_t k1 = prob_k1, k2 = prob_k2;
            if (k1_opt->count() == 0) k1 = k2 = asymptotic_k(prob_n);
            p = exact_disjoint_prob(n, k1, k2);
        } else {
            if (k1_opt->count() > 0 || k2_opt->count() > 0)
                throw CLI::ValidationError("--k1/--k2 apply to the exact form only");
            p = disjointness_bound(
                prob_n, prob_form == "product" ? BoundForm::product : BoundForm::exponential);
        }
        out << "log10\n" << fmt(p.log10()) << "\n";
    });

    // ---- tail ---------------------------------------------------
    auto* tail = app.add_subcommand("tail", "log-space tail sum of the exponential bound");
    uint64_t tail_from = 0;
    double tail_eps = 1e-9;
    tail->add_option("--from", tail_from, "first summed index")->required();
    tail->add_option("--rel-eps", tail_eps, "relative truncation tolerance (default 1e-9)");
    tail->callback([&] {
        const TailSum ts = tail_sum(tail_from, tail_eps);
        out << "log10_sum,terms_used,truncation_bound_log10\n"
            << fmt(ts.ln_sum / std::numbers::ln10) << "," << ts.terms_used << ","
            << fmt(ts.truncation_bound_ln / std::numbers::ln10) << "\n";
    });

    // ---- alpha --------------------------------------------------
    auto* alpha = app.add_subcommand("alpha", "root of the exponent-sharpening equation");
    double alpha_n = 0;
    alpha->add_option("--n", alpha_n, "verified threshold N")->required();
    alpha->callback([&] {
        const AlphaSolution sol = alpha_solve(alpha_n);
        const LogProb bound = LogProb::from_ln(-std::exp(sol.alpha * std::log(alpha_n)));
        out << "alpha,residual,alpha_closed_form,tail_bound_log10\n"
            << fmt(sol.alpha) << "," << fmt(sol.residual) << "," << fmt(sol.alpha_closed_form)
            << "," << fmt(bound.log10()) << "\n";
    });

    // ---- crossover ----------------------------------------------
    auto* cross = app.add_subcommand("crossover",
                                     "first n from which n/ln^2 n stays above sqrt(n) + ln(2 sqrt n)");
    uint64_t cross_limit = 0;
    cross->add_option("--limit", cross_limit, "scan upper bound")->required();
    cross->callback([&] { out << "n0\n" << inequality_crossover(cross_limit) << "\n"; });

    // ---- mc -----------------------------------------------------
    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the disjointness probability");
    uint64_t mc_n = 0, mc_k1 = 0, mc_k2 = 0, mc_trials = 0, mc_seed = 0;
    unsigned mc_jobs = 1;
    mc->add_option("--n", mc_n, "universe size")->required();
    mc->add_option("--k1", mc_k1, "first subset size")->required();
    mc->add_option("--k2", mc_k2, "second subset size")->required();
    mc->add_option("--trials", mc_trials, "number of sampled pairs")->required();
    mc->add_option("--seed", mc_seed, "master seed");
    mc->add_option("--jobs", mc_jobs, "parallel shards");
    mc->callback([&] {
        const McEstimate est = mc_disjoint(mc_n, mc_k1, mc_k2, mc_trials, mc_seed, mc_jobs);
        const LogProb exact = exact_disjoint_prob(mc_n, mc_k1, mc_k2);
        out << "p_hat,stderr,exact_log10\n"
            << fmt(est.p_hat) << "," << fmt(est.std_err) << "," << fmt(exact.log10()) << "\n";
    });

    // ---- paper-table --------------------------------------------
    auto* pt = app.add_subcommand("paper-table",
                                  "reference table of bound magnitudes with pass/fail");
    pt->callback([&] {
        out << "quantity,paper_value,computed_log10,pass\n";
        for (const PaperTableRow& r : paper_table_rows())
            out << r.quantity << "," << r.paper_value << "," << fmt(r.computed) << ","
                << (r.pass ? "true" : "false") << "\n";
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace goldbach
