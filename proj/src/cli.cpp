#include "clout/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "clout/bench.hpp"
#include "clout/exact.hpp"
#include "clout/gap.hpp"
#include "clout/json_util.hpp"
#include "clout/local_search.hpp"
#include "clout/pairing.hpp"
#include "clout/random_instance.hpp"

namespace clout {

namespace {

std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("CLOUT_OUT_DIR");
    if (dir == nullptr || *dir == '\0' || path.empty()) return path;
    const std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    return (std::filesystem::path(dir) / p).string();
}

void write_artifact(const std::string& path, const std::string& content) {
    write_text_file(resolve_out(path), content);
}

int cmd_solve(const std::string& instance_path, int rho, double epsilon, const std::string& pivot,
              const std::string& seed_policy, std::uint64_t seed,
              const std::vector<CenterId>& explicit_seed, long max_iters,
              const std::string& out_path) {
    const Instance inst = load_instance_file(instance_path);

    SearchConfig config;
    config.rho = rho;
    config.epsilon_stop = epsilon;
    config.max_iterations = max_iters;
    if (pivot == "first") config.pivot = PivotRule::FirstImprovement;
    else if (pivot == "best") config.pivot = PivotRule::BestImprovement;
    else throw ValidationError("--pivot", "expected first or best");

    if (seed_policy == "greedy") config.seed.kind = SeedKind::GreedyFarthest;
    else if (seed_policy == "random") config.seed.kind = SeedKind::RandomSubset;
    else if (seed_policy == "explicit") config.seed.kind = SeedKind::Explicit;
    else throw ValidationError("--seed-policy", "expected greedy, random, or explicit");
    config.seed.seed = seed;
    config.seed.explicit_centers = explicit_seed;

    const SearchTrace trace = local_search(inst, config);
    if (!out_path.empty()) save_trace_file(trace, resolve_out(out_path));

    std::printf("cost %.17g after %zu swaps (%s)\n", trace.final.cost(), trace.steps.size(),
                trace.termination == Termination::LocalOptimum ? "local optimum" : "iteration cap");
    return 0;
}

int cmd_exact(const std::string& instance_path, int size_cap, std::uint64_t max_subsets,
              const std::string& out_path) {
    const Instance inst = load_instance_file(instance_path);
    const ExactResult result = solve_exact(inst, size_cap, max_subsets);
    const Solution sol = evaluate(inst, result.open);
    if (!out_path.empty()) save_solution_file(sol, resolve_out(out_path));
    std::printf("optimum %.17g over %llu subsets\n", result.cost,
                static_cast<unsigned long long>(result.subsets_examined));
    return 0;
}

int cmd_gap_gen(const std::string& family, int rho, int z, int k, double beta, double gamma,
                int n, double q, const std::string& out_path, const std::string& local_path,
                const std::string& opt_path) {
    GapInstance gap;
    if (family == "ufl") {
        UflGapParams params;
        params.rho = rho;
        params.z = z;
        gap = make_ufl_gap(params);
    } else if (family == "kcluster") {
        KClusterGapParams params;
        params.k = k;
        params.z = z;
        params.beta = beta;
        params.gamma = gamma;
        params.n = n;
        params.q = q;
        gap = make_kcluster_gap(params);
    } else {
        throw ValidationError("--family", "expected ufl or kcluster");
    }

    save_instance_file(gap.instance, resolve_out(out_path));
    save_solution_file(evaluate(gap.instance, gap.stated_local), resolve_out(local_path));
    save_solution_file(evaluate(gap.instance, gap.stated_opt), resolve_out(opt_path));
    std::printf("wrote %s, %s, %s\n", out_path.c_str(), local_path.c_str(), opt_path.c_str());
    return 0;
}

int cmd_gap_verify(const std::string& instance_path, const std::string& local_path,
                   const std::string& opt_path, int rho, bool skip_oracle,
                   const std::string& out_path) {
    const Instance inst = load_instance_file(instance_path);
    const auto stated_local = open_set_from_solution_file(local_path);
    const auto stated_opt = open_set_from_solution_file(opt_path);

    const GapReport report = verify_gap(inst, stated_local, stated_opt, rho, !skip_oracle);

    nlohmann::json doc = nlohmann::json::object();
    doc["local_certified"] = report.local_certified;
    doc["local_cost"] = report.local_cost;
    doc["opt_cost"] = report.opt_cost;
    doc["ratio"] = report.ratio;
    if (report.counterexample) {
        doc["counterexample"] = nlohmann::json::object();
        doc["counterexample"]["add"] = report.counterexample->add;
        doc["counterexample"]["drop"] = report.counterexample->drop;
    }
    if (report.opt_confirmed) doc["opt_confirmed"] = *report.opt_confirmed;
    if (!out_path.empty()) write_artifact(out_path, canonical_dump(doc));

    std::printf("ratio %.17g, local %s", report.ratio,
                report.local_certified ? "certified" : "refuted");
    if (report.counterexample)
        std::printf(" by %s", format_move(*report.counterexample).c_str());
    if (report.opt_confirmed)
        std::printf(", alternative %s", *report.opt_confirmed ? "confirmed optimal" : "not optimal");
    std::printf("\n");

    const bool ok = report.local_certified && report.opt_confirmed.value_or(true);
    return ok ? 0 : 2;
}

int cmd_pair_verify(const std::string& instance_path, int trials, int cap, int alpha,
                    const std::string& policy, std::uint64_t seed, const std::string& out_path) {
    const Instance inst = load_instance_file(instance_path);
    if (trials < 1) throw ValidationError("--trials", "must be positive");
    if (cap < 1) throw ValidationError("--cap", "must be positive");

    const int m = inst.num_centers();
    int failures = 0;
    nlohmann::json trial_rows = nlohmann::json::array();

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        auto draw_open = [&]() {
            const int budget = inst.open_budget();
            const int size = inst.is_kcluster()
                                 ? budget
                                 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m));
            std::vector<CenterId> ids(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i;
            for (int i = 0; i < size; ++i) {
                const std::size_t r =
                    static_cast<std::size_t>(i) + rng() % static_cast<std::uint64_t>(m - i);
                std::swap(ids[static_cast<std::size_t>(i)], ids[r]);
            }
            std::vector<CenterId> open(ids.begin(), ids.begin() + size);
            std::sort(open.begin(), open.end());
            return open;
        };

        const Solution local = evaluate(inst, draw_open());
        const Solution global = evaluate(inst, draw_open());

        const CenterPartition partition =
            policy == "singleton" ? singleton_partition(local, global)
                                  : random_partition(local, global, cap, rng());
        const int effective_alpha =
            alpha > 0 ? alpha
                      : (inst.is_kcluster() ? default_alpha_kcluster(cap)
                                            : default_alpha_ufl(cap, 0.5));

        const HarnessReport report =
            harness_report(inst, local, global, partition, effective_alpha, cap);
        if (!report.all_ok()) {
            ++failures;
            nlohmann::json row = nlohmann::json::object();
            row["trial"] = t;
            row["failures"] = report.failures;
            trial_rows.push_back(std::move(row));
        }
    }

    nlohmann::json doc = nlohmann::json::object();
    doc["trials"] = trials;
    doc["failures"] = failures;
    doc["failed_trials"] = std::move(trial_rows);
    if (!out_path.empty()) write_artifact(out_path, canonical_dump(doc));

    std::printf("%d/%d trials clean\n", trials - failures, trials);
    return failures == 0 ? 0 : 2;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path,
              const std::string& csv_path) {
    const BenchReport report = run_bench(config);
    if (!out_path.empty()) write_artifact(out_path, bench_to_json(report));
    if (!csv_path.empty()) write_artifact(csv_path, bench_to_csv(report));

    int with_ratio = 0;
    for (const auto& row : report.rows)
        if (row.ratio) ++with_ratio;
    std::printf("%zu rows", report.rows.size());
    if (report.mean_ratio)
        std::printf(", ratio mean %.6f max %.6f over %d rows", *report.mean_ratio,
                    *report.max_ratio, with_ratio);
    std::printf("\n");
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"clustering with outliers: swap search, brute force, gap lab"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for bench rows");

    // solve
    auto* solve = app.add_subcommand("solve", "run the swap search on an instance");
    std::string solve_instance;
    int solve_rho = 1;
    double solve_epsilon = 1e-6;
    std::string solve_pivot = "first";
    std::string solve_seed_policy = "greedy";
    std::uint64_t solve_seed = 0;
    std::vector<CenterId> solve_explicit;
    long solve_max_iters = 100000;
    std::string solve_out;
    solve->add_option("--instance", solve_instance, "instance JSON")->required();
    solve->add_option("--rho", solve_rho, "max centers swapped per side");
    solve->add_option("--epsilon", solve_epsilon, "relative improvement margin");
    solve->add_option("--pivot", solve_pivot, "first or best");
    solve->add_option("--seed-policy", solve_seed_policy, "greedy, random, or explicit");
    solve->add_option("--seed", solve_seed, "rng seed for the random policy");
    solve->add_option("--explicit-seed", solve_explicit, "center ids for the explicit policy");
    solve->add_option("--max-iters", solve_max_iters, "iteration cap");
    solve->add_option("--out", solve_out, "trace JSON path");

    // exact
    auto* exact = app.add_subcommand("exact", "brute-force optimum");
    std::string exact_instance;
    int exact_cap = 0;
    std::uint64_t exact_max = kDefaultSubsetBudget;
    std::string exact_out;
    exact->add_option("--instance", exact_instance, "instance JSON")->required();
    exact->add_option("--size-cap", exact_cap, "max open centers for facility search");
    exact->add_option("--max-subsets", exact_max, "enumeration budget");
    exact->add_option("--out", exact_out, "solution JSON path");

    // gap-gen
    auto* gap_gen = app.add_subcommand("gap-gen", "generate a stuck-search instance");
    std::string gg_family = "ufl";
    int gg_rho = 1;
    int gg_z = 2;
    int gg_k = 3;
    double gg_beta = 1.0;
    double gg_gamma = 2.0;
    int gg_n = 0;
    double gg_q = 1.0;
    std::string gg_out = "instance.json";
    std::string gg_local = "local.json";
    std::string gg_opt = "opt.json";
    gap_gen->add_option("--family", gg_family, "ufl or kcluster")->required();
    gap_gen->add_option("--rho", gg_rho, "swap size the instance defeats (ufl)");
    gap_gen->add_option("--z", gg_z, "outlier count");
    gap_gen->add_option("--k", gg_k, "cluster count (kcluster)");
    gap_gen->add_option("--beta", gg_beta, "inner ring cost (kcluster)");
    gap_gen->add_option("--gamma", gg_gamma, "outer ring cost (kcluster)");
    gap_gen->add_option("--n", gg_n, "total points, 0 = default (kcluster)");
    gap_gen->add_option("--q", gg_q, "cost exponent (kcluster)");
    gap_gen->add_option("--out", gg_out, "instance path");
    gap_gen->add_option("--local-out", gg_local, "stuck solution path");
    gap_gen->add_option("--opt-out", gg_opt, "alternative solution path");

    // gap-verify
    auto* gap_verify = app.add_subcommand("gap-verify", "certify a stated local optimum");
    std::string gv_instance;
    std::string gv_local;
    std::string gv_opt;
    int gv_rho = 1;
    bool gv_no_oracle = false;
    std::string gv_out;
    gap_verify->add_option("--instance", gv_instance, "instance JSON")->required();
    gap_verify->add_option("--local", gv_local, "stated local solution")->required();
    gap_verify->add_option("--opt", gv_opt, "stated alternative")->required();
    gap_verify->add_option("--rho", gv_rho, "swap size to certify against");
    gap_verify->add_flag("--no-oracle", gv_no_oracle, "skip the brute-force confirmation");
    gap_verify->add_option("--out", gv_out, "report JSON path");

    // pair-verify
    auto* pair_verify = app.add_subcommand("pair-verify", "audit the outlier pairing machinery");
    std::string pv_instance;
    int pv_trials = 100;
    int pv_cap = 2;
    int pv_alpha = 0;
    std::string pv_policy = "random";
    std::uint64_t pv_seed = 1;
    std::string pv_out;
    pair_verify->add_option("--instance", pv_instance, "instance JSON")->required();
    pair_verify->add_option("--trials", pv_trials, "random solution pairs to audit");
    pair_verify->add_option("--cap", pv_cap, "per-side part size cap");
    pair_verify->add_option("--alpha", pv_alpha, "edges per group block, 0 = default");
    pair_verify->add_option("--policy", pv_policy, "singleton or random partitions");
    pair_verify->add_option("--seed", pv_seed, "rng seed");
    pair_verify->add_option("--out", pv_out, "report JSON path");

    // bench
    auto* bench = app.add_subcommand("bench", "random sweep against brute force");
    BenchConfig bc;
    std::string bench_out;
    std::string bench_csv;
    bench->add_option("--count", bc.count, "rows");
    bench->add_option("--seed", bc.seed, "sweep seed");
    bench->add_option("--n-min", bc.n_min, "");
    bench->add_option("--n-max", bc.n_max, "");
    bench->add_option("--m-min", bc.m_min, "");
    bench->add_option("--m-max", bc.m_max, "");
    bench->add_option("--k-min", bc.k_min, "");
    bench->add_option("--k-max", bc.k_max, "");
    bench->add_option("--z-min", bc.z_min, "");
    bench->add_option("--z-max", bc.z_max, "");
    bench->add_option("--q", bc.qs, "cost exponents to mix");
    bench->add_option("--instance-epsilon", bc.instance_epsilon, "cluster budget slack");
    bench->add_option("--rho", bc.rho, "swap size");
    bench->add_option("--epsilon-stop", bc.epsilon_stop, "improvement margin");
    bench->add_option("--max-iters", bc.max_iterations, "iteration cap");
    bench->add_option("--oracle-cap", bc.oracle_cap, "subset budget for brute force");
    bench->add_option("--out", bench_out, "report JSON path");
    bench->add_option("--csv", bench_csv, "report CSV path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_rho, solve_epsilon, solve_pivot,
                             solve_seed_policy, solve_seed, solve_explicit, solve_max_iters,
                             solve_out);
        if (exact->parsed()) return cmd_exact(exact_instance, exact_cap, exact_max, exact_out);
        if (gap_gen->parsed())
            return cmd_gap_gen(gg_family, gg_rho, gg_z, gg_k, gg_beta, gg_gamma, gg_n, gg_q,
                               gg_out, gg_local, gg_opt);
        if (gap_verify->parsed())
            return cmd_gap_verify(gv_instance, gv_local, gv_opt, gv_rho, gv_no_oracle, gv_out);
        if (pair_verify->parsed())
            return cmd_pair_verify(pv_instance, pv_trials, pv_cap, pv_alpha, pv_policy, pv_seed,
                                   pv_out);
        if (bench->parsed()) {
            bc.threads = threads;
            return cmd_bench(bc, bench_out, bench_csv);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace clout
