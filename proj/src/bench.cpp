#include "clout/bench.hpp"

#include <chrono>
#include <cstdio>
#include <future>
#include <random>

#include "clout/exact.hpp"
#include "clout/json_util.hpp"
#include "clout/local_search.hpp"
#include "clout/random_instance.hpp"

namespace clout {

namespace {

int draw_between(std::mt19937_64& rng, int lo, int hi) {
    if (lo >= hi) return lo;
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

BenchRow run_row(const BenchConfig& config, int index) {
    BenchRow row;
    row.row_seed = mix_seed(config.seed, static_cast<std::uint64_t>(index));
    std::mt19937_64 rng(row.row_seed);

    RandomInstanceSpec spec;
    spec.kind = RandomInstanceSpec::Kind::KCluster;
    spec.dim = config.dim;
    spec.n = draw_between(rng, config.n_min, config.n_max);
    spec.m = draw_between(rng, std::min(config.m_min, spec.n), std::min(config.m_max, spec.n));
    spec.k = draw_between(rng, std::min(config.k_min, spec.m), std::min(config.k_max, spec.m));
    spec.z = draw_between(rng, config.z_min, std::min(config.z_max, spec.n - 1));
    spec.q = config.qs[rng() % config.qs.size()];
    spec.epsilon = config.instance_epsilon;

    const Instance inst = random_instance(spec, rng());
    row.n = spec.n;
    row.m = spec.m;
    row.k = spec.k;
    row.z = spec.z;
    row.q = spec.q;
    row.rho = config.rho;

    SearchConfig search;
    search.rho = config.rho;
    search.epsilon_stop = config.epsilon_stop;
    search.max_iterations = config.max_iterations;

    const auto t0 = std::chrono::steady_clock::now();
    const SearchTrace trace = local_search(inst, search);
    const auto t1 = std::chrono::steady_clock::now();

    row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.search_cost = trace.final.cost();
    row.iterations = static_cast<long>(trace.steps.size());
    row.iteration_bound_ok =
        trace_within_iteration_bound(trace, config.epsilon_stop, inst.num_centers());

    try {
        const ExactResult exact = solve_exact(inst, 0, config.oracle_cap);
        row.exact_cost = exact.cost;
        if (exact.cost > 0.0) row.ratio = row.search_cost / exact.cost;
        else row.ratio = row.search_cost <= kAbsTol ? 1.0 : std::optional<double>{};
    } catch (const BudgetError&) {
        // leave the comparison columns empty
    }
    return row;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
    if (config.count < 1) throw ValidationError("count", "need at least one row");
    if (config.qs.empty()) throw ValidationError("q", "need at least one exponent");
    if (config.threads < 1) throw ValidationError("threads", "must be positive");

    BenchReport report;
    report.rows.resize(static_cast<std::size_t>(config.count));

    if (config.threads == 1) {
        for (int i = 0; i < config.count; ++i)
            report.rows[static_cast<std::size_t>(i)] = run_row(config, i);
    } else {
        // Rows are independent; fan out in deterministic order.
        std::vector<std::future<BenchRow>> futures;
        futures.reserve(static_cast<std::size_t>(config.count));
        for (int i = 0; i < config.count; ++i)
            futures.push_back(std::async(std::launch::async, [&config, i] {
                return run_row(config, i);
            }));
        for (int i = 0; i < config.count; ++i)
            report.rows[static_cast<std::size_t>(i)] = futures[static_cast<std::size_t>(i)].get();
    }

    double sum = 0.0;
    double mx = 0.0;
    int with_ratio = 0;
    for (const auto& row : report.rows)
        if (row.ratio) {
            sum += *row.ratio;
            mx = std::max(mx, *row.ratio);
            ++with_ratio;
        }
    if (with_ratio > 0) {
        report.mean_ratio = sum / with_ratio;
        report.max_ratio = mx;
    }
    return report;
}

std::string bench_to_json(const BenchReport& report) {
    nlohmann::json doc = nlohmann::json::object();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r = nlohmann::json::object();
        r["seed"] = row.row_seed;
        r["n"] = row.n;
        r["m"] = row.m;
        r["k"] = row.k;
        r["z"] = row.z;
        r["q"] = row.q;
        r["rho"] = row.rho;
        r["search_cost"] = row.search_cost;
        if (row.exact_cost) r["exact_cost"] = *row.exact_cost;
        if (row.ratio) r["ratio"] = *row.ratio;
        r["iterations"] = row.iterations;
        r["wall_ms"] = row.wall_ms;
        r["iteration_bound_ok"] = row.iteration_bound_ok;
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    if (report.mean_ratio) doc["mean_ratio"] = *report.mean_ratio;
    if (report.max_ratio) doc["max_ratio"] = *report.max_ratio;
    return canonical_dump(doc);
}

std::string bench_to_csv(const BenchReport& report) {
    std::string out =
        "seed,n,m,k,z,q,rho,search_cost,exact_cost,ratio,iterations,wall_ms,iteration_bound_ok\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.row_seed) + "," + std::to_string(row.n) + "," +
               std::to_string(row.m) + "," + std::to_string(row.k) + "," + std::to_string(row.z) +
               "," + format_double(row.q) + "," + std::to_string(row.rho) + "," +
               format_double(row.search_cost) + ",";
        out += row.exact_cost ? format_double(*row.exact_cost) : std::string();
        out += ",";
        out += row.ratio ? format_double(*row.ratio) : std::string();
        out += "," + std::to_string(row.iterations) + "," + format_double(row.wall_ms) + "," +
               (row.iteration_bound_ok ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace clout
