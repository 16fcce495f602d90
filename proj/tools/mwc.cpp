#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mwc/batch.hpp"
#include "mwc/config.hpp"
#include "mwc/exact_oracle.hpp"
#include "mwc/graph.hpp"
#include "mwc/param_space.hpp"
#include "mwc/search.hpp"
#include "mwc/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitPartialFailure = 3;

struct ConfigCli {
    std::string config_file;
    std::string preset_name;
    // Parameter overrides, flag names as in the configuration space.
    std::optional<bool> perform_BMS;
    std::optional<int> bms_num;
    std::optional<int> breaking_ties;
    std::optional<int> init_construction;
    std::optional<int> drop_vertex;
    std::optional<double> randomdrop_prob;
    std::optional<bool> perform_restart;
    std::optional<double> restart_prob;
    std::optional<bool> perform_randomwalk;
    std::optional<double> randomwalk_prob;
    std::optional<int> tabu_type;
    std::optional<int> tabu_tenure;
};

void add_config_options(CLI::App* cmd, ConfigCli& c) {
    cmd->add_option("--config", c.config_file, "configuration JSON file");
    cmd->add_option("--preset", c.preset_name,
                    "configuration preset (default, bhoslib, dimacs_mann, dimacs_other, kes, ref)");
    cmd->add_option("--perform_BMS", c.perform_BMS);
    cmd->add_option("--bms_num", c.bms_num);
    cmd->add_option("--breaking_ties", c.breaking_ties);
    cmd->add_option("--init_construction", c.init_construction);
    cmd->add_option("--drop_vertex", c.drop_vertex);
    cmd->add_option("--randomdrop_prob", c.randomdrop_prob);
    cmd->add_option("--perform_restart", c.perform_restart);
    cmd->add_option("--restart_prob", c.restart_prob);
    cmd->add_option("--perform_randomwalk", c.perform_randomwalk);
    cmd->add_option("--randomwalk_prob", c.randomwalk_prob);
    cmd->add_option("--tabu_type", c.tabu_type);
    cmd->add_option("--tabu_tenure", c.tabu_tenure);
}

mwc::Configuration resolve_config(const ConfigCli& c) {
    if (!c.config_file.empty() && !c.preset_name.empty())
        throw std::runtime_error("--config and --preset are mutually exclusive");
    mwc::Configuration cfg;
    if (!c.config_file.empty())
        cfg = mwc::config_from_json_file(c.config_file);
    else if (!c.preset_name.empty())
        cfg = mwc::preset(c.preset_name);
    if (c.perform_BMS) cfg.perform_BMS = *c.perform_BMS;
    if (c.bms_num) cfg.bms_num = *c.bms_num;
    if (c.breaking_ties) cfg.breaking_ties = *c.breaking_ties;
    if (c.init_construction) cfg.init_construction = *c.init_construction;
    if (c.drop_vertex) cfg.drop_vertex = *c.drop_vertex;
    if (c.randomdrop_prob) cfg.randomdrop_prob = *c.randomdrop_prob;
    if (c.perform_restart) cfg.perform_restart = *c.perform_restart;
    if (c.restart_prob) cfg.restart_prob = *c.restart_prob;
    if (c.perform_randomwalk) cfg.perform_randomwalk = *c.perform_randomwalk;
    if (c.randomwalk_prob) cfg.randomwalk_prob = *c.randomwalk_prob;
    if (c.tabu_type) cfg.tabu_type = *c.tabu_type;
    if (c.tabu_tenure) cfg.tabu_tenure = *c.tabu_tenure;

    auto errors = mwc::validate(cfg);
    if (!errors.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw std::runtime_error(msg);
    }
    return cfg;
}

mwc::WeightMode parse_weight_mode(const std::string& s) {
    if (s == "explicit") return mwc::WeightMode::Explicit;
    if (s == "default") return mwc::WeightMode::ForceDefault;
    throw std::runtime_error("--weights must be 'default' or 'explicit'");
}

bool parse_seed_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(s);
            return true;
        }
        lo = std::stoull(s.substr(0, dots));
        hi = std::stoull(s.substr(dots + 2));
        return lo <= hi;
    } catch (...) {
        return false;
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mwc - stochastic local search for the maximum vertex weight clique problem"};
    app.require_subcommand(1);

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "run the solver once on one instance");
    std::string solve_instance;
    std::uint64_t solve_seed = 1;
    double solve_cutoff = 10.0;
    std::optional<std::uint64_t> solve_steps;
    std::optional<mwc::Weight> solve_target;
    std::string solve_weights = "explicit";
    bool solve_wall = false;
    ConfigCli solve_cfg;
    solve->add_option("instance", solve_instance, "DIMACS .clq instance")->required();
    solve->add_option("--seed", solve_seed, "RNG seed");
    solve->add_option("--cutoff", solve_cutoff, "CPU-seconds cutoff");
    solve->add_option("--steps", solve_steps, "step cutoff; replaces --cutoff, zeroes reported times");
    solve->add_option("--target", solve_target, "stop early once this weight is reached");
    solve->add_option("--weights", solve_weights, "default | explicit");
    solve->add_flag("--wall-clock", solve_wall, "measure wall-clock instead of CPU time");
    add_config_options(solve, solve_cfg);

    // ---- bench ----
    auto* bench = app.add_subcommand("bench", "batch of seeded runs with aggregate statistics");
    std::string bench_list;
    std::string bench_seeds = "1..10";
    int bench_jobs = 1;
    double bench_cutoff = 10.0;
    std::optional<std::uint64_t> bench_steps;
    std::string bench_out;
    std::string bench_weights = "explicit";
    bool bench_wall = false;
    ConfigCli bench_cfg;
    bench->add_option("instance-list", bench_list, "file: one `path [target-weight]` per line")->required();
    bench->add_option("--seeds", bench_seeds, "seed range A..B (inclusive)");
    bench->add_option("--jobs", bench_jobs, "concurrent runs");
    bench->add_option("--cutoff", bench_cutoff, "CPU-seconds cutoff per run");
    bench->add_option("--steps", bench_steps, "step cutoff per run; replaces --cutoff");
    bench->add_option("--out", bench_out, "output base; writes <base>.csv and <base>.json")->required();
    bench->add_option("--weights", bench_weights, "default | explicit");
    bench->add_flag("--wall-clock", bench_wall, "measure wall-clock instead of CPU time");
    add_config_options(bench, bench_cfg);

    // ---- configure ----
    auto* configure = app.add_subcommand("configure", "export the parameter space or random-search it");
    std::string space_out;
    std::string space_format = "pcs";
    std::string train_list;
    int budget = 50;
    double conf_cutoff = 1.0;
    std::optional<std::uint64_t> conf_steps;
    std::uint64_t conf_seed = 1;
    int conf_jobs = 1;
    std::string conf_out;
    std::string conf_weights = "explicit";
    configure->add_option("--space-out", space_out, "write the parameter space and exit");
    configure->add_option("--format", space_format, "space format: pcs | json");
    configure->add_option("--train", train_list, "training instance list");
    configure->add_option("--budget", budget, "sampled configurations");
    configure->add_option("--cutoff", conf_cutoff, "CPU-seconds per evaluation run");
    configure->add_option("--steps", conf_steps, "step cutoff per evaluation run");
    configure->add_option("--seed", conf_seed, "sampling seed");
    configure->add_option("--jobs", conf_jobs, "concurrent evaluation runs");
    configure->add_option("--out", conf_out, "write the winning configuration JSON here");
    configure->add_option("--weights", conf_weights, "default | explicit");

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "exact optimum for a small instance");
    std::string oracle_instance;
    std::string oracle_weights = "explicit";
    oracle->add_option("instance", oracle_instance, "DIMACS .clq instance")->required();
    oracle->add_option("--weights", oracle_weights, "default | explicit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            const auto cfg = resolve_config(solve_cfg);
            auto graph = mwc::parse_dimacs_file(solve_instance);
            if (parse_weight_mode(solve_weights) == mwc::WeightMode::ForceDefault)
                graph = mwc::with_default_weights(graph);
            mwc::SolveLimits limits;
            limits.cutoff_seconds = solve_cutoff;
            limits.step_budget = solve_steps;
            limits.target = solve_target;
            limits.wall_clock = solve_wall;
            mwc::Searcher searcher(graph, cfg, solve_seed);
            const auto r = searcher.solve(limits);
            std::printf("instance: %s\n", solve_instance.c_str());
            std::printf("seed: %llu\n", static_cast<unsigned long long>(solve_seed));
            std::printf("best_weight: %lld\n", static_cast<long long>(r.best_weight));
            std::printf("time_to_best: %.6f\n", r.time_to_best);
            std::printf("elapsed: %.6f\n", r.elapsed);
            std::printf("steps: %llu\n", static_cast<unsigned long long>(r.steps));
            std::printf("restarts: %llu\n", static_cast<unsigned long long>(r.restarts));
            if (solve_target)
                std::printf("success: %d\n", r.best_weight >= *solve_target ? 1 : 0);
            std::printf("clique:");
            for (auto v : r.best_clique) std::printf(" %d", v + 1);
            std::printf("\n");
            return kExitOk;
        }

        if (*bench) {
            mwc::BatchOptions opts;
            opts.config = resolve_config(bench_cfg);
            if (!parse_seed_range(bench_seeds, opts.seed_begin, opts.seed_end))
                throw std::runtime_error("bad --seeds range: " + bench_seeds);
            opts.cutoff = bench_cutoff;
            opts.step_budget = bench_steps;
            opts.jobs = bench_jobs;
            opts.wall_clock = bench_wall;
            opts.weights = parse_weight_mode(bench_weights);
            const auto units = mwc::read_instance_list(bench_list);
            const auto res = mwc::run_batch(units, opts);
            for (const auto& e : res.errors) std::fprintf(stderr, "error: %s\n", e.c_str());

            std::string base = bench_out;
            if (base.size() > 4 && (base.ends_with(".csv") || base.ends_with(".json")))
                base = base.substr(0, base.rfind('.'));
            write_file(base + ".csv", mwc::runs_to_csv(res.runs));
            write_file(base + ".json", mwc::batch_to_json(res.runs, res.stats, opts.cutoff));

            std::printf("runs: %zu  suc: %d  success_rate: %.4f  t_avg: %.6f\n", res.runs.size(),
                        res.stats.suc_count, res.stats.success_rate, res.stats.t_avg);
            std::printf("avgPAR10_run: %.6f  avgPAR10_instance: %.6f\n", res.stats.avg_par10_run,
                        res.stats.avg_par10_instance);
            return res.errors.empty() ? kExitOk : kExitPartialFailure;
        }

        if (*configure) {
            if (!space_out.empty()) {
                const auto& space = mwc::configuration_space();
                if (space_format == "pcs")
                    write_file(space_out, mwc::export_pcs(space));
                else if (space_format == "json")
                    write_file(space_out, mwc::export_space_json(space));
                else
                    throw std::runtime_error("--format must be pcs or json");
                std::printf("wrote %s (%s)\n", space_out.c_str(), space_format.c_str());
                return kExitOk;
            }
            if (train_list.empty())
                throw std::runtime_error("configure needs --space-out or --train");
            mwc::ConfigureOptions copts;
            copts.budget = budget;
            copts.cutoff = conf_cutoff;
            copts.step_budget = conf_steps;
            copts.seed = conf_seed;
            copts.jobs = conf_jobs;
            copts.weights = parse_weight_mode(conf_weights);
            const auto training = mwc::read_instance_list(train_list);
            const auto res = mwc::random_search_configure(mwc::configuration_space(), training, copts);
            std::printf("best mean NewSQ: %.6f over %zu samples\n", res.best_mean_new_sq,
                        res.sample_scores.size());
            const std::string json = mwc::config_to_json(res.best);
            if (conf_out.empty())
                std::printf("%s", json.c_str());
            else
                write_file(conf_out, json);
            return kExitOk;
        }

        if (*oracle) {
            auto graph = mwc::parse_dimacs_file(oracle_instance);
            if (parse_weight_mode(oracle_weights) == mwc::WeightMode::ForceDefault)
                graph = mwc::with_default_weights(graph);
            const auto r = mwc::exact_oracle(graph);
            std::printf("optimal_weight: %lld\n", static_cast<long long>(r.weight));
            std::printf("clique:");
            for (auto v : r.clique) std::printf(" %d", v + 1);
            std::printf("\n");
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
    return kExitUsage;
}
