// Acceptance suite: runs each numbered criterion at its stated tolerance and
// prints exactly one PASS/FAIL line per criterion. `--criterion N` runs one.
//
// Criterion 4 replays published benchmark results and needs the original
// instance files (not redistributable here); it looks for them under
// $MWC_INSTANCE_DIR, falling back to ./instances.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "mwc/batch.hpp"
#include "mwc/config.hpp"
#include "mwc/exact_oracle.hpp"
#include "mwc/graph.hpp"
#include "mwc/param_space.hpp"
#include "mwc/search.hpp"
#include "mwc/stats.hpp"
#include "support.hpp"

using namespace mwc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

// --- 1. solver vs exact oracle on random instances ---------------------------

Outcome criterion1() {
    Outcome out;
    Rng graph_rng(20240501);
    const int sizes[] = {12, 16, 20};
    const double probs[] = {0.3, 0.5, 0.8};

    int hits = 0, total = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = sizes[i % 3];
        const double p = probs[(i / 3) % 3];
        const auto g = test::random_graph(n, p, graph_rng);
        const auto opt = exact_oracle(g);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SolveLimits limits;
            limits.cutoff_seconds = 2.0;
            limits.target = opt.weight;
            Searcher s(g, preset("default"), seed);
            const auto r = s.solve(limits);
            if (r.best_weight > opt.weight) {
                out.fail("solver exceeded the exact optimum (scoring bug)");
                return out;
            }
            if (!test::is_clique(g, r.best_clique)) {
                out.fail("returned best clique is not a clique");
                return out;
            }
            ++total;
            if (r.best_weight == opt.weight) ++hits;
        }
    }
    const double rate = static_cast<double>(hits) / total;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d/%d optimal (%.1f%%, need >= 95%%)", hits, total, 100 * rate);
    out.detail = buf;
    if (rate < 0.95) out.fail("optimum rate below 95%");
    return out;
}

// --- 2. incremental structures vs from-scratch recomputation -----------------

Outcome criterion2() {
    Outcome out;
    Rng rng(777);
    for (int gi = 0; gi < 20; ++gi) {
        const int n = 10 + static_cast<int>(rng.below(41));  // <= 50
        const double p = 0.2 + 0.6 * rng.real01();
        const auto g = test::random_graph(n, p, rng);
        CliqueState st(g);
        for (int mv = 0; mv < 10000; ++mv) {
            if (!test::random_legal_move(st, rng)) break;
            std::vector<Vertex> members(st.members().begin(), st.members().end());
            std::sort(members.begin(), members.end());
            const auto brute = test::brute_sets(g, members);

            std::vector<Vertex> adds(st.addable().begin(), st.addable().end());
            std::sort(adds.begin(), adds.end());
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex u : st.swap_entries()) pairs.emplace_back(u, st.swap_partner(u));
            std::sort(pairs.begin(), pairs.end());

            bool scores_ok = st.weight() == brute.weight;
            for (Vertex v : adds) scores_ok = scores_ok && st.add_gain(v) == g.weight(v);
            for (auto [in, leave] : pairs)
                scores_ok = scores_ok && st.swap_gain(in) == g.weight(in) - g.weight(leave);
            for (Vertex v : members) scores_ok = scores_ok && st.drop_gain(v) == -g.weight(v);

            if (adds != brute.addable || pairs != brute.swap_pairs || !scores_ok) {
                out.fail("mismatch on graph " + std::to_string(gi) + " at move " + std::to_string(mv));
                return out;
            }
        }
    }
    out.detail = "20 graphs x 10^4 moves, exact match";
    return out;
}

// --- 3. prohibition semantics against an event log ---------------------------

Outcome criterion3() {
    Outcome out;
    Rng rng(424242);
    const int t1 = 7;

    {  // Table-driven single-rule checks.
        ProhibitionState p(4, ProhibitionMode::Scc, t1);
        for (Vertex v = 0; v < 4; ++v)
            if (p.is_forbidden(v, 0)) out.fail("SCC rule 1: fresh vertex forbidden");
        p.on_drop(2, 1);
        if (!p.is_forbidden(2, 1)) out.fail("SCC rule 3: drop must forbid");
        const std::vector<Vertex> nbrs = {2};
        p.on_add(0, nbrs, 2);
        if (p.is_forbidden(2, 2)) out.fail("SCC rule 2: neighbor add must lift");
        p.on_swap_out(2, 3, 3, rng);
        if (!p.is_forbidden(2, 3)) out.fail("SCC rule 4: swap-out must forbid");
    }
    {
        ProhibitionState p(2, ProhibitionMode::Tabu, t1);
        p.on_drop(0, 100);
        if (p.tabu_until(0) != 107) out.fail("tabu tt_drop != T1");
        if (!p.is_forbidden(0, 106)) out.fail("tabu: free before expiry");
        if (p.is_forbidden(0, 107)) out.fail("tabu: forbidden at expiry");
        for (int i = 0; i < 1000; ++i) {
            p.on_swap_out(1, 10, 0, rng);
            if (p.tabu_until(1) < t1 || p.tabu_until(1) > t1 + 9) {
                out.fail("tabu tt_swap outside [T1, T1+|V_swap|-1]");
                break;
            }
        }
    }
    {
        ProhibitionState p(2, ProhibitionMode::TabuCC, t1);
        p.on_drop(1, 10);
        const std::vector<Vertex> nbrs = {1};
        p.on_add(0, nbrs, 12);
        if (p.is_forbidden(1, 12)) out.fail("TabuCC: neighbor-lift on add failed");
    }

    // Event-log oracle over 10^3-move random traces, every mode.
    const auto g = test::random_graph(24, 0.5, rng);
    for (auto mode : {ProhibitionMode::Scc, ProhibitionMode::Tabu, ProhibitionMode::TabuCC}) {
        CliqueState st(g);
        ProhibitionState p(24, mode, t1);
        struct Removal {
            Step at = 0;
            int swap_count = -1;
            bool lifted = false;
        };
        std::map<Vertex, Removal> removal;
        for (int i = 0; i < 1000; ++i) {
            const int swaps_before = static_cast<int>(st.swap_entries().size());
            const auto mv = test::random_legal_move(st, rng);
            if (!mv) break;
            const Step now = st.step();
            switch (mv->kind) {
                case test::MoveKind::Add:
                    p.on_add(mv->v, g.neighbors(mv->v), now);
                    if (mode != ProhibitionMode::Tabu)
                        for (Vertex u : g.neighbors(mv->v))
                            if (removal.count(u)) removal[u].lifted = true;
                    break;
                case test::MoveKind::Drop:
                    p.on_drop(mv->v, now);
                    removal[mv->v] = {now, -1, false};
                    break;
                case test::MoveKind::Swap:
                    p.on_swap_out(mv->partner, swaps_before, now, rng);
                    removal[mv->partner] = {now, swaps_before, false};
                    break;
            }
            for (Vertex v = 0; v < 24 && out.pass; ++v) {
                if (st.contains(v)) continue;
                const bool forbidden = p.is_forbidden(v, now);
                if (!removal.count(v)) {
                    if (forbidden) out.fail("never-removed vertex forbidden");
                    continue;
                }
                const Removal& r = removal[v];
                if (mode == ProhibitionMode::Scc) {
                    if (forbidden == r.lifted) out.fail("SCC event-log mismatch");
                    continue;
                }
                if (mode == ProhibitionMode::TabuCC && r.lifted) continue;
                const Step lo = r.at + t1;
                const Step hi = r.at + t1 + (r.swap_count > 0 ? r.swap_count - 1 : 0);
                if (now < lo && !forbidden) out.fail("tenure expired early");
                if (now >= hi && forbidden) out.fail("tenure outlived its bound");
            }
            if (!out.pass) return out;
        }
    }
    out.detail = "SCC rules (1)-(4), tenure bounds, TabuCC lift over 10^3-move traces";
    return out;
}

// --- 4. published-result reproduction at desk scale --------------------------

std::string instance_dir() {
    if (const char* env = std::getenv("MWC_INSTANCE_DIR")) return env;
    return "instances";
}

Outcome criterion4() {
    Outcome out;
    struct Case {
        const char* file;
        const char* preset_name;
        double cutoff;
        Weight target;
        int need;  // successes required out of 10 seeded runs
    };
    const Case cases[] = {
        {"frb30-15-3.clq", "bhoslib", 60.0, 2995, 9},
        {"MANN_a27.clq", "dimacs_mann", 300.0, 12283, 9},
        {"c-fat500-10.clq", "dimacs_other", 60.0, 11586, 10},
        {"brock400_4.clq", "dimacs_other", 300.0, 3626, 8},
    };

    const std::string dir = instance_dir();
    for (const auto& c : cases) {
        const auto path = std::filesystem::path(dir) / c.file;
        if (!std::filesystem::exists(path)) {
            out.fail(std::string(c.file) + " not found under '" + dir +
                     "' (supply the original benchmark file; see README and tools/fetch_instances.sh)");
            continue;
        }
        BatchOptions opts;
        opts.config = preset(c.preset_name);
        opts.seed_begin = 1;
        opts.seed_end = 10;
        opts.cutoff = c.cutoff;
        opts.jobs = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
        std::vector<BatchUnit> units = {{path.string(), c.target}};
        const auto res = run_batch(units, opts);
        if (!res.errors.empty()) {
            out.fail(res.errors.front());
            continue;
        }
        int suc = 0;
        bool exceeded = false;
        for (const auto& r : res.runs) {
            if (r.best_weight > c.target) exceeded = true;
            if (r.best_weight >= c.target) ++suc;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s: %d/10 reached %lld (need %d, cutoff %.0fs)", c.file, suc,
                      static_cast<long long>(c.target), c.need, c.cutoff);
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += buf;
        if (exceeded) out.fail(std::string(c.file) + ": best weight EXCEEDED the known optimum");
        if (suc < c.need) out.fail(std::string(c.file) + ": too few successful runs");
    }
    return out;
}

// --- 5. determinism of per-run records under a step cutoff -------------------

Outcome criterion5() {
    Outcome out;
    Rng rng(99);
    const auto g = test::random_graph(40, 0.5, rng);
    const auto path = std::filesystem::temp_directory_path() / "mwc_acceptance_det.clq";
    {
        std::ofstream f(path);
        f << serialize_dimacs(g);
    }
    for (const char* name : {"default", "bhoslib", "kes"}) {
        BatchOptions opts;
        opts.config = preset(name);
        opts.seed_begin = 1;
        opts.seed_end = 3;
        opts.step_budget = 5000;
        std::vector<BatchUnit> units = {{path.string(), std::nullopt}};
        const auto a = run_batch(units, opts);
        const auto b = run_batch(units, opts);
        if (runs_to_csv(a.runs) != runs_to_csv(b.runs)) {
            out.fail(std::string("records differ for preset ") + name);
        }
    }
    std::filesystem::remove(path);
    if (out.pass) out.detail = "byte-identical records across repeated step-cutoff batches";
    return out;
}

// --- 6. configuration space fidelity ------------------------------------------

Outcome criterion6() {
    Outcome out;

    // Preset values against the published tables, full precision.
    struct Expect {
        const char* preset_name;
        const char* param;
        const char* value;  // decimal string as printed in the table
    };
    const Expect table[] = {
        {"default", "perform_BMS", "True"},
        {"default", "bms_num", "50"},
        {"default", "breaking_ties", "0"},
        {"default", "init_construction", "0"},
        {"default", "drop_vertex", "0"},
        {"default", "perform_restart", "False"},
        {"default", "perform_randomwalk", "True"},
        {"default", "randomwalk_prob", "1.0E-4"},
        {"default", "tabu_type", "1"},
        {"default", "tabu_tenure", "7"},
        {"bhoslib", "perform_BMS", "False"},
        {"bhoslib", "breaking_ties", "1"},
        {"bhoslib", "init_construction", "1"},
        {"bhoslib", "drop_vertex", "0"},
        {"bhoslib", "perform_restart", "True"},
        {"bhoslib", "perform_randomwalk", "True"},
        {"bhoslib", "restart_prob", "5.016696977394702E-5"},
        {"bhoslib", "randomwalk_prob", "0.09733547356349166"},
        {"bhoslib", "tabu_type", "1"},
        {"bhoslib", "tabu_tenure", "5"},
        {"dimacs_mann", "perform_BMS", "False"},
        {"dimacs_mann", "breaking_ties", "1"},
        {"dimacs_mann", "init_construction", "1"},
        {"dimacs_mann", "drop_vertex", "1"},
        {"dimacs_mann", "perform_restart", "False"},
        {"dimacs_mann", "perform_randomwalk", "True"},
        {"dimacs_mann", "randomdrop_prob", "0.1"},
        {"dimacs_mann", "randomwalk_prob", "0.0021339029487367554"},
        {"dimacs_mann", "tabu_type", "0"},
        {"dimacs_other", "perform_BMS", "False"},
        {"dimacs_other", "breaking_ties", "1"},
        {"dimacs_other", "init_construction", "0"},
        {"dimacs_other", "drop_vertex", "0"},
        {"dimacs_other", "perform_restart", "True"},
        {"dimacs_other", "perform_randomwalk", "True"},
        {"dimacs_other", "restart_prob", "3.459685410644107E-5"},
        {"dimacs_other", "randomwalk_prob", "0.00994485968433248"},
        {"dimacs_other", "tabu_type", "1"},
        {"dimacs_other", "tabu_tenure", "8"},
        {"kes", "perform_BMS", "True"},
        {"kes", "bms_num", "6"},
        {"kes", "breaking_ties", "1"},
        {"kes", "init_construction", "0"},
        {"kes", "drop_vertex", "2"},
        {"kes", "perform_restart", "True"},
        {"kes", "perform_randomwalk", "False"},
        {"kes", "restart_prob", "2.7775287025690946E-5"},
        {"kes", "tabu_type", "1"},
        {"kes", "tabu_tenure", "30"},
        {"ref", "perform_BMS", "True"},
        {"ref", "bms_num", "16"},
        {"ref", "breaking_ties", "1"},
        {"ref", "init_construction", "0"},
        {"ref", "drop_vertex", "1"},
        {"ref", "perform_restart", "True"},
        {"ref", "perform_randomwalk", "False"},
        {"ref", "randomdrop_prob", "0.4"},
        {"ref", "restart_prob", "9.44211698679448E-6"},
        {"ref", "tabu_type", "2"},
        {"ref", "tabu_tenure", "8"},
    };
    for (const auto& e : table) {
        const Configuration c = preset(e.preset_name);
        const std::string param = e.param;
        bool ok = true;
        if (param == "perform_BMS") ok = c.perform_BMS == (std::strcmp(e.value, "True") == 0);
        else if (param == "perform_restart") ok = c.perform_restart == (std::strcmp(e.value, "True") == 0);
        else if (param == "perform_randomwalk")
            ok = c.perform_randomwalk == (std::strcmp(e.value, "True") == 0);
        else if (param == "bms_num") ok = c.bms_num == std::atoi(e.value);
        else if (param == "breaking_ties") ok = c.breaking_ties == std::atoi(e.value);
        else if (param == "init_construction") ok = c.init_construction == std::atoi(e.value);
        else if (param == "drop_vertex") ok = c.drop_vertex == std::atoi(e.value);
        else if (param == "tabu_type") ok = c.tabu_type == std::atoi(e.value);
        else if (param == "tabu_tenure") ok = c.tabu_tenure == std::atoi(e.value);
        else if (param == "randomdrop_prob") ok = c.randomdrop_prob == std::strtod(e.value, nullptr);
        else if (param == "restart_prob") ok = c.restart_prob == std::strtod(e.value, nullptr);
        else if (param == "randomwalk_prob") ok = c.randomwalk_prob == std::strtod(e.value, nullptr);
        else ok = false;
        if (!ok)
            out.fail(std::string(e.preset_name) + "." + e.param + " != " + e.value);
    }
    for (const auto& name : preset_names())
        if (!validate(preset(name)).empty()) out.fail("preset fails validation: " + name);

    // Domain boundaries accepted exactly.
    auto expect_valid = [&](const Configuration& c, bool want, const char* what) {
        if (validate(c).empty() != want) out.fail(std::string("validate boundary: ") + what);
    };
    Configuration c;
    c.bms_num = 1;
    expect_valid(c, true, "bms_num=1");
    c.bms_num = 100;
    expect_valid(c, true, "bms_num=100");
    c.bms_num = 0;
    expect_valid(c, false, "bms_num=0");
    c.bms_num = 101;
    expect_valid(c, false, "bms_num=101");
    c = {};
    c.breaking_ties = 1;
    expect_valid(c, true, "breaking_ties=1");
    c.breaking_ties = 2;
    expect_valid(c, false, "breaking_ties=2");
    c = {};
    c.init_construction = 2;
    expect_valid(c, true, "init_construction=2");
    c.init_construction = 3;
    expect_valid(c, false, "init_construction=3");
    c = {};
    c.drop_vertex = 2;
    expect_valid(c, true, "drop_vertex=2");
    c.drop_vertex = -1;
    expect_valid(c, false, "drop_vertex=-1");
    c = {};
    c.drop_vertex = 1;
    c.randomdrop_prob = 0.1;
    expect_valid(c, true, "randomdrop_prob=0.1");
    c.randomdrop_prob = 0.9;
    expect_valid(c, true, "randomdrop_prob=0.9");
    c.randomdrop_prob = 0.15;
    expect_valid(c, false, "randomdrop_prob=0.15");
    c = {};
    c.perform_restart = true;
    c.restart_prob = 0.0000001;
    expect_valid(c, true, "restart_prob=1e-7");
    c.restart_prob = 0.0001;
    expect_valid(c, true, "restart_prob=1e-4");
    c.restart_prob = 0.0002;
    expect_valid(c, false, "restart_prob=2e-4");
    c.restart_prob = 0.00000005;
    expect_valid(c, false, "restart_prob=5e-8");
    c = {};
    c.randomwalk_prob = 0.00001;
    expect_valid(c, true, "randomwalk_prob=1e-5");
    c.randomwalk_prob = 0.1;
    expect_valid(c, true, "randomwalk_prob=0.1");
    c.randomwalk_prob = 0.2;
    expect_valid(c, false, "randomwalk_prob=0.2");
    c.randomwalk_prob = 0.000001;
    expect_valid(c, false, "randomwalk_prob=1e-6");
    c = {};
    c.tabu_type = 2;
    c.tabu_tenure = 1;
    expect_valid(c, true, "tabu_tenure=1");
    c.tabu_tenure = 100;
    expect_valid(c, true, "tabu_tenure=100");
    c.tabu_tenure = 0;
    expect_valid(c, false, "tabu_tenure=0");
    c.tabu_tenure = 101;
    expect_valid(c, false, "tabu_tenure=101");
    c.tabu_type = 0;
    c.tabu_tenure = 0;
    expect_valid(c, true, "tabu_tenure inactive");

    // Space export round trip plus the pinned PCS text.
    const auto& space = configuration_space();
    if (!(space_from_json(export_space_json(space)) == space)) out.fail("space JSON round trip");
    const std::string pcs = export_pcs(space);
    for (const char* needle : {"tabu_tenure [1,100] [7]i", "tabu_tenure | tabu_type in {1,2}",
                               "restart_prob [0.0000001,0.0001] [0.000001]l"})
        if (pcs.find(needle) == std::string::npos)
            out.fail(std::string("pcs export missing: ") + needle);

    if (out.pass) out.detail = "presets verbatim, domains exact, exports round-trip";
    return out;
}

// --- 7. statistics -------------------------------------------------------------

Outcome criterion7() {
    Outcome out;
    RunResult failed;
    failed.success = false;
    failed.time_to_best = 123.0;
    if (par10(failed, 3600.0) != 36000.0) out.fail("PAR10 of a failed run != 10 x cutoff");
    if (par10(failed, 60.0) != 600.0) out.fail("PAR10 of a failed run != 10 x cutoff (60s)");
    if (std::abs(new_sq(2995, 0.202) - (-2994.999798)) > 1e-9)
        out.fail("NewSQ(2995, 0.202) outside 1e-9 of -2994.999798");
    if (out.pass) out.detail = "PAR10 and NewSQ exact";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    struct Entry {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "oracle equivalence on random instances", criterion1},
        {2, "incremental-structure correctness", criterion2},
        {3, "prohibition semantics", criterion3},
        {4, "published-result reproduction at desk scale", criterion4},
        {5, "determinism of step-cutoff records", criterion5},
        {6, "configuration space fidelity", criterion6},
        {7, "statistics (PAR10, NewSQ)", criterion7},
    };

    bool all_pass = true;
    for (const auto& e : entries) {
        if (only != 0 && e.id != only) continue;
        const Outcome r = e.run();
        all_pass = all_pass && r.pass;
        std::printf("%s criterion %d: %s%s%s\n", r.pass ? "PASS" : "FAIL", e.id, e.name,
                    r.detail.empty() ? "" : " -- ", r.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
