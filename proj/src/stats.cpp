#include "mwc/stats.hpp"

#include <cstdio>
#include <map>

#include "json.hpp"

namespace mwc {

BatchStats compute_stats(const std::vector<RunResult>& runs, double cutoff) {
    BatchStats s;
    if (runs.empty()) return s;

    double t_sum = 0.0, par10_sum = 0.0;
    std::map<std::string, std::pair<double, int>> per_instance;  // par10 sum, count
    for (const auto& r : runs) {
        if (r.success) ++s.suc_count;
        t_sum += r.time_to_best;
        const double p = par10(r, cutoff);
        s.par10_per_run.push_back(p);
        s.new_sq_per_run.push_back(new_sq(r.best_weight, r.time_to_best));
        par10_sum += p;
        auto& [sum, count] = per_instance[r.instance];
        sum += p;
        ++count;
    }
    const double nruns = static_cast<double>(runs.size());
    s.t_avg = t_sum / nruns;
    s.success_rate = static_cast<double>(s.suc_count) / nruns;
    s.avg_par10_run = par10_sum / nruns;
    double inst_sum = 0.0;
    for (const auto& [name, acc] : per_instance) inst_sum += acc.first / acc.second;
    s.avg_par10_instance = inst_sum / static_cast<double>(per_instance.size());
    return s;
}

namespace {

// Times are stored microsecond-quantized; six decimals reproduce them exactly.
std::string format_time(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", t);
    return buf;
}

}  // namespace

std::string runs_to_csv(const std::vector<RunResult>& runs) {
    std::string out = "instance,seed,best_weight,time_to_best,elapsed,steps,restarts,success\n";
    for (const auto& r : runs) {
        out += r.instance;
        out += ',' + std::to_string(r.seed);
        out += ',' + std::to_string(r.best_weight);
        out += ',' + format_time(r.time_to_best);
        out += ',' + format_time(r.elapsed);
        out += ',' + std::to_string(r.steps);
        out += ',' + std::to_string(r.restarts);
        out += ',';
        out += r.success ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string batch_to_json(const std::vector<RunResult>& runs, const BatchStats& stats, double cutoff) {
    nlohmann::ordered_json root;
    root["cutoff"] = cutoff;
    root["runs"] = nlohmann::ordered_json::array();
    for (const auto& r : runs) {
        nlohmann::ordered_json jr;
        jr["instance"] = r.instance;
        jr["seed"] = r.seed;
        jr["best_weight"] = r.best_weight;
        jr["time_to_best"] = r.time_to_best;
        jr["elapsed"] = r.elapsed;
        jr["steps"] = r.steps;
        jr["restarts"] = r.restarts;
        jr["success"] = r.success;
        root["runs"].push_back(jr);
    }
    nlohmann::ordered_json js;
    js["suc_count"] = stats.suc_count;
    js["t_avg"] = stats.t_avg;
    js["success_rate"] = stats.success_rate;
    js["avg_par10_run"] = stats.avg_par10_run;
    js["avg_par10_instance"] = stats.avg_par10_instance;
    js["par10_per_run"] = stats.par10_per_run;
    js["new_sq_per_run"] = stats.new_sq_per_run;
    root["stats"] = js;
    return root.dump(2) + "\n";
}

}  // namespace mwc
