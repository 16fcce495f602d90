#include "mwc/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mwc {

namespace {

bool near(double a, double b) { return std::fabs(a - b) < 1e-12; }

// randomdrop_prob is categorical: one of 0.1 .. 0.9.
bool valid_randomdrop(double v) {
    for (int k = 1; k <= 9; ++k)
        if (near(v, k / 10.0)) return true;
    return false;
}

void hash_combine(std::size_t& h, std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
}

}  // namespace

bool Configuration::operator==(const Configuration& o) const {
    if (perform_BMS != o.perform_BMS || breaking_ties != o.breaking_ties ||
        init_construction != o.init_construction || drop_vertex != o.drop_vertex ||
        perform_restart != o.perform_restart || perform_randomwalk != o.perform_randomwalk ||
        tabu_type != o.tabu_type)
        return false;
    if (bms_num_active() && bms_num != o.bms_num) return false;
    if (randomdrop_prob_active() && randomdrop_prob != o.randomdrop_prob) return false;
    if (restart_prob_active() && restart_prob != o.restart_prob) return false;
    if (randomwalk_prob_active() && randomwalk_prob != o.randomwalk_prob) return false;
    if (tabu_tenure_active() && tabu_tenure != o.tabu_tenure) return false;
    return true;
}

std::size_t Configuration::hash() const {
    std::size_t h = 0;
    hash_combine(h, std::hash<bool>{}(perform_BMS));
    hash_combine(h, std::hash<int>{}(breaking_ties));
    hash_combine(h, std::hash<int>{}(init_construction));
    hash_combine(h, std::hash<int>{}(drop_vertex));
    hash_combine(h, std::hash<bool>{}(perform_restart));
    hash_combine(h, std::hash<bool>{}(perform_randomwalk));
    hash_combine(h, std::hash<int>{}(tabu_type));
    if (bms_num_active()) hash_combine(h, std::hash<int>{}(bms_num));
    if (randomdrop_prob_active()) hash_combine(h, std::hash<double>{}(randomdrop_prob));
    if (restart_prob_active()) hash_combine(h, std::hash<double>{}(restart_prob));
    if (randomwalk_prob_active()) hash_combine(h, std::hash<double>{}(randomwalk_prob));
    if (tabu_tenure_active()) hash_combine(h, std::hash<int>{}(tabu_tenure));
    return h;
}

std::vector<std::string> validate(const Configuration& c) {
    std::vector<std::string> errors;
    if (c.bms_num_active() && (c.bms_num < 1 || c.bms_num > 100))
        errors.push_back("bms_num not in [1,100]");
    if (c.breaking_ties != 0 && c.breaking_ties != 1)
        errors.push_back("breaking_ties not in {0,1}");
    if (c.init_construction < 0 || c.init_construction > 2)
        errors.push_back("init_construction not in {0,1,2}");
    if (c.drop_vertex < 0 || c.drop_vertex > 2)
        errors.push_back("drop_vertex not in {0,1,2}");
    if (c.randomdrop_prob_active() && !valid_randomdrop(c.randomdrop_prob))
        errors.push_back("randomdrop_prob not in {0.1,0.2,...,0.9}");
    if (c.restart_prob_active() && (c.restart_prob < 0.0000001 || c.restart_prob > 0.0001))
        errors.push_back("restart_prob not in [0.0000001,0.0001]");
    if (c.randomwalk_prob_active() && (c.randomwalk_prob < 0.00001 || c.randomwalk_prob > 0.1))
        errors.push_back("randomwalk_prob not in [0.00001,0.1]");
    if (c.tabu_type < 0 || c.tabu_type > 2)
        errors.push_back("tabu_type not in {0,1,2}");
    if (c.tabu_tenure_active() && (c.tabu_tenure < 1 || c.tabu_tenure > 100))
        errors.push_back("tabu_tenure not in [1,100]");
    return errors;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"default",      "bhoslib", "dimacs_mann",
                                                   "dimacs_other", "kes",     "ref"};
    return names;
}

Configuration preset(std::string_view name) {
    Configuration c;  // the default configuration
    if (name == "default") return c;
    if (name == "bhoslib") {
        c.perform_BMS = false;
        c.breaking_ties = 1;
        c.init_construction = 1;
        c.drop_vertex = 0;
        c.perform_restart = true;
        c.perform_randomwalk = true;
        c.restart_prob = 5.016696977394702e-5;
        c.randomwalk_prob = 0.09733547356349166;
        c.tabu_type = 1;
        c.tabu_tenure = 5;
        return c;
    }
    if (name == "dimacs_mann") {
        c.perform_BMS = false;
        c.breaking_ties = 1;
        c.init_construction = 1;
        c.drop_vertex = 1;
        c.perform_restart = false;
        c.perform_randomwalk = true;
        c.randomdrop_prob = 0.1;
        c.randomwalk_prob = 0.0021339029487367554;
        c.tabu_type = 0;
        return c;
    }
    if (name == "dimacs_other") {
        c.perform_BMS = false;
        c.breaking_ties = 1;
        c.init_construction = 0;
        c.drop_vertex = 0;
        c.perform_restart = true;
        c.perform_randomwalk = true;
        c.restart_prob = 3.459685410644107e-5;
        c.randomwalk_prob = 0.00994485968433248;
        c.tabu_type = 1;
        c.tabu_tenure = 8;
        return c;
    }
    if (name == "kes") {
        c.perform_BMS = true;
        c.bms_num = 6;
        c.breaking_ties = 1;
        c.init_construction = 0;
        c.drop_vertex = 2;
        c.perform_restart = true;
        c.perform_randomwalk = false;
        c.restart_prob = 2.7775287025690946e-5;
        c.tabu_type = 1;
        c.tabu_tenure = 30;
        return c;
    }
    if (name == "ref") {
        c.perform_BMS = true;
        c.bms_num = 16;
        c.breaking_ties = 1;
        c.init_construction = 0;
        c.drop_vertex = 1;
        c.perform_restart = true;
        c.perform_randomwalk = false;
        c.randomdrop_prob = 0.4;
        c.restart_prob = 9.44211698679448e-6;
        c.tabu_type = 2;
        c.tabu_tenure = 8;
        return c;
    }
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

std::string config_to_json(const Configuration& c) {
    nlohmann::ordered_json j;
    j["perform_BMS"] = c.perform_BMS;
    j["bms_num"] = c.bms_num;
    j["breaking_ties"] = c.breaking_ties;
    j["init_construction"] = c.init_construction;
    j["drop_vertex"] = c.drop_vertex;
    j["randomdrop_prob"] = c.randomdrop_prob;
    j["perform_restart"] = c.perform_restart;
    j["restart_prob"] = c.restart_prob;
    j["perform_randomwalk"] = c.perform_randomwalk;
    j["randomwalk_prob"] = c.randomwalk_prob;
    j["tabu_type"] = c.tabu_type;
    j["tabu_tenure"] = c.tabu_tenure;
    return j.dump(2) + "\n";
}

Configuration config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("configuration JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("configuration JSON must be an object");

    Configuration c;
    auto present = [&](const char* key) { return j.contains(key); };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        if (k != "perform_BMS" && k != "bms_num" && k != "breaking_ties" &&
            k != "init_construction" && k != "drop_vertex" && k != "randomdrop_prob" &&
            k != "perform_restart" && k != "restart_prob" && k != "perform_randomwalk" &&
            k != "randomwalk_prob" && k != "tabu_type" && k != "tabu_tenure")
            throw std::runtime_error("unknown configuration parameter: " + k);
    }
    try {
        if (present("perform_BMS")) c.perform_BMS = j["perform_BMS"].get<bool>();
        if (present("bms_num")) c.bms_num = j["bms_num"].get<int>();
        if (present("breaking_ties")) c.breaking_ties = j["breaking_ties"].get<int>();
        if (present("init_construction")) c.init_construction = j["init_construction"].get<int>();
        if (present("drop_vertex")) c.drop_vertex = j["drop_vertex"].get<int>();
        if (present("randomdrop_prob")) c.randomdrop_prob = j["randomdrop_prob"].get<double>();
        if (present("perform_restart")) c.perform_restart = j["perform_restart"].get<bool>();
        if (present("restart_prob")) c.restart_prob = j["restart_prob"].get<double>();
        if (present("perform_randomwalk")) c.perform_randomwalk = j["perform_randomwalk"].get<bool>();
        if (present("randomwalk_prob")) c.randomwalk_prob = j["randomwalk_prob"].get<double>();
        if (present("tabu_type")) c.tabu_type = j["tabu_type"].get<int>();
        if (present("tabu_tenure")) c.tabu_tenure = j["tabu_tenure"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("configuration JSON type error: ") + e.what());
    }

    // Every active parameter must be present.
    std::vector<std::string> missing;
    if (c.bms_num_active() && !present("bms_num")) missing.push_back("bms_num");
    if (c.randomdrop_prob_active() && !present("randomdrop_prob")) missing.push_back("randomdrop_prob");
    if (c.restart_prob_active() && !present("restart_prob")) missing.push_back("restart_prob");
    if (c.randomwalk_prob_active() && !present("randomwalk_prob")) missing.push_back("randomwalk_prob");
    if (c.tabu_tenure_active() && !present("tabu_tenure")) missing.push_back("tabu_tenure");
    if (!missing.empty()) {
        std::string msg = "active parameter missing:";
        for (const auto& m : missing) msg += " " + m;
        throw std::runtime_error(msg);
    }
    return c;
}

Configuration config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open configuration file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json(ss.str());
}

}  // namespace mwc
