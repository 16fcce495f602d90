#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mwc {

// The 12-parameter search configuration. Inactive parameters keep their
// defaults and are ignored by equality and hashing.
//
// Code maps:
//   breaking_ties      0 random among ties, 1 favor largest age
//   init_construction  0 randomized, 1 weight-greedy, 2 degree-greedy
//   drop_vertex        0 random, 1 random with randomdrop_prob else
//                        weight-based, 2 weight-based
//   tabu_type          0 configuration checking, 1 tenure, 2 tenure + lift
struct Configuration {
    bool perform_BMS = true;
    int bms_num = 50;
    int breaking_ties = 0;
    int init_construction = 0;
    int drop_vertex = 0;
    double randomdrop_prob = 0.2;
    bool perform_restart = false;
    double restart_prob = 0.000001;
    bool perform_randomwalk = true;
    double randomwalk_prob = 0.0001;
    int tabu_type = 1;
    int tabu_tenure = 7;

    bool bms_num_active() const { return perform_BMS; }
    bool randomdrop_prob_active() const { return drop_vertex == 1; }
    bool restart_prob_active() const { return perform_restart; }
    bool randomwalk_prob_active() const { return perform_randomwalk; }
    bool tabu_tenure_active() const { return tabu_type == 1 || tabu_type == 2; }

    bool operator==(const Configuration& o) const;
    std::size_t hash() const;
};

// Empty result means valid; otherwise each entry names the parameter and its
// legal domain. Inactive parameters are not checked.
std::vector<std::string> validate(const Configuration& c);

// Preset names: default, bhoslib, dimacs_mann, dimacs_other, kes, ref.
// Throws std::invalid_argument for unknown names.
Configuration preset(std::string_view name);
const std::vector<std::string>& preset_names();

std::string config_to_json(const Configuration& c);
// Parses a flat JSON object. Missing inactive parameters default silently;
// a missing active parameter or unknown key is an error.
Configuration config_from_json(const std::string& text);
Configuration config_from_json_file(const std::string& path);

}  // namespace mwc
