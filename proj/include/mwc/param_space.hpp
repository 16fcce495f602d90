#pragma once

#include <string>
#include <vector>

#include "mwc/config.hpp"
#include "mwc/rng.hpp"

namespace mwc {

enum class ParamKind { Flag, Categorical, Integer, Real };

// One parameter of the configuration space. Numeric bounds and defaults are
// carried as canonical strings so exports print the table text verbatim.
struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Categorical;
    std::vector<std::string> values;  // flag/categorical literals
    std::string lo, hi;               // integer/real bounds
    bool log_scale = false;           // set when a real domain spans >= 2 decades
    std::string default_value;
    std::string parent;  // empty when unconditional
    std::vector<std::string> parent_values;

    bool operator==(const ParamSpec&) const = default;
};

struct ParamSpace {
    std::vector<ParamSpec> params;
    bool operator==(const ParamSpace&) const = default;
};

// The full solver space: names, types, domains, defaults, activation conditions.
const ParamSpace& configuration_space();

// Classic parameter-configuration-space text grammar:
//   name {a,b} [default]      categorical / flag
//   name [lo,hi] [default]i   integer ('l' appended on log-scale reals)
//   child | parent in {v,..}  activation conditions
std::string export_pcs(const ParamSpace& space);

std::string export_space_json(const ParamSpace& space);
ParamSpace space_from_json(const std::string& text);

// Uniform sample respecting activation conditions; log-scale reals are drawn
// log-uniformly. Inactive parameters keep their defaults.
Configuration sample_configuration(const ParamSpace& space, Rng& rng);

}  // namespace mwc
