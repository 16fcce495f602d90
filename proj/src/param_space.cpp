#include "mwc/param_space.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mwc {

namespace {

ParamSpec flag(std::string name, std::string def, std::string parent = {},
               std::vector<std::string> parent_values = {}) {
    return {std::move(name), ParamKind::Flag, {"True", "False"}, "", "", false,
            std::move(def),  std::move(parent), std::move(parent_values)};
}

ParamSpec categorical(std::string name, std::vector<std::string> values, std::string def,
                      std::string parent = {}, std::vector<std::string> parent_values = {}) {
    return {std::move(name), ParamKind::Categorical, std::move(values), "", "", false,
            std::move(def),  std::move(parent),      std::move(parent_values)};
}

ParamSpec integer(std::string name, std::string lo, std::string hi, std::string def,
                  std::string parent = {}, std::vector<std::string> parent_values = {}) {
    return {std::move(name), ParamKind::Integer, {}, std::move(lo), std::move(hi), false,
            std::move(def),  std::move(parent),  std::move(parent_values)};
}

ParamSpec real(std::string name, std::string lo, std::string hi, std::string def,
               std::string parent = {}, std::vector<std::string> parent_values = {}) {
    ParamSpec p{std::move(name), ParamKind::Real, {}, std::move(lo), std::move(hi), false,
                std::move(def),  std::move(parent), std::move(parent_values)};
    p.log_scale = std::stod(p.hi) / std::stod(p.lo) >= 100.0;
    return p;
}

const char* kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::Flag: return "flag";
        case ParamKind::Categorical: return "categorical";
        case ParamKind::Integer: return "integer";
        case ParamKind::Real: return "real";
    }
    return "?";
}

ParamKind kind_from_name(const std::string& s) {
    if (s == "flag") return ParamKind::Flag;
    if (s == "categorical") return ParamKind::Categorical;
    if (s == "integer") return ParamKind::Integer;
    if (s == "real") return ParamKind::Real;
    throw std::runtime_error("unknown parameter type: " + s);
}

}  // namespace

const ParamSpace& configuration_space() {
    static const ParamSpace space = {{
        flag("perform_BMS", "True"),
        integer("bms_num", "1", "100", "50", "perform_BMS", {"True"}),
        categorical("breaking_ties", {"0", "1"}, "0"),
        categorical("init_construction", {"0", "1", "2"}, "0"),
        categorical("drop_vertex", {"0", "1", "2"}, "0"),
        categorical("randomdrop_prob",
                    {"0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7", "0.8", "0.9"}, "0.2",
                    "drop_vertex", {"1"}),
        flag("perform_restart", "False"),
        real("restart_prob", "0.0000001", "0.0001", "0.000001", "perform_restart", {"True"}),
        flag("perform_randomwalk", "True"),
        real("randomwalk_prob", "0.00001", "0.1", "0.0001", "perform_randomwalk", {"True"}),
        categorical("tabu_type", {"0", "1", "2"}, "1"),
        integer("tabu_tenure", "1", "100", "7", "tabu_type", {"1", "2"}),
    }};
    return space;
}

std::string export_pcs(const ParamSpace& space) {
    std::ostringstream out;
    out << "# mwc parameter space\n";
    for (const auto& p : space.params) {
        out << p.name << ' ';
        if (p.kind == ParamKind::Flag || p.kind == ParamKind::Categorical) {
            out << '{';
            for (std::size_t i = 0; i < p.values.size(); ++i) {
                if (i) out << ',';
                out << p.values[i];
            }
            out << '}';
        } else {
            out << '[' << p.lo << ',' << p.hi << ']';
        }
        out << " [" << p.default_value << ']';
        if (p.kind == ParamKind::Integer) out << 'i';
        if (p.kind == ParamKind::Real && p.log_scale) out << 'l';
        out << '\n';
    }
    out << '\n';
    for (const auto& p : space.params) {
        if (p.parent.empty()) continue;
        out << p.name << " | " << p.parent << " in {";
        for (std::size_t i = 0; i < p.parent_values.size(); ++i) {
            if (i) out << ',';
            out << p.parent_values[i];
        }
        out << "}\n";
    }
    return out.str();
}

std::string export_space_json(const ParamSpace& space) {
    nlohmann::ordered_json root;
    root["parameters"] = nlohmann::ordered_json::array();
    for (const auto& p : space.params) {
        nlohmann::ordered_json jp;
        jp["name"] = p.name;
        jp["type"] = kind_name(p.kind);
        if (p.kind == ParamKind::Flag || p.kind == ParamKind::Categorical)
            jp["values"] = p.values;
        else
            jp["range"] = {p.lo, p.hi};
        jp["default"] = p.default_value;
        jp["log"] = p.log_scale;
        if (p.parent.empty()) {
            jp["condition"] = nullptr;
        } else {
            jp["condition"] = {{"parent", p.parent}, {"values", p.parent_values}};
        }
        root["parameters"].push_back(jp);
    }
    return root.dump(2) + "\n";
}

ParamSpace space_from_json(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("space JSON parse error: ") + e.what());
    }
    ParamSpace space;
    for (const auto& jp : root.at("parameters")) {
        ParamSpec p;
        p.name = jp.at("name").get<std::string>();
        p.kind = kind_from_name(jp.at("type").get<std::string>());
        if (p.kind == ParamKind::Flag || p.kind == ParamKind::Categorical) {
            p.values = jp.at("values").get<std::vector<std::string>>();
        } else {
            auto range = jp.at("range").get<std::vector<std::string>>();
            if (range.size() != 2) throw std::runtime_error("range must have two bounds");
            p.lo = range[0];
            p.hi = range[1];
        }
        p.default_value = jp.at("default").get<std::string>();
        p.log_scale = jp.at("log").get<bool>();
        if (!jp.at("condition").is_null()) {
            p.parent = jp.at("condition").at("parent").get<std::string>();
            p.parent_values = jp.at("condition").at("values").get<std::vector<std::string>>();
        }
        space.params.push_back(std::move(p));
    }
    return space;
}

Configuration sample_configuration(const ParamSpace& space, Rng& rng) {
    Configuration c;
    // Sampled values by name; children see their parents' draws.
    std::vector<std::pair<std::string, std::string>> drawn;
    auto value_of = [&](const std::string& name) -> const std::string* {
        for (const auto& [k, v] : drawn)
            if (k == name) return &v;
        return nullptr;
    };

    for (const auto& p : space.params) {
        if (!p.parent.empty()) {
            const std::string* pv = value_of(p.parent);
            bool active = false;
            if (pv)
                for (const auto& v : p.parent_values) active = active || v == *pv;
            if (!active) {
                drawn.emplace_back(p.name, p.default_value);
                continue;  // inactive: keep the default
            }
        }
        std::string value;
        switch (p.kind) {
            case ParamKind::Flag:
            case ParamKind::Categorical:
                value = p.values[rng.below(p.values.size())];
                break;
            case ParamKind::Integer: {
                const long lo = std::stol(p.lo), hi = std::stol(p.hi);
                value = std::to_string(lo + static_cast<long>(rng.below(hi - lo + 1)));
                break;
            }
            case ParamKind::Real: {
                const double lo = std::stod(p.lo), hi = std::stod(p.hi);
                double v;
                if (p.log_scale)
                    v = std::exp(std::log(lo) + rng.real01() * (std::log(hi) - std::log(lo)));
                else
                    v = lo + rng.real01() * (hi - lo);
                std::ostringstream ss;
                ss.precision(17);
                ss << v;
                value = ss.str();
                break;
            }
        }
        drawn.emplace_back(p.name, value);
    }

    for (const auto& [name, value] : drawn) {
        if (name == "perform_BMS") c.perform_BMS = value == "True";
        else if (name == "bms_num") c.bms_num = std::stoi(value);
        else if (name == "breaking_ties") c.breaking_ties = std::stoi(value);
        else if (name == "init_construction") c.init_construction = std::stoi(value);
        else if (name == "drop_vertex") c.drop_vertex = std::stoi(value);
        else if (name == "randomdrop_prob") c.randomdrop_prob = std::stod(value);
        else if (name == "perform_restart") c.perform_restart = value == "True";
        else if (name == "restart_prob") c.restart_prob = std::stod(value);
        else if (name == "perform_randomwalk") c.perform_randomwalk = value == "True";
        else if (name == "randomwalk_prob") c.randomwalk_prob = std::stod(value);
        else if (name == "tabu_type") c.tabu_type = std::stoi(value);
        else if (name == "tabu_tenure") c.tabu_tenure = std::stoi(value);
        else throw std::runtime_error("space parameter has no configuration field: " + name);
    }
    return c;
}

}  // namespace mwc
