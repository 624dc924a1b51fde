#include "jcs/config.hpp"

#include "jcs/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace jcs {

namespace {

using nlohmann::json;

double number(const json& j, const std::string& key) {
    if (!j.is_number()) throw ConfigError("key '" + key + "' must be a number");
    return j.get<double>();
}

void apply_geometry(const json& g, Geometry& geo) {
    if (!g.is_object()) throw ConfigError("'geometry' must be an object");
    const std::map<std::string, double*> fields = {
        {"d_sr", &geo.d_sr},   {"d_sdf", &geo.d_sdf}, {"d_sdn", &geo.d_sdn},
        {"d_rdf", &geo.d_rdf}, {"d_rdn", &geo.d_rdn}, {"d_rt", &geo.d_rt},
        {"d_tr", &geo.d_tr}};
    bool rt = false, tr = false;
    for (const auto& [key, val] : g.items()) {
        auto it = fields.find(key);
        if (it == fields.end()) throw ConfigError("unknown geometry key '" + key + "'");
        *it->second = number(val, key);
        rt |= key == "d_rt";
        tr |= key == "d_tr";
    }
    // Reciprocal hop: one given, mirror it.
    if (rt && !tr) geo.d_tr = geo.d_rt;
    if (tr && !rt) geo.d_rt = geo.d_tr;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario document must be a JSON object");

    Scenario s = paper_defaults();
    SystemParams& p = s.params;
    const std::map<std::string, double*> linear = {
        {"a_f", &p.a_f},           {"a_n", &p.a_n},
        {"p_com", &p.p_com},       {"p_sen", &p.p_sen},
        {"p_max", &p.p_max},       {"gamma_th_f", &p.gamma_th_f},
        {"gamma_th_n", &p.gamma_th_n}, {"delta", &p.delta},
        {"omega", &p.omega},       {"n0", &p.n0},
        {"rho_li_mean", &p.rho_li_mean}, {"omega_var", &p.omega_var},
        {"alpha", &p.alpha},       {"kappa", &p.kappa}};
    const std::map<std::string, std::string> db_keys = {
        {"p_com_db", "p_com"}, {"p_sen_db", "p_sen"}, {"p_max_db", "p_max"},
        {"n0_db", "n0"},       {"rho_li_mean_db", "rho_li_mean"}};

    std::map<std::string, int> seen;
    bool a_f_given = false, a_n_given = false, omega_given = false;
    for (const auto& [key, val] : doc.items()) {
        if (key == "geometry") {
            apply_geometry(val, s.geometry);
            continue;
        }
        if (key == "mode") {
            if (!val.is_string()) throw ConfigError("'mode' must be a string");
            p.mode = parse_duplex_mode(val.get<std::string>());
            continue;
        }
        if (key == "variance_law") {
            if (!val.is_string()) throw ConfigError("'variance_law' must be a string");
            p.variance_law = parse_variance_law(val.get<std::string>());
            continue;
        }
        if (auto it = linear.find(key); it != linear.end()) {
            *it->second = number(val, key);
            if (++seen[key] > 1) throw ConfigError("'" + key + "' given twice");
            a_f_given |= key == "a_f";
            a_n_given |= key == "a_n";
            omega_given |= key == "omega";
            continue;
        }
        if (auto it = db_keys.find(key); it != db_keys.end()) {
            *linear.at(it->second) = db_to_linear(number(val, key));
            if (++seen[it->second] > 1)
                throw ConfigError("'" + it->second + "' given in both linear and dB form");
            continue;
        }
        throw ConfigError("unknown key '" + key + "'");
    }

    // One of the split fractions implies the other.
    if (a_n_given && !a_f_given) p.a_f = 1.0 - p.a_n;
    if (a_f_given && !a_n_given) p.a_n = 1.0 - p.a_f;
    if (!omega_given) {
        if (p.mode == DuplexMode::HD) p.omega = 0.0;
        if (p.mode == DuplexMode::FD) p.omega = 1.0;
    }
    // A bigger transmit power than the default budget raises the budget.
    if (!seen.count("p_max")) p.p_max = std::max({p.p_max, p.p_com, p.p_sen});

    p.validate();
    s.geometry.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
    const SystemParams& p = s.params;
    const Geometry& g = s.geometry;
    json doc = {
        {"a_f", p.a_f},
        {"a_n", p.a_n},
        {"p_com", p.p_com},
        {"p_sen", p.p_sen},
        {"p_max", p.p_max},
        {"gamma_th_f", p.gamma_th_f},
        {"gamma_th_n", p.gamma_th_n},
        {"delta", p.delta},
        {"omega", p.omega},
        {"n0", p.n0},
        {"rho_li_mean", p.rho_li_mean},
        {"omega_var", p.omega_var},
        {"alpha", p.alpha},
        {"kappa", p.kappa},
        {"mode", to_string(p.mode)},
        {"variance_law", to_string(p.variance_law)},
        {"geometry",
         {{"d_sr", g.d_sr},
          {"d_sdf", g.d_sdf},
          {"d_sdn", g.d_sdn},
          {"d_rdf", g.d_rdf},
          {"d_rdn", g.d_rdn},
          {"d_rt", g.d_rt},
          {"d_tr", g.d_tr}}}};
    return doc.dump(2);
}

}  // namespace jcs
