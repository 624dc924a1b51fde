#pragma once

#include "jcs/scenario.hpp"

#include <string>

namespace jcs {

/// Parse a scenario JSON document on top of paper_defaults().
///
/// Keys mirror the SystemParams field names; a nested "geometry" object
/// holds the distances. p_com, p_sen, p_max, n0 and rho_li_mean may be
/// given in dB through a "_db" suffix (not both forms). Unknown keys are
/// rejected with ConfigError.
Scenario parse_scenario(const std::string& json_text);

Scenario load_scenario(const std::string& path);

std::string scenario_to_json(const Scenario& s);

}  // namespace jcs
