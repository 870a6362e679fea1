#pragma once

#include <string>

#include "interp/search.hpp"

namespace interp {

// Stable JSON document for certificates:
//   { "tuple": {"d":..,"g":..,"r":..,"n":[9 ints]},
//     "rule": "...",
//     "side_conditions": [{"desc":..,"lhs":..,"rel":..,"rhs":..}, ...],
//     "children": [...] }
std::string certificate_to_json(const Certificate& c);

// Throws std::runtime_error with a diagnostic on malformed documents.
Certificate certificate_from_json(const std::string& text);

Certificate load_certificate(const std::string& path);
void save_certificate(const Certificate& c, const std::string& path);

// CSV report: header d,g,r,n0..n8,verdict,rule_path_depth; one row per
// swept tuple, already sorted by the sweep.
std::string report_to_csv(const SweepReport& report);

// key=value configuration file ('#' starts a comment). Recognized keys:
// node_budget, base_rational, rule_mode, classifier_threshold, jobs.
Config load_config_file(const std::string& path, const Config& defaults);
Config parse_config_text(const std::string& text, const Config& defaults);

}  // namespace interp
