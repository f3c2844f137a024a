#pragma once

#include <string>

#include "d2d/harness.hpp"

namespace d2d {

// JSON text round-trips. Doubles are emitted with shortest-exact formatting,
// so save -> load -> save reproduces byte-identical text. Schemas are
// documented in the README.

std::string genparams_to_json(const GenParams& p);
GenParams genparams_from_json(const std::string& text);

std::string instance_to_json(const NetworkInstance& inst);
NetworkInstance instance_from_json(const std::string& text);

std::string allocation_to_json(const Allocation& a);
Allocation allocation_from_json(const std::string& text);

std::string config_to_json(const DseraConfig& c);
DseraConfig config_from_json(const std::string& text);

std::string outcome_to_json(const RunOutcome& o);

std::string experiment_to_json(const ExperimentSpec& s);
ExperimentSpec experiment_from_json(const std::string& text);

std::string report_to_json(const RunReport& r, const std::string& metric);

// File helpers (throw std::runtime_error on I/O failure).
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace d2d
