#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "safevo/evolve.hpp"

namespace safevo {

const char* tool_version() noexcept;

/// Head line of every run log. Timestamps are the only fields that differ
/// between two runs of the same configuration.
struct RunManifest {
  std::string tool_version;
  nlohmann::json config;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> input_hashes;  // of canonical inputs
  std::string start_time;
  std::string end_time;
};

std::string utc_timestamp();

// Records keep insertion order so "kind" leads every line.
nlohmann::ordered_json manifest_record(const RunManifest& m);
nlohmann::ordered_json candidate_record(const Candidate& c);
nlohmann::ordered_json generation_record(const GenerationStats& s);
nlohmann::ordered_json result_record(const EvolutionResult& r);

/// JSON lines: the manifest, then per generation its candidate records
/// followed by its generation record, then the result record.
void write_run_log(std::ostream& out, const RunManifest& manifest, const EvolutionResult& result);

}  // namespace safevo
