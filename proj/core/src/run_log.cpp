#include "safevo/run_log.hpp"

#include <chrono>
#include <ctime>

#include "safevo/fsm_text.hpp"
#include "safevo/hash.hpp"

#ifndef SAFEVO_VERSION
#define SAFEVO_VERSION "unknown"
#endif

namespace safevo {

using json = nlohmann::ordered_json;

const char* tool_version() noexcept { return SAFEVO_VERSION; }

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json manifest_record(const RunManifest& m) {
  return {{"kind", "manifest"},
          {"tool_version", m.tool_version},
          {"config", json::parse(m.config.dump())},
          {"seed", m.seed},
          {"input_hashes", m.input_hashes},
          {"start_time", m.start_time},
          {"end_time", m.end_time}};
}

json candidate_record(const Candidate& c) {
  json j = {{"kind", "candidate"},
            {"generation", c.lineage.generation},
            {"index", c.lineage.index},
            {"parent", c.lineage.parent ? json(*c.lineage.parent) : json(nullptr)},
            {"origin", c.lineage.origin},
            {"states", c.genome.state_count()},
            {"genome_hash", hex_digest(serialize_fsm(c.genome))}};
  j["verdict"] = c.verdict ? json(c.verdict->safe() ? "safe" : "unsafe") : json("unchecked");
  if (c.verdict) {
    j["iterations"] = c.verdict->iterations;
    j["states_flagged"] = c.verdict->states_flagged;
  }
  j["fitness"] = optional_number(c.fitness);
  return j;
}

// wall_seconds is left out so logs of identical runs are identical.
json generation_record(const GenerationStats& s) {
  return {{"kind", "generation"},
          {"generation", s.generation},
          {"offspring_created", s.offspring_created},
          {"offspring_unsafe_discarded", s.offspring_unsafe_discarded},
          {"evaluations", s.evaluations},
          {"best_fitness", optional_number(s.best_fitness)},
          {"mean_fitness", optional_number(s.mean_fitness)}};
}

json result_record(const EvolutionResult& r) {
  json j = {{"kind", "result"},
            {"no_safe_strategy", r.no_safe_strategy()},
            {"evaluations", r.evaluations},
            {"generations_run", r.history.empty() ? 0 : r.history.back().generation}};
  if (r.best) {
    j["fitness"] = *r.best->fitness;
    j["generation"] = r.best->lineage.generation;
    j["genome"] = serialize_fsm(r.best->genome);
  }
  return j;
}

void write_run_log(std::ostream& out, const RunManifest& manifest, const EvolutionResult& result) {
  out << manifest_record(manifest).dump() << '\n';
  std::size_t next = 0;
  for (const auto& stats : result.history) {
    while (next < result.candidates.size() &&
           result.candidates[next].lineage.generation == stats.generation)
      out << candidate_record(result.candidates[next++]).dump() << '\n';
    out << generation_record(stats).dump() << '\n';
  }
  out << result_record(result).dump() << '\n';
}

}  // namespace safevo
