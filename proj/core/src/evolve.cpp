#include "safevo/evolve.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <thread>

#include "safevo/compose.hpp"
#include "safevo/errors.hpp"
#include "safevo/mutation.hpp"
#include "safevo/simulate.hpp"

namespace safevo {

namespace {

enum Purpose : std::uint64_t { kInit = 1, kMutate = 2, kEvaluate = 3 };

constexpr double kBottom = -std::numeric_limits<double>::infinity();

double rank_key(const Candidate& c) { return c.fitness.value_or(kBottom); }

// Runs f(i) for i in [0, n) across `jobs` threads.
template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(jobs, n);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) f(i);
    });
}

}  // namespace

double evaluate(const ControllerFsm& fsm, const BenchmarkTask& task, const EvolutionConfig& cfg,
                Rng& rng) {
  return mean_episode_reward(fsm, task, cfg.episodes_per_evaluation, cfg.episode_length, rng);
}

SafetyVerdict gate(const ControllerFsm& fsm, const BenchmarkTask& task, const SafetyProperty& prop) {
  return check_safe(compose(fsm, task.plant), prop);
}

EvolutionResult run_evolution(const EvolutionConfig& cfg, const BenchmarkTask& task,
                              const SafetyProperty& prop, const RunOptions& options) {
  validate(cfg);
  if (auto report = validate_plant(task.plant); !report.ok())
    throw UsageError("invalid plant: " + report.violations.front());
  for (const auto& atom : prop.atoms())
    if (!task.plant.hazards.count(atom))
      throw PropertyMismatchError("unknown atomic proposition '" + atom + "'");
  if (options.seed_genome) {
    if (auto report = validate_controller(*options.seed_genome); !report.ok())
      throw UsageError("invalid seed genome: " + report.violations.front());
    if (options.seed_genome->state_count() > cfg.max_states)
      throw ConfigError("seed genome has more than max_states states");
    wire(*options.seed_genome, task.plant);
  }

  const auto& sensors = task.plant.outputs;
  const auto& actuators = task.plant.inputs;
  EvolutionResult result;

  // Checks and, if safe, evaluates one candidate in place.
  auto assess = [&](Candidate& c, std::uint64_t eval_seed) {
    c.verdict = gate(c.genome, task, prop);
    if (c.verdict->safe()) {
      Rng rng(eval_seed);
      c.fitness = evaluate(c.genome, task, cfg, rng);
    }
  };

  auto record = [&](std::size_t generation, const std::vector<Candidate>& population,
                    const std::vector<Candidate>& fresh, std::size_t unsafe,
                    std::chrono::steady_clock::time_point start) {
    GenerationStats st;
    st.generation = generation;
    st.offspring_created = fresh.size();
    st.offspring_unsafe_discarded = unsafe;
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& c : fresh)
      if (c.fitness) ++st.evaluations;
    for (const auto& c : population) {
      if (!c.fitness) continue;
      sum += *c.fitness;
      ++n;
      if (!st.best_fitness || *c.fitness > *st.best_fitness) st.best_fitness = c.fitness;
    }
    if (n) st.mean_fitness = sum / static_cast<double>(n);
    for (const auto& c : fresh) {
      if (c.fitness && (!result.best || *c.fitness > *result.best->fitness)) result.best = c;
      result.candidates.push_back(c);
    }
    result.evaluations += st.evaluations;
    st.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.history.push_back(st);
    return st;
  };

  auto reached_threshold = [&](const GenerationStats& st) {
    return st.best_fitness && *st.best_fitness >= cfg.fitness_threshold;
  };

  // Generation 0.
  auto start = std::chrono::steady_clock::now();
  std::vector<Candidate> population(cfg.population_size);
  for (std::size_t i = 0; i < population.size(); ++i) {
    Candidate& c = population[i];
    c.lineage = {0, i, std::nullopt, "random"};
    if (i == 0 && options.seed_genome) {
      c.genome = *options.seed_genome;
      c.lineage.origin = "seed";
    } else {
      Rng rng(derive_seed(cfg.seed, {0, i, 0, kInit}));
      const std::size_t n = cfg.initial_states ? *cfg.initial_states : 1 + rng.below(cfg.max_states);
      c.genome = random_controller(rng, sensors, actuators, n);
    }
  }
  parallel_for(population.size(), options.jobs,
               [&](std::size_t i) { assess(population[i], derive_seed(cfg.seed, {0, i, 0, kEvaluate})); });
  std::stable_sort(population.begin(), population.end(),
                   [](const Candidate& a, const Candidate& b) { return rank_key(a) > rank_key(b); });
  {
    std::size_t unsafe = 0;
    for (const auto& c : population) unsafe += c.safe() ? 0 : 1;
    // Population was sorted; log in creation order.
    std::vector<Candidate> created = population;
    std::sort(created.begin(), created.end(),
              [](const Candidate& a, const Candidate& b) { return a.lineage.index < b.lineage.index; });
    if (reached_threshold(record(0, population, created, unsafe, start))) return result;
  }

  const std::size_t per_parent = cfg.offspring_per_parent;
  for (std::size_t g = 1; g <= cfg.max_generations; ++g) {
    start = std::chrono::steady_clock::now();
    std::vector<Candidate> children(population.size() * per_parent);
    parallel_for(children.size(), options.jobs, [&](std::size_t idx) {
      const std::size_t parent = idx / per_parent;
      const std::size_t k = idx % per_parent;
      Rng rng(derive_seed(cfg.seed, {g, parent, k, kMutate}));
      auto [genome, applied] = mutate(population[parent].genome, rng, cfg);
      Candidate& c = children[idx];
      c.genome = std::move(genome);
      c.lineage = {g, idx, parent, to_string(applied)};
      assess(c, derive_seed(cfg.seed, {g, parent, k, kEvaluate}));
    });

    std::size_t unsafe = 0;
    std::vector<Candidate> pool = population;
    for (const auto& c : children) {
      if (c.safe()) pool.push_back(c);
      else ++unsafe;
    }
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Candidate& a, const Candidate& b) { return rank_key(a) > rank_key(b); });
    pool.resize(cfg.population_size);
    population = std::move(pool);

    if (reached_threshold(record(g, population, children, unsafe, start))) break;
  }
  return result;
}

}  // namespace safevo
