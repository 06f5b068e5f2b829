#include <gtest/gtest.h>

#include <algorithm>
#include <deque>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "safevo/compose.hpp"
#include "safevo/errors.hpp"
#include "safevo/fsm_text.hpp"
#include "safevo/tasks.hpp"
#include "test_util.hpp"

namespace safevo {
namespace {

using testing::Gen;

ControllerFsm minimal() {
  ControllerFsm m = ControllerFsm::blank("m", {"x"}, {"y"}, {"s0"});
  m.initial = 0;
  m.set(0, 0, 0, 0);
  return m;
}

ControllerFsm tank_reference() { return parse_controller(testing::read_source("tasks/tank_reference.fsm")); }

bool contains(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.find(needle) != std::string::npos; });
}

TEST(ValidateController, MinimalMachineIsComplete) { EXPECT_TRUE(validate_controller(minimal()).ok()); }

TEST(ValidateController, ReportsMissingTransition) {
  ControllerFsm m = tank_reference();
  m.set(1, 2, kNoState, kNoSymbol);  // (s1, hi)
  const auto report = validate_controller(m);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0], "incomplete at (s1,hi)");
}

TEST(ValidateController, ReportsDuplicateSymbol) {
  ControllerFsm m = ControllerFsm::blank("m", {"lo"}, {"fill", "fill"}, {"s0"});
  m.initial = 0;
  m.set(0, 0, 0, 0);
  EXPECT_TRUE(contains(validate_controller(m).violations, "duplicate symbol"));
}

TEST(ValidateController, ReportsEmptyAlphabetAndBadInitial) {
  ControllerFsm m = ControllerFsm::blank("m", {}, {"y"}, {"s0"});
  m.initial = 3;
  const auto v = validate_controller(m).violations;
  EXPECT_TRUE(contains(v, "empty inputs"));
  EXPECT_TRUE(contains(v, "initial state"));
}

TEST(ValidatePlant, ReportsMissingSuccessorAndEmit) {
  Plant p = Plant::blank("p", {"a"}, {"o"}, {"x0", "x1"});
  p.initial = {0};
  p.emit[0] = 0;
  p.add_transition(0, 0, 1);
  const auto v = validate_plant(p).violations;
  EXPECT_TRUE(contains(v, "no emit for state x1"));
  EXPECT_TRUE(contains(v, "not input-enabled at (x1,a)"));
}

TEST(Step, TankReferenceFillsOnLow) {
  EXPECT_EQ(step(tank_reference(), 0, "lo"), (StepResult{1, "fill"}));
}

TEST(Step, SingleStateSelfLoop) { EXPECT_EQ(step(minimal(), 0, "x"), (StepResult{0, "y"})); }

TEST(Step, RepeatedStepIsDeterministic) {
  const ControllerFsm m = tank_reference();
  for (StateId s = 0; s < m.state_count(); ++s)
    for (const auto& in : m.inputs) EXPECT_EQ(step(m, s, in), step(m, s, in));
}

TEST(Step, UnknownStateOrSymbolIsUsageError) {
  EXPECT_THROW(step(minimal(), 4, "x"), UsageError);
  EXPECT_THROW(step(minimal(), 0, "nope"), UsageError);
}

// Every validated machine has a single defined successor for every
// (state, input) pair.
TEST(Step, TotalOverValidatedMachines) {
  Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inputs = testing::symbols("i", testing::pick(g, 1, 10));
    const auto outputs = testing::symbols("o", testing::pick(g, 1, 5));
    const ControllerFsm m = testing::random_machine(g, inputs, outputs, testing::pick(g, 1, 40));
    ASSERT_TRUE(validate_controller(m).ok());
    for (StateId s = 0; s < m.state_count(); ++s)
      for (const auto& in : m.inputs) {
        const StepResult r = step(m, s, in);
        EXPECT_LT(r.next_state, m.state_count());
        EXPECT_TRUE(index_of(m.outputs, r.output).has_value());
      }
  }
}

TEST(Compose, OneByOneIsSelfLoop) {
  Plant p = Plant::blank("p", {"y"}, {"x"}, {"q0"});
  p.initial = {0};
  p.emit[0] = 0;
  p.add_transition(0, 0, 0);
  const ClosedLoopSystem sys = compose(minimal(), p);
  ASSERT_EQ(sys.graph.size(), 1u);
  ASSERT_EQ(sys.graph.successors(0).size(), 1u);
  EXPECT_EQ(sys.graph.successors(0)[0], 0u);
  EXPECT_TRUE(sys.graph.initial().contains(0));
}

TEST(Compose, TankReferenceProductMatchesBfsCount) {
  const BenchmarkTask tank = builtin_task("tank");
  const ControllerFsm ref = tank_reference();
  std::set<std::pair<StateId, StateId>> reachable;
  testing::derive_product_edges(ref, tank.plant, &reachable);
  const ClosedLoopSystem sys = compose(ref, tank.plant);
  EXPECT_EQ(sys.graph.size(), reachable.size());
  // Frozen from the independent BFS above.
  EXPECT_EQ(sys.graph.size(), 14u);
  EXPECT_LE(sys.graph.size(), ref.state_count() * tank.plant.state_count());
}

TEST(Compose, UnreachableHazardHasNoProductState) {
  const BenchmarkTask tank = builtin_task("tank");
  const ClosedLoopSystem sys = compose(tank_reference(), tank.plant);
  std::set<std::pair<StateId, StateId>> reachable;
  testing::derive_product_edges(tank_reference(), tank.plant, &reachable);
  for (const char* prop : {"overflow", "underflow"}) {
    const StateSet* label = sys.graph.label(prop);
    ASSERT_NE(label, nullptr);
    EXPECT_TRUE(label->empty()) << prop;
    for (StateId hazard : tank.plant.hazards.at(prop))
      for (const auto& [c, p] : reachable) EXPECT_NE(p, hazard);
  }
}

TEST(Compose, AlphabetMismatchNamesSymbols) {
  const BenchmarkTask tank = builtin_task("tank");
  ControllerFsm m = tank_reference();
  m.outputs[2] = "wait";
  try {
    compose(m, tank.plant);
    FAIL() << "expected CompositionError";
  } catch (const CompositionError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("missing {hold}"), std::string::npos) << what;
    EXPECT_NE(what.find("extra {wait}"), std::string::npos) << what;
  }
}

TEST(Compose, SubsetAlphabetIsRejected) {
  const BenchmarkTask tank = builtin_task("tank");
  ControllerFsm m = ControllerFsm::blank("m", {"lo", "ok", "hi"}, {"fill", "drain"}, {"s0"});
  m.initial = 0;
  for (SymbolId a = 0; a < 3; ++a) m.set(0, a, 0, 1);
  EXPECT_THROW(compose(m, tank.plant), CompositionError);
}

// Every product edge has exactly one (controller step, plant transition)
// derivation, every derivation is an edge, and every product state is
// reachable from the initial set.
TEST(Compose, ProductSoundnessOnRandomPairs) {
  Gen g(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto sensors = testing::symbols("o", testing::pick(g, 1, 3));
    const auto actuators = testing::symbols("a", testing::pick(g, 1, 3));
    // Shuffle the controller's view of the alphabets to exercise index mapping.
    auto c_inputs = sensors, c_outputs = actuators;
    std::shuffle(c_inputs.begin(), c_inputs.end(), g);
    std::shuffle(c_outputs.begin(), c_outputs.end(), g);
    const Plant plant = testing::random_plant(g, actuators, sensors, testing::pick(g, 1, 6));
    const ControllerFsm ctrl = testing::random_machine(g, c_inputs, c_outputs, testing::pick(g, 1, 6));

    const ClosedLoopSystem sys = compose(ctrl, plant);
    std::set<std::pair<StateId, StateId>> reachable;
    const auto expected = testing::derive_product_edges(ctrl, plant, &reachable);

    std::set<testing::ProductEdge> actual;
    std::size_t edge_count = 0;
    for (StateId s = 0; s < sys.graph.size(); ++s)
      for (StateId t : sys.graph.successors(s)) {
        ++edge_count;
        actual.insert({sys.pairs[s].controller, sys.pairs[s].plant, sys.pairs[t].controller, sys.pairs[t].plant});
      }
    ASSERT_EQ(edge_count, actual.size());
    ASSERT_EQ(actual, expected);
    ASSERT_EQ(sys.graph.size(), reachable.size());

    // Direct BFS over the product itself.
    std::vector<bool> seen(sys.graph.size(), false);
    std::deque<StateId> q;
    sys.graph.initial().for_each([&](StateId s) { seen[s] = true; q.push_back(s); });
    while (!q.empty()) {
      StateId s = q.front();
      q.pop_front();
      for (StateId t : sys.graph.successors(s))
        if (!seen[t]) { seen[t] = true; q.push_back(t); }
    }
    ASSERT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));

    for (const auto& [prop, members] : plant.hazards)
      for (StateId s = 0; s < sys.graph.size(); ++s) {
        const bool lifted = std::binary_search(members.begin(), members.end(), sys.pairs[s].plant);
        ASSERT_EQ(sys.graph.label(prop)->contains(s), lifted);
      }
  }
}

TEST(ControllerGraph, LabelsStatesByEmittedOutputs) {
  const TransitionSystem g = controller_graph(tank_reference());
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.label("drain")->members(), std::vector<StateId>{1});
  EXPECT_EQ(g.label("fill")->count(), 3u);
  EXPECT_TRUE(g.initial().contains(0));
}

}  // namespace
}  // namespace safevo
