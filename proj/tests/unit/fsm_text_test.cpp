#include <gtest/gtest.h>

#include <random>

#include "../support/generators.hpp"
#include "safevo/errors.hpp"
#include "safevo/fsm_text.hpp"
#include "test_util.hpp"

namespace safevo {
namespace {

using testing::Gen;

TEST(ParseFsm, TankReference) {
  const ControllerFsm m = parse_controller(testing::read_source("tasks/tank_reference.fsm"));
  EXPECT_EQ(m.state_count(), 3u);
  EXPECT_EQ(m.name, "tank_reference");
  EXPECT_TRUE(validate_controller(m).ok());
}

TEST(ParseFsm, PlantWithNondeterminism) {
  const Plant p = parse_plant(testing::read_source("tasks/tank.plant"));
  EXPECT_EQ(p.state_count(), 10u);
  EXPECT_EQ(p.next(1, 0).size(), 2u);  // l1 fill -> l2 | l3
  EXPECT_TRUE(validate_plant(p).ok());
}

TEST(ParseFsm, UndeclaredStateReportsLine) {
  const std::string text =
      "fsm m\ninputs: a\noutputs: x\nstates: s0\ninitial: s0\n# comment\ntrans: s0 a -> s9 / x\n";
  try {
    parse_fsm(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), 7u);
    EXPECT_NE(std::string(e.what()).find("undeclared state 's9'"), std::string::npos);
  }
}

struct BadCase {
  const char* text;
  std::size_t line;
  const char* fragment;
};

class ParseErrors : public ::testing::TestWithParam<BadCase> {};

TEST_P(ParseErrors, RejectsWithLine) {
  const BadCase& c = GetParam();
  try {
    parse_fsm(c.text);
    FAIL() << "expected ParseError for: " << c.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), c.line) << e.what();
    EXPECT_NE(std::string(e.what()).find(c.fragment), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ParseErrors,
    ::testing::Values(
        BadCase{"", 1, "empty"},
        BadCase{"machine m\n", 1, "expected 'fsm <name>'"},
        BadCase{"fsm m\ninputs: a\noutputs: x\nstates: s0\n", 1, "missing 'initial:'"},
        BadCase{"fsm m\ninputs: a\ninputs: b\n", 3, "duplicate 'inputs:'"},
        BadCase{"fsm m\ninputs: a\noutputs: x\nstates: s0\ninitial: s0\ntrans: s0 a -> s0 / x\ntrans: s0 a -> s0 / x\n",
                7, "duplicate transition"},
        BadCase{"fsm m\ninputs: a\noutputs: x\nstates: s0\ninitial: s0\ntrans: s0 a -> s0 x\n", 6, "expected 'trans:"},
        BadCase{"fsm m\ninputs: a\noutputs: x\nstates: s0\ninitial: s0\nemit: s0 a\n", 6, "only allowed in plant"},
        BadCase{"fsm m\ninputs: a\noutputs: x\nstates: s0 s1\ninitial: s0 s1\n", 5, "exactly one initial"},
        BadCase{"fsm m\ninputs: a-b\noutputs: x\nstates: s0\ninitial: s0\n", 2, "invalid name"},
        BadCase{"fsm m\nbogus: 1\n", 2, "unknown line kind"},
        BadCase{"plant p\ninputs: a\noutputs: o\nstates: x0\ninitial: x0\ntrans: x0 a -> x0\ntrans: x0 a -> x0\n", 7,
                "duplicate transition"},
        BadCase{"plant p\ninputs: a\noutputs: o\nstates: x0\ninitial: x0\nemit: x0 o\nemit: x0 o\n", 7, "second emit"},
        BadCase{"plant p\ninputs: a\noutputs: o\nstates: x0\ninitial: x0\nhazard true: x0\n", 6,
                "invalid proposition"},
        BadCase{"plant p\ninputs: a\noutputs: o\nstates: x0\ninitial: x0\nemit: x0 q\n", 6, "undeclared output 'q'"}));

TEST(ParseFsm, IncompleteMachineParsesButFailsValidation) {
  const ControllerFsm m = parse_controller(testing::read_source("tests/data/tank_incomplete.fsm"));
  const auto report = validate_controller(m);
  EXPECT_EQ(report.violations.size(), 2u);
}

TEST(ParseFsm, DeclarationsMayFollowTransitions) {
  const std::string text = "fsm m\ntrans: s0 a -> s0 / x\nstates: s0\ninitial: s0\noutputs: x\ninputs: a\n";
  EXPECT_TRUE(validate_controller(parse_controller(text)).ok());
}

TEST(SerializeFsm, MinimalMachineGolden) {
  ControllerFsm m = ControllerFsm::blank("m", {"x"}, {"y"}, {"s0"});
  m.initial = 0;
  m.set(0, 0, 0, 0);
  EXPECT_EQ(serialize_fsm(m),
            "fsm m\n"
            "inputs: x\n"
            "outputs: y\n"
            "states: s0\n"
            "initial: s0\n"
            "trans: s0 x -> s0 / y\n");
}

TEST(SerializeFsm, InsertionOrderDoesNotMatter) {
  ControllerFsm a = ControllerFsm::blank("m", {"i0", "i1"}, {"o0", "o1"}, {"s0", "s1"});
  ControllerFsm b = a;
  a.initial = b.initial = 1;
  const std::vector<std::tuple<StateId, SymbolId, StateId, SymbolId>> entries = {
      {0, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 0}};
  for (auto [s, i, t, o] : entries) a.set(s, i, t, o);
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    auto [s, i, t, o] = *it;
    b.set(s, i, t, o);
  }
  EXPECT_EQ(serialize_fsm(a), serialize_fsm(b));

  Plant p = Plant::blank("p", {"a"}, {"o"}, {"x0", "x1", "x2"});
  Plant q = p;
  p.initial = q.initial = {0};
  p.emit = q.emit = {0, 0, 0};
  for (StateId t : {2u, 0u, 1u}) p.add_transition(0, 0, t);
  for (StateId t : {1u, 2u, 0u}) q.add_transition(0, 0, t);
  EXPECT_EQ(serialize_fsm(p), serialize_fsm(q));
}

TEST(SerializeFsm, ShippedFilesAreCanonical) {
  for (const char* rel : {"tasks/tank.plant", "tasks/rover.plant", "tasks/tank_reference.fsm",
                          "tasks/rover_reference.fsm", "tests/data/tank_always_fill.fsm"}) {
    const std::string text = testing::read_source(rel);
    const Machine m = parse_fsm(text);
    EXPECT_EQ(serialize_fsm(m), canonicalize(text)) << rel;
    EXPECT_EQ(serialize_fsm(m), testing::strip_comments(text)) << rel;
  }
}

TEST(SerializeFsm, CanonicalizeSortsAndStripsComments) {
  const std::string messy =
      "# header\nfsm m\n\nstates: s0 s1\ninputs: a b\noutputs: x\ninitial: s1\n"
      "trans: s1 b -> s0 / x   # trailing\ntrans: s0 b -> s1 / x\ntrans: s1 a -> s1 / x\ntrans: s0 a -> s0 / x\n";
  EXPECT_EQ(canonicalize(messy),
            "fsm m\ninputs: a b\noutputs: x\nstates: s0 s1\ninitial: s1\n"
            "trans: s0 a -> s0 / x\ntrans: s0 b -> s1 / x\ntrans: s1 a -> s1 / x\ntrans: s1 b -> s0 / x\n");
}

// parse . serialize is the identity on structure and serialize . parse is
// canonicalization, for random controllers and plants.
TEST(SerializeFsm, RoundTripRandomMachines) {
  Gen g(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ins = testing::symbols("i", testing::pick(g, 1, 4));
    const auto outs = testing::symbols("o", testing::pick(g, 1, 4));
    if (trial % 2 == 0) {
      const ControllerFsm m = testing::random_machine(g, ins, outs, testing::pick(g, 1, 8));
      const std::string text = serialize_fsm(m);
      ASSERT_EQ(parse_controller(text), m);
      ASSERT_EQ(canonicalize(text), text);
    } else {
      const Plant p = testing::random_plant(g, ins, outs, testing::pick(g, 1, 8));
      const std::string text = serialize_fsm(p);
      Plant back = parse_plant(text);
      // Hazard labels with no members serialize as an empty line and survive.
      ASSERT_EQ(back, p);
      ASSERT_EQ(canonicalize(text), text);
    }
  }
}

TEST(SerializeFsm, PlantSectionsInOrder) {
  const Plant p = parse_plant(
      "plant p\ntrans: x1 a -> x0\nhazard z: x1\nhazard b: x0 x1\nemit: x1 o\nemit: x0 o\n"
      "initial: x1 x0\nstates: x0 x1\noutputs: o\ninputs: a\ntrans: x0 a -> x1\ntrans: x0 a -> x0\n");
  EXPECT_EQ(serialize_fsm(p),
            "plant p\ninputs: a\noutputs: o\nstates: x0 x1\ninitial: x0 x1\nemit: x0 o\nemit: x1 o\n"
            "hazard b: x0 x1\nhazard z: x1\ntrans: x0 a -> x0\ntrans: x0 a -> x1\ntrans: x1 a -> x0\n");
}

}  // namespace
}  // namespace safevo
