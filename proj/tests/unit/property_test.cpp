#include <gtest/gtest.h>

#include "../support/generators.hpp"
#include "safevo/errors.hpp"
#include "safevo/property.hpp"

namespace safevo {
namespace {

using E = Expr;

TEST(ParseProperty, NegatedAtom) {
  const SafetyProperty p = parse_property("AG !overflow");
  EXPECT_EQ(p.body(), *E::negate(E::make_atom("overflow")));
  EXPECT_EQ(p.source_text(), "AG !overflow");
}

TEST(ParseProperty, NegatedDisjunction) {
  const SafetyProperty p = parse_property("AG !(overflow | underflow)");
  EXPECT_EQ(p.body(), *E::negate(E::disjunction({E::make_atom("overflow"), E::make_atom("underflow")})));
  EXPECT_EQ(p.atoms(), (std::set<std::string>{"overflow", "underflow"}));
}

TEST(ParseProperty, PrecedenceAndConstants) {
  const SafetyProperty p = parse_property("AG a | b & !c | true");
  const auto expected = E::disjunction(
      {E::make_atom("a"), E::conjunction({E::make_atom("b"), E::negate(E::make_atom("c"))}), E::constant(true)});
  EXPECT_EQ(p.body(), *expected);
  EXPECT_EQ(p.to_string(), "AG a | b & !c | true");
}

TEST(ParseProperty, WhitespaceIsFree) {
  EXPECT_EQ(parse_property("  AG(!a&b)\n").body(), parse_property("AG ( ! a & b )").body());
}

struct BadProperty {
  const char* text;
  std::size_t column;
  const char* fragment;
};

class PropertyErrors : public ::testing::TestWithParam<BadProperty> {};

TEST_P(PropertyErrors, RejectsWithColumn) {
  const BadProperty& c = GetParam();
  try {
    parse_property(c.text);
    FAIL() << "expected ParseError for " << c.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), c.column) << e.what();
    EXPECT_NE(std::string(e.what()).find(c.fragment), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, PropertyErrors,
    ::testing::Values(BadProperty{"EF crash", 1, "must be AG-rooted safety"},
                      BadProperty{"!overflow", 1, "missing AG"},
                      BadProperty{"", 1, "missing AG"},
                      BadProperty{"AG", 3, "expected"},
                      BadProperty{"AG EX a", 4, "temporal operator 'EX'"},
                      BadProperty{"AG !(a | AG b)", 10, "temporal operator 'AG'"},
                      BadProperty{"AG (a", 6, "expected ')'"},
                      BadProperty{"AG a b", 6, "unexpected"},
                      BadProperty{"AG a $ b", 6, "unexpected '$'"}));

TEST(PropertyPrinter, RoundTripsRandomExpressions) {
  testing::Gen g(5);
  for (int i = 0; i < 2000; ++i) {
    const SafetyProperty p = testing::random_property(g, testing::kAtoms);
    const SafetyProperty back = parse_property(p.to_string());
    ASSERT_EQ(back.body(), p.body()) << p.to_string();
    ASSERT_EQ(back.to_string(), p.to_string());
  }
}

TEST(PropertyPrinter, NestsParentheses) {
  EXPECT_EQ(parse_property("AG !(a & (b | c))").to_string(), "AG !(a & (b | c))");
  EXPECT_EQ(parse_property("AG (a | b) | c").to_string(), "AG (a | b) | c");
}

}  // namespace
}  // namespace safevo
