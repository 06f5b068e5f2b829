#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace safevo {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Boolean state formula over atomic propositions. And/Or are n-ary, as
/// produced by the parser.
struct Expr {
  enum class Kind { Constant, Atom, Not, And, Or };

  Kind kind = Kind::Constant;
  bool value = false;             // Constant
  std::string atom;               // Atom
  std::vector<ExprPtr> operands;  // Not (one), And / Or (two or more)

  static ExprPtr constant(bool v);
  static ExprPtr make_atom(std::string name);
  static ExprPtr negate(ExprPtr e);
  static ExprPtr conjunction(std::vector<ExprPtr> es);
  static ExprPtr disjunction(std::vector<ExprPtr> es);
};

// Deep structural equality.
bool operator==(const Expr& a, const Expr& b);

/// `AG body`: on every path, body holds in every state.
class SafetyProperty {
public:
  SafetyProperty(std::string source, ExprPtr body) : source_(std::move(source)), body_(std::move(body)) {}

  const std::string& source_text() const noexcept { return source_; }
  const Expr& body() const noexcept { return *body_; }
  std::set<std::string> atoms() const;

  // Canonical text; parse_property(to_string()) is structurally identical.
  std::string to_string() const;

private:
  std::string source_;
  ExprPtr body_;
};

/// Grammar:
///   property := "AG" expr
///   expr     := term { "|" term }
///   term     := factor { "&" factor }
///   factor   := "!" factor | "(" expr ")" | "true" | "false" | IDENT
///
/// Throws ParseError with a 1-based column. CTL operator names (AG, EX, EF,
/// A, U, ...) are reserved and rejected anywhere below the root AG.
SafetyProperty parse_property(std::string_view text);

std::string to_string(const Expr& e);

}  // namespace safevo
