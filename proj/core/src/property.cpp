#include "safevo/property.hpp"

#include <array>
#include <cctype>

#include "safevo/errors.hpp"

namespace safevo {

ExprPtr Expr::constant(bool v) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Constant;
  e->value = v;
  return e;
}

ExprPtr Expr::make_atom(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Atom;
  e->atom = std::move(name);
  return e;
}

ExprPtr Expr::negate(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Not;
  e->operands.push_back(std::move(operand));
  return e;
}

ExprPtr Expr::conjunction(std::vector<ExprPtr> es) {
  if (es.size() == 1) return es.front();
  auto e = std::make_shared<Expr>();
  e->kind = Kind::And;
  e->operands = std::move(es);
  return e;
}

ExprPtr Expr::disjunction(std::vector<ExprPtr> es) {
  if (es.size() == 1) return es.front();
  auto e = std::make_shared<Expr>();
  e->kind = Kind::Or;
  e->operands = std::move(es);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.atom != b.atom ||
      a.operands.size() != b.operands.size())
    return false;
  for (std::size_t i = 0; i < a.operands.size(); ++i)
    if (!(*a.operands[i] == *b.operands[i])) return false;
  return true;
}

namespace {

constexpr std::array<std::string_view, 13> kTemporal = {"AG", "AF", "AX", "AU", "AW", "EG", "EF",
                                                        "EX", "EU", "EW", "A",  "E",  "U"};

bool is_temporal(std::string_view word) {
  for (auto t : kTemporal)
    if (t == word) return true;
  return false;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr property() {
    skip_space();
    const std::size_t start = pos_;
    std::string root = peek_word();
    if (root != "AG") {
      if (is_temporal(root))
        fail(start, "property must be AG-rooted safety, found '" + root + "'");
      fail(start, "missing AG: property must be AG-rooted safety");
    }
    pos_ += 2;
    ExprPtr body = expr();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return body;
  }

private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    throw ParseError(at + 1, "column " + std::to_string(at + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string peek_word() const {
    std::size_t end = pos_;
    if (end < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
    }
    return std::string(text_.substr(pos_, end - pos_));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    std::vector<ExprPtr> terms{term()};
    while (accept('|')) terms.push_back(term());
    return Expr::disjunction(std::move(terms));
  }

  ExprPtr term() {
    std::vector<ExprPtr> factors{factor()};
    while (accept('&')) factors.push_back(factor());
    return Expr::conjunction(std::move(factors));
  }

  ExprPtr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail(pos_, "expected expression, found end of input");
    if (accept('!')) return Expr::negate(factor());
    if (accept('(')) {
      ExprPtr inner = expr();
      if (!accept(')')) fail(pos_, "expected ')'");
      return inner;
    }
    const std::size_t start = pos_;
    std::string word = peek_word();
    if (word.empty()) fail(start, "unexpected '" + std::string(1, text_[start]) + "'");
    pos_ += word.size();
    if (word == "true") return Expr::constant(true);
    if (word == "false") return Expr::constant(false);
    if (is_temporal(word))
      fail(start, "temporal operator '" + word + "' outside AG; only a single top-level AG is allowed");
    return Expr::make_atom(std::move(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_atoms(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::Atom) out.insert(e.atom);
  for (const auto& op : e.operands) collect_atoms(*op, out);
}

std::string print(const Expr& e) {
  auto child = [](const Expr& c, bool wrap) { return wrap ? "(" + print(c) + ")" : print(c); };
  switch (e.kind) {
    case Expr::Kind::Constant:
      return e.value ? "true" : "false";
    case Expr::Kind::Atom:
      return e.atom;
    case Expr::Kind::Not: {
      const auto k = e.operands[0]->kind;
      return "!" + child(*e.operands[0], k == Expr::Kind::And || k == Expr::Kind::Or);
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
      const bool is_or = e.kind == Expr::Kind::Or;
      std::string out;
      for (const auto& op : e.operands) {
        if (!out.empty()) out += is_or ? " | " : " & ";
        const bool wrap = op->kind == Expr::Kind::Or || (!is_or && op->kind == Expr::Kind::And);
        out += child(*op, wrap);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::set<std::string> SafetyProperty::atoms() const {
  std::set<std::string> out;
  collect_atoms(*body_, out);
  return out;
}

std::string to_string(const Expr& e) { return print(e); }

std::string SafetyProperty::to_string() const { return "AG " + print(*body_); }

SafetyProperty parse_property(std::string_view text) {
  Parser p(text);
  ExprPtr body = p.property();
  return SafetyProperty(std::string(text), std::move(body));
}

}  // namespace safevo
