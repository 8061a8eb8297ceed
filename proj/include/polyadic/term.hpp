#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyadic/group.hpp"
#include "polyadic/polyadic_group.hpp"

namespace polyadic {

// An element of G[X]: a syntax tree over f, skew, variables and constants.
struct Term {
  enum class Kind : std::uint8_t { Variable, Constant, Apply, Skew };

  Kind kind = Kind::Variable;
  std::uint32_t index = 0;  // variable index or constant element
  std::vector<Term> args;   // n children for Apply, one for Skew

  static Term variable(std::uint32_t i) { return {Kind::Variable, i, {}}; }
  static Term constant(Elem e) { return {Kind::Constant, e, {}}; }
  static Term apply(std::vector<Term> args) { return {Kind::Apply, 0, std::move(args)}; }
  static Term skew(Term t) {
    Term s{Kind::Skew, 0, {}};
    s.args.push_back(std::move(t));
    return s;
  }

  bool is_coefficient_free() const;
  // One more than the largest variable index, 0 if there are none.
  std::uint32_t variable_bound() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// How identifiers in the term grammar resolve.
//
//   term := '~' term | 'f' '(' arg (',' arg)* ')' | identifier
//   arg  := term [ '^' '(' count ')' ]     -- count copies of the argument
//
// With `generators` set, identifiers name generators (variables by
// position). Otherwise x<k> (k >= 1) is variable k-1 and other identifiers
// are constants looked up in `constants`.
struct TermSyntax {
  const std::vector<std::string>* constants = nullptr;
  const std::vector<std::string>* generators = nullptr;
  unsigned arity = 0;  // 0: do not check Apply arity while parsing
};

Term parse_term(std::string_view text, const TermSyntax& syntax, std::size_t line = 0);
// "lhs = rhs"
Equation parse_equation(std::string_view text, const TermSyntax& syntax, std::size_t line = 0);

std::string to_string(const Term& t, const TermSyntax& syntax);
std::string to_string(const Equation& e, const TermSyntax& syntax);

// Throws UnboundVariable for variables beyond the assignment and
// ArityMismatch for Apply nodes of the wrong width.
Elem eval_term(const Term& t, std::span<const Elem> assignment, const PolyadicGroup& p);

// A term in the binary group language with constants.
struct GroupTerm {
  enum class Kind : std::uint8_t { Variable, Constant, Identity, Product, Inverse, Power };

  Kind kind = Kind::Identity;
  std::uint32_t index = 0;
  std::int64_t exponent = 0;     // Power only
  std::vector<GroupTerm> args;   // factors of a Product, the base otherwise

  static GroupTerm variable(std::uint32_t i) { return {Kind::Variable, i, 0, {}}; }
  static GroupTerm constant(Elem e) { return {Kind::Constant, e, 0, {}}; }
  static GroupTerm identity() { return {}; }
  static GroupTerm product(std::vector<GroupTerm> factors) {
    return {Kind::Product, 0, 0, std::move(factors)};
  }
  static GroupTerm inverse(GroupTerm t) {
    GroupTerm g{Kind::Inverse, 0, 0, {}};
    g.args.push_back(std::move(t));
    return g;
  }
  static GroupTerm power(GroupTerm t, std::int64_t k) {
    GroupTerm g{Kind::Power, 0, k, {}};
    g.args.push_back(std::move(t));
    return g;
  }

  friend bool operator==(const GroupTerm&, const GroupTerm&) = default;
};

struct GroupEquation {
  GroupTerm lhs;
  GroupTerm rhs;
};

// expr := factor ('*'? factor)* ; factor := primary ('^' ['-'] k | "'")* ;
// primary := '(' expr ')' | '1' | identifier. Identifier resolution as for
// polyadic terms (generators are not used).
GroupTerm parse_group_term(std::string_view text, const TermSyntax& syntax, std::size_t line = 0);
GroupEquation parse_group_equation(std::string_view text, const TermSyntax& syntax,
                                   std::size_t line = 0);

std::string to_string(const GroupTerm& t, const TermSyntax& syntax);

Elem eval_group_term(const GroupTerm& t, std::span<const Elem> assignment, const FiniteGroup& g);

}  // namespace polyadic
