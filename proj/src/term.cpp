#include "polyadic/term.hpp"

#include <algorithm>
#include <cstdlib>

#include "lexer.hpp"
#include "polyadic/error.hpp"

namespace polyadic {

namespace {

using detail::Lexer;
using detail::Token;

struct Resolved {
  bool is_variable;
  std::uint32_t index;
};

Resolved resolve(const std::string& name, const TermSyntax& syntax, const Lexer& lex) {
  if (syntax.generators) {
    const auto& gens = *syntax.generators;
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it == gens.end()) lex.fail("unknown generator '" + name + "'");
    return {true, static_cast<std::uint32_t>(it - gens.begin())};
  }
  if (name.size() > 1 && name[0] == 'x' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    unsigned long k = std::strtoul(name.c_str() + 1, nullptr, 10);
    if (k == 0) lex.fail("variables are numbered from x1");
    return {true, static_cast<std::uint32_t>(k - 1)};
  }
  if (syntax.constants) {
    const auto& names = *syntax.constants;
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return {false, static_cast<std::uint32_t>(it - names.begin())};
  }
  lex.fail("unknown constant '" + name + "'");
}

class TermParser {
 public:
  TermParser(std::string_view text, const TermSyntax& syntax, std::size_t line)
      : lex_(text, line), syntax_(syntax) {}

  Term parse_all() {
    Term t = term();
    finish();
    return t;
  }

  Equation parse_equation() {
    Term lhs = term();
    lex_.expect('=');
    Term rhs = term();
    finish();
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  void finish() {
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
  }

  Term term() {
    if (lex_.accept('~')) return Term::skew(term());
    if (lex_.peek().kind == Token::Kind::Ident || lex_.peek().kind == Token::Kind::Number) {
      Token t = lex_.take();
      if (t.text == "f" && lex_.at_punct('(')) return application();
      auto r = resolve(t.text, syntax_, lex_);
      return r.is_variable ? Term::variable(r.index) : Term::constant(r.index);
    }
    lex_.fail("expected a term");
  }

  Term application() {
    lex_.expect('(');
    std::vector<Term> args;
    do {
      Term a = term();
      std::size_t copies = 1;
      if (lex_.accept('^')) {
        lex_.expect('(');
        if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected a repetition count");
        copies = std::strtoul(lex_.take().text.c_str(), nullptr, 10);
        lex_.expect(')');
      }
      for (std::size_t k = 0; k < copies; ++k) args.push_back(a);
    } while (lex_.accept(','));
    lex_.expect(')');
    if (syntax_.arity != 0 && args.size() != syntax_.arity)
      lex_.fail("f takes " + std::to_string(syntax_.arity) + " arguments, got " +
                std::to_string(args.size()));
    return Term::apply(std::move(args));
  }

  Lexer lex_;
  const TermSyntax& syntax_;
};

class GroupTermParser {
 public:
  GroupTermParser(std::string_view text, const TermSyntax& syntax, std::size_t line)
      : lex_(text, line), syntax_(syntax) {}

  GroupTerm parse_all() {
    GroupTerm t = expr();
    finish();
    return t;
  }

  GroupEquation parse_equation() {
    GroupTerm lhs = expr();
    lex_.expect('=');
    GroupTerm rhs = expr();
    finish();
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  void finish() {
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
  }

  bool starts_factor() const {
    const auto& t = lex_.peek();
    return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Number || lex_.at_punct('(');
  }

  GroupTerm expr() {
    std::vector<GroupTerm> factors;
    factors.push_back(factor());
    while (true) {
      if (lex_.accept('*')) {
        factors.push_back(factor());
      } else if (starts_factor()) {
        factors.push_back(factor());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    return GroupTerm::product(std::move(factors));
  }

  GroupTerm factor() {
    GroupTerm base = primary();
    while (true) {
      if (lex_.accept('\'')) {
        base = GroupTerm::inverse(std::move(base));
      } else if (lex_.accept('^')) {
        bool neg = lex_.accept('-');
        if (lex_.peek().kind != Token::Kind::Number) lex_.fail("expected exponent");
        std::int64_t k = std::strtoll(lex_.take().text.c_str(), nullptr, 10);
        if (neg && k == 1)
          base = GroupTerm::inverse(std::move(base));
        else
          base = GroupTerm::power(std::move(base), neg ? -k : k);
      } else {
        return base;
      }
    }
  }

  GroupTerm primary() {
    if (lex_.accept('(')) {
      GroupTerm t = expr();
      lex_.expect(')');
      return t;
    }
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number && t.text == "1") {
      lex_.take();
      return GroupTerm::identity();
    }
    if (t.kind == Token::Kind::Ident || t.kind == Token::Kind::Number) {
      std::string name = lex_.take().text;
      auto r = resolve(name, syntax_, lex_);
      return r.is_variable ? GroupTerm::variable(r.index) : GroupTerm::constant(r.index);
    }
    lex_.fail("expected a factor");
  }

  Lexer lex_;
  const TermSyntax& syntax_;
};

std::string variable_name(std::uint32_t i, const TermSyntax& syntax) {
  if (syntax.generators && i < syntax.generators->size()) return (*syntax.generators)[i];
  return "x" + std::to_string(i + 1);
}

std::string constant_name(std::uint32_t i, const TermSyntax& syntax) {
  if (syntax.constants && i < syntax.constants->size()) return (*syntax.constants)[i];
  return "#" + std::to_string(i);
}

}  // namespace

bool Term::is_coefficient_free() const {
  if (kind == Kind::Constant) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_coefficient_free(); });
}

std::uint32_t Term::variable_bound() const {
  if (kind == Kind::Variable) return index + 1;
  std::uint32_t m = 0;
  for (const auto& a : args) m = std::max(m, a.variable_bound());
  return m;
}

Term parse_term(std::string_view text, const TermSyntax& syntax, std::size_t line) {
  return TermParser(text, syntax, line).parse_all();
}

Equation parse_equation(std::string_view text, const TermSyntax& syntax, std::size_t line) {
  return TermParser(text, syntax, line).parse_equation();
}

std::string to_string(const Term& t, const TermSyntax& syntax) {
  switch (t.kind) {
    case Term::Kind::Variable: return variable_name(t.index, syntax);
    case Term::Kind::Constant: return constant_name(t.index, syntax);
    case Term::Kind::Skew: return "~" + to_string(t.args.front(), syntax);
    case Term::Kind::Apply: {
      std::string out = "f(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(t.args[i], syntax);
      }
      return out + ")";
    }
  }
  return {};
}

std::string to_string(const Equation& e, const TermSyntax& syntax) {
  return to_string(e.lhs, syntax) + " = " + to_string(e.rhs, syntax);
}

Elem eval_term(const Term& t, std::span<const Elem> assignment, const PolyadicGroup& p) {
  switch (t.kind) {
    case Term::Kind::Variable:
      if (t.index >= assignment.size())
        throw Error(ErrorCode::UnboundVariable, "x" + std::to_string(t.index + 1) + " is unbound",
                    {std::int64_t(t.index)});
      return assignment[t.index];
    case Term::Kind::Constant:
      if (t.index >= p.order()) throw Error(ErrorCode::IndexOutOfRange, "constant out of range");
      return t.index;
    case Term::Kind::Skew: return skew(p, eval_term(t.args.front(), assignment, p));
    case Term::Kind::Apply: {
      if (t.args.size() != p.arity())
        throw Error(ErrorCode::ArityMismatch, "f applied to " + std::to_string(t.args.size()) +
                                                  " arguments in an " + std::to_string(p.arity()) +
                                                  "-ary group");
      std::vector<Elem> vals(t.args.size());
      for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = eval_term(t.args[i], assignment, p);
      return p.eval_unchecked(vals.data());
    }
  }
  return 0;
}

GroupTerm parse_group_term(std::string_view text, const TermSyntax& syntax, std::size_t line) {
  return GroupTermParser(text, syntax, line).parse_all();
}

GroupEquation parse_group_equation(std::string_view text, const TermSyntax& syntax,
                                   std::size_t line) {
  return GroupTermParser(text, syntax, line).parse_equation();
}

std::string to_string(const GroupTerm& t, const TermSyntax& syntax) {
  auto wrapped = [&](const GroupTerm& u) {
    bool atomic = u.kind == GroupTerm::Kind::Variable || u.kind == GroupTerm::Kind::Constant ||
                  u.kind == GroupTerm::Kind::Identity;
    return atomic ? to_string(u, syntax) : "(" + to_string(u, syntax) + ")";
  };
  switch (t.kind) {
    case GroupTerm::Kind::Variable: return variable_name(t.index, syntax);
    case GroupTerm::Kind::Constant: return constant_name(t.index, syntax);
    case GroupTerm::Kind::Identity: return "1";
    case GroupTerm::Kind::Inverse: return wrapped(t.args.front()) + "^-1";
    case GroupTerm::Kind::Power: return wrapped(t.args.front()) + "^" + std::to_string(t.exponent);
    case GroupTerm::Kind::Product: {
      std::string out;
      for (const auto& f : t.args) {
        if (!out.empty()) out += "*";
        out += f.kind == GroupTerm::Kind::Product ? "(" + to_string(f, syntax) + ")"
                                                  : to_string(f, syntax);
      }
      return out;
    }
  }
  return {};
}

Elem eval_group_term(const GroupTerm& t, std::span<const Elem> assignment, const FiniteGroup& g) {
  switch (t.kind) {
    case GroupTerm::Kind::Variable:
      if (t.index >= assignment.size())
        throw Error(ErrorCode::UnboundVariable, "x" + std::to_string(t.index + 1) + " is unbound",
                    {std::int64_t(t.index)});
      return assignment[t.index];
    case GroupTerm::Kind::Constant:
      if (t.index >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "constant out of range");
      return t.index;
    case GroupTerm::Kind::Identity: return g.identity();
    case GroupTerm::Kind::Inverse: return g.inv(eval_group_term(t.args.front(), assignment, g));
    case GroupTerm::Kind::Power:
      return g.pow(eval_group_term(t.args.front(), assignment, g), t.exponent);
    case GroupTerm::Kind::Product: {
      Elem acc = g.identity();
      for (const auto& f : t.args) acc = g.mul(acc, eval_group_term(f, assignment, g));
      return acc;
    }
  }
  return 0;
}

}  // namespace polyadic
