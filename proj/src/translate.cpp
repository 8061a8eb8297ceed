#include "polyadic/translate.hpp"

#include "polyadic/error.hpp"

namespace polyadic {

namespace {

void push(std::vector<Syllable>& out, Syllable s, const FiniteGroup& g) {
  if (!out.empty() && out.back().constant == s.constant &&
      (s.constant || out.back().index == s.index)) {
    Syllable& top = out.back();
    if (s.constant) {
      top.index = g.mul(top.index, s.index);
      if (top.index == g.identity()) out.pop_back();
    } else {
      top.exp += s.exp;
      if (top.exp == 0) out.pop_back();
    }
    return;
  }
  if (s.constant ? s.index == g.identity() : s.exp == 0) return;
  out.push_back(s);
}

std::vector<Syllable> invert(const std::vector<Syllable>& w, const FiniteGroup& g) {
  std::vector<Syllable> out(w.rbegin(), w.rend());
  for (auto& s : out) {
    if (s.constant)
      s.index = g.inv(s.index);
    else
      s.exp = -s.exp;
  }
  return out;
}

std::vector<Syllable> normalize(const Term& t, const PostCover& cover) {
  const FiniteGroup& g = cover.group;
  switch (t.kind) {
    case Term::Kind::Variable: return {Syllable{false, t.index, 1}};
    case Term::Kind::Constant: {
      if (t.index >= cover.base_order)
        throw Error(ErrorCode::IndexOutOfRange, "constant out of range", {t.index});
      std::vector<Syllable> out;
      push(out, Syllable{true, cover.embed(t.index), 0}, g);
      return out;
    }
    case Term::Kind::Apply: {
      if (t.args.size() != cover.arity)
        throw Error(ErrorCode::ArityMismatch, "f applied to " + std::to_string(t.args.size()) +
                                                  " arguments, expected " +
                                                  std::to_string(cover.arity));
      std::vector<Syllable> out;
      for (const auto& a : t.args)
        for (const auto& s : normalize(a, cover)) push(out, s, g);
      return out;
    }
    case Term::Kind::Skew: {
      auto base = invert(normalize(t.args.front(), cover), g);
      std::vector<Syllable> out;
      for (unsigned k = 0; k + 2 < cover.arity; ++k)
        for (const auto& s : base) push(out, s, g);
      return out;
    }
  }
  return {};
}

// Expands powers inside a product into repeated factors.
void collect_factors(const GroupTerm& t, std::vector<GroupTerm>& out) {
  if (t.kind == GroupTerm::Kind::Power) {
    const GroupTerm& base = t.args.front();
    if (t.exponent == 0) {
      out.push_back(GroupTerm::identity());
      return;
    }
    std::int64_t k = t.exponent < 0 ? -t.exponent : t.exponent;
    for (std::int64_t i = 0; i < k; ++i)
      out.push_back(t.exponent > 0 ? base : GroupTerm::inverse(base));
    return;
  }
  out.push_back(t);
}

Term translate(const GroupTerm& t, Elem a, unsigned n);

Term right_product(const std::vector<GroupTerm>& factors, std::size_t from, Elem a, unsigned n) {
  Term head = translate(factors[from], a, n);
  if (from + 1 == factors.size()) return head;
  std::vector<Term> args{std::move(head)};
  for (unsigned k = 0; k + 2 < n; ++k) args.push_back(Term::constant(a));
  args.push_back(right_product(factors, from + 1, a, n));
  return Term::apply(std::move(args));
}

Term translate(const GroupTerm& t, Elem a, unsigned n) {
  switch (t.kind) {
    case GroupTerm::Kind::Variable: return Term::variable(t.index);
    case GroupTerm::Kind::Constant: return Term::constant(t.index);
    case GroupTerm::Kind::Identity: return Term::skew(Term::constant(a));
    case GroupTerm::Kind::Inverse: {
      Term u = translate(t.args.front(), a, n);
      Term a_bar = Term::skew(Term::constant(a));
      std::vector<Term> args{a_bar};
      for (unsigned k = 0; k + 3 < n; ++k) args.push_back(u);
      args.push_back(Term::skew(u));
      args.push_back(a_bar);
      return Term::apply(std::move(args));
    }
    case GroupTerm::Kind::Power:
    case GroupTerm::Kind::Product: {
      std::vector<GroupTerm> factors;
      if (t.kind == GroupTerm::Kind::Power)
        collect_factors(t, factors);
      else
        for (const auto& f : t.args) collect_factors(f, factors);
      if (factors.empty()) return Term::skew(Term::constant(a));
      return right_product(factors, 0, a, n);
    }
  }
  return {};
}

}  // namespace

unsigned SyllableWord::height(const PostCover& cover) const {
  const std::int64_t m = std::int64_t(arity) - 1;
  std::int64_t h = 0;
  for (const auto& s : syllables) h += s.constant ? std::int64_t(cover.grade(s.index)) : s.exp;
  return static_cast<unsigned>(((h % m) + m) % m);
}

SyllableWord normalize_term(const Term& t, const PostCover& cover) {
  SyllableWord w{normalize(t, cover), cover.arity};
  if (w.height(cover) != 1 % (cover.arity - 1))
    throw Error(ErrorCode::HeightViolation, "normal form has height " +
                                                std::to_string(w.height(cover)) + " mod n-1");
  return w;
}

Elem eval_syllables(const SyllableWord& w, std::span<const Elem> assignment,
                    const PostCover& cover) {
  const FiniteGroup& g = cover.group;
  Elem acc = g.identity();
  for (const auto& s : w.syllables) {
    if (s.constant) {
      acc = g.mul(acc, s.index);
    } else {
      if (s.index >= assignment.size())
        throw Error(ErrorCode::UnboundVariable, "x" + std::to_string(s.index + 1) + " is unbound",
                    {std::int64_t(s.index)});
      acc = g.mul(acc, g.pow(cover.embed(assignment[s.index]), s.exp));
    }
  }
  return acc;
}

std::string to_string(const SyllableWord& w, const PostCover& cover, const TermSyntax& syntax) {
  if (w.syllables.empty()) return "1";
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += " * ";
    if (s.constant) {
      out += "[" + cover.group.name(s.index) + "]";
    } else {
      out += syntax.generators && s.index < syntax.generators->size()
                 ? (*syntax.generators)[s.index]
                 : "x" + std::to_string(s.index + 1);
      if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
  }
  return out;
}

Term group_to_polyadic(const GroupTerm& t, Elem a, unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "arity must be at least 3");
  return translate(t, a, n);
}

Equation group_to_polyadic(const GroupEquation& e, Elem a, unsigned n) {
  return {group_to_polyadic(e.lhs, a, n), group_to_polyadic(e.rhs, a, n)};
}

GroupTerm polyadic_to_group(const Term& t, const PostCover& cover) {
  switch (t.kind) {
    case Term::Kind::Variable: return GroupTerm::variable(t.index);
    case Term::Kind::Constant: return GroupTerm::constant(cover.embed(t.index));
    case Term::Kind::Skew:
      return GroupTerm::power(polyadic_to_group(t.args.front(), cover),
                              2 - std::int64_t(cover.arity));
    case Term::Kind::Apply: {
      std::vector<GroupTerm> factors;
      for (const auto& a : t.args) factors.push_back(polyadic_to_group(a, cover));
      return GroupTerm::product(std::move(factors));
    }
  }
  return {};
}

GroupEquation polyadic_to_group(const Equation& e, const PostCover& cover) {
  return {polyadic_to_group(e.lhs, cover), polyadic_to_group(e.rhs, cover)};
}

}  // namespace polyadic
