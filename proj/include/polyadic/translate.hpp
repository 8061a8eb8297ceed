#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyadic/post_cover.hpp"
#include "polyadic/term.hpp"

namespace polyadic {

// One syllable of an element of G* * F(X): a nonidentity cover element or
// a nonzero power of a variable.
struct Syllable {
  bool constant = false;
  std::uint32_t index = 0;  // cover element or variable
  std::int64_t exp = 0;     // variables only

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Free-product normal form: adjacent syllables differ in kind.
struct SyllableWord {
  std::vector<Syllable> syllables;
  unsigned arity = 0;

  // Sum of variable exponents plus cover grades of constants, mod n-1.
  unsigned height(const PostCover& cover) const;

  friend bool operator==(const SyllableWord&, const SyllableWord&) = default;
};

// Normal form of t in G[X]; two terms are equal in G[X] iff their forms are
// identical. Throws HeightViolation if the result is not in G[X] (a bug).
SyllableWord normalize_term(const Term& t, const PostCover& cover);

// Value in the cover when variables take the embedded values of assignment.
Elem eval_syllables(const SyllableWord& w, std::span<const Elem> assignment,
                    const PostCover& cover);

std::string to_string(const SyllableWord& w, const PostCover& cover,
                      const TermSyntax& syntax = {});

// Group term over ret_a(P) -> polyadic term: u v = f(u, a^(n-2), v) with
// products associated to the right, u^-1 = f(ā, u^(n-3), ū, ā), 1 = ā.
// Positive powers expand to repeated factors, negative ones to repeated
// inverses.
Term group_to_polyadic(const GroupTerm& t, Elem a, unsigned n);
Equation group_to_polyadic(const GroupEquation& e, Elem a, unsigned n);

// Polyadic term -> group term over the cover: f becomes the product of its
// arguments, skew the power 2-n, constants their embedded cover elements.
GroupTerm polyadic_to_group(const Term& t, const PostCover& cover);
GroupEquation polyadic_to_group(const Equation& e, const PostCover& cover);

}  // namespace polyadic
