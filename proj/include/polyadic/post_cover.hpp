#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/free_word.hpp"
#include "polyadic/group.hpp"
#include "polyadic/limits.hpp"
#include "polyadic/polyadic_group.hpp"
#include "polyadic/term.hpp"

namespace polyadic {

// The covering group of an n-ary group on G x Z_(n-1):
//   (x,i)(y,j) = (x theta^i(y) b^floor((i+j)/(n-1)), (i+j) mod (n-1)).
// Element (g,i) has index i*|G| + g.
struct PostCover {
  FiniteGroup group;
  unsigned arity = 0;
  std::size_t base_order = 0;
  DerivedData data;  // the derived form the multiplication was built from

  Elem element(Elem g, unsigned grade) const noexcept {
    return static_cast<Elem>(grade * base_order + g);
  }
  Elem embed(Elem g) const noexcept { return element(g, 1); }
  unsigned grade(Elem c) const noexcept { return static_cast<unsigned>(c / base_order); }
  Elem component(Elem c) const noexcept { return static_cast<Elem>(c % base_order); }
  // The normal subgroup of grade-0 elements.
  std::vector<Elem> kernel() const;
};

struct PostCoverReport {
  // Properties in order: G is a coset of the normal subgroup R; R is
  // isomorphic to a retract; cover/R is Z_(n-1) via the grade; f is the
  // n-fold product of embedded elements; the embedded coset generates.
  std::array<bool, 5> holds{true, true, true, true, true};
  unsigned failed = 0;  // 1-based index of the first failed property, 0 if none
  std::vector<std::int64_t> witness;
  std::optional<Hom> retract_isomorphism;  // ret_0(P) -> R, from property 2

  bool ok() const noexcept { return failed == 0; }
};

PostCoverReport check_post_properties(const PolyadicGroup& p, const PostCover& cover,
                                      const Limits& limits = {});

// Builds the cover from derived_form(p) and checks all five properties.
// Throws PropertyFailure (witness: property index, then the tuple).
PostCover build_post_cover(const PolyadicGroup& p, const Limits& limits = {});

// The unique homomorphism h: cover -> H with h(g,1) = beta(g). Throws
// NotPolyadicHom if beta does not satisfy beta(f(x..)) = beta(x_1)...beta(x_n),
// Inconsistent if propagation hits a conflict.
Hom extend_hom_to_cover(const PolyadicGroup& p, const PostCover& cover,
                        std::span<const Elem> beta, const FiniteGroup& h);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
};

// Relations are pairs of coefficient-free terms whose variables are the
// generators (by position).
struct PolyadicPresentation {
  std::vector<std::string> generators;
  std::vector<Equation> relations;
};

struct CoverPresentation {
  GroupPresentation presentation;
  // Each relator or its inverse, whichever has positive height (for height
  // 0, whichever starts with a positive exponent).
  std::vector<FreeWord> positive_forms;
};

// f -> concatenation, skew -> power 2-n. Variables map to generator ids.
// Throws InvalidInput on constants.
FreeWord flatten_term(const Term& t, unsigned n);

// Relators u v^-1 for each relation (u, v). Throws EmptyGeneratorSet.
CoverPresentation presentation_to_group(const PolyadicPresentation& pres, unsigned n);

// Todd-Coxeter over the trivial subgroup. Elements are named by their
// shortlex-least coset representative. Throws CapExceeded when more than
// cap cosets are defined.
FiniteGroup coset_enumerate(const GroupPresentation& pres, std::size_t cap,
                            const Limits& limits = {});

}  // namespace polyadic
