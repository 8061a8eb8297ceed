#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/limits.hpp"
#include "polyadic/polyadic_group.hpp"
#include "polyadic/term.hpp"

namespace polyadic {

struct EquationSystem {
  unsigned vars = 0;  // m
  std::vector<Equation> equations;
};

// Points of G^m are encoded in base |G| with coordinate 0 most significant.
std::uint64_t encode_point(std::span<const Elem> point, std::size_t order);
std::vector<Elem> decode_point(std::uint64_t code, std::size_t order, unsigned m);
// |G|^m, or SizeCapExceeded beyond limits.max_power_size.
std::uint64_t space_size(std::size_t order, unsigned m, const Limits& limits = {});

struct AlgebraicSet {
  unsigned vars = 0;
  std::vector<std::uint64_t> points;  // sorted codes

  bool contains(std::uint64_t code) const;
  friend bool operator==(const AlgebraicSet&, const AlgebraicSet&) = default;
};

AlgebraicSet full_space(const PolyadicGroup& p, unsigned m, const Limits& limits = {});

// V(S) by exhaustive enumeration, partitioned over limits.jobs workers.
// Throws UnboundVariable if an equation mentions x_k with k > m.
AlgebraicSet solve(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits = {});

// Values of t at every point of Y, in point order.
std::vector<Elem> term_function(const PolyadicGroup& p, const AlgebraicSet& y, const Term& t);

// (t1, t2) in Rad(Y): t1 and t2 agree on every point of Y.
bool radical_member(const PolyadicGroup& p, const AlgebraicSet& y, const Term& t1, const Term& t2);

// Term functions on Y: the polyadic subgroup of the direct power
// der(G^|Y|) generated by the projections and, optionally, the diagonal
// constants. Elements are |Y|-tuples sorted lexicographically.
struct CoordinateGroup {
  unsigned vars = 0;
  std::vector<std::uint64_t> points;
  std::size_t count = 0;
  std::vector<Elem> cells;                // count x points.size()
  std::vector<std::size_t> projections;   // element index of x_i
  std::vector<std::size_t> constants;     // element index of the constant g, if present

  std::size_t width() const noexcept { return points.size(); }
  std::span<const Elem> element(std::size_t i) const {
    return {cells.data() + i * width(), width()};
  }
  std::optional<std::size_t> find(std::span<const Elem> tuple) const;
};

CoordinateGroup coordinate_group(const PolyadicGroup& p, const AlgebraicSet& y,
                                 bool with_constants = true, const Limits& limits = {});

// The coordinate group as a polyadic group in derived form (recovered over
// its first element); element names are the tuples.
PolyadicGroup coordinate_polyadic(const PolyadicGroup& p, const CoordinateGroup& h,
                                  const Limits& limits = {});

// Searches u in H such that H is an ordinary subgroup of the twisted power
// (G^|Y|)_u, closed under psi_u, and contains f(u^(n)).
struct StructureReport {
  bool found = false;
  std::size_t u = 0;  // element index in H
  std::size_t candidates_tried = 0;
};
StructureReport structure_check(const PolyadicGroup& p, const CoordinateGroup& h);

// V(Rad(Z)).
AlgebraicSet closure(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits = {});
bool is_algebraic(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits = {});

struct IrreducibilityReport {
  bool irreducible = true;
  // A covering pair of proper algebraic subsets when reducible.
  AlgebraicSet first, second;
  std::size_t algebraic_subsets = 0;
};
// Needs |Y| <= limits.max_irreducible_points.
IrreducibilityReport is_irreducible(const PolyadicGroup& p, const AlgebraicSet& y,
                                    const Limits& limits = {});

struct MinimalSubsystem {
  EquationSystem system;
  std::vector<std::size_t> kept;  // indices into the input system
};
// One greedy pass; no remaining equation can be dropped without changing V.
MinimalSubsystem minimal_subsystem(const PolyadicGroup& p, const EquationSystem& s,
                                   const Limits& limits = {});

// Compares the Post cover of Gamma_G(S) with Gamma_{G*}(S), the group of
// word functions on V_{G*}(S), for a coefficient-free system S.
struct CoverComparison {
  std::size_t solutions_g = 0;       // |V_G(S)|
  std::size_t gamma_g_order = 0;     // |Gamma_G(S)|
  std::size_t cover_order = 0;       // |Gamma_G(S)*|
  std::size_t solutions_cover = 0;   // |V_{G*}(S)|
  std::size_t gamma_cover_order = 0; // |Gamma_{G*}(S)|
  bool epimorphism = false;
  std::vector<Elem> images;          // cover element -> Gamma_{G*} element, when found
  // On failure: two products of the generators x_1..x_m that are equal in
  // the cover of Gamma_G(S) but differ as word functions on V_{G*}(S).
  std::string witness_left, witness_right;
};
CoverComparison compare_cover_coordinates(const PolyadicGroup& p, const EquationSystem& s,
                                const Limits& limits = {});

}  // namespace polyadic
