#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadic/group.hpp"
#include "polyadic/limits.hpp"

namespace polyadic {

// (G, theta, b) with theta(b) = b and theta^(n-1) = conjugation by b.
struct DerivedData {
  FiniteGroup group;
  Automorphism theta;
  Elem b = 0;
};

// An n-ary group. The derived representation evaluates
//   f(x_1..x_n) = x_1 theta(x_2) theta^2(x_3) ... theta^(n-1)(x_n) b
// lazily; the table representation stores all |G|^n values row-major.
class PolyadicGroup {
 public:
  PolyadicGroup() = default;

  unsigned arity() const noexcept { return n_; }
  std::size_t order() const noexcept { return names_.size(); }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  std::optional<Elem> find(std::string_view name) const;

  bool is_derived() const noexcept { return derived_.has_value(); }
  // Null for the table representation.
  const DerivedData* derived() const noexcept { return derived_ ? &*derived_ : nullptr; }
  // Empty for the derived representation.
  std::span<const Elem> table() const noexcept { return table_; }

  // Throws ArityMismatch unless xs.size() == arity().
  Elem eval(std::span<const Elem> xs) const;
  // xs must point at arity() elements.
  Elem eval_unchecked(const Elem* xs) const noexcept;

  // n-ary table without any axiom checks; verify_axioms decides validity.
  static PolyadicGroup from_table(std::vector<std::string> names, unsigned n,
                                  std::vector<Elem> table, std::string label = {},
                                  const Limits& limits = {});

  friend PolyadicGroup derive(FiniteGroup, Automorphism, Elem, unsigned, const Limits&);

 private:
  unsigned n_ = 0;
  std::string label_;
  std::vector<std::string> names_;
  std::optional<DerivedData> derived_;
  std::vector<std::vector<Elem>> theta_powers_;  // theta^0 .. theta^(n-1)
  std::vector<Elem> table_;
};

// der_{theta,b}(G). Checks theta(b) = b (ConditionOneFails) and
// theta^(n-1)(x) = b x b^-1 for all x (ConditionTwoFails).
PolyadicGroup derive(FiniteGroup g, Automorphism theta, Elem b, unsigned n,
                     const Limits& limits = {});

// The same operation as a materialized table.
PolyadicGroup tabulate(const PolyadicGroup& p, const Limits& limits = {});

// Derived data of p: its own if derived, otherwise recovered over anchor 0.
DerivedData derived_form(const PolyadicGroup& p, const Limits& limits = {});

struct AxiomReport {
  bool associative = true;
  std::vector<Elem> associativity_witness;  // 2n-1 arguments
  unsigned position_i = 0, position_j = 0;  // 1-based inner positions

  bool solvable = true;   // every equation has a solution
  bool unique = true;     // and only one
  unsigned solve_position = 0;       // 1-based unknown position
  std::vector<Elem> solve_context;   // the other n-1 arguments
  Elem solve_target = 0;

  std::uint64_t tuples_checked = 0;

  bool ok() const noexcept { return associative && solvable && unique; }
};

// Exhaustive check of associativity over all position pairs and of unique
// solvability in every position. Mathematical failures are reported, never
// thrown; witnesses are lexicographically least.
AxiomReport verify_axioms(const PolyadicGroup& p, const Limits& limits = {});

// The unique y with f(x, ..., x, y) = x (n-1 copies of x).
Elem skew(const PolyadicGroup& p, Elem x);
std::vector<Elem> skew_table(const PolyadicGroup& p);

struct DornteReport {
  bool holds = true;
  Elem x = 0, y = 0;
  unsigned i = 0;     // 2 <= i <= n
  bool left = true;   // which of the two identities failed
};

// f(x^(i-2), x̄, x^(n-i), y) = y and f(y, x^(n-i), x̄, x^(i-2)) = y.
DornteReport dornte_check(const PolyadicGroup& p);

// x * y = f(x, a^(n-2), y). Identity is skew(a).
FiniteGroup retract(const PolyadicGroup& p, Elem a);

std::optional<Elem> nary_identity(const PolyadicGroup& p);

// Recovers (ret_a, theta_a, b_a) with theta_a(x) = f(ā, x, a^(n-2)) and
// b_a = f(ā^(n)), and checks that it reproduces f on every tuple.
DerivedData hosszu_gloskin(const PolyadicGroup& p, Elem a, const Limits& limits = {});

// All polyadic subgroups, as sorted element lists, sorted. Built from the
// psi_u-invariant subgroups H of G_u that also contain f(u^(n)).
std::vector<std::vector<Elem>> polyadic_subgroups(const PolyadicGroup& p,
                                                  const Limits& limits = {});

// psi = R_a ∘ phi.
struct PolyadicHom {
  Elem a = 0;
  Hom phi;
  std::vector<Elem> images;
};

// Homomorphisms P -> Q via pairs (a, phi) satisfying
//   h(a^(n)) = phi(b) * a   and   phi ∘ theta = I_a ∘ eta ∘ phi,
// deduplicated by the induced map and sorted by images.
std::vector<PolyadicHom> polyadic_homs(const PolyadicGroup& p, const PolyadicGroup& q,
                                       const Limits& limits = {});

}  // namespace polyadic
