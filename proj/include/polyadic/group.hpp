#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyadic/limits.hpp"

namespace polyadic {

// Elements are dense indices 0..|G|-1; names are metadata.
using Elem = std::uint32_t;

// A finite group given by its full Cayley table. Instances are produced by
// validate_group (or by constructions that call it) and are immutable.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return names_.size(); }
  Elem mul(Elem x, Elem y) const noexcept { return table_[x * order() + y]; }
  Elem inv(Elem x) const noexcept { return inverses_[x]; }
  Elem identity() const noexcept { return identity_; }
  Elem pow(Elem x, std::int64_t k) const;
  std::size_t element_order(Elem x) const;

  const std::string& label() const noexcept { return label_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Elem x) const { return names_.at(x); }
  std::optional<Elem> find(std::string_view name) const;

  // Row-major |G| x |G| table.
  std::span<const Elem> table() const noexcept { return table_; }

  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

  friend FiniteGroup validate_group(std::vector<std::string> names,
                                    std::vector<Elem> table, std::string label);

 private:
  std::string label_;
  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  Elem identity_ = 0;
};

// Checks range, Latin square, identity, inverses and associativity in that
// order. Each failure throws Error naming the first violating tuple.
FiniteGroup validate_group(std::vector<std::string> names,
                           std::vector<Elem> table, std::string label = {});

// Same, with the table given as rows.
FiniteGroup validate_group(std::vector<std::string> names,
                           const std::vector<std::vector<Elem>>& rows,
                           std::string label = {});

// A map G -> G stored as a full image array.
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Elem> images) : images_(std::move(images)) {}

  Elem operator()(Elem x) const noexcept { return images_[x]; }
  std::span<const Elem> images() const noexcept { return images_; }
  std::size_t size() const noexcept { return images_.size(); }

  // (this ∘ other)(x) = this(other(x))
  Automorphism compose(const Automorphism& other) const;
  Automorphism power(unsigned k) const;
  static Automorphism identity(std::size_t order);

  friend bool operator==(const Automorphism&, const Automorphism&) = default;

 private:
  std::vector<Elem> images_;
};

// Throws InvalidAutomorphism unless images is a bijective endomorphism of g.
Automorphism make_automorphism(const FiniteGroup& g, std::vector<Elem> images);
bool is_automorphism(const FiniteGroup& g, std::span<const Elem> images);
Automorphism inner_automorphism(const FiniteGroup& g, Elem c);

// A homomorphism between two groups, as an image array over the source.
struct Hom {
  std::vector<Elem> images;
  Elem operator()(Elem x) const noexcept { return images[x]; }
  friend auto operator<=>(const Hom&, const Hom&) = default;
};

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> images);

// G_u: same carrier, x * y = x u^-1 y.
struct TwistedGroup {
  Elem u = 0;
  FiniteGroup group;
};

TwistedGroup twisted_group(const FiniteGroup& g, Elem u);

// psi_u(x) = u theta(x) theta(u^-1), an automorphism of G_u.
Automorphism psi_u(const FiniteGroup& g, const Automorphism& theta, Elem u);

// G^k with componentwise product. Tuples are encoded in mixed radix with
// coordinate 0 most significant, so codes order tuples lexicographically.
class DirectPower {
 public:
  DirectPower(const FiniteGroup& base, unsigned k, const Limits& limits = {});

  const FiniteGroup& base() const noexcept { return base_; }
  unsigned exponent() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }

  std::uint64_t encode(std::span<const Elem> tuple) const;
  std::vector<Elem> decode(std::uint64_t code) const;
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t inv(std::uint64_t x) const;
  std::uint64_t identity() const;

  // theta applied in every coordinate.
  std::uint64_t apply(const Automorphism& theta, std::uint64_t x) const;
  std::uint64_t constant_tuple(Elem b) const;

  // Materializes the power as a FiniteGroup; needs order() within the
  // derived-group cap.
  FiniteGroup to_group(const Limits& limits = {}) const;

 private:
  FiniteGroup base_;
  unsigned k_;
  std::uint64_t order_;
};

// Greedy generating set: repeatedly adds the element of largest order not
// yet generated (ties broken by index).
std::vector<Elem> generating_set(const FiniteGroup& g);

// Closure of a set of elements under multiplication.
std::vector<Elem> generated_subgroup(const FiniteGroup& g,
                                     std::span<const Elem> gens);

// All homomorphisms G -> H, sorted by image array.
std::vector<Hom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h,
                                const Limits& limits = {});

// An isomorphism witness, or nullopt.
std::optional<Hom> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                  const Limits& limits = {});

// Extends an assignment of the generators (gens[i] -> images[i]) to a
// homomorphism G -> H, or nullopt if the assignment is inconsistent.
std::optional<Hom> extend_generator_map(const FiniteGroup& g,
                                        const FiniteGroup& h,
                                        std::span<const Elem> gens,
                                        std::span<const Elem> images);

// All subgroups as sorted element lists, sorted.
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g,
                                             const Limits& limits = {});

// A subset that is closed under the product, packaged as a group.
FiniteGroup subgroup_as_group(const FiniteGroup& g, std::span<const Elem> elems,
                              std::string label = {});

// Small standard groups used by tests, examples and the acceptance suite.
FiniteGroup cyclic_group(std::size_t k, std::string prefix = "");
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
// Permutations of {1..k} in lexicographic order, product (p q)(i) = p(q(i)).
FiniteGroup symmetric_group(unsigned k);

}  // namespace polyadic
