#pragma once

#include <cstddef>
#include <cstdint>

namespace polyadic {

// Size caps. Everything in this library is exhaustive, so each operation
// checks the relevant cap up front and throws SizeCapExceeded.
struct Limits {
  // Input groups with full multiplication tables.
  std::size_t max_group_order = 64;
  // Groups built internally (Post covers, coordinate groups, coset tables).
  std::size_t max_derived_order = 1024;
  // |G|^k for direct powers and |G|^m for solution enumeration.
  std::uint64_t max_power_size = 1'000'000;
  unsigned max_arity = 6;
  // Materialized n-ary tables, |G|^n entries.
  std::uint64_t max_table_entries = 1u << 22;
  // Exhaustive axiom checks, |G|^(2n-1) tuples.
  std::uint64_t max_axiom_tuples = 50'000'000;
  // Points of an algebraic set used as coordinates of a direct power.
  std::size_t max_points = 4096;
  // Stored tuple entries (elements x coordinates) during closure computations.
  std::uint64_t max_tuple_entries = 20'000'000;
  // Subset enumeration bound for irreducibility.
  std::size_t max_irreducible_points = 15;
  // Upper bound on generator-image combinations in homomorphism searches.
  std::uint64_t max_hom_candidates = 50'000'000;
  // Default coset cap for Todd-Coxeter.
  std::size_t coset_cap = 100'000;
  // Worker threads for partitionable searches; 0 means hardware concurrency.
  unsigned jobs = 1;
};

}  // namespace polyadic
