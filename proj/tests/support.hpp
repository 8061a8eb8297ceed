#pragma once

// Shared fixtures for the unit tests and the acceptance runner: the catalog
// of small polyadic groups, brute-force oracles that use nothing but
// PolyadicGroup::eval and FiniteGroup::mul, and random generators.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polyadic/alggeo.hpp"
#include "polyadic/error.hpp"
#include "polyadic/group.hpp"
#include "polyadic/polyadic_group.hpp"
#include "polyadic/term.hpp"

namespace testing {

using namespace polyadic;

struct CatalogEntry {
  std::string name;
  // Empty when construction fails; error then holds the reason.
  std::optional<PolyadicGroup> group;
  std::string error;
};

inline Automorphism negation(const FiniteGroup& g) {
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.inv(x);
  return make_automorphism(g, images);
}

inline Elem element(const FiniteGroup& g, const std::string& name) {
  auto e = g.find(name);
  if (!e) throw Error(ErrorCode::InvalidInput, "no element " + name);
  return *e;
}

// der(S3, inner-by-(12), (12), 3): conjugation by a transposition squares
// to the identity, not to conjugation by (12), so construction fails.
inline CatalogEntry s3_catalog_entry() {
  CatalogEntry e{"der(S3,inner(12),(12),3)", std::nullopt, {}};
  FiniteGroup s3 = symmetric_group(3);
  Elem t = element(s3, "(1 2)");
  try {
    e.group = derive(s3, inner_automorphism(s3, t), t, 3);
  } catch (const Error& err) {
    e.error = err.what();
  }
  return e;
}

// A valid S3 instance of the same shape: theta = I_(12) works for n = 4.
inline PolyadicGroup s3_arity_four() {
  FiniteGroup s3 = symmetric_group(3);
  Elem t = element(s3, "(1 2)");
  PolyadicGroup p = derive(s3, inner_automorphism(s3, t), t, 4);
  p.set_label("der(S3,I_(12),(12),4)");
  return p;
}

inline std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  FiniteGroup z3 = cyclic_group(3), z4 = cyclic_group(4);
  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  out.push_back({"der(Z3,id,0,3)", derive(z3, Automorphism::identity(3), 0, 3), {}});
  out.push_back({"der(Z3,2x,0,3)", derive(z3, negation(z3), 0, 3), {}});
  out.push_back({"der(Z4,-x,0,3)", derive(z4, negation(z4), 0, 3), {}});
  out.push_back({"der(Z4,-x,2,3)", derive(z4, negation(z4), 2, 3), {}});
  out.push_back({"der(Z2xZ2,id,(1,1),4)",
                 derive(v4, Automorphism::identity(4), element(v4, "(c1,c1)"), 4), {}});
  out.push_back(s3_catalog_entry());
  for (auto& e : out)
    if (e.group) e.group->set_label(e.name);
  return out;
}

inline std::vector<PolyadicGroup> valid_catalog() {
  std::vector<PolyadicGroup> out;
  for (auto& e : catalog())
    if (e.group) out.push_back(*e.group);
  return out;
}

inline PolyadicGroup z3_neg() {
  FiniteGroup z3 = cyclic_group(3);
  return derive(z3, negation(z3), 0, 3);
}

// Calls fn on every tuple of length k over {0..order-1}.
inline void for_each_tuple(std::size_t order, unsigned k,
                           const std::function<void(const std::vector<Elem>&)>& fn) {
  std::vector<Elem> t(k, 0);
  while (true) {
    fn(t);
    unsigned i = k;
    while (i > 0) {
      --i;
      if (++t[i] < order) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

// ---- oracles ----

inline Elem brute_skew(const PolyadicGroup& p, Elem x) {
  std::vector<Elem> args(p.arity(), x);
  for (Elem y = 0; y < p.order(); ++y) {
    args.back() = y;
    if (p.eval(args) == x) return y;
  }
  throw Error(ErrorCode::NoSolution, "no skew element");
}

// Associativity at every pair of positions and unique solvability at
// every position, straight from the definitions.
inline bool brute_is_polyadic_group(const PolyadicGroup& p) {
  const unsigned n = p.arity();
  const std::size_t q = p.order();
  bool ok = true;
  for_each_tuple(q, 2 * n - 1, [&](const std::vector<Elem>& t) {
    if (!ok) return;
    std::optional<Elem> first;
    for (unsigned i = 0; i < n; ++i) {
      std::vector<Elem> inner(t.begin() + i, t.begin() + i + n);
      std::vector<Elem> outer(t.begin(), t.begin() + i);
      outer.push_back(p.eval(inner));
      outer.insert(outer.end(), t.begin() + i + n, t.end());
      Elem v = p.eval(outer);
      if (first && *first != v) ok = false;
      first = v;
    }
  });
  for_each_tuple(q, n, [&](const std::vector<Elem>& t) {
    if (!ok) return;
    for (unsigned pos = 0; pos < n; ++pos) {
      std::vector<Elem> args = t;
      std::size_t hits = 0;
      for (Elem y = 0; y < q; ++y) {
        args[pos] = y;
        if (p.eval(args) == t[0]) ++hits;
      }
      if (hits != 1) ok = false;
    }
  });
  return ok;
}

inline bool brute_preserves(const PolyadicGroup& p, const PolyadicGroup& q,
                            const std::vector<Elem>& map) {
  bool ok = true;
  for_each_tuple(p.order(), p.arity(), [&](const std::vector<Elem>& t) {
    if (!ok) return;
    std::vector<Elem> img(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) img[i] = map[t[i]];
    if (map[p.eval(t)] != q.eval(img)) ok = false;
  });
  return ok;
}

inline std::set<std::vector<Elem>> brute_homs(const PolyadicGroup& p, const PolyadicGroup& q) {
  std::set<std::vector<Elem>> out;
  for_each_tuple(q.order(), static_cast<unsigned>(p.order()), [&](const std::vector<Elem>& map) {
    if (brute_preserves(p, q, map)) out.insert(map);
  });
  return out;
}

inline bool brute_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  std::vector<Elem> perm(g.order());
  for (Elem i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (Elem x = 0; x < g.order() && ok; ++x)
      for (Elem y = 0; y < g.order() && ok; ++y)
        ok = perm[g.mul(x, y)] == h.mul(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<std::vector<Elem>> brute_polyadic_subgroups(const PolyadicGroup& p) {
  // In a finite n-ary group every nonempty f-closed subset is a subgroup.
  std::vector<std::vector<Elem>> out;
  const std::size_t q = p.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << q); ++mask) {
    std::vector<Elem> s;
    for (Elem x = 0; x < q; ++x)
      if (mask >> x & 1) s.push_back(x);
    bool closed = true;
    for_each_tuple(s.size(), p.arity(), [&](const std::vector<Elem>& t) {
      if (!closed) return;
      std::vector<Elem> args(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) args[i] = s[t[i]];
      closed = (mask >> p.eval(args) & 1) != 0;
    });
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> brute_solve(const PolyadicGroup& p, const EquationSystem& s) {
  std::vector<std::uint64_t> out;
  std::uint64_t code = 0;
  for_each_tuple(p.order(), s.vars, [&](const std::vector<Elem>& pt) {
    bool all = true;
    for (const auto& e : s.equations)
      if (eval_term(e.lhs, pt, p) != eval_term(e.rhs, pt, p)) {
        all = false;
        break;
      }
    if (all) out.push_back(code);
    ++code;
  });
  return out;
}

// Term functions on a list of points: the f-closure of the projections and
// constant tuples, computed naively with std::set.
inline std::set<std::vector<Elem>> brute_term_functions(const PolyadicGroup& p,
                                                        const std::vector<std::vector<Elem>>& pts,
                                                        unsigned vars, bool constants) {
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> gens;
  for (unsigned i = 0; i < vars; ++i) {
    std::vector<Elem> f;
    for (const auto& pt : pts) f.push_back(pt[i]);
    gens.push_back(f);
  }
  if (constants)
    for (Elem c = 0; c < p.order(); ++c) gens.push_back(std::vector<Elem>(pts.size(), c));
  for (auto& g : gens) seen.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> all(seen.begin(), seen.end());
    for_each_tuple(all.size(), p.arity(), [&](const std::vector<Elem>& pick) {
      std::vector<Elem> v(pts.size());
      std::vector<Elem> args(p.arity());
      for (std::size_t k = 0; k < pts.size(); ++k) {
        for (unsigned i = 0; i < p.arity(); ++i) args[i] = all[pick[i]][k];
        v[k] = p.eval(args);
      }
      if (seen.insert(v).second) grew = true;
    });
  }
  return seen;
}

// y lies in the closure of Z iff no two term functions that agree on Z
// separate y.
inline std::vector<std::uint64_t> brute_closure(const PolyadicGroup& p, const AlgebraicSet& z) {
  std::vector<std::vector<Elem>> base;
  for (auto c : z.points) base.push_back(decode_point(c, p.order(), z.vars));
  std::vector<std::uint64_t> out;
  std::uint64_t code = 0;
  for_each_tuple(p.order(), z.vars, [&](const std::vector<Elem>& y) {
    auto pts = base;
    pts.push_back(y);
    auto funcs = brute_term_functions(p, pts, z.vars, true);
    std::map<std::vector<Elem>, Elem> restriction;
    bool inside = true;
    for (const auto& f : funcs) {
      std::vector<Elem> head(f.begin(), f.end() - 1);
      auto [it, fresh] = restriction.emplace(head, f.back());
      if (!fresh && it->second != f.back()) inside = false;
    }
    if (inside) out.push_back(code);
    ++code;
  });
  return out;
}

// ---- random generators ----

inline Term random_term(std::mt19937_64& rng, unsigned depth, unsigned vars, unsigned n,
                        std::size_t constants) {
  std::uniform_int_distribution<int> pick(0, 9);
  int r = pick(rng);
  if (depth == 0 || r < 3) {
    if (constants > 0 && (vars == 0 || r == 0))
      return Term::constant(static_cast<Elem>(rng() % constants));
    return Term::variable(static_cast<std::uint32_t>(rng() % vars));
  }
  if (r < 5) return Term::skew(random_term(rng, depth - 1, vars, n, constants));
  std::vector<Term> args;
  for (unsigned i = 0; i < n; ++i) args.push_back(random_term(rng, depth - 1, vars, n, constants));
  return Term::apply(std::move(args));
}

inline EquationSystem random_system(std::mt19937_64& rng, unsigned vars, unsigned count,
                                    unsigned n, std::size_t constants, unsigned depth = 2) {
  EquationSystem s{vars, {}};
  for (unsigned i = 0; i < count; ++i)
    s.equations.push_back({random_term(rng, depth, vars, n, constants),
                           random_term(rng, depth, vars, n, constants)});
  return s;
}

}  // namespace testing
