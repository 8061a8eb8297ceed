#include "polyadic/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "polyadic/error.hpp"

namespace polyadic {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

using Witness = std::vector<std::int64_t>;

std::string tuple_text(std::initializer_list<std::int64_t> values) {
  std::string out = "(";
  bool first = true;
  for (auto v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + ")";
}

// Bitset over element indices, used for subgroup deduplication.
using Mask = std::vector<std::uint64_t>;

Mask make_mask(std::size_t order, std::span<const Elem> elems) {
  Mask m((order + 63) / 64, 0);
  for (Elem e : elems) m[e / 64] |= std::uint64_t{1} << (e % 64);
  return m;
}

bool mask_has(const Mask& m, Elem e) {
  return (m[e / 64] >> (e % 64)) & 1u;
}

// Breadth-first extension of a partial generator assignment to the subgroup
// those generators generate. Returns the image array (kUnset outside the
// subgroup) or nullopt on a conflict.
std::optional<std::vector<Elem>> propagate(const FiniteGroup& g,
                                           const FiniteGroup& h,
                                           std::span<const Elem> gens,
                                           std::span<const Elem> images) {
  std::vector<Elem> map(g.order(), kUnset);
  std::vector<Elem> queue{g.identity()};
  map[g.identity()] = h.identity();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elem x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem hy = h.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = hy;
        queue.push_back(y);
      } else if (map[y] != hy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> profile(g.order() + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) ++profile[g.element_order(x)];
  return profile;
}

// Depth-first search over generator images shared by the homomorphism and
// isomorphism searches.
class HomSearch {
 public:
  HomSearch(const FiniteGroup& g, const FiniteGroup& h, bool bijective,
            const Limits& limits)
      : g_(g), h_(h), bijective_(bijective), gens_(generating_set(g)) {
    std::vector<std::size_t> h_orders(h.order());
    for (Elem y = 0; y < h.order(); ++y) h_orders[y] = h.element_order(y);
    std::uint64_t combos = 1;
    for (Elem s : gens_) {
      std::size_t ord = g.element_order(s);
      std::vector<Elem> cand;
      for (Elem y = 0; y < h.order(); ++y) {
        bool ok = bijective ? h_orders[y] == ord : ord % h_orders[y] == 0;
        if (ok) cand.push_back(y);
      }
      combos = combos > limits.max_hom_candidates / std::max<std::size_t>(cand.size(), 1)
                   ? limits.max_hom_candidates + 1
                   : combos * std::max<std::size_t>(cand.size(), 1);
      candidates_.push_back(std::move(cand));
    }
    if (combos > limits.max_hom_candidates)
      throw Error(ErrorCode::SizeCapExceeded,
                  "homomorphism search space exceeds max_hom_candidates");
  }

  // Calls visit(map) for every complete solution; visit returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    std::vector<Elem> images;
    images.reserve(gens_.size());
    search(images, visit);
  }

 private:
  template <class Visit>
  bool search(std::vector<Elem>& images, Visit& visit) {
    std::size_t k = images.size();
    if (k == gens_.size()) {
      auto map = propagate(g_, h_, gens_, images);
      if (!map) return true;
      return visit(*map);
    }
    for (Elem y : candidates_[k]) {
      images.push_back(y);
      auto partial = propagate(g_, h_, std::span(gens_).first(k + 1), images);
      bool keep = partial.has_value();
      if (keep && bijective_) {
        std::vector<bool> hit(h_.order(), false);
        for (Elem v : *partial) {
          if (v == kUnset) continue;
          if (hit[v]) {
            keep = false;
            break;
          }
          hit[v] = true;
        }
      }
      if (keep && !search(images, visit)) return false;
      images.pop_back();
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  bool bijective_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
};

}  // namespace

Elem FiniteGroup::pow(Elem x, std::int64_t k) const {
  Elem base = k < 0 ? inv(x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  e %= element_order(x);
  Elem acc = identity_;
  while (e > 0) {
    if (e & 1u) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::size_t FiniteGroup::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::optional<Elem> FiniteGroup::find(std::string_view name) const {
  for (Elem i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order(); ++x)
    for (Elem y = x + 1; y < order(); ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

FiniteGroup validate_group(std::vector<std::string> names,
                           std::vector<Elem> table, std::string label) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "group has no elements");
  if (table.size() != n * n)
    throw Error(ErrorCode::IndexOutOfRange, "table is not " + std::to_string(n) +
                                                " x " + std::to_string(n));
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second)
        throw Error(ErrorCode::InvalidInput, "duplicate element name '" + s + "'");
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "entry " + tuple_text({std::int64_t(i / n), std::int64_t(i % n)}) +
                      " out of range",
                  {std::int64_t(i / n), std::int64_t(i % n)});

  const std::vector<Elem>* cells = &table;
  auto at = [&](std::size_t x, std::size_t y) { return (*cells)[x * n + y]; };

  std::vector<std::size_t> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t y = 0; y < n; ++y) {
      Elem v = at(x, y);
      if (seen[v] != n)
        throw Error(ErrorCode::NotLatinSquare,
                    "row " + std::to_string(x) + " repeats value " + std::to_string(v) +
                        " at columns " + std::to_string(seen[v]) + " and " + std::to_string(y),
                    {std::int64_t(x), std::int64_t(seen[v]), std::int64_t(y)});
      seen[v] = y;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t x = 0; x < n; ++x) {
      Elem v = at(x, y);
      if (seen[v] != n)
        throw Error(ErrorCode::NotLatinSquare,
                    "column " + std::to_string(y) + " repeats value " + std::to_string(v) +
                        " at rows " + std::to_string(seen[v]) + " and " + std::to_string(x),
                    {std::int64_t(seen[v]), std::int64_t(x), std::int64_t(y)});
      seen[v] = x;
    }
  }

  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) identity = e;
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity");

  std::vector<Elem> inverses(n, kUnset);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y)
      if (at(x, y) == *identity && at(y, x) == *identity) {
        inverses[x] = y;
        break;
      }
    if (inverses[x] == kUnset)
      throw Error(ErrorCode::NoInverse, "element " + std::to_string(x) + " has no inverse",
                  {std::int64_t(x)});
  }

  FiniteGroup g;
  g.label_ = std::move(label);
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.inverses_ = std::move(inverses);
  g.identity_ = *identity;
  cells = &g.table_;

  // Associativity. Small tables are checked on every triple; larger ones use
  // Light's test, which only needs the middle element to range over a
  // generating set.
  std::vector<Elem> middles;
  if (n <= 256) {
    middles.resize(n);
    std::iota(middles.begin(), middles.end(), Elem{0});
  } else {
    middles = generating_set(g);
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y : middles)
      for (Elem z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw Error(ErrorCode::NotAssociative,
                      "(xy)z != x(yz) at " + tuple_text({x, y, z}),
                      {std::int64_t(x), std::int64_t(y), std::int64_t(z)});
  return g;
}

FiniteGroup validate_group(std::vector<std::string> names,
                           const std::vector<std::vector<Elem>>& rows,
                           std::string label) {
  std::vector<Elem> flat;
  for (const auto& row : rows) {
    if (row.size() != rows.size())
      throw Error(ErrorCode::IndexOutOfRange, "table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  if (rows.size() != names.size())
    throw Error(ErrorCode::IndexOutOfRange, "table size does not match element count");
  return validate_group(std::move(names), std::move(flat), std::move(label));
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  std::vector<Elem> out(other.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other.images_[i]];
  return Automorphism(std::move(out));
}

Automorphism Automorphism::power(unsigned k) const {
  Automorphism acc = identity(size());
  for (unsigned i = 0; i < k; ++i) acc = compose(acc);
  return acc;
}

Automorphism Automorphism::identity(std::size_t order) {
  std::vector<Elem> id(order);
  std::iota(id.begin(), id.end(), Elem{0});
  return Automorphism(std::move(id));
}

bool is_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                     std::span<const Elem> images) {
  if (images.size() != source.order()) return false;
  for (Elem v : images)
    if (v >= target.order()) return false;
  for (Elem x = 0; x < source.order(); ++x)
    for (Elem y = 0; y < source.order(); ++y)
      if (images[source.mul(x, y)] != target.mul(images[x], images[y])) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, std::span<const Elem> images) {
  if (!is_homomorphism(g, g, images)) return false;
  std::vector<bool> hit(g.order(), false);
  for (Elem v : images) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

Automorphism make_automorphism(const FiniteGroup& g, std::vector<Elem> images) {
  if (images.size() != g.order())
    throw Error(ErrorCode::InvalidAutomorphism, "image array has wrong length");
  for (Elem v : images)
    if (v >= g.order())
      throw Error(ErrorCode::InvalidAutomorphism, "image out of range");
  std::vector<bool> hit(g.order(), false);
  for (Elem x = 0; x < g.order(); ++x) {
    if (hit[images[x]])
      throw Error(ErrorCode::InvalidAutomorphism, "map is not injective",
                  {std::int64_t(x)});
    hit[images[x]] = true;
  }
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (images[g.mul(x, y)] != g.mul(images[x], images[y]))
        throw Error(ErrorCode::InvalidAutomorphism,
                    "map does not preserve the product at " + tuple_text({x, y}),
                    {std::int64_t(x), std::int64_t(y)});
  return Automorphism(std::move(images));
}

Automorphism inner_automorphism(const FiniteGroup& g, Elem c) {
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.mul(g.mul(c, x), g.inv(c));
  return Automorphism(std::move(images));
}

TwistedGroup twisted_group(const FiniteGroup& g, Elem u) {
  if (u >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "u is not an element");
  const std::size_t n = g.order();
  const Elem u_inv = g.inv(u);
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) table[x * n + y] = g.mul(g.mul(x, u_inv), y);
  std::string label = g.label().empty() ? "" : g.label() + "_" + g.name(u);
  return {u, validate_group(g.names(), std::move(table), std::move(label))};
}

Automorphism psi_u(const FiniteGroup& g, const Automorphism& theta, Elem u) {
  if (u >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "u is not an element");
  if (!is_automorphism(g, theta.images()))
    throw Error(ErrorCode::InvalidAutomorphism, "theta is not an automorphism");
  const Elem tail = theta(g.inv(u));
  std::vector<Elem> images(g.order());
  for (Elem x = 0; x < g.order(); ++x) images[x] = g.mul(g.mul(u, theta(x)), tail);
  return Automorphism(std::move(images));
}

DirectPower::DirectPower(const FiniteGroup& base, unsigned k, const Limits& limits)
    : base_(base), k_(k), order_(1) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "direct power exponent must be >= 1");
  for (unsigned i = 0; i < k; ++i) {
    if (order_ > limits.max_power_size / base.order())
      throw Error(ErrorCode::SizeCapExceeded,
                  "|G|^k exceeds max_power_size (" + std::to_string(limits.max_power_size) + ")");
    order_ *= base.order();
  }
}

std::uint64_t DirectPower::encode(std::span<const Elem> tuple) const {
  std::uint64_t code = 0;
  for (Elem e : tuple) code = code * base_.order() + e;
  return code;
}

std::vector<Elem> DirectPower::decode(std::uint64_t code) const {
  std::vector<Elem> out(k_);
  for (unsigned i = k_; i-- > 0;) {
    out[i] = static_cast<Elem>(code % base_.order());
    code /= base_.order();
  }
  return out;
}

std::uint64_t DirectPower::mul(std::uint64_t x, std::uint64_t y) const {
  auto a = decode(x), b = decode(y);
  for (unsigned i = 0; i < k_; ++i) a[i] = base_.mul(a[i], b[i]);
  return encode(a);
}

std::uint64_t DirectPower::inv(std::uint64_t x) const {
  auto a = decode(x);
  for (auto& e : a) e = base_.inv(e);
  return encode(a);
}

std::uint64_t DirectPower::identity() const { return constant_tuple(base_.identity()); }

std::uint64_t DirectPower::apply(const Automorphism& theta, std::uint64_t x) const {
  auto a = decode(x);
  for (auto& e : a) e = theta(e);
  return encode(a);
}

std::uint64_t DirectPower::constant_tuple(Elem b) const {
  std::vector<Elem> t(k_, b);
  return encode(t);
}

FiniteGroup DirectPower::to_group(const Limits& limits) const {
  if (order_ > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "direct power too large to tabulate");
  const std::size_t n = order_;
  std::vector<std::string> names(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    std::string s = "(";
    auto t = decode(c);
    for (unsigned i = 0; i < k_; ++i) s += (i ? "," : "") + base_.name(t[i]);
    names[c] = s + ")";
  }
  std::vector<Elem> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>(mul(x, y));
  std::string label = base_.label().empty() ? "" : base_.label() + "^" + std::to_string(k_);
  return validate_group(std::move(names), std::move(table), std::move(label));
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (Elem s : gens) {
      Elem y = g.mul(out[head], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> generating_set(const FiniteGroup& g) {
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::vector<std::size_t> ord(g.order());
  for (Elem x = 0; x < g.order(); ++x) ord[x] = g.element_order(x);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return ord[a] > ord[b]; });
  std::vector<Elem> gens;
  std::vector<bool> covered(g.order(), false);
  covered[g.identity()] = true;
  for (Elem x : by_order) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (Elem y : generated_subgroup(g, gens)) covered[y] = true;
  }
  return gens;
}

std::optional<Hom> extend_generator_map(const FiniteGroup& g, const FiniteGroup& h,
                                        std::span<const Elem> gens,
                                        std::span<const Elem> images) {
  if (gens.size() != images.size())
    throw Error(ErrorCode::InvalidInput, "generator and image lists differ in length");
  auto map = propagate(g, h, gens, images);
  if (!map) return std::nullopt;
  if (std::find(map->begin(), map->end(), kUnset) != map->end())
    throw Error(ErrorCode::InvalidInput, "given elements do not generate the group");
  return Hom{std::move(*map)};
}

std::vector<Hom> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h,
                                const Limits& limits) {
  if (g.order() > limits.max_group_order || h.order() > limits.max_group_order)
    throw Error(ErrorCode::SizeCapExceeded, "group order exceeds max_group_order");
  std::vector<Hom> out;
  HomSearch search(g, h, false, limits);
  search.run([&](const std::vector<Elem>& map) {
    out.push_back(Hom{map});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Hom> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                  const Limits& limits) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "group order exceeds max_derived_order");
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  std::optional<Hom> found;
  HomSearch search(g, h, true, limits);
  search.run([&](const std::vector<Elem>& map) {
    found = Hom{map};
    return false;
  });
  return found;
}

std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_group_order)
    throw Error(ErrorCode::SizeCapExceeded, "group order exceeds max_group_order");
  struct Entry {
    std::vector<Elem> gens;
    std::vector<Elem> elems;
  };
  std::set<Mask> seen;
  std::vector<Entry> found;
  std::vector<Elem> trivial{g.identity()};
  seen.insert(make_mask(g.order(), trivial));
  found.push_back({{}, trivial});
  for (std::size_t head = 0; head < found.size(); ++head) {
    Mask cur = make_mask(g.order(), found[head].elems);
    for (Elem x = 0; x < g.order(); ++x) {
      if (mask_has(cur, x)) continue;
      auto gens = found[head].gens;
      gens.push_back(x);
      auto elems = generated_subgroup(g, gens);
      if (seen.insert(make_mask(g.order(), elems)).second)
        found.push_back({std::move(gens), std::move(elems)});
    }
  }
  std::vector<std::vector<Elem>> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(std::move(e.elems));
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, std::span<const Elem> elems,
                              std::string label) {
  std::unordered_map<Elem, Elem> local;
  std::vector<std::string> names;
  for (Elem e : elems) {
    local.emplace(e, static_cast<Elem>(names.size()));
    names.push_back(g.name(e));
  }
  const std::size_t k = elems.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = local.find(g.mul(elems[i], elems[j]));
      if (it == local.end())
        throw Error(ErrorCode::InvalidInput, "subset is not closed under the product");
      table[i * k + j] = it->second;
    }
  return validate_group(std::move(names), std::move(table), std::move(label));
}

FiniteGroup cyclic_group(std::size_t k, std::string prefix) {
  if (prefix.empty()) prefix = "c";
  std::vector<std::string> names(k);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = prefix + std::to_string(i);
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<Elem>((i + j) % k);
  }
  return validate_group(std::move(names), std::move(table), "Z" + std::to_string(k));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::string> names(n);
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      Elem p = a.mul(x / nb, y / nb), q = b.mul(x % nb, y % nb);
      table[x * n + y] = static_cast<Elem>(p * nb + q);
    }
  }
  std::string label;
  if (!a.label().empty() && !b.label().empty()) label = a.label() + "x" + b.label();
  return validate_group(std::move(names), std::move(table), std::move(label));
}

FiniteGroup symmetric_group(unsigned k) {
  if (k == 0 || k > 5) throw Error(ErrorCode::InvalidInput, "symmetric_group supports 1..5");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto cycle_name = [k](const std::vector<unsigned>& q) {
    std::string s;
    std::vector<bool> done(k, false);
    for (unsigned i = 0; i < k; ++i) {
      if (done[i] || q[i] == i) continue;
      s += "(";
      for (unsigned j = i; !done[j]; j = q[j]) {
        if (s.back() != '(') s += " ";
        s += std::to_string(j + 1);
        done[j] = true;
      }
      s += ")";
    }
    return s.empty() ? std::string("()") : s;
  };

  const std::size_t n = perms.size();
  std::vector<std::string> names(n);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = cycle_name(perms[a]);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<unsigned> c(k);
      for (unsigned i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), c);
      table[a * n + b] = static_cast<Elem>(it - perms.begin());
    }
  }
  return validate_group(std::move(names), std::move(table), "S" + std::to_string(k));
}

}  // namespace polyadic
