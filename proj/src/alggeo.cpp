#include "polyadic/alggeo.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "parallel.hpp"
#include "polyadic/error.hpp"
#include "polyadic/post_cover.hpp"

namespace polyadic {

namespace {

// Open-addressing set of fixed-width tuples, each with a small tag (the
// cover grade during f-closures). Indices are insertion order.
class TupleStore {
 public:
  TupleStore(std::size_t width, std::uint64_t max_entries)
      : width_(width), max_entries_(max_entries), slots_(64, kEmpty) {}

  std::pair<std::uint32_t, bool> insert(const Elem* tuple, std::uint8_t tag) {
    if ((size() + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(tuple, tag) & mask;; s = (s + 1) & mask) {
      std::uint32_t i = slots_[s];
      if (i == kEmpty) {
        if ((size() + 1) * std::max<std::size_t>(width_, 1) > max_entries_)
          throw Error(ErrorCode::SizeCapExceeded, "closure exceeds the tuple-entry cap",
                      {std::int64_t(size())});
        std::uint32_t id = static_cast<std::uint32_t>(tags_.size());
        cells_.insert(cells_.end(), tuple, tuple + width_);
        tags_.push_back(tag);
        slots_[s] = id;
        return {id, true};
      }
      if (tags_[i] == tag && std::equal(tuple, tuple + width_, this->tuple(i))) return {i, false};
    }
  }

  std::optional<std::uint32_t> find(const Elem* tuple, std::uint8_t tag) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash(tuple, tag) & mask;; s = (s + 1) & mask) {
      std::uint32_t i = slots_[s];
      if (i == kEmpty) return std::nullopt;
      if (tags_[i] == tag && std::equal(tuple, tuple + width_, this->tuple(i))) return i;
    }
  }

  const Elem* tuple(std::uint32_t i) const { return cells_.data() + std::size_t(i) * width_; }
  std::uint8_t tag(std::uint32_t i) const { return tags_[i]; }
  std::size_t size() const { return tags_.size(); }
  std::size_t width() const { return width_; }

 private:
  static constexpr std::uint32_t kEmpty = ~std::uint32_t{0};

  std::uint64_t hash(const Elem* tuple, std::uint8_t tag) const {
    std::uint64_t h = 1469598103934665603ull ^ tag;
    for (std::size_t k = 0; k < width_; ++k) {
      h ^= tuple[k];
      h *= 1099511628211ull;
    }
    return h ^ (h >> 29);
  }

  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
    std::size_t mask = fresh.size() - 1;
    for (std::uint32_t i = 0; i < tags_.size(); ++i) {
      std::size_t s = hash(tuple(i), tags_[i]) & mask;
      while (fresh[s] != kEmpty) s = (s + 1) & mask;
      fresh[s] = i;
    }
    slots_ = std::move(fresh);
  }

  std::size_t width_;
  std::uint64_t max_entries_;
  std::vector<Elem> cells_;
  std::vector<std::uint8_t> tags_;
  std::vector<std::uint32_t> slots_;
};

// Coordinatewise operations of der_{theta,b}(G) acting on tuples.
struct PowerOps {
  const FiniteGroup* g;
  std::vector<std::vector<Elem>> theta;  // theta^0 .. theta^(n-1)
  Elem b;
  unsigned n;

  explicit PowerOps(const DerivedData& d, unsigned arity) : g(&d.group), b(d.b), n(arity) {
    std::vector<Elem> id(d.group.order());
    std::iota(id.begin(), id.end(), Elem{0});
    theta.push_back(id);
    for (unsigned i = 1; i < n; ++i) {
      std::vector<Elem> next(id.size());
      for (Elem x = 0; x < id.size(); ++x) next[x] = d.theta(theta.back()[x]);
      theta.push_back(std::move(next));
    }
  }

  // f on tuples: args[k] points at the k-th operand.
  void f(const std::vector<const Elem*>& args, std::size_t width, Elem* out) const {
    for (std::size_t c = 0; c < width; ++c) {
      Elem v = args[0][c];
      for (unsigned k = 1; k < n; ++k) v = g->mul(v, theta[k][args[k][c]]);
      out[c] = g->mul(v, b);
    }
  }

  // x̄ = b^-1 (theta(x) ... theta^(n-2)(x))^-1
  Elem skew(Elem x) const {
    Elem v = g->identity();
    for (unsigned k = 1; k + 1 < n; ++k) v = g->mul(v, theta[k][x]);
    return g->mul(g->inv(b), g->inv(v));
  }
};

bool lex_less(const Elem* a, const Elem* b, std::size_t width) {
  return std::lexicographical_compare(a, a + width, b, b + width);
}

// Sorted, deduplicated tuples of the given tag.
std::vector<Elem> sorted_cells(const TupleStore& store, std::optional<std::uint8_t> tag) {
  const std::size_t w = store.width();
  std::vector<std::uint32_t> ids;
  for (std::uint32_t i = 0; i < store.size(); ++i)
    if (!tag || store.tag(i) == *tag) ids.push_back(i);
  std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_less(store.tuple(a), store.tuple(b), w);
  });
  std::vector<Elem> out;
  out.reserve(ids.size() * w);
  for (auto i : ids) out.insert(out.end(), store.tuple(i), store.tuple(i) + w);
  return out;
}

// Closure of the generator tuples under f, computed as the grade-1 part of
// the sub-semigroup of the cover they generate: states (x, i) multiplied
// on the right by (s, 1).
TupleStore f_closure(const PowerOps& ops, std::size_t width, const std::vector<Elem>& gens,
                     std::size_t count, const Limits& limits) {
  TupleStore store(width, limits.max_tuple_entries);
  const unsigned m = ops.n - 1;
  for (std::size_t j = 0; j < count; ++j) store.insert(gens.data() + j * width, 1 % m);
  std::vector<Elem> x(width), y(width);
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    const unsigned grade = store.tag(i);
    std::copy(store.tuple(i), store.tuple(i) + width, x.begin());
    const auto& th = ops.theta[grade];
    const bool wrap = grade + 1 == m;
    for (std::size_t j = 0; j < count; ++j) {
      const Elem* s = gens.data() + j * width;
      for (std::size_t c = 0; c < width; ++c) {
        Elem v = ops.g->mul(x[c], th[s[c]]);
        y[c] = wrap ? ops.g->mul(v, ops.b) : v;
      }
      store.insert(y.data(), static_cast<std::uint8_t>((grade + 1) % m));
    }
  }
  return store;
}

// Closure under the coordinatewise product of an ordinary group.
TupleStore group_closure(const FiniteGroup& g, std::size_t width, const std::vector<Elem>& gens,
                         std::size_t count, const Limits& limits) {
  TupleStore store(width, limits.max_tuple_entries);
  std::vector<Elem> id(width, g.identity());
  store.insert(id.data(), 0);
  for (std::size_t j = 0; j < count; ++j) store.insert(gens.data() + j * width, 0);
  std::vector<Elem> x(width), y(width);
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    std::copy(store.tuple(i), store.tuple(i) + width, x.begin());
    for (std::size_t j = 0; j < count; ++j) {
      const Elem* s = gens.data() + j * width;
      for (std::size_t c = 0; c < width; ++c) y[c] = g.mul(x[c], s[c]);
      store.insert(y.data(), 0);
    }
  }
  return store;
}

void check_system(const EquationSystem& s) {
  for (std::size_t i = 0; i < s.equations.size(); ++i) {
    const auto& e = s.equations[i];
    if (std::max(e.lhs.variable_bound(), e.rhs.variable_bound()) > s.vars)
      throw Error(ErrorCode::UnboundVariable,
                  "equation " + std::to_string(i + 1) + " uses a variable beyond x" +
                      std::to_string(s.vars),
                  {std::int64_t(i)});
  }
}

std::vector<std::vector<Elem>> decoded(const AlgebraicSet& y, std::size_t order) {
  std::vector<std::vector<Elem>> pts;
  pts.reserve(y.points.size());
  for (auto code : y.points) pts.push_back(decode_point(code, order, y.vars));
  return pts;
}

// Generators of the term-function algebra over the given points: one tuple
// per projection, then one per constant.
std::vector<Elem> generator_cells(const std::vector<std::vector<Elem>>& pts, unsigned m,
                                  std::size_t order, bool with_constants) {
  const std::size_t w = pts.size();
  std::vector<Elem> gens;
  gens.reserve((m + (with_constants ? order : 0)) * w);
  for (unsigned i = 0; i < m; ++i)
    for (const auto& pt : pts) gens.push_back(pt[i]);
  if (with_constants)
    for (Elem g = 0; g < order; ++g) gens.insert(gens.end(), w, g);
  return gens;
}

std::string tuple_name(const PolyadicGroup& p, std::span<const Elem> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += p.name(t[i]);
  }
  return out + ")";
}

// Is y in V(Rad(Z))? Term functions over Z ∪ {y} must be determined by
// their values on Z.
bool in_closure(const PowerOps& ops, const std::vector<std::vector<Elem>>& zpts,
                const std::vector<Elem>& y, std::size_t order, const Limits& limits) {
  auto pts = zpts;
  pts.push_back(y);
  const std::size_t w = pts.size();
  auto gens = generator_cells(pts, static_cast<unsigned>(y.size()), order, true);
  auto store = f_closure(ops, w, gens, y.size() + order, limits);
  auto cells = sorted_cells(store, static_cast<std::uint8_t>(1 % (ops.n - 1)));
  const std::size_t count = cells.size() / w;
  for (std::size_t i = 1; i < count; ++i)
    if (std::equal(cells.data() + (i - 1) * w, cells.data() + i * w - 1, cells.data() + i * w))
      return false;
  return true;
}

Elem eval_word(const FreeWord& w, std::span<const Elem> point, const FiniteGroup& g) {
  Elem acc = g.identity();
  for (const auto& r : w.runs()) acc = g.mul(acc, g.pow(point[r.gen], r.exp));
  return acc;
}

}  // namespace

std::uint64_t encode_point(std::span<const Elem> point, std::size_t order) {
  std::uint64_t code = 0;
  for (Elem x : point) code = code * order + x;
  return code;
}

std::vector<Elem> decode_point(std::uint64_t code, std::size_t order, unsigned m) {
  std::vector<Elem> pt(m);
  for (unsigned k = m; k-- > 0;) {
    pt[k] = static_cast<Elem>(code % order);
    code /= order;
  }
  return pt;
}

std::uint64_t space_size(std::size_t order, unsigned m, const Limits& limits) {
  std::uint64_t total = 1;
  for (unsigned k = 0; k < m; ++k) {
    total *= order;
    if (total > limits.max_power_size)
      throw Error(ErrorCode::SizeCapExceeded,
                  "|G|^m = " + std::to_string(order) + "^" + std::to_string(m) +
                      " exceeds the power-size cap",
                  {std::int64_t(order), std::int64_t(m)});
  }
  return total;
}

bool AlgebraicSet::contains(std::uint64_t code) const {
  return std::binary_search(points.begin(), points.end(), code);
}

AlgebraicSet full_space(const PolyadicGroup& p, unsigned m, const Limits& limits) {
  AlgebraicSet all{m, {}};
  all.points.resize(space_size(p.order(), m, limits));
  std::iota(all.points.begin(), all.points.end(), std::uint64_t{0});
  return all;
}

AlgebraicSet solve(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits) {
  check_system(s);
  const std::uint64_t total = space_size(p.order(), s.vars, limits);
  std::vector<std::vector<std::uint64_t>> parts(detail::resolve_jobs(limits.jobs));
  detail::parallel_chunks(total, limits.jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto& out = parts[w];
    for (std::uint64_t code = begin; code < end; ++code) {
      auto pt = decode_point(code, p.order(), s.vars);
      bool ok = true;
      for (const auto& e : s.equations) {
        if (eval_term(e.lhs, pt, p) != eval_term(e.rhs, pt, p)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(code);
    }
  });
  AlgebraicSet v{s.vars, {}};
  for (auto& part : parts) v.points.insert(v.points.end(), part.begin(), part.end());
  return v;
}

std::vector<Elem> term_function(const PolyadicGroup& p, const AlgebraicSet& y, const Term& t) {
  std::vector<Elem> values;
  values.reserve(y.points.size());
  for (auto code : y.points) values.push_back(eval_term(t, decode_point(code, p.order(), y.vars), p));
  return values;
}

bool radical_member(const PolyadicGroup& p, const AlgebraicSet& y, const Term& t1, const Term& t2) {
  for (auto code : y.points) {
    auto pt = decode_point(code, p.order(), y.vars);
    if (eval_term(t1, pt, p) != eval_term(t2, pt, p)) return false;
  }
  return true;
}

std::optional<std::size_t> CoordinateGroup::find(std::span<const Elem> tuple) const {
  const std::size_t w = width();
  if (tuple.size() != w) return std::nullopt;
  std::size_t lo = 0, hi = count;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(cells.data() + mid * w, tuple.data(), w))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count && std::equal(tuple.begin(), tuple.end(), cells.data() + lo * w)) return lo;
  return std::nullopt;
}

CoordinateGroup coordinate_group(const PolyadicGroup& p, const AlgebraicSet& y,
                                 bool with_constants, const Limits& limits) {
  if (y.points.size() > limits.max_points)
    throw Error(ErrorCode::SizeCapExceeded, "algebraic set has more points than the cap allows",
                {std::int64_t(y.points.size())});
  if (y.vars == 0 && !with_constants)
    throw Error(ErrorCode::EmptyGeneratorSet, "no variables and no constants to generate from");
  const DerivedData d = derived_form(p, limits);
  const PowerOps ops(d, p.arity());
  const auto pts = decoded(y, p.order());
  const auto gens = generator_cells(pts, y.vars, p.order(), with_constants);

  CoordinateGroup h;
  h.vars = y.vars;
  h.points = y.points;
  const std::size_t ngens = y.vars + (with_constants ? p.order() : 0);
  auto store = f_closure(ops, pts.size(), gens, ngens, limits);
  h.cells = sorted_cells(store, static_cast<std::uint8_t>(1 % (p.arity() - 1)));
  h.count = pts.empty() ? 1 : h.cells.size() / pts.size();
  const std::size_t w = pts.size();
  for (std::size_t j = 0; j < ngens; ++j) {
    auto idx = h.find(std::span<const Elem>(gens.data() + j * w, w));
    if (!idx) throw Error(ErrorCode::Inconsistent, "generator missing from its own closure");
    (j < y.vars ? h.projections : h.constants).push_back(*idx);
  }
  return h;
}

PolyadicGroup coordinate_polyadic(const PolyadicGroup& p, const CoordinateGroup& h,
                                  const Limits& limits) {
  if (h.count > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "coordinate group of order " +
                                                std::to_string(h.count) +
                                                " exceeds the derived-order cap");
  const std::size_t k = h.count, w = h.width();
  if (k * k * std::max<std::size_t>(w, 1) > 4 * limits.max_tuple_entries)
    throw Error(ErrorCode::SizeCapExceeded, "coordinate group table is too large to build");
  const unsigned n = p.arity();
  const DerivedData d = derived_form(p, limits);
  const PowerOps ops(d, n);
  const FiniteGroup& g = d.group;

  TupleStore index(w, std::uint64_t(-1));
  for (std::size_t i = 0; i < k; ++i) index.insert(h.element(i).data(), 0);
  auto lookup = [&](const Elem* t) {
    auto i = index.find(t, 0);
    if (!i) throw Error(ErrorCode::Inconsistent, "coordinate group is not closed under f");
    return static_cast<Elem>(*i);
  };

  // Retract over the first element a: x * y = x C theta^(n-1)(y) b with
  // C = theta(a) ... theta^(n-2)(a).
  const Elem* a = h.element(0).data();
  std::vector<Elem> c(w), a_bar(w);
  for (std::size_t j = 0; j < w; ++j) {
    Elem v = g.identity();
    for (unsigned t = 1; t + 1 < n; ++t) v = g.mul(v, ops.theta[t][a[j]]);
    c[j] = v;
    a_bar[j] = ops.skew(a[j]);
  }
  std::vector<Elem> table(k * k), buf(w);
  for (std::size_t x = 0; x < k; ++x) {
    const Elem* xt = h.element(x).data();
    for (std::size_t y = 0; y < k; ++y) {
      const Elem* yt = h.element(y).data();
      for (std::size_t j = 0; j < w; ++j)
        buf[j] = g.mul(g.mul(g.mul(xt[j], c[j]), ops.theta[n - 1][yt[j]]), d.b);
      table[x * k + y] = lookup(buf.data());
    }
  }
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) names[i] = tuple_name(p, h.element(i));
  std::string label = p.label().empty() ? "" : "coord(" + p.label() + ")";
  FiniteGroup ret = validate_group(std::move(names), std::move(table), std::move(label));

  // theta_a(x) = f(ā, x, a^(n-2)), b_a = f(ā^(n)).
  std::vector<const Elem*> args(n, a);
  args[0] = a_bar.data();
  std::vector<Elem> theta_images(k);
  for (std::size_t x = 0; x < k; ++x) {
    args[1] = h.element(x).data();
    ops.f(args, w, buf.data());
    theta_images[x] = lookup(buf.data());
  }
  std::fill(args.begin(), args.end(), a_bar.data());
  ops.f(args, w, buf.data());
  const Elem b = lookup(buf.data());

  Limits relaxed = limits;
  relaxed.max_derived_order = std::max(limits.max_derived_order, k);
  return derive(std::move(ret), Automorphism(std::move(theta_images)), b, n, relaxed);
}

StructureReport structure_check(const PolyadicGroup& p, const CoordinateGroup& h) {
  const DerivedData d = derived_form(p);
  const unsigned n = p.arity();
  const PowerOps ops(d, n);
  const FiniteGroup& g = d.group;
  const std::size_t k = h.count, w = h.width();
  TupleStore index(w, std::uint64_t(-1));
  for (std::size_t i = 0; i < k; ++i) index.insert(h.element(i).data(), 0);
  auto member = [&](const Elem* t) { return index.find(t, 0).has_value(); };

  StructureReport report;
  std::vector<Elem> u_inv(w), theta_u_inv(w), buf(w);
  for (std::size_t u = 0; u < k; ++u) {
    ++report.candidates_tried;
    const Elem* ut = h.element(u).data();
    for (std::size_t j = 0; j < w; ++j) {
      u_inv[j] = g.inv(ut[j]);
      theta_u_inv[j] = ops.theta[1][u_inv[j]];
    }
    bool ok = true;
    for (std::size_t x = 0; x < k && ok; ++x) {
      const Elem* xt = h.element(x).data();
      // psi_u(x) = u theta(x) theta(u^-1)
      for (std::size_t j = 0; j < w; ++j)
        buf[j] = g.mul(g.mul(ut[j], ops.theta[1][xt[j]]), theta_u_inv[j]);
      if (!member(buf.data())) ok = false;
      for (std::size_t y = 0; y < k && ok; ++y) {
        const Elem* yt = h.element(y).data();
        for (std::size_t j = 0; j < w; ++j) buf[j] = g.mul(g.mul(xt[j], u_inv[j]), yt[j]);
        if (!member(buf.data())) ok = false;
      }
    }
    if (ok) {
      std::vector<const Elem*> args(n, ut);
      ops.f(args, w, buf.data());
      ok = member(buf.data());
    }
    if (ok) {
      report.found = true;
      report.u = u;
      return report;
    }
  }
  return report;
}

AlgebraicSet closure(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits) {
  if (z.points.size() + 1 > limits.max_points)
    throw Error(ErrorCode::SizeCapExceeded, "set has more points than the cap allows");
  const std::uint64_t total = space_size(p.order(), z.vars, limits);
  const DerivedData d = derived_form(p, limits);
  const PowerOps ops(d, p.arity());
  const auto zpts = decoded(z, p.order());
  AlgebraicSet out{z.vars, {}};
  for (std::uint64_t code = 0; code < total; ++code) {
    if (z.contains(code) ||
        in_closure(ops, zpts, decode_point(code, p.order(), z.vars), p.order(), limits))
      out.points.push_back(code);
  }
  return out;
}

bool is_algebraic(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits) {
  return closure(p, z, limits) == z;
}

IrreducibilityReport is_irreducible(const PolyadicGroup& p, const AlgebraicSet& y,
                                    const Limits& limits) {
  const std::size_t size = y.points.size();
  if (size > limits.max_irreducible_points || size > 30)
    throw Error(ErrorCode::SizeCapExceeded,
                "irreducibility needs at most " + std::to_string(limits.max_irreducible_points) +
                    " points",
                {std::int64_t(size)});
  const DerivedData d = derived_form(p, limits);
  const PowerOps ops(d, p.arity());
  const auto pts = decoded(y, p.order());
  const std::uint32_t full = size == 0 ? 0 : static_cast<std::uint32_t>((1ull << size) - 1);

  // Closure relative to Y: closure(A) ∩ Y.
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  auto close = [&](std::uint32_t mask) {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::vector<std::vector<Elem>> zpts;
    for (std::size_t i = 0; i < size; ++i)
      if (mask >> i & 1) zpts.push_back(pts[i]);
    std::uint32_t out = mask;
    for (std::size_t i = 0; i < size; ++i)
      if (!(mask >> i & 1) && in_closure(ops, zpts, pts[i], p.order(), limits)) out |= 1u << i;
    memo.emplace(mask, out);
    return out;
  };

  std::vector<std::uint32_t> closed{close(0)};
  std::unordered_map<std::uint32_t, bool> seen{{closed[0], true}};
  for (std::size_t q = 0; q < closed.size(); ++q) {
    std::uint32_t a = closed[q];
    for (std::size_t i = 0; i < size; ++i) {
      if (a >> i & 1) continue;
      std::uint32_t b = close(a | (1u << i));
      if (seen.emplace(b, true).second) closed.push_back(b);
    }
  }
  std::sort(closed.begin(), closed.end());

  IrreducibilityReport report;
  report.algebraic_subsets = closed.size();
  auto to_set = [&](std::uint32_t mask) {
    AlgebraicSet s{y.vars, {}};
    for (std::size_t i = 0; i < size; ++i)
      if (mask >> i & 1) s.points.push_back(y.points[i]);
    return s;
  };
  for (std::uint32_t a : closed) {
    if (a == full) continue;
    std::uint32_t b = close(full & ~a);
    if (b != full) {
      report.irreducible = false;
      report.first = to_set(a);
      report.second = to_set(b);
      return report;
    }
  }
  return report;
}

MinimalSubsystem minimal_subsystem(const PolyadicGroup& p, const EquationSystem& s,
                                   const Limits& limits) {
  check_system(s);
  const std::uint64_t total = space_size(p.order(), s.vars, limits);
  const std::size_t words = static_cast<std::size_t>((total + 63) / 64);
  const std::size_t count = s.equations.size();
  std::vector<std::vector<std::uint64_t>> sols(count, std::vector<std::uint64_t>(words, 0));
  detail::parallel_chunks(count, limits.jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t e = begin; e < end; ++e)
      for (std::uint64_t code = 0; code < total; ++code) {
        auto pt = decode_point(code, p.order(), s.vars);
        if (eval_term(s.equations[e].lhs, pt, p) == eval_term(s.equations[e].rhs, pt, p))
          sols[e][code / 64] |= std::uint64_t{1} << (code % 64);
      }
  });
  auto meet = [&](const std::vector<char>& keep, std::size_t skip) {
    std::vector<std::uint64_t> acc(words, ~std::uint64_t{0});
    for (std::size_t e = 0; e < count; ++e)
      if (keep[e] && e != skip)
        for (std::size_t w = 0; w < words; ++w) acc[w] &= sols[e][w];
    if (total % 64) acc.back() &= (std::uint64_t{1} << (total % 64)) - 1;
    return acc;
  };
  std::vector<char> keep(count, 1);
  const auto target = meet(keep, count);
  for (std::size_t e = 0; e < count; ++e)
    if (meet(keep, e) == target) keep[e] = 0;

  MinimalSubsystem out;
  out.system.vars = s.vars;
  for (std::size_t e = 0; e < count; ++e)
    if (keep[e]) {
      out.kept.push_back(e);
      out.system.equations.push_back(s.equations[e]);
    }
  return out;
}

CoverComparison compare_cover_coordinates(const PolyadicGroup& p, const EquationSystem& s,
                                const Limits& limits) {
  check_system(s);
  for (const auto& e : s.equations)
    if (!e.lhs.is_coefficient_free() || !e.rhs.is_coefficient_free())
      throw Error(ErrorCode::InvalidInput, "the comparison needs a coefficient-free system");
  if (s.vars == 0) throw Error(ErrorCode::EmptyGeneratorSet, "the system has no variables");
  const unsigned n = p.arity();
  const unsigned m = s.vars;
  CoverComparison report;

  // Gamma_G(S) and its cover.
  const AlgebraicSet v = solve(p, s, limits);
  report.solutions_g = v.points.size();
  const CoordinateGroup gamma = coordinate_group(p, v, false, limits);
  report.gamma_g_order = gamma.count;
  const PolyadicGroup gamma_p = coordinate_polyadic(p, gamma, limits);
  const PostCover cover = build_post_cover(gamma_p, limits);
  const FiniteGroup& c = cover.group;
  report.cover_order = c.order();

  // Gamma_{G*}(S): word functions on V_{G*}(S).
  const PostCover base_cover = build_post_cover(p, limits);
  const FiniteGroup& gs = base_cover.group;
  std::vector<std::pair<FreeWord, FreeWord>> words;
  for (const auto& e : s.equations) words.emplace_back(flatten_term(e.lhs, n), flatten_term(e.rhs, n));
  const std::uint64_t total = space_size(gs.order(), m, limits);
  std::vector<std::vector<Elem>> vstar;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto pt = decode_point(code, gs.order(), m);
    bool ok = std::all_of(words.begin(), words.end(), [&](const auto& w) {
      return eval_word(w.first, pt, gs) == eval_word(w.second, pt, gs);
    });
    if (ok) vstar.push_back(std::move(pt));
  }
  report.solutions_cover = vstar.size();
  if (vstar.size() > limits.max_points)
    throw Error(ErrorCode::SizeCapExceeded, "V_{G*}(S) has more points than the cap allows");
  const std::size_t w = vstar.size();
  std::vector<Elem> proj;
  for (unsigned i = 0; i < m; ++i)
    for (const auto& pt : vstar) proj.push_back(pt[i]);
  const TupleStore gamma_star = group_closure(gs, w, proj, m, limits);
  report.gamma_cover_order = gamma_star.size();

  std::vector<std::uint32_t> proj_ids(m);
  for (unsigned i = 0; i < m; ++i) proj_ids[i] = *gamma_star.find(proj.data() + i * w, 0);
  auto gamma_mul = [&](std::uint32_t x, std::uint32_t y) {
    std::vector<Elem> t(w);
    for (std::size_t j = 0; j < w; ++j) t[j] = gs.mul(gamma_star.tuple(x)[j], gamma_star.tuple(y)[j]);
    return *gamma_star.find(t.data(), 0);
  };

  // Propagate x_i -> pi_i along right multiplication in the cover.
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(c.order(), unset);
  std::vector<std::int64_t> parent(c.order(), -1);
  std::vector<int> via(c.order(), -1);
  auto word_of = [&](Elem x) {
    std::vector<int> letters;
    for (std::int64_t cur = x; cur >= 0; cur = parent[cur]) letters.push_back(via[cur]);
    std::string out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(*it + 1);
    }
    return out;
  };
  std::vector<Elem> gens(m), queue;
  for (unsigned i = 0; i < m; ++i) {
    gens[i] = cover.embed(static_cast<Elem>(gamma.projections[i]));
    if (image[gens[i]] == unset) {
      image[gens[i]] = proj_ids[i];
      via[gens[i]] = static_cast<int>(i);
      queue.push_back(gens[i]);
    } else if (image[gens[i]] != proj_ids[i]) {
      report.witness_left = word_of(gens[i]);
      report.witness_right = "x" + std::to_string(i + 1);
      return report;
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (unsigned i = 0; i < m; ++i) {
      Elem y = c.mul(x, gens[i]);
      std::uint32_t v2 = gamma_mul(image[x], proj_ids[i]);
      if (image[y] == unset) {
        image[y] = v2;
        parent[y] = x;
        via[y] = static_cast<int>(i);
        queue.push_back(y);
      } else if (image[y] != v2) {
        report.witness_left = word_of(y);
        report.witness_right = word_of(x) + "*x" + std::to_string(i + 1);
        return report;
      }
    }
  }
  if (queue.size() != c.order()) {
    report.witness_left = "generators reach " + std::to_string(queue.size()) + " of " +
                          std::to_string(c.order()) + " cover elements";
    return report;
  }
  // Renumber Gamma_{G*} elements by sorted tuple order for stable output.
  auto sorted = sorted_cells(gamma_star, std::nullopt);
  std::vector<Elem> rank(gamma_star.size());
  for (std::uint32_t i = 0; i < gamma_star.size(); ++i) {
    std::size_t lo = 0, hi = gamma_star.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (lex_less(sorted.data() + mid * w, gamma_star.tuple(i), w))
        lo = mid + 1;
      else
        hi = mid;
    }
    rank[i] = static_cast<Elem>(lo);
  }
  report.images.resize(c.order());
  for (Elem x = 0; x < c.order(); ++x) report.images[x] = rank[image[x]];
  report.epimorphism = true;
  return report;
}

}  // namespace polyadic
