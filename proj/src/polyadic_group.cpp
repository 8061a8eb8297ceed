#include "polyadic/polyadic_group.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "parallel.hpp"
#include "polyadic/error.hpp"

namespace polyadic {

namespace {

std::uint64_t checked_power(std::uint64_t base, unsigned exp, std::uint64_t cap,
                            const char* what) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base)
      throw Error(ErrorCode::SizeCapExceeded,
                  std::string(what) + " exceeds its cap (" + std::to_string(cap) + ")");
    acc *= base;
  }
  if (acc > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                std::string(what) + " exceeds its cap (" + std::to_string(cap) + ")");
  return acc;
}

void require_element(const PolyadicGroup& p, Elem a) {
  if (a >= p.order()) throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
}

// Writes the digits of code (base n, most significant first) into out.
void decode_digits(std::uint64_t code, std::size_t base, std::span<Elem> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(code % base);
    code /= base;
  }
}

// Lexicographic successor; returns false after the last tuple.
bool next_tuple(std::span<Elem> t, std::size_t base) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < base) return true;
    t[i] = 0;
  }
  return false;
}

std::vector<std::int64_t> to_witness(std::span<const Elem> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

std::optional<Elem> PolyadicGroup::find(std::string_view name) const {
  for (Elem i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Elem PolyadicGroup::eval(std::span<const Elem> xs) const {
  if (xs.size() != n_)
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(n_) + " arguments, got " +
                                              std::to_string(xs.size()));
  for (Elem x : xs)
    if (x >= order()) throw Error(ErrorCode::IndexOutOfRange, "argument out of range");
  return eval_unchecked(xs.data());
}

Elem PolyadicGroup::eval_unchecked(const Elem* xs) const noexcept {
  if (derived_) {
    const FiniteGroup& g = derived_->group;
    Elem acc = xs[0];
    for (unsigned i = 1; i < n_; ++i) acc = g.mul(acc, theta_powers_[i][xs[i]]);
    return g.mul(acc, derived_->b);
  }
  std::size_t idx = 0;
  const std::size_t base = names_.size();
  for (unsigned i = 0; i < n_; ++i) idx = idx * base + xs[i];
  return table_[idx];
}

PolyadicGroup PolyadicGroup::from_table(std::vector<std::string> names, unsigned n,
                                        std::vector<Elem> table, std::string label,
                                        const Limits& limits) {
  if (n < 3 || n > limits.max_arity)
    throw Error(ErrorCode::InvalidInput,
                "arity must be between 3 and " + std::to_string(limits.max_arity));
  if (names.empty()) throw Error(ErrorCode::InvalidInput, "carrier is empty");
  std::uint64_t entries =
      checked_power(names.size(), n, limits.max_table_entries, "|G|^n table size");
  if (table.size() != entries)
    throw Error(ErrorCode::IndexOutOfRange, "table must have |G|^n = " +
                                                std::to_string(entries) + " entries");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= names.size())
      throw Error(ErrorCode::IndexOutOfRange, "table entry " + std::to_string(i) + " out of range",
                  {std::int64_t(i)});
  PolyadicGroup p;
  p.n_ = n;
  p.label_ = std::move(label);
  p.names_ = std::move(names);
  p.table_ = std::move(table);
  return p;
}

PolyadicGroup derive(FiniteGroup g, Automorphism theta, Elem b, unsigned n,
                     const Limits& limits) {
  if (n < 3 || n > limits.max_arity)
    throw Error(ErrorCode::InvalidInput,
                "arity must be between 3 and " + std::to_string(limits.max_arity));
  if (g.order() > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "group order exceeds cap");
  if (b >= g.order()) throw Error(ErrorCode::IndexOutOfRange, "b is not an element");
  if (!is_automorphism(g, theta.images()))
    throw Error(ErrorCode::InvalidAutomorphism, "theta is not an automorphism of the group");
  if (theta(b) != b)
    throw Error(ErrorCode::ConditionOneFails,
                "theta(b) != b for b = " + g.name(b), {std::int64_t(b)});
  Automorphism top = theta.power(n - 1);
  const Elem b_inv = g.inv(b);
  for (Elem x = 0; x < g.order(); ++x)
    if (top(x) != g.mul(g.mul(b, x), b_inv))
      throw Error(ErrorCode::ConditionTwoFails,
                  "theta^(n-1)(x) != b x b^-1 for x = " + g.name(x), {std::int64_t(x)});

  PolyadicGroup p;
  p.n_ = n;
  p.names_ = g.names();
  if (!g.label().empty()) p.label_ = "der(" + g.label() + ")";
  Automorphism acc = Automorphism::identity(g.order());
  for (unsigned i = 0; i < n; ++i) {
    p.theta_powers_.emplace_back(acc.images().begin(), acc.images().end());
    acc = theta.compose(acc);
  }
  p.derived_ = DerivedData{std::move(g), std::move(theta), b};
  return p;
}

PolyadicGroup tabulate(const PolyadicGroup& p, const Limits& limits) {
  const unsigned n = p.arity();
  std::uint64_t entries = checked_power(p.order(), n, limits.max_table_entries, "|G|^n table size");
  std::vector<Elem> table(entries);
  std::vector<Elem> args(n, 0);
  for (std::uint64_t i = 0; i < entries; ++i) {
    table[i] = p.eval_unchecked(args.data());
    next_tuple(args, p.order());
  }
  return PolyadicGroup::from_table(p.names(), n, std::move(table), p.label(), limits);
}

DerivedData derived_form(const PolyadicGroup& p, const Limits& limits) {
  if (const DerivedData* d = p.derived()) return *d;
  return hosszu_gloskin(p, 0, limits);
}

AxiomReport verify_axioms(const PolyadicGroup& p, const Limits& limits) {
  const unsigned n = p.arity();
  const std::size_t size = p.order();
  const unsigned width = 2 * n - 1;
  const std::uint64_t total = checked_power(size, width, limits.max_axiom_tuples, "|G|^(2n-1)");
  AxiomReport report;
  report.tuples_checked = total;

  struct ChunkResult {
    std::optional<std::vector<Elem>> tuple;
    unsigned j = 0;
  };
  std::vector<ChunkResult> results(detail::resolve_jobs(limits.jobs));
  detail::parallel_chunks(total, limits.jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    std::vector<Elem> xs(width), args(n);
    decode_digits(begin, size, xs);
    for (std::uint64_t c = begin; c < end; ++c, next_tuple(xs, size)) {
      Elem first = 0;
      for (unsigned pos = 0; pos < n; ++pos) {
        Elem inner = p.eval_unchecked(xs.data() + pos);
        for (unsigned k = 0; k < pos; ++k) args[k] = xs[k];
        args[pos] = inner;
        for (unsigned k = pos + 1; k < n; ++k) args[k] = xs[k + n - 1];
        Elem v = p.eval_unchecked(args.data());
        if (pos == 0) {
          first = v;
        } else if (v != first) {
          results[w] = {xs, pos + 1};
          return;
        }
      }
    }
  });
  for (auto& r : results)
    if (r.tuple) {
      report.associative = false;
      report.associativity_witness = std::move(*r.tuple);
      report.position_i = 1;
      report.position_j = r.j;
      break;
    }

  // Solvability: for each position and each context, x -> f(...x...) must
  // hit every target exactly once.
  std::vector<Elem> ctx(n - 1), args(n);
  std::vector<unsigned> hits(size);
  for (unsigned pos = 0; pos < n && report.solvable && report.unique; ++pos) {
    std::fill(ctx.begin(), ctx.end(), 0);
    do {
      std::fill(hits.begin(), hits.end(), 0u);
      for (unsigned k = 0, c = 0; k < n; ++k)
        if (k != pos) args[k] = ctx[c++];
      for (Elem x = 0; x < size; ++x) {
        args[pos] = x;
        ++hits[p.eval_unchecked(args.data())];
      }
      for (Elem t = 0; t < size; ++t) {
        if (hits[t] == 1) continue;
        if (hits[t] == 0) report.solvable = false;
        if (hits[t] > 1) report.unique = false;
        // Existence and uniqueness fail together on a finite carrier, but
        // each is reported on its own.
        report.solve_position = pos + 1;
        report.solve_context = ctx;
        report.solve_target = t;
        for (Elem u = 0; u < size; ++u) {
          if (hits[u] == 0) report.solvable = false;
          if (hits[u] > 1) report.unique = false;
        }
        break;
      }
      if (!report.solvable || !report.unique) break;
    } while (next_tuple(ctx, size));
  }
  return report;
}

Elem skew(const PolyadicGroup& p, Elem x) {
  require_element(p, x);
  const unsigned n = p.arity();
  if (const DerivedData* d = p.derived()) {
    // x̄ = b^-1 (theta(x) theta^2(x) ... theta^(n-2)(x))^-1
    const FiniteGroup& g = d->group;
    Elem prod = g.identity();
    Elem t = x;
    for (unsigned k = 1; k <= n - 2; ++k) {
      t = d->theta(t);
      prod = g.mul(prod, t);
    }
    return g.mul(g.inv(d->b), g.inv(prod));
  }
  std::vector<Elem> args(n, x);
  for (Elem y = 0; y < p.order(); ++y) {
    args[n - 1] = y;
    if (p.eval_unchecked(args.data()) == x) return y;
  }
  throw Error(ErrorCode::NoSolution, "no skew element for " + p.name(x), {std::int64_t(x)});
}

std::vector<Elem> skew_table(const PolyadicGroup& p) {
  std::vector<Elem> out(p.order());
  for (Elem x = 0; x < p.order(); ++x) out[x] = skew(p, x);
  return out;
}

DornteReport dornte_check(const PolyadicGroup& p) {
  const unsigned n = p.arity();
  const auto bar = skew_table(p);
  std::vector<Elem> args(n);
  for (Elem x = 0; x < p.order(); ++x)
    for (Elem y = 0; y < p.order(); ++y)
      for (unsigned i = 2; i <= n; ++i) {
        // f(x^(i-2), x̄, x^(n-i), y)
        std::fill(args.begin(), args.end(), x);
        args[i - 2] = bar[x];
        args[n - 1] = y;
        if (p.eval_unchecked(args.data()) != y) return {false, x, y, i, true};
        // f(y, x^(n-i), x̄, x^(i-2))
        std::fill(args.begin(), args.end(), x);
        args[0] = y;
        args[n - i + 1] = bar[x];
        if (p.eval_unchecked(args.data()) != y) return {false, x, y, i, false};
      }
  return {};
}

FiniteGroup retract(const PolyadicGroup& p, Elem a) {
  require_element(p, a);
  const unsigned n = p.arity();
  const std::size_t size = p.order();
  std::vector<Elem> table(size * size), args(n, a);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      args[0] = x;
      args[n - 1] = y;
      table[x * size + y] = p.eval_unchecked(args.data());
    }
  std::string label = p.label().empty() ? "" : "ret_" + p.name(a) + "(" + p.label() + ")";
  FiniteGroup g = validate_group(p.names(), std::move(table), std::move(label));

  const auto bar = skew_table(p);
  const Elem a_bar = bar[a];
  if (g.identity() != a_bar)
    throw Error(ErrorCode::ReconstructionMismatch, "retract identity is not the skew of the anchor");
  // inverse of x is f(ā, x^(n-3), x̄, ā)
  for (Elem x = 0; x < size; ++x) {
    std::fill(args.begin(), args.end(), x);
    args[0] = a_bar;
    args[n - 2] = bar[x];
    args[n - 1] = a_bar;
    if (p.eval_unchecked(args.data()) != g.inv(x))
      throw Error(ErrorCode::ReconstructionMismatch,
                  "retract inverse formula disagrees with the table at " + p.name(x),
                  {std::int64_t(x)});
  }
  return g;
}

std::optional<Elem> nary_identity(const PolyadicGroup& p) {
  const unsigned n = p.arity();
  std::vector<Elem> args(n);
  for (Elem a = 0; a < p.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < p.order() && ok; ++x)
      for (unsigned i = 0; i < n && ok; ++i) {
        std::fill(args.begin(), args.end(), a);
        args[i] = x;
        ok = p.eval_unchecked(args.data()) == x;
      }
    if (ok) return a;
  }
  return std::nullopt;
}

DerivedData hosszu_gloskin(const PolyadicGroup& p, Elem a, const Limits& limits) {
  require_element(p, a);
  const unsigned n = p.arity();
  FiniteGroup g = retract(p, a);
  const Elem a_bar = g.identity();

  std::vector<Elem> args(n, a), theta_images(p.order());
  args[0] = a_bar;
  for (Elem x = 0; x < p.order(); ++x) {
    args[1] = x;
    theta_images[x] = p.eval_unchecked(args.data());
  }
  std::fill(args.begin(), args.end(), a_bar);
  const Elem b = p.eval_unchecked(args.data());

  PolyadicGroup rebuilt;
  try {
    Limits relaxed = limits;
    relaxed.max_derived_order = std::max(limits.max_derived_order, p.order());
    rebuilt = derive(g, Automorphism(theta_images), b, n, relaxed);
  } catch (const Error& e) {
    throw Error(ErrorCode::ReconstructionMismatch,
                std::string("recovered triple is not a valid derivation: ") + e.what());
  }
  const std::uint64_t total =
      checked_power(p.order(), n, limits.max_axiom_tuples, "|G|^n reconstruction check");
  std::vector<Elem> xs(n, 0);
  for (std::uint64_t c = 0; c < total; ++c, next_tuple(xs, p.order()))
    if (rebuilt.eval_unchecked(xs.data()) != p.eval_unchecked(xs.data()))
      throw Error(ErrorCode::ReconstructionMismatch, "recovered operation differs from f",
                  to_witness(xs));
  return *rebuilt.derived();
}

std::vector<std::vector<Elem>> polyadic_subgroups(const PolyadicGroup& p, const Limits& limits) {
  if (p.order() > limits.max_group_order)
    throw Error(ErrorCode::SizeCapExceeded, "carrier exceeds max_group_order");
  const DerivedData d = derived_form(p, limits);
  const FiniteGroup& g = d.group;
  const auto subgroups = all_subgroups(g, limits);
  const unsigned n = p.arity();

  std::set<std::vector<Elem>> found;
  std::vector<bool> in(g.order());
  for (Elem u = 0; u < g.order(); ++u) {
    const Automorphism psi = psi_u(g, d.theta, u);
    std::vector<Elem> us(n, u);
    const Elem c = p.eval_unchecked(us.data());
    // Subgroups of G_u are exactly the right translates K u of subgroups K of G.
    for (const auto& k : subgroups) {
      std::vector<Elem> h;
      h.reserve(k.size());
      std::fill(in.begin(), in.end(), false);
      for (Elem x : k) {
        Elem y = g.mul(x, u);
        h.push_back(y);
        in[y] = true;
      }
      if (!in[c]) continue;
      bool invariant = std::all_of(h.begin(), h.end(), [&](Elem x) { return in[psi(x)]; });
      if (!invariant) continue;
      std::sort(h.begin(), h.end());
      found.insert(std::move(h));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<PolyadicHom> polyadic_homs(const PolyadicGroup& p, const PolyadicGroup& q,
                                       const Limits& limits) {
  if (p.arity() != q.arity())
    throw Error(ErrorCode::ArityMismatch, "polyadic groups have different arities");
  const DerivedData dp = derived_form(p, limits);
  const DerivedData dq = derived_form(q, limits);
  const FiniteGroup& h = dq.group;
  const unsigned n = p.arity();

  std::map<std::vector<Elem>, PolyadicHom> unique;
  for (const Hom& phi : enumerate_homs(dp.group, h, limits)) {
    for (Elem a = 0; a < h.order(); ++a) {
      std::vector<Elem> as(n, a);
      if (q.eval_unchecked(as.data()) != h.mul(phi(dp.b), a)) continue;
      const Elem a_inv = h.inv(a);
      bool ok = true;
      for (Elem x = 0; x < dp.group.order() && ok; ++x)
        ok = phi(dp.theta(x)) == h.mul(h.mul(a, dq.theta(phi(x))), a_inv);
      if (!ok) continue;
      std::vector<Elem> images(dp.group.order());
      for (Elem x = 0; x < images.size(); ++x) images[x] = h.mul(phi(x), a);
      unique.try_emplace(images, PolyadicHom{a, phi, images});
    }
  }
  std::vector<PolyadicHom> out;
  out.reserve(unique.size());
  for (auto& [images, hom] : unique) out.push_back(std::move(hom));
  return out;
}

}  // namespace polyadic
