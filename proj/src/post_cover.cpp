#include "polyadic/post_cover.hpp"

#include <deque>

#include "polyadic/error.hpp"

namespace polyadic {

namespace {

std::vector<std::int64_t> with_property(unsigned property, std::initializer_list<std::int64_t> rest) {
  std::vector<std::int64_t> w{property};
  w.insert(w.end(), rest);
  return w;
}

void fail(PostCoverReport& r, unsigned property, std::vector<std::int64_t> witness) {
  r.holds[property - 1] = false;
  if (r.failed == 0) {
    r.failed = property;
    r.witness = std::move(witness);
  }
}

bool next_tuple(std::vector<Elem>& xs, std::size_t base) {
  for (std::size_t k = xs.size(); k-- > 0;) {
    if (++xs[k] < base) return true;
    xs[k] = 0;
  }
  return false;
}

}  // namespace

std::vector<Elem> PostCover::kernel() const {
  std::vector<Elem> r(base_order);
  for (Elem g = 0; g < base_order; ++g) r[g] = element(g, 0);
  return r;
}

PostCoverReport check_post_properties(const PolyadicGroup& p, const PostCover& cover,
                                      const Limits& limits) {
  PostCoverReport r;
  const FiniteGroup& c = cover.group;
  const std::size_t size = p.order();
  const unsigned n = p.arity();
  const unsigned m = n - 1;

  if (c.order() != m * size)
    throw Error(ErrorCode::PropertyFailure, "cover order is not (n-1)|G|", {0, std::int64_t(c.order())});

  // 1: R normal, embedded G equals the coset R (g0,1).
  const auto kernel = cover.kernel();
  std::vector<char> in_r(c.order(), 0);
  for (Elem k : kernel) in_r[k] = 1;
  for (Elem x : kernel)
    for (Elem y : kernel)
      if (!in_r[c.mul(x, c.inv(y))]) fail(r, 1, with_property(1, {x, y}));
  for (Elem g = 0; g < c.order(); ++g)
    for (Elem k : kernel)
      if (!in_r[c.mul(c.mul(g, k), c.inv(g))]) fail(r, 1, with_property(1, {g, k}));
  {
    std::vector<char> in_image(c.order(), 0);
    for (Elem g = 0; g < size; ++g) in_image[cover.embed(g)] = 1;
    const Elem e0 = cover.embed(0);
    for (Elem k : kernel)
      if (!in_image[c.mul(k, e0)]) fail(r, 1, with_property(1, {k}));
  }

  // 2: R is isomorphic to a retract.
  {
    FiniteGroup rg = subgroup_as_group(c, kernel);
    FiniteGroup ret = retract(p, 0);
    r.retract_isomorphism = are_isomorphic(ret, rg, limits);
    if (!r.retract_isomorphism) fail(r, 2, with_property(2, {0}));
  }

  // 3: the grade is a homomorphism onto Z_(n-1) with kernel R.
  for (Elem x = 0; x < c.order(); ++x)
    for (Elem y = 0; y < c.order(); ++y)
      if (cover.grade(c.mul(x, y)) != (cover.grade(x) + cover.grade(y)) % m)
        fail(r, 3, with_property(3, {x, y}));

  // 4: f is the n-fold product of embedded elements.
  {
    std::uint64_t total = 1;
    for (unsigned k = 0; k < n; ++k) {
      total *= size;
      if (total > limits.max_axiom_tuples)
        throw Error(ErrorCode::SizeCapExceeded, "|G|^n exceeds the tuple cap");
    }
    std::vector<Elem> xs(n, 0);
    do {
      Elem acc = cover.embed(xs[0]);
      for (unsigned k = 1; k < n; ++k) acc = c.mul(acc, cover.embed(xs[k]));
      if (acc != cover.embed(p.eval_unchecked(xs.data()))) {
        std::vector<std::int64_t> w{4};
        w.insert(w.end(), xs.begin(), xs.end());
        fail(r, 4, std::move(w));
        break;
      }
    } while (next_tuple(xs, size));
  }

  // 5: the embedded coset generates.
  {
    std::vector<Elem> gens(size);
    for (Elem g = 0; g < size; ++g) gens[g] = cover.embed(g);
    auto sub = generated_subgroup(c, gens);
    if (sub.size() != c.order()) fail(r, 5, with_property(5, {std::int64_t(sub.size())}));
  }
  return r;
}

PostCover build_post_cover(const PolyadicGroup& p, const Limits& limits) {
  const unsigned n = p.arity();
  const std::size_t size = p.order();
  const std::size_t m = n - 1;
  if (m * size > limits.max_derived_order)
    throw Error(ErrorCode::SizeCapExceeded, "cover order " + std::to_string(m * size) +
                                                " exceeds the derived-order cap");
  PostCover cover;
  cover.arity = n;
  cover.base_order = size;
  cover.data = derived_form(p, limits);
  const FiniteGroup& g = cover.data.group;
  const Automorphism& theta = cover.data.theta;
  const Elem b = cover.data.b;

  std::vector<Automorphism> powers{Automorphism::identity(size)};
  for (std::size_t i = 1; i < m; ++i) powers.push_back(theta.compose(powers.back()));

  const std::size_t order = m * size;
  std::vector<std::string> names(order);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem x = 0; x < size; ++x)
      names[i * size + x] = "(" + p.name(x) + "," + std::to_string(i) + ")";

  std::vector<Elem> table(order * order);
  for (std::size_t i = 0; i < m; ++i)
    for (Elem x = 0; x < size; ++x)
      for (std::size_t j = 0; j < m; ++j)
        for (Elem y = 0; y < size; ++y) {
          Elem v = g.mul(x, powers[i](y));
          if (i + j >= m) v = g.mul(v, b);
          table[(i * size + x) * order + j * size + y] = static_cast<Elem>(((i + j) % m) * size + v);
        }

  std::string label = p.label().empty() ? std::string("cover") : "cover(" + p.label() + ")";
  try {
    cover.group = validate_group(std::move(names), std::move(table), std::move(label));
  } catch (const Error& e) {
    std::vector<std::int64_t> w{0};
    w.insert(w.end(), e.witness().begin(), e.witness().end());
    throw Error(ErrorCode::PropertyFailure, std::string("cover is not a group: ") + e.what(), w);
  }

  PostCoverReport report = check_post_properties(p, cover, limits);
  if (!report.ok())
    throw Error(ErrorCode::PropertyFailure,
                "Post property " + std::to_string(report.failed) + " fails", report.witness);
  return cover;
}

Hom extend_hom_to_cover(const PolyadicGroup& p, const PostCover& cover,
                        std::span<const Elem> beta, const FiniteGroup& h) {
  const std::size_t size = p.order();
  const unsigned n = p.arity();
  if (beta.size() != size)
    throw Error(ErrorCode::InvalidInput, "beta must map every element of the polyadic group");
  for (Elem v : beta)
    if (v >= h.order()) throw Error(ErrorCode::IndexOutOfRange, "beta image out of range", {v});

  std::vector<Elem> xs(n, 0);
  do {
    Elem prod = beta[xs[0]];
    for (unsigned k = 1; k < n; ++k) prod = h.mul(prod, beta[xs[k]]);
    if (prod != beta[p.eval_unchecked(xs.data())])
      throw Error(ErrorCode::NotPolyadicHom, "beta does not preserve f",
                  std::vector<std::int64_t>(xs.begin(), xs.end()));
  } while (next_tuple(xs, size));

  const FiniteGroup& c = cover.group;
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> images(c.order(), unset);
  std::deque<Elem> queue;
  for (Elem g = 0; g < size; ++g) {
    images[cover.embed(g)] = beta[g];
    queue.push_back(cover.embed(g));
  }
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem g = 0; g < size; ++g) {
      Elem y = c.mul(x, cover.embed(g));
      Elem v = h.mul(images[x], beta[g]);
      if (images[y] == unset) {
        images[y] = v;
        queue.push_back(y);
      } else if (images[y] != v) {
        throw Error(ErrorCode::Inconsistent, "conflicting images during propagation", {y});
      }
    }
  }
  for (Elem v : images)
    if (v == unset) throw Error(ErrorCode::Inconsistent, "embedded coset does not generate the cover");
  if (!is_homomorphism(c, h, images))
    throw Error(ErrorCode::Inconsistent, "propagated map is not a homomorphism");
  return Hom{std::move(images)};
}

FreeWord flatten_term(const Term& t, unsigned n) {
  switch (t.kind) {
    case Term::Kind::Variable: return FreeWord::generator(t.index);
    case Term::Kind::Constant:
      throw Error(ErrorCode::InvalidInput, "presentation relations must be coefficient-free");
    case Term::Kind::Skew: return flatten_term(t.args.front(), n).pow(2 - std::int64_t(n));
    case Term::Kind::Apply: {
      if (t.args.size() != n)
        throw Error(ErrorCode::ArityMismatch, "f applied to " + std::to_string(t.args.size()) +
                                                  " arguments, expected " + std::to_string(n));
      FreeWord w;
      for (const auto& a : t.args) w = w * flatten_term(a, n);
      return w;
    }
  }
  return {};
}

CoverPresentation presentation_to_group(const PolyadicPresentation& pres, unsigned n) {
  if (pres.generators.empty())
    throw Error(ErrorCode::EmptyGeneratorSet, "a presentation needs at least one generator");
  if (n < 3) throw Error(ErrorCode::InvalidInput, "arity must be at least 3");
  CoverPresentation out;
  out.presentation.generators = pres.generators;
  for (const auto& rel : pres.relations) {
    for (const Term* side : {&rel.lhs, &rel.rhs})
      if (side->variable_bound() > pres.generators.size())
        throw Error(ErrorCode::UnboundVariable, "relation uses an undeclared generator");
    FreeWord r = flatten_term(rel.lhs, n) * flatten_term(rel.rhs, n).inverse();
    bool flip = r.height() < 0 || (r.height() == 0 && !r.empty() && r.runs().front().exp < 0);
    out.positive_forms.push_back(flip ? r.inverse() : r);
    out.presentation.relators.push_back(std::move(r));
  }
  return out;
}

}  // namespace polyadic
