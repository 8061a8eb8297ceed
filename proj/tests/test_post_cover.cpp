#include "doctest.h"
#include "polyadic/post_cover.hpp"
#include "support.hpp"

using namespace testing;

namespace {

PolyadicPresentation polyadic_presentation(std::vector<std::string> gens,
                                           const std::vector<std::pair<std::string, std::string>>& rels,
                                           unsigned n) {
  PolyadicPresentation pres{std::move(gens), {}};
  TermSyntax syn{nullptr, &pres.generators, n};
  for (const auto& [l, r] : rels) pres.relations.push_back(parse_equation(l + " = " + r, syn));
  return pres;
}

GroupPresentation group_presentation(std::vector<std::string> gens, std::vector<std::string> rels) {
  GroupPresentation pres{std::move(gens), {}};
  Alphabet a(pres.generators);
  for (const auto& r : rels) pres.relators.push_back(parse_word(r, a));
  return pres;
}

}  // namespace

TEST_SUITE("post-cover") {

TEST_CASE("covers of the catalog") {
  for (const auto& p : valid_catalog()) {
    CAPTURE(p.label());
    PostCover c = build_post_cover(p);
    CHECK(c.group.order() == (p.arity() - 1) * p.order());
    PostCoverReport r = check_post_properties(p, c);
    CHECK(r.ok());
    // f is the n-fold product of embedded elements, rechecked here.
    for_each_tuple(p.order(), p.arity(), [&](const std::vector<Elem>& xs) {
      Elem acc = c.embed(xs[0]);
      for (std::size_t i = 1; i < xs.size(); ++i) acc = c.group.mul(acc, c.embed(xs[i]));
      CHECK(acc == c.embed(p.eval(xs)));
    });
    CHECK(c.kernel().size() == p.order());
  }
  PolyadicGroup q = s3_arity_four();
  CHECK(check_post_properties(q, build_post_cover(q)).ok());
}

TEST_CASE("small covers are the expected groups") {
  auto cat = valid_catalog();
  PostCover c0 = build_post_cover(cat[0]);
  PostCover c1 = build_post_cover(cat[1]);
  CHECK(brute_isomorphic(c0.group, cyclic_group(6)));
  CHECK(brute_isomorphic(c1.group, symmetric_group(3)));
  CHECK(are_isomorphic(c0.group, cyclic_group(6)).has_value());
  CHECK(are_isomorphic(c1.group, symmetric_group(3)).has_value());
}

TEST_CASE("the cover of a table-only group matches the derived one") {
  PolyadicGroup p = valid_catalog()[3];
  PostCover a = build_post_cover(p), b = build_post_cover(tabulate(p));
  CHECK(are_isomorphic(a.group, b.group).has_value());
}

TEST_CASE("universal property: homomorphisms extend to the cover") {
  PolyadicGroup p = z3_neg();
  PostCover c = build_post_cover(p);
  FiniteGroup s3 = symmetric_group(3);
  // beta must turn f into the triple product; brute-force all candidates.
  std::size_t extended = 0;
  for_each_tuple(s3.order(), 3, [&](const std::vector<Elem>& beta) {
    bool ok = true;
    for_each_tuple(3, 3, [&](const std::vector<Elem>& xs) {
      if (!ok) return;
      Elem prod = s3.mul(s3.mul(beta[xs[0]], beta[xs[1]]), beta[xs[2]]);
      ok = beta[p.eval(xs)] == prod;
    });
    if (ok) {
      Hom h = extend_hom_to_cover(p, c, beta, s3);
      CHECK(is_homomorphism(c.group, s3, h.images));
      for (Elem g = 0; g < 3; ++g) CHECK(h(c.embed(g)) == beta[g]);
      ++extended;
    } else {
      try {
        extend_hom_to_cover(p, c, beta, s3);
        FAIL("extended a non-homomorphism");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPolyadicHom);
      }
    }
  });
  CHECK(extended > 0);
}

TEST_CASE("flattening terms") {
  std::vector<std::string> gens{"x", "y"};
  TermSyntax syn{nullptr, &gens, 4};
  Alphabet a(gens);
  CHECK(to_string(flatten_term(parse_term("f(x,y,x,y)", syn), 4), a) == "x*y*x*y");
  CHECK(to_string(flatten_term(parse_term("~x", syn), 4), a) == "x^-2");
  PolyadicGroup p = z3_neg();
  TermSyntax csyn{&p.names(), nullptr, 3};
  CHECK_THROWS_AS(flatten_term(parse_term("f(x1,c1,x1)", csyn), 3), Error);
}

TEST_CASE("presentation of the singleton polyadic group") {
  for (unsigned n : {3u, 4u, 5u}) {
    auto pres = polyadic_presentation({"x"}, {{"~x", "x"}}, n);
    CoverPresentation cp = presentation_to_group(pres, n);
    REQUIRE(cp.presentation.relators.size() == 1);
    Alphabet a(cp.presentation.generators);
    const FreeWord& r = cp.presentation.relators[0];
    CHECK(r == FreeWord::generator(0, 1 - std::int64_t(n)));
    CHECK(cp.positive_forms[0] == FreeWord::generator(0, std::int64_t(n) - 1));
    FiniteGroup g = coset_enumerate(cp.presentation, 1000);
    CHECK(g.order() == n - 1);
    CHECK(brute_isomorphic(g, cyclic_group(n - 1)));
  }
}

TEST_CASE("commutator presentation") {
  for (unsigned n : {3u, 4u, 5u}) {
    std::string pad = n == 3 ? "x" : n == 4 ? "x,x" : "x,x,x";
    std::string pad1 = n == 3 ? "x,x" : n == 4 ? "x,x,x" : "x,x,x,x";
    auto pres = polyadic_presentation({"x", "y"}, {{"f(x,y," + pad + ")", "f(y," + pad1 + ")"}}, n);
    CoverPresentation cp = presentation_to_group(pres, n);
    Alphabet a(cp.presentation.generators);
    REQUIRE(cp.presentation.relators.size() == 1);
    CHECK(cp.presentation.relators[0] == parse_word("x y x^-1 y^-1", a));
  }
}

TEST_CASE("free generator next to a torsion generator") {
  auto pres = polyadic_presentation({"x", "y"}, {{"~x", "x"}}, 4);
  CoverPresentation cp = presentation_to_group(pres, 4);
  REQUIRE(cp.presentation.relators.size() == 1);
  CHECK(cp.presentation.relators[0] == FreeWord::generator(0, -3));
  CHECK(cp.presentation.generators.size() == 2);
  // y is free: enumeration cannot terminate.
  CHECK_THROWS_AS(coset_enumerate(cp.presentation, 500), Error);
}

TEST_CASE("presentation errors") {
  PolyadicPresentation empty;
  CHECK_THROWS_AS(presentation_to_group(empty, 3), Error);
}

TEST_CASE("coset enumeration of standard presentations") {
  struct Case {
    std::vector<std::string> gens, rels;
    std::size_t order;
  };
  std::vector<Case> cases{
      {{"a"}, {"a^5"}, 5},
      {{"a", "b"}, {"a^3", "b^2", "(a b)^2"}, 6},
      {{"a", "b"}, {"a^4", "b^2", "(a b)^2"}, 8},
      {{"a", "b"}, {"a^2", "b^2", "(a b)^2"}, 4},
      {{"a", "b"}, {"a^2", "b^3", "(a b)^5"}, 60},
      {{"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}, 8},
      {{"a"}, {"a"}, 1},
  };
  for (const auto& c : cases) {
    FiniteGroup g = coset_enumerate(group_presentation(c.gens, c.rels), 5000);
    CHECK(g.order() == c.order);
  }
  FiniteGroup s3 = coset_enumerate(group_presentation({"a", "b"}, {"a^3", "b^2", "(a b)^2"}), 100);
  CHECK(brute_isomorphic(s3, symmetric_group(3)));
  FiniteGroup q8 = coset_enumerate(group_presentation({"a", "b"}, {"a^4", "a^2 b^-2", "b^-1 a b a"}), 100);
  std::size_t involutions = 0;
  for (Elem x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);
}

TEST_CASE("coset cap and output cap") {
  CHECK_THROWS_AS(coset_enumerate(group_presentation({"x", "y"}, {"x y x^-1 y^-1"}), 100), Error);
  Limits small;
  small.max_derived_order = 10;
  try {
    coset_enumerate(group_presentation({"a"}, {"a^20"}), 1000, small);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCapExceeded);
  }
}

TEST_CASE("coset element names are their representative words") {
  FiniteGroup g = coset_enumerate(group_presentation({"a"}, {"a^3"}), 100);
  CHECK(g.name(g.identity()) == "1");
  CHECK(g.find("a").has_value());
}

}
