#include "doctest.h"
#include "polyadic/post_cover.hpp"
#include "polyadic/translate.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("terms") {

TEST_CASE("parse and print terms") {
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  Term t = parse_term("f(x1, ~c2, x2)", syn);
  CHECK(t.kind == Term::Kind::Apply);
  CHECK(t.args[1].kind == Term::Kind::Skew);
  CHECK(to_string(t, syn) == "f(x1,~c2,x2)");
  CHECK(t.variable_bound() == 2);
  CHECK_FALSE(t.is_coefficient_free());
  Term r = parse_term("f(x1^(2), x3)", syn);
  REQUIRE(r.args.size() == 3);
  CHECK(r.args[0] == r.args[1]);
  CHECK_THROWS_AS(parse_term("f(x1,x2)", syn), Error);
  CHECK_THROWS_AS(parse_term("f(x1,q,x2)", syn), Error);
  CHECK_THROWS_AS(parse_term("f(x1,x2,", syn), Error);
}

TEST_CASE("parse errors carry a position") {
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  try {
    parse_equation("f(x1,x1,x1) = = x2", syn, 4);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("random terms round trip through text") {
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, 4, 3, 3, p.order());
    CHECK(parse_term(to_string(t, syn), syn) == t);
  }
}

TEST_CASE("generator syntax for presentations") {
  std::vector<std::string> gens{"x", "y"};
  TermSyntax syn{nullptr, &gens, 3};
  Term t = parse_term("f(x, ~y, x)", syn);
  CHECK(t.args[0] == Term::variable(0));
  CHECK(t.args[1].args[0] == Term::variable(1));
  CHECK(t.is_coefficient_free());
}

TEST_CASE("evaluation") {
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  Term t = parse_term("f(x1, x2, ~x1)", syn);
  std::vector<Elem> xs{1, 2};
  // 1 + (-2) + skew(1) = 1 - 2 + 1 = 0
  CHECK(eval_term(t, xs, p) == 0);
  CHECK_THROWS_AS(eval_term(parse_term("x3", syn), xs, p), Error);
}

TEST_CASE("group terms") {
  FiniteGroup z3 = cyclic_group(3);
  TermSyntax syn{&z3.names(), nullptr, 0};
  GroupTerm t = parse_group_term("c1*x1^2*x2^-1*c2*x1", syn);
  std::vector<Elem> xs{1, 2};
  CHECK(eval_group_term(t, xs, z3) == (1 + 2 - 2 + 2 + 1) % 3);
  GroupTerm u = parse_group_term("(x1 x2)'", syn);
  CHECK(eval_group_term(u, xs, z3) == 0);
  CHECK(to_string(parse_group_term("x1^-1", syn), syn) == "x1^-1");
}

TEST_CASE("group to polyadic translation matches on every anchor") {
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  GroupEquation ge = parse_group_equation("c1*x1^2*x2^-1*c2*x1 = 1", syn);
  for (Elem a = 0; a < p.order(); ++a) {
    FiniteGroup r = retract(p, a);
    Equation pe = group_to_polyadic(ge, a, 3);
    for_each_tuple(3, 2, [&](const std::vector<Elem>& xs) {
      bool group_side = eval_group_term(ge.lhs, xs, r) == eval_group_term(ge.rhs, xs, r);
      bool poly_side = eval_term(pe.lhs, xs, p) == eval_term(pe.rhs, xs, p);
      CHECK(group_side == poly_side);
    });
  }
}

TEST_CASE("group to polyadic translation for larger arity") {
  PolyadicGroup p = s3_arity_four();
  TermSyntax syn{&p.names(), nullptr, 4};
  GroupEquation ge = parse_group_equation("x1 x2 x1^-1 x2^-1 = 1", syn);
  for (Elem a : {Elem{0}, Elem{3}}) {
    FiniteGroup r = retract(p, a);
    Equation pe = group_to_polyadic(ge, a, 4);
    for_each_tuple(p.order(), 2, [&](const std::vector<Elem>& xs) {
      CHECK((eval_group_term(ge.lhs, xs, r) == eval_group_term(ge.rhs, xs, r)) ==
            (eval_term(pe.lhs, xs, p) == eval_term(pe.rhs, xs, p)));
    });
  }
}

TEST_CASE("polyadic to group translation evaluates in the cover") {
  std::mt19937_64 rng(17);
  for (const auto& p : valid_catalog()) {
    PostCover cover = build_post_cover(p);
    for (int i = 0; i < 100; ++i) {
      Term t = random_term(rng, 3, 2, p.arity(), p.order());
      GroupTerm g = polyadic_to_group(t, cover);
      SyllableWord w = normalize_term(t, cover);
      CHECK(w.height(cover) == 1 % (p.arity() - 1));
      for_each_tuple(p.order(), 2, [&](const std::vector<Elem>& xs) {
        std::vector<Elem> embedded{cover.embed(xs[0]), cover.embed(xs[1])};
        Elem direct = cover.embed(eval_term(t, xs, p));
        CHECK(eval_group_term(g, embedded, cover.group) == direct);
        CHECK(eval_syllables(w, xs, cover) == direct);
      });
    }
  }
}

TEST_CASE("normal forms identify equal terms") {
  PolyadicGroup p = z3_neg();
  PostCover cover = build_post_cover(p);
  TermSyntax syn{&p.names(), nullptr, 3};
  auto nf = [&](const char* s) { return normalize_term(parse_term(s, syn), cover); };
  CHECK(nf("f(x1,~x1,x1)") == nf("x1"));
  CHECK(nf("f(f(x1,x2,x3),x4,x5)") == nf("f(x1,f(x2,x3,x4),x5)"));
  const bool same_form = nf("f(c1,c2,x1)") == nf("f(c0,c0,x1)");
  CHECK(same_form == (p.eval(std::vector<Elem>{1, 2, 0}) == 0));
  CHECK_FALSE(nf("f(x1,c1,x2)") == nf("f(x2,c1,x1)"));
  CHECK(to_string(nf("f(x1,c0,x2)"), cover) == "x1 * [(c0,1)] * x2");
}

}
