// Acceptance runner: one PASS/FAIL line per criterion, plus INFO lines.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "polyadic/free_word.hpp"
#include "polyadic/post_cover.hpp"
#include "polyadic/translate.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failure notes; the first few are kept for the report line.
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 3) notes.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << " (" << checks - failures << "/" << checks << " checks)";
    for (const auto& n : notes) out << "; " << n;
    return {failures == 0, out.str()};
  }
};

std::vector<std::string> info_lines;

void info(const std::string& line) { info_lines.push_back(line); }

// The instances criteria 2-5 run on: the constructible catalog entries plus
// the arity-4 S3 substitute.
std::vector<PolyadicGroup> working_set() {
  auto out = valid_catalog();
  out.push_back(s3_arity_four());
  return out;
}

std::string excluded_note() {
  return "S3 catalog entry excluded (not a polyadic group, see criterion 1); "
         "der(S3,I_(12),(12),4) substituted";
}

// The formula x theta(y) theta^2(z) b for S3, theta = I_(12), b = (12), n = 3,
// tabulated without the well-formedness checks of derive.
PolyadicGroup raw_s3_formula() {
  FiniteGroup s3 = symmetric_group(3);
  Elem t = element(s3, "(1 2)");
  Automorphism th = inner_automorphism(s3, t);
  std::vector<Elem> table;
  for_each_tuple(6, 3, [&](const std::vector<Elem>& xs) {
    table.push_back(s3.mul(s3.mul(s3.mul(xs[0], th(xs[1])), th(th(xs[2]))), t));
  });
  return PolyadicGroup::from_table(s3.names(), 3, table, "raw der(S3,I_(12),(12),3)");
}

Outcome criterion1() {
  Tally t;
  for (const auto& e : catalog()) {
    PolyadicGroup p;
    if (e.group) {
      p = *e.group;
    } else {
      t.check(false, e.name + " rejected by derive: " + e.error);
      p = raw_s3_formula();
    }
    AxiomReport r = verify_axioms(p);
    t.check(r.ok(), e.name + " verify_axioms");
    if (!r.ok() && !e.group) {
      std::ostringstream w;
      w << e.name << " tabulated formula: associative=" << r.associative
        << " solvable=" << r.solvable << " unique=" << r.unique;
      if (!r.associative) {
        w << " witness=(";
        for (std::size_t i = 0; i < r.associativity_witness.size(); ++i)
          w << (i ? "," : "") << p.name(r.associativity_witness[i]);
        w << ") positions " << r.position_i << "," << r.position_j;
      }
      info(w.str());
      continue;
    }
    t.check(dornte_check(p).holds, e.name + " dornte");
    PolyadicGroup tab = tabulate(p);
    std::vector<Elem> cells(tab.table().begin(), tab.table().end());
    std::size_t missed = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (Elem v = 1; v < p.order(); ++v) {
        auto mutated = cells;
        mutated[i] = static_cast<Elem>((mutated[i] + v) % p.order());
        PolyadicGroup m = PolyadicGroup::from_table(p.names(), p.arity(), mutated);
        if (verify_axioms(m).ok()) ++missed;
      }
    }
    t.check(missed == 0, e.name + " " + std::to_string(missed) + " mutations undetected");
  }
  PolyadicGroup sub = s3_arity_four();
  info("der(S3,I_(12),(12),4) verify_axioms=" + std::to_string(verify_axioms(sub).ok()) +
       " dornte=" + std::to_string(dornte_check(sub).holds));
  return t.outcome("axiom suite over the six catalog instances, with all single-entry mutations");
}

Outcome criterion2() {
  Tally t;
  for (const auto& p : working_set())
    for (Elem x = 0; x < p.order(); ++x)
      t.check(skew(p, x) == brute_skew(p, x), p.label() + " skew of " + p.name(x));
  PolyadicGroup z = z3_neg();
  for (Elem x = 0; x < 3; ++x) t.check(skew(z, x) == x, "der(Z3,2x) skew not identity");
  return t.outcome("closed-form skew equals brute force; identity on der(Z3,2x,0,3); " + excluded_note());
}

Outcome criterion3() {
  Tally t;
  for (const auto& p : working_set()) {
    for (Elem a = 0; a < p.order(); ++a) {
      DerivedData d = hosszu_gloskin(p, a);
      PolyadicGroup q = derive(d.group, d.theta, d.b, p.arity());
      std::size_t mismatches = 0;
      for_each_tuple(p.order(), p.arity(), [&](const std::vector<Elem>& xs) {
        if (q.eval(xs) != p.eval(xs)) ++mismatches;
      });
      t.check(mismatches == 0, p.label() + " anchor " + p.name(a) + " mismatches");
      t.check(d.theta(d.b) == d.b, p.label() + " theta_a(b_a) != b_a");
      Automorphism top = d.theta.power(p.arity() - 1);
      bool conj = true;
      for (Elem x = 0; x < p.order(); ++x)
        conj = conj && top(x) == d.group.mul(d.group.mul(d.b, x), d.group.inv(d.b));
      t.check(conj, p.label() + " theta_a^(n-1) != I_(b_a)");
    }
  }
  return t.outcome("Hosszu-Gloskin round trip for every anchor; " + excluded_note());
}

Outcome criterion4() {
  Tally t;
  for (const auto& p : working_set()) {
    std::vector<FiniteGroup> rs;
    for (Elem a = 0; a < p.order(); ++a) rs.push_back(retract(p, a));
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        auto w = are_isomorphic(rs[i], rs[j]);
        bool ok = w && is_homomorphism(rs[i], rs[j], w->images) &&
                  std::set<Elem>(w->images.begin(), w->images.end()).size() == rs[j].order();
        t.check(ok, p.label() + " retracts " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return t.outcome("all retracts pairwise isomorphic with verified witnesses; " + excluded_note());
}

Outcome criterion5() {
  Tally t;
  for (const auto& p : working_set()) {
    PostCover c = build_post_cover(p);
    PostCoverReport r = check_post_properties(p, c);
    t.check(r.ok(), p.label() + " property " + std::to_string(r.failed));
    t.check(c.group.order() == (p.arity() - 1) * p.order(), p.label() + " cover order");
  }
  auto cat = valid_catalog();
  PostCover c0 = build_post_cover(cat[0]), c1 = build_post_cover(cat[1]);
  auto w0 = are_isomorphic(c0.group, cyclic_group(6));
  auto w1 = are_isomorphic(c1.group, symmetric_group(3));
  t.check(w0 && is_homomorphism(c0.group, cyclic_group(6), w0->images), "cover of der(Z3,id) not Z6");
  t.check(w1 && is_homomorphism(c1.group, symmetric_group(3), w1->images), "cover of der(Z3,2x) not S3");
  return t.outcome("five Post properties, |cover| = (n-1)|G|, Z6 and S3 witnessed; " + excluded_note());
}

PolyadicPresentation presentation(std::vector<std::string> gens, const std::string& lhs,
                                  const std::string& rhs, unsigned n) {
  PolyadicPresentation pres{std::move(gens), {}};
  TermSyntax syn{nullptr, &pres.generators, n};
  pres.relations.push_back(parse_equation(lhs + " = " + rhs, syn));
  return pres;
}

Outcome criterion6() {
  Tally t;
  CoverPresentation single = presentation_to_group(presentation({"x"}, "~x", "x", 3), 3);
  FiniteGroup g = coset_enumerate(single.presentation, 1000);
  t.check(g.order() == 2, "singleton cover order " + std::to_string(g.order()));
  for (unsigned n : {3u, 4u, 5u}) {
    std::string pad, pad1 = "x";
    for (unsigned i = 0; i < n - 2; ++i) pad += ",x";
    for (unsigned i = 1; i < n - 1; ++i) pad1 += ",x";
    CoverPresentation cp =
        presentation_to_group(presentation({"x", "y"}, "f(x,y" + pad + ")", "f(y," + pad1 + ")", n), n);
    Alphabet a(cp.presentation.generators);
    FreeWord commutator = parse_word("x y x^-1 y^-1", a);
    t.check(cp.presentation.relators.size() == 1 && cp.presentation.relators[0] == commutator,
            "commutator relator at n=" + std::to_string(n));
    CoverPresentation free_y = presentation_to_group(presentation({"x", "y"}, "~x", "x", n), n);
    bool ok = free_y.presentation.generators.size() == 2 && free_y.presentation.relators.size() == 1 &&
              free_y.presentation.relators[0] == FreeWord::generator(0, 1 - std::int64_t(n));
    t.check(ok, "<x,y|~x=x> relator at n=" + std::to_string(n));
  }
  return t.outcome("<x|~x=x> gives order 2; commutator relator; x^(1-n) with y free, n = 3,4,5");
}

Outcome criterion7() {
  Tally t;
  auto cat = valid_catalog();
  for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
    const PolyadicGroup& p = cat[i];
    std::set<std::vector<Elem>> got;
    for (const auto& h : polyadic_homs(p, p)) got.insert(h.images);
    auto expected = brute_homs(p, p);
    t.check(got == expected, p.label() + " hom sets differ");
    info(p.label() + " endomorphisms: " + std::to_string(got.size()));
  }
  return t.outcome("(a,phi) enumeration equals brute-force f-preserving maps");
}

Outcome criterion8() {
  Tally t;
  Alphabet a;
  FreeWord w = parse_word("x^2 y^-1 x y^2", a);
  t.check(height(w) == 4, "height");
  t.check(in_polyadic_free(w, 4), "membership in F_pol^4");

  std::mt19937_64 rng(20240601);
  auto random_word = [&](unsigned n) {
    while (true) {
      std::vector<Run> letters;
      std::size_t len = 1 + rng() % 8;
      for (std::size_t i = 0; i < len; ++i)
        letters.push_back({static_cast<GenId>(rng() % 3), (rng() % 2) ? 1 : -1});
      FreeWord v = reduce(letters);
      if (in_polyadic_free(v, n)) return v;
    }
  };
  std::size_t assoc_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned n = 3 + trial % 3;
    std::vector<FreeWord> xs;
    for (unsigned i = 0; i < 2 * n - 1; ++i) xs.push_back(random_word(n));
    std::optional<FreeWord> first;
    for (unsigned i = 0; i < n; ++i) {
      std::vector<FreeWord> inner(xs.begin() + i, xs.begin() + i + n);
      std::vector<FreeWord> outer(xs.begin(), xs.begin() + i);
      outer.push_back(f_free(inner, n).word());
      outer.insert(outer.end(), xs.begin() + i + n, xs.end());
      FreeWord v = f_free(outer, n).word();
      if (first && !(*first == v)) {
        ++assoc_failures;
        break;
      }
      first = v;
    }
  }
  t.check(assoc_failures == 0, std::to_string(assoc_failures) + " associativity failures");
  std::size_t skew_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned n = 3 + trial % 3;
    PolyadicFreeWord v(random_word(n), n);
    std::vector<FreeWord> args(n - 1, v.word());
    args.push_back(skew_free(v).word());
    if (!(f_free(args, n) == v)) ++skew_failures;
  }
  t.check(skew_failures == 0, std::to_string(skew_failures) + " skew failures");
  return t.outcome("height 4 and F_pol^4 membership; 1000 associativity and 1000 skew instances");
}

Outcome criterion9() {
  Tally t;
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  for (Elem b = 0; b < 3; ++b) {
    for (Elem c = 0; c < 3; ++c) {
      std::string text = p.name(b) + "*x1^2*x2^-1*" + p.name(c) + "*x1 = 1";
      GroupEquation ge = parse_group_equation(text, syn);
      for (Elem a = 0; a < 3; ++a) {
        FiniteGroup r = retract(p, a);
        Equation pe = group_to_polyadic(ge, a, 3);
        std::size_t mismatches = 0;
        for_each_tuple(3, 2, [&](const std::vector<Elem>& xs) {
          bool lhs = eval_group_term(ge.lhs, xs, r) == eval_group_term(ge.rhs, xs, r);
          bool rhs = eval_term(pe.lhs, xs, p) == eval_term(pe.rhs, xs, p);
          if (lhs != rhs) ++mismatches;
        });
        t.check(mismatches == 0, text + " anchor " + p.name(a));
      }
    }
  }
  // Golden structure with the coefficient kept, and the displayed form with
  // it elided.
  std::string kept = to_string(group_to_polyadic(parse_group_equation("c1*x1^2*x2^-1*c2*x1 = 1", syn), 0, 3), syn);
  std::string elided = to_string(group_to_polyadic(parse_group_equation("c1*x1^2*x2^-1*x1 = 1", syn), 0, 3), syn);
  t.check(kept == "f(c1,c0,f(x1,c0,f(x1,c0,f(f(~c0,~x2,~c0),c0,f(c2,c0,x1))))) = ~c0", "golden form: " + kept);
  t.check(elided == "f(c1,c0,f(x1,c0,f(x1,c0,f(f(~c0,~x2,~c0),c0,x1)))) = ~c0", "elided form: " + elided);
  return t.outcome("b x^2 y^-1 c x = 1 translation has the same solutions over G^2 for all b, c, anchors");
}

Outcome criterion10() {
  Tally t;
  std::mt19937_64 rng(1010);
  std::size_t coordinate_groups = 0;
  for (const auto& p : valid_catalog()) {
    for (unsigned m = 1; m <= 3; ++m) {
      if (space_size(p.order(), m) > 64) continue;
      for (int trial = 0; trial < 8; ++trial) {
        EquationSystem s1 = random_system(rng, m, 1 + trial % 2, p.arity(), p.order());
        EquationSystem s2 = random_system(rng, m, 1 + trial % 3, p.arity(), p.order());
        EquationSystem both = s1;
        both.equations.insert(both.equations.end(), s2.equations.begin(), s2.equations.end());
        AlgebraicSet v1 = solve(p, s1), v2 = solve(p, s2), v12 = solve(p, both);
        std::vector<std::uint64_t> meet;
        std::set_intersection(v1.points.begin(), v1.points.end(), v2.points.begin(), v2.points.end(),
                              std::back_inserter(meet));
        t.check(v12.points == meet, p.label() + " V(S1 u S2) != V(S1) n V(S2)");
        for (const auto* v : {&v1, &v2, &v12}) {
          if (v->points.empty() || v->points.size() > 16) continue;
          CoordinateGroup h = coordinate_group(p, *v);
          t.check(structure_check(p, h).found, p.label() + " structural search failed");
          ++coordinate_groups;
        }
      }
    }
  }
  info("criterion 10: " + std::to_string(coordinate_groups) + " coordinate groups searched");

  // Closure operator laws for |G|^m <= 27.
  for (const auto& p : valid_catalog()) {
    for (unsigned m = 1; m <= 3; ++m) {
      std::uint64_t space = space_size(p.order(), m);
      if (space > 27) continue;
      std::vector<AlgebraicSet> subsets;
      if (space <= 9) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << space); ++mask) {
          AlgebraicSet z{m, {}};
          for (std::uint64_t c = 0; c < space; ++c)
            if (mask >> c & 1) z.points.push_back(c);
          subsets.push_back(z);
        }
      } else {
        for (int i = 0; i < 60; ++i) {
          AlgebraicSet z{m, {}};
          for (std::uint64_t c = 0; c < space; ++c)
            if (rng() % 5 == 0) z.points.push_back(c);
          subsets.push_back(z);
        }
      }
      for (const auto& z : subsets) {
        AlgebraicSet c = closure(p, z);
        bool extensive = std::includes(c.points.begin(), c.points.end(), z.points.begin(), z.points.end());
        t.check(extensive, p.label() + " closure not extensive");
        t.check(closure(p, c) == c, p.label() + " closure not idempotent");
        // Monotone: a random superset has a larger closure.
        AlgebraicSet bigger = z;
        for (std::uint64_t code = 0; code < space; ++code)
          if (rng() % 3 == 0) bigger.points.push_back(code);
        std::sort(bigger.points.begin(), bigger.points.end());
        bigger.points.erase(std::unique(bigger.points.begin(), bigger.points.end()), bigger.points.end());
        AlgebraicSet cb = closure(p, bigger);
        t.check(std::includes(cb.points.begin(), cb.points.end(), c.points.begin(), c.points.end()),
                p.label() + " closure not monotone");
      }
    }
  }

  // Minimal subsystems on 100 random systems.
  auto cat = valid_catalog();
  for (int trial = 0; trial < 100; ++trial) {
    const PolyadicGroup& p = cat[trial % cat.size()];
    unsigned m = p.order() > 3 ? 1 + trial % 2 : 1 + trial % 3;
    EquationSystem s = random_system(rng, m, 2 + trial % 4, p.arity(), p.order());
    MinimalSubsystem ms = minimal_subsystem(p, s);
    t.check(solve(p, ms.system) == solve(p, s), p.label() + " minimal subsystem changed V");
  }
  return t.outcome("V of unions, closure laws, structural search, minimal subsystems");
}

Outcome criterion11() {
  Tally t;
  PolyadicGroup p = z3_neg();
  TermSyntax syn{&p.names(), nullptr, 3};
  std::vector<std::pair<unsigned, std::vector<std::string>>> systems{
      {1, {"f(x1,x1,x1) = x1"}},
      {1, {"~x1 = x1"}},
      {1, {"f(x1,x1,f(x1,x1,x1)) = x1"}},
      {2, {"~x1 = x1", "x1 = x2"}},
      {2, {"~x1 = x1", "~x2 = x2", "x1 = x2"}},
  };
  std::size_t found = 0;
  for (const auto& [m, lines] : systems) {
    EquationSystem s{m, {}};
    std::string label;
    for (const auto& l : lines) {
      s.equations.push_back(parse_equation(l, syn));
      label += (label.empty() ? "" : "; ") + l;
    }
    auto start = std::chrono::steady_clock::now();
    CoverComparison r = compare_cover_coordinates(p, s);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs <= 60.0, label + " took " + std::to_string(secs) + "s");
    if (r.epimorphism && secs <= 60.0) ++found;
    std::ostringstream line;
    line << "thm63 {" << label << "}: |Gamma_G|=" << r.gamma_g_order << " |cover|=" << r.cover_order
         << " |Gamma_G*|=" << r.gamma_cover_order << " epimorphism=" << r.epimorphism;
    info(line.str());
  }
  t.check(found >= 3, "only " + std::to_string(found) + " epimorphisms found");
  {
    EquationSystem s{1, {parse_equation("x1 = x1", syn)}};
    CoverComparison r = compare_cover_coordinates(p, s);
    info("thm63 {x1 = x1}: |Gamma_G|=" + std::to_string(r.gamma_g_order) + " |cover|=" +
         std::to_string(r.cover_order) + " |Gamma_G*|=" + std::to_string(r.gamma_cover_order) +
         " epimorphism=" + std::to_string(r.epimorphism) + " witness " + r.witness_left + " vs " +
         r.witness_right);
  }
  return t.outcome(std::to_string(found) + " coefficient-free systems with the epimorphism found");
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite", criterion1},        {"skew oracle", criterion2},
      {"Hosszu-Gloskin round trip", criterion3}, {"retract isomorphism", criterion4},
      {"Post cover", criterion5},         {"presentation pipeline", criterion6},
      {"homomorphism enumeration", criterion7}, {"free words", criterion8},
      {"translation", criterion9},        {"algebraic geometry", criterion10},
      {"covering coordinate groups", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " ["
              << timing << "]: " << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  for (const auto& line : info_lines) std::cout << "INFO " << line << "\n";
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
