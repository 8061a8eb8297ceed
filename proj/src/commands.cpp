#include "commands.hpp"

#include "json.hpp"
#include "polyadic/error.hpp"
#include "polyadic/translate.hpp"

namespace polyadic::cmd {

namespace {

using nlohmann::json;

Doc ok(const json& doc) { return {doc.dump(2) + "\n", false}; }
Doc failed(const json& doc) { return {doc.dump(2) + "\n", true}; }

json error_json(const Error& e) {
  return json{{"code", to_string(e.code())},
              {"message", e.what()},
              {"witness", std::vector<std::int64_t>(e.witness().begin(), e.witness().end())}};
}

bool is_math_failure(const Error& e) { return !is_input_error(e.code()); }

Elem anchor_of(const PolyadicGroup& p, const std::optional<std::string>& anchor) {
  if (!anchor) return 0;
  auto a = p.find(*anchor);
  if (!a) throw Error(ErrorCode::InvalidInput, "unknown anchor element '" + *anchor + "'");
  return *a;
}

json names_of(const PolyadicGroup& p, std::span<const Elem> xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(p.name(x));
  return out;
}

json point_list(const PolyadicGroup& p, const AlgebraicSet& y) {
  json out = json::array();
  for (auto code : y.points) out.push_back(names_of(p, decode_point(code, p.order(), y.vars)));
  return out;
}

json map_of(const PolyadicGroup& source, const std::vector<std::string>& target_names,
            std::span<const Elem> images) {
  json m = json::object();
  for (Elem x = 0; x < source.order(); ++x) m[source.name(x)] = target_names[images[x]];
  return m;
}

json group_json(const FiniteGroup& g) { return json::parse(group_to_json(g)); }

}  // namespace

std::string error_document(const std::string& code, const std::string& message,
                           const std::vector<std::int64_t>& witness) {
  json doc{{"error", {{"code", code}, {"message", message}, {"witness", witness}}}};
  return doc.dump(2) + "\n";
}

Doc validate_group_file(const std::filesystem::path& path, const Limits& limits) {
  std::string text = read_text_file(path);
  try {
    FiniteGroup g = parse_group(text, limits);
    return ok(json{{"kind", "group"},
                   {"valid", true},
                   {"name", g.label()},
                   {"order", g.order()},
                   {"identity", g.name(g.identity())},
                   {"abelian", g.is_abelian()}});
  } catch (const Error& e) {
    if (!is_math_failure(e)) throw;
    return failed(json{{"kind", "group"}, {"valid", false}, {"error", error_json(e)}});
  }
}

Doc validate_polyadic_file(const std::filesystem::path& path, const Limits& limits) {
  std::string text = read_text_file(path);
  PolyadicGroup p;
  try {
    p = parse_polyadic(text, path.parent_path(), limits);
  } catch (const Error& e) {
    if (!is_math_failure(e)) throw;
    return failed(json{{"kind", "polyadic"}, {"valid", false}, {"error", error_json(e)}});
  }
  AxiomReport r = verify_axioms(p, limits);
  json doc{{"kind", "polyadic"},
           {"n", p.arity()},
           {"order", p.order()},
           {"representation", p.is_derived() ? "derived" : "table"},
           {"associative", r.associative},
           {"solvable", r.solvable},
           {"unique", r.unique},
           {"tuples_checked", r.tuples_checked}};
  if (!r.associative)
    doc["associativity_witness"] = {{"tuple", names_of(p, r.associativity_witness)},
                                    {"positions", {r.position_i, r.position_j}}};
  if (!r.solvable || !r.unique)
    doc["solvability_witness"] = {{"position", r.solve_position},
                                  {"context", names_of(p, r.solve_context)},
                                  {"target", p.name(r.solve_target)}};
  bool dornte_holds = false;
  if (r.ok()) {
    DornteReport d = dornte_check(p);
    dornte_holds = d.holds;
    json dj{{"holds", d.holds}};
    if (!d.holds)
      dj["witness"] = {{"x", p.name(d.x)}, {"y", p.name(d.y)}, {"i", d.i}, {"left", d.left}};
    doc["dornte"] = dj;
    auto e = nary_identity(p);
    doc["identity"] = e ? json(p.name(*e)) : json(nullptr);
  } else {
    doc["dornte"] = nullptr;
  }
  doc["valid"] = r.ok() && dornte_holds;
  return doc["valid"].get<bool>() ? ok(doc) : failed(doc);
}

Doc derive(const PolyadicGroup& p, const Limits& limits) {
  PolyadicGroup t = tabulate(p, limits);
  return {polyadic_to_json(t), false};
}

Doc skew(const PolyadicGroup& p) {
  auto bar = skew_table(p);
  json m = json::object();
  for (Elem x = 0; x < p.order(); ++x) m[p.name(x)] = p.name(bar[x]);
  return ok(json{{"n", p.arity()}, {"skew", m}});
}

Doc retract(const PolyadicGroup& p, std::optional<std::string> anchor) {
  return {group_to_json(polyadic::retract(p, anchor_of(p, anchor))), false};
}

Doc hosszu_gloskin(const PolyadicGroup& p, std::optional<std::string> anchor, const Limits& limits) {
  Elem a = anchor_of(p, anchor);
  DerivedData d = polyadic::hosszu_gloskin(p, a, limits);
  return {derived_to_json(d, p.arity(), p.label()), false};
}

Doc identity(const PolyadicGroup& p) {
  auto e = nary_identity(p);
  return ok(json{{"n", p.arity()}, {"identity", e ? json(p.name(*e)) : json(nullptr)}});
}

Doc subgroups(const PolyadicGroup& p, const Limits& limits) {
  auto subs = polyadic_subgroups(p, limits);
  json list = json::array();
  for (const auto& s : subs) list.push_back(names_of(p, s));
  return ok(json{{"count", subs.size()}, {"subgroups", list}});
}

Doc homs(const PolyadicGroup& p, const PolyadicGroup& q, const Limits& limits) {
  auto hs = polyadic_homs(p, q, limits);
  const DerivedData dp = derived_form(p, limits);
  json list = json::array();
  for (const auto& h : hs) {
    json phi = json::object();
    for (Elem x = 0; x < dp.group.order(); ++x) phi[p.name(x)] = q.name(h.phi(x));
    list.push_back(json{{"a", q.name(h.a)}, {"phi", phi}, {"map", map_of(p, q.names(), h.images)}});
  }
  return ok(json{{"count", hs.size()}, {"homs", list}});
}

Doc post_cover(const PolyadicGroup& p, const Limits& limits) {
  PostCover cover = build_post_cover(p, limits);
  PostCoverReport report = check_post_properties(p, cover, limits);
  json embedding = json::object();
  for (Elem g = 0; g < p.order(); ++g) embedding[p.name(g)] = cover.group.name(cover.embed(g));
  json kernel = json::array();
  for (Elem k : cover.kernel()) kernel.push_back(cover.group.name(k));
  json doc{{"n", p.arity()},
           {"base_order", p.order()},
           {"order", cover.group.order()},
           {"cover", group_json(cover.group)},
           {"embedding", embedding},
           {"kernel", kernel},
           {"properties", report.holds}};
  if (report.retract_isomorphism) {
    json iso = json::object();
    for (Elem x = 0; x < p.order(); ++x)
      iso[p.name(x)] = cover.group.name(report.retract_isomorphism->images[x]);
    doc["retract_isomorphism"] = iso;
  }
  return ok(doc);
}

Doc present_to_group(const Presentation& pres, unsigned n) {
  const auto* pp = std::get_if<PolyadicPresentation>(&pres);
  if (!pp) throw Error(ErrorCode::InvalidInput, "present2group needs a presentation with 'relations'");
  if (n == 0) throw Error(ErrorCode::InvalidInput, "present2group needs --n");
  CoverPresentation cp = presentation_to_group(*pp, n);
  return {presentation_to_json(cp.presentation, &cp.positive_forms), false};
}

Doc cosets(const Presentation& pres, unsigned n, std::size_t cap, const Limits& limits) {
  GroupPresentation gp;
  if (const auto* pp = std::get_if<PolyadicPresentation>(&pres)) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "a polyadic presentation needs --n");
    gp = presentation_to_group(*pp, n).presentation;
  } else {
    gp = std::get<GroupPresentation>(pres);
  }
  FiniteGroup g = coset_enumerate(gp, cap, limits);
  json doc = group_json(g);
  doc["order"] = g.order();
  return ok(doc);
}

Doc free_reduce(const std::vector<std::string>& words, unsigned n) {
  if (words.empty()) throw Error(ErrorCode::InvalidInput, "freereduce needs at least one word");
  Alphabet alphabet;
  json results = json::array();
  std::vector<FreeWord> reduced;
  for (const auto& text : words) {
    json r{{"input", text}};
    FreeWord w;
    if (text.find('~') != std::string::npos) {
      if (n == 0) throw Error(ErrorCode::InvalidInput, "skew-marked words need --n");
      MpWord m = parse_mp_word(text, n, alphabet);
      w = mp_embed(m);
      r["model"] = "cancellation";
    } else {
      w = parse_word(text, alphabet);
    }
    r["reduced"] = to_string(w, alphabet);
    r["height"] = w.height();
    r["length"] = w.length();
    if (n != 0) r["in_polyadic_free"] = in_polyadic_free(w, n);
    results.push_back(r);
    reduced.push_back(std::move(w));
  }
  json doc{{"results", results}};
  if (n != 0) doc["n"] = n;
  if (reduced.size() == 2) doc["equal"] = reduced[0] == reduced[1];
  return ok(doc);
}

Doc translate(const PolyadicGroup& p, const std::string& equation, const std::string& direction,
              std::optional<std::string> anchor, const Limits& limits) {
  TermSyntax syntax{&p.names(), nullptr, p.arity()};
  if (direction == "g2p") {
    Elem a = anchor_of(p, anchor);
    GroupEquation ge = parse_group_equation(equation, syntax);
    Equation pe = group_to_polyadic(ge, a, p.arity());
    return ok(json{{"direction", direction},
                   {"anchor", p.name(a)},
                   {"input", equation},
                   {"output", to_string(pe, syntax)}});
  }
  if (direction == "p2g") {
    Equation pe = parse_equation(equation, syntax);
    PostCover cover = build_post_cover(p, limits);
    GroupEquation ge = polyadic_to_group(pe, cover);
    TermSyntax cover_syntax{&cover.group.names(), nullptr, 0};
    SyllableWord l = normalize_term(pe.lhs, cover), r = normalize_term(pe.rhs, cover);
    return ok(json{{"direction", direction},
                   {"input", equation},
                   {"output", to_string(ge.lhs, cover_syntax) + " = " + to_string(ge.rhs, cover_syntax)},
                   {"normal_forms", {to_string(l, cover), to_string(r, cover)}},
                   {"identical_in_GX", l == r}});
  }
  throw Error(ErrorCode::InvalidInput, "direction must be g2p or p2g, not '" + direction + "'");
}

Doc solve(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits) {
  AlgebraicSet v = polyadic::solve(p, s, limits);
  return ok(json{{"vars", s.vars}, {"count", v.points.size()}, {"points", point_list(p, v)}});
}

Doc coordinate_group(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits) {
  AlgebraicSet v = polyadic::solve(p, s, limits);
  CoordinateGroup h = polyadic::coordinate_group(p, v, true, limits);
  json elements = json::array();
  for (std::size_t i = 0; i < h.count; ++i) elements.push_back(names_of(p, h.element(i)));
  StructureReport sr = structure_check(p, h);
  json structure{{"found", sr.found}};
  if (sr.found) structure["u"] = names_of(p, h.element(sr.u));
  json doc{{"vars", s.vars},
           {"points", point_list(p, v)},
           {"order", h.count},
           {"elements", elements},
           {"projections", h.projections},
           {"constants", h.constants},
           {"structure", structure}};
  doc["polyadic"] = json::parse(polyadic_to_json(coordinate_polyadic(p, h, limits)));
  return sr.found ? ok(doc) : failed(doc);
}

Doc closure(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits) {
  AlgebraicSet c = polyadic::closure(p, z, limits);
  return ok(json{{"vars", z.vars},
                 {"input", point_list(p, z)},
                 {"closure", point_list(p, c)},
                 {"algebraic", c == z}});
}

Doc irreducible(const PolyadicGroup& p, const AlgebraicSet& y, const Limits& limits) {
  IrreducibilityReport r = is_irreducible(p, y, limits);
  json doc{{"vars", y.vars},
           {"points", point_list(p, y)},
           {"irreducible", r.irreducible},
           {"algebraic_subsets", r.algebraic_subsets}};
  if (!r.irreducible) doc["decomposition"] = {point_list(p, r.first), point_list(p, r.second)};
  return ok(doc);
}

Doc minimal_subsystem(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits) {
  MinimalSubsystem m = polyadic::minimal_subsystem(p, s, limits);
  TermSyntax syntax{&p.names(), nullptr, p.arity()};
  json eqs = json::array();
  for (const auto& e : m.system.equations) eqs.push_back(to_string(e, syntax));
  return ok(json{{"vars", s.vars},
                 {"input_count", s.equations.size()},
                 {"kept", m.kept},
                 {"equations", eqs}});
}

Doc compare_cover(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits) {
  CoverComparison r = compare_cover_coordinates(p, s, limits);
  json doc{{"vars", s.vars},
           {"solutions_g", r.solutions_g},
           {"gamma_g_order", r.gamma_g_order},
           {"cover_order", r.cover_order},
           {"solutions_cover", r.solutions_cover},
           {"gamma_cover_order", r.gamma_cover_order},
           {"epimorphism", r.epimorphism}};
  if (!r.epimorphism) doc["witness"] = {{"left", r.witness_left}, {"right", r.witness_right}};
  return r.epimorphism ? ok(doc) : failed(doc);
}

}  // namespace polyadic::cmd
