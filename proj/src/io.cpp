#include "polyadic/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "polyadic/error.hpp"

namespace polyadic {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string as_string(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  bad(where + " must be a string");
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(as_string(item, where + " entry"));
  return out;
}

Elem element_of(const std::map<std::string, Elem>& index, const json& v, const std::string& where) {
  std::string name = as_string(v, where);
  auto it = index.find(name);
  if (it == index.end()) bad("unknown element '" + name + "' in " + where);
  return it->second;
}

std::map<std::string, Elem> index_names(const std::vector<std::string>& names) {
  std::map<std::string, Elem> index;
  for (Elem i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second) bad("duplicate element name '" + names[i] + "'");
  return index;
}

FiniteGroup group_from(const json& doc, const Limits& limits) {
  auto names = string_list(field(doc, "elements"), "elements");
  if (names.empty()) bad("a group needs at least one element");
  if (names.size() > limits.max_group_order)
    throw Error(ErrorCode::SizeCapExceeded, "group order " + std::to_string(names.size()) +
                                                " exceeds the cap of " +
                                                std::to_string(limits.max_group_order));
  auto index = index_names(names);
  const json& rows = field(doc, "table");
  if (!rows.is_array() || rows.size() != names.size())
    bad("table must have " + std::to_string(names.size()) + " rows");
  std::vector<Elem> table;
  table.reserve(names.size() * names.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != names.size())
      bad("table row " + std::to_string(r) + " must have " + std::to_string(names.size()) +
          " entries");
    for (const auto& cell : rows[r]) table.push_back(element_of(index, cell, "table row " + std::to_string(r)));
  }
  std::string label = doc.contains("name") ? as_string(doc.at("name"), "name") : std::string();
  return validate_group(std::move(names), std::move(table), std::move(label));
}

json group_doc(const FiniteGroup& g) {
  json rows = json::array();
  for (Elem x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (Elem y = 0; y < g.order(); ++y) row.push_back(g.name(g.mul(x, y)));
    rows.push_back(std::move(row));
  }
  return json{{"name", g.label()}, {"elements", g.names()}, {"table", std::move(rows)}};
}

Automorphism automorphism_from(const json& doc, const FiniteGroup& g) {
  const json& map = doc.is_object() && doc.contains("map") ? doc.at("map") : doc;
  if (!map.is_object()) bad("automorphism must be an object mapping element names");
  auto index = index_names(g.names());
  std::vector<Elem> images(g.order());
  std::vector<char> seen(g.order(), 0);
  for (auto it = map.begin(); it != map.end(); ++it) {
    auto src = index.find(it.key());
    if (src == index.end()) bad("unknown element '" + it.key() + "' in automorphism");
    images[src->second] = element_of(index, it.value(), "automorphism");
    seen[src->second] = 1;
  }
  for (Elem x = 0; x < g.order(); ++x)
    if (!seen[x]) bad("automorphism does not map '" + g.name(x) + "'");
  return make_automorphism(g, std::move(images));
}

json automorphism_doc(const FiniteGroup& g, const Automorphism& theta) {
  json map = json::object();
  for (Elem x = 0; x < g.order(); ++x) map[g.name(x)] = g.name(theta(x));
  return json{{"map", std::move(map)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& rel) {
  std::filesystem::path p(rel);
  return p.is_absolute() || base.empty() ? p : base / p;
}

unsigned arity_from(const json& v, const Limits& limits) {
  if (!v.is_number_integer()) bad("n must be an integer");
  auto n = v.get<std::int64_t>();
  if (n < 3 || n > std::int64_t(limits.max_arity))
    throw Error(ErrorCode::InvalidInput,
                "n must be between 3 and " + std::to_string(limits.max_arity), {n});
  return static_cast<unsigned>(n);
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteGroup parse_group(std::string_view text, const Limits& limits) {
  return group_from(parse_json(text), limits);
}

FiniteGroup load_group(const std::filesystem::path& path, const Limits& limits) {
  return parse_group(read_text_file(path), limits);
}

std::string group_to_json(const FiniteGroup& g) { return dump(group_doc(g)); }

Automorphism parse_automorphism(std::string_view text, const FiniteGroup& g) {
  return automorphism_from(parse_json(text), g);
}

std::string automorphism_to_json(const FiniteGroup& g, const Automorphism& theta) {
  return dump(automorphism_doc(g, theta));
}

PolyadicGroup parse_polyadic(std::string_view text, const std::filesystem::path& base_dir,
                             const Limits& limits) {
  json doc = parse_json(text);
  if (!doc.is_object()) bad("polyadic group file must be an object");
  const unsigned n = arity_from(field(doc, "n"), limits);
  if (doc.contains("group")) {
    const json& gdoc = doc.at("group");
    FiniteGroup g = gdoc.is_string()
                        ? load_group(resolve(base_dir, gdoc.get<std::string>()), limits)
                        : group_from(gdoc, limits);
    Automorphism theta =
        doc.contains("theta") ? automorphism_from(doc.at("theta"), g) : Automorphism::identity(g.order());
    auto index = index_names(g.names());
    Elem b = doc.contains("b") ? element_of(index, doc.at("b"), "b") : g.identity();
    PolyadicGroup p = derive(std::move(g), std::move(theta), b, n, limits);
    if (doc.contains("name")) p.set_label(as_string(doc.at("name"), "name"));
    return p;
  }
  auto names = string_list(field(doc, "elements"), "elements");
  if (names.empty()) bad("a polyadic group needs at least one element");
  if (names.size() > limits.max_group_order)
    throw Error(ErrorCode::SizeCapExceeded, "order exceeds the group-order cap");
  auto index = index_names(names);
  const json& cells = field(doc, "table");
  std::uint64_t expected = 1;
  for (unsigned k = 0; k < n; ++k) {
    expected *= names.size();
    if (expected > limits.max_table_entries)
      throw Error(ErrorCode::SizeCapExceeded, "|G|^n exceeds the table-entry cap");
  }
  if (!cells.is_array() || cells.size() != expected)
    bad("table must be a flat array of " + std::to_string(expected) + " entries");
  std::vector<Elem> table;
  table.reserve(expected);
  for (const auto& c : cells) table.push_back(element_of(index, c, "table"));
  std::string label = doc.contains("name") ? as_string(doc.at("name"), "name") : std::string();
  return PolyadicGroup::from_table(std::move(names), n, std::move(table), std::move(label), limits);
}

PolyadicGroup load_polyadic(const std::filesystem::path& path, const Limits& limits) {
  return parse_polyadic(read_text_file(path), path.parent_path(), limits);
}

std::string derived_to_json(const DerivedData& d, unsigned n, const std::string& name) {
  json doc{{"group", group_doc(d.group)},
           {"theta", automorphism_doc(d.group, d.theta)},
           {"b", d.group.name(d.b)},
           {"n", n}};
  if (!name.empty()) doc["name"] = name;
  return dump(doc);
}

std::string polyadic_to_json(const PolyadicGroup& p) {
  if (const DerivedData* d = p.derived()) return derived_to_json(*d, p.arity(), p.label());
  json cells = json::array();
  for (Elem v : p.table()) cells.push_back(p.name(v));
  json doc{{"elements", p.names()}, {"n", p.arity()}, {"table", std::move(cells)}};
  if (!p.label().empty()) doc["name"] = p.label();
  return dump(doc);
}

Presentation parse_presentation(std::string_view text) {
  json doc = parse_json(text);
  auto gens = string_list(field(doc, "generators"), "generators");
  {
    std::map<std::string, int> seen;
    for (const auto& g : gens)
      if (!seen.emplace(g, 0).second) bad("duplicate generator '" + g + "'");
  }
  if (doc.contains("relations")) {
    PolyadicPresentation pres{gens, {}};
    const json& rels = doc.at("relations");
    if (!rels.is_array()) bad("relations must be an array");
    TermSyntax syntax{nullptr, &pres.generators, 0};
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const json& r = rels[i];
      if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
        bad("relation " + std::to_string(i + 1) + " must be a pair of terms");
      pres.relations.push_back({parse_term(r[0].get<std::string>(), syntax, i + 1),
                                parse_term(r[1].get<std::string>(), syntax, i + 1)});
    }
    return pres;
  }
  GroupPresentation pres{gens, {}};
  Alphabet alphabet(gens);
  for (const auto& text : string_list(field(doc, "relators"), "relators")) {
    pres.relators.push_back(parse_word(text, alphabet));
    if (alphabet.size() != gens.size())
      bad("relator '" + text + "' uses undeclared generator '" + alphabet.names().back() + "'");
  }
  return pres;
}

Presentation load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_text_file(path));
}

std::string presentation_to_json(const GroupPresentation& pres,
                                 const std::vector<FreeWord>* positive_forms) {
  Alphabet alphabet(pres.generators);
  json relators = json::array(), heights = json::array();
  for (const auto& r : pres.relators) {
    relators.push_back(to_string(r, alphabet));
    heights.push_back(r.height());
  }
  json doc{{"generators", pres.generators}, {"relators", relators}, {"heights", heights}};
  if (positive_forms) {
    json pos = json::array();
    for (const auto& r : *positive_forms) pos.push_back(to_string(r, alphabet));
    doc["positive_forms"] = pos;
  }
  return dump(doc);
}

AlgebraicSet parse_points(std::string_view text, const PolyadicGroup& p) {
  json doc = parse_json(text);
  const json& m = field(doc, "vars");
  if (!m.is_number_integer() || m.get<std::int64_t>() < 1) bad("vars must be a positive integer");
  AlgebraicSet set{static_cast<unsigned>(m.get<std::int64_t>()), {}};
  auto index = index_names(p.names());
  const json& pts = field(doc, "points");
  if (!pts.is_array()) bad("points must be an array");
  for (const auto& pt : pts) {
    if (!pt.is_array() || pt.size() != set.vars)
      bad("each point must list " + std::to_string(set.vars) + " elements");
    std::vector<Elem> coords;
    for (const auto& c : pt) coords.push_back(element_of(index, c, "points"));
    set.points.push_back(encode_point(coords, p.order()));
  }
  std::sort(set.points.begin(), set.points.end());
  set.points.erase(std::unique(set.points.begin(), set.points.end()), set.points.end());
  return set;
}

AlgebraicSet load_points(const std::filesystem::path& path, const PolyadicGroup& p) {
  return parse_points(read_text_file(path), p);
}

std::filesystem::path system_polyadic_path(std::string_view text,
                                           const std::filesystem::path& base_dir) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.rfind("polyadic:", 0) == 0) return resolve(base_dir, trim(body.substr(9)));
  }
  return {};
}

SystemFile parse_system(std::string_view text, const PolyadicGroup& p,
                        const std::filesystem::path& base_dir) {
  SystemFile out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_vars = false;
  std::vector<std::size_t> lines;
  TermSyntax syntax{&p.names(), nullptr, p.arity()};
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    if (body.rfind("polyadic:", 0) == 0) {
      out.polyadic_path = resolve(base_dir, trim(body.substr(9)));
    } else if (body.rfind("vars:", 0) == 0) {
      std::string v = trim(body.substr(5));
      char* end = nullptr;
      long m = std::strtol(v.c_str(), &end, 10);
      if (v.empty() || *end != '\0' || m < 1)
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(lineno) + ": vars must be a positive integer",
                    {std::int64_t(lineno), 1});
      out.system.vars = static_cast<unsigned>(m);
      have_vars = true;
    } else {
      out.system.equations.push_back(parse_equation(body, syntax, lineno));
      lines.push_back(lineno);
    }
  }
  unsigned bound = 0;
  for (const auto& e : out.system.equations)
    bound = std::max({bound, e.lhs.variable_bound(), e.rhs.variable_bound()});
  if (!have_vars) out.system.vars = std::max(bound, 1u);
  for (std::size_t i = 0; i < out.system.equations.size(); ++i) {
    const auto& e = out.system.equations[i];
    if (std::max(e.lhs.variable_bound(), e.rhs.variable_bound()) > out.system.vars)
      throw Error(ErrorCode::UnboundVariable,
                  "line " + std::to_string(lines[i]) + ": variable beyond x" +
                      std::to_string(out.system.vars),
                  {std::int64_t(lines[i])});
  }
  return out;
}

}  // namespace polyadic
