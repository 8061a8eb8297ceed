// polyadic: command-line front end over the C API.
//
// Exit status: 0 success, 1 mathematical failure report, 2 input error.

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyadic/polyadic.h"

namespace {

using nlohmann::json;

struct Options {
  std::string group, system, presentation, points, anchor, direction, format = "json";
  std::vector<std::string> polyadic;
  std::vector<std::string> positional;
  unsigned n = 0;
  std::size_t cap = 0;
  unsigned jobs = 1;
};

// Thrown by the handle helpers after a failing C call.
struct Failed {
  int status;
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr) Free(ptr);
  }
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};

using Context = Handle<pg_context, pg_context_free>;
using Polyadic = Handle<pg_polyadic, pg_polyadic_free>;
using Presentation = Handle<pg_presentation, pg_presentation_free>;
using System = Handle<pg_system, pg_system_free>;
using Points = Handle<pg_points, pg_points_free>;

void check(int status) {
  if (status != PG_OK && status != PG_REPORTED_FAILURE) throw Failed{status};
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) {
    throw CLI::ValidationError(std::string(flag) + " is required for this command");
  }
  return value;
}

// Table rendering: cosmetic, derived from the JSON document.
std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

bool is_grid(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const auto& row : v)
    if (!is_flat(row)) return false;
  return true;
}

void render(const json& v, std::ostream& out, const std::string& indent) {
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) {
      if (!item.is_structured() || is_flat(item)) {
        out << indent << key << ": ";
        if (item.is_array()) {
          for (std::size_t i = 0; i < item.size(); ++i) out << (i ? " " : "") << scalar(item[i]);
        } else {
          out << scalar(item);
        }
        out << "\n";
      } else {
        out << indent << key << ":\n";
        render(item, out, indent + "  ");
      }
    }
  } else if (is_grid(v)) {
    std::size_t width = 1;
    for (const auto& row : v)
      for (const auto& x : row) width = std::max(width, scalar(x).size());
    for (const auto& row : v) {
      out << indent;
      for (const auto& x : row) {
        std::string s = scalar(x);
        out << s << std::string(width + 1 - s.size(), ' ');
      }
      out << "\n";
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_structured()) {
        out << indent << "-\n";
        render(item, out, indent + "  ");
      } else {
        out << indent << "- " << scalar(item) << "\n";
      }
    }
  } else {
    out << indent << scalar(v) << "\n";
  }
}

void print(const std::string& doc, const std::string& format) {
  if (format == "table") {
    render(json::parse(doc), std::cout, "");
  } else {
    std::cout << doc;
  }
}

int finish(int status, char** slot, const Options& o) {
  char* doc = *slot;
  *slot = nullptr;
  std::string text = doc ? doc : "";
  pg_string_free(doc);
  check(status);
  print(text, o.format);
  return status == PG_REPORTED_FAILURE ? 1 : 0;
}

void load_polyadic(pg_context* ctx, const std::string& path, Polyadic& p) {
  check(pg_polyadic_load(ctx, path.c_str(), p.out()));
}

int run_verb(const std::string& verb, const Options& o, pg_context* ctx) {
  char* doc = nullptr;
  auto first_polyadic = [&]() -> std::string {
    if (o.polyadic.empty()) throw CLI::ValidationError("--polyadic is required for this command");
    return o.polyadic.front();
  };

  if (verb == "validate") {
    if (!o.group.empty()) return finish(pg_validate_group_file(ctx, o.group.c_str(), &doc), &doc, o);
    return finish(pg_validate_polyadic_file(ctx, first_polyadic().c_str(), &doc), &doc, o);
  }
  if (verb == "freereduce") {
    std::vector<const char*> words;
    for (const auto& w : o.positional) words.push_back(w.c_str());
    return finish(pg_free_reduce(ctx, words.data(), words.size(), o.n, &doc), &doc, o);
  }
  if (verb == "present2group" || verb == "cosets") {
    Presentation pres;
    check(pg_presentation_load(ctx, need(o.presentation, "--presentation").c_str(), pres.out()));
    if (verb == "present2group") return finish(pg_present_to_group(ctx, pres.get(), o.n, &doc), &doc, o);
    return finish(pg_cosets(ctx, pres.get(), o.n, o.cap, &doc), &doc, o);
  }
  if (verb == "solve" || verb == "coordgroup" || verb == "minsys" || verb == "thm63") {
    Polyadic override_p;
    if (!o.polyadic.empty()) load_polyadic(ctx, o.polyadic.front(), override_p);
    System s;
    check(pg_system_load(ctx, need(o.system, "--system").c_str(), override_p.get(), s.out()));
    const pg_polyadic* p = pg_system_polyadic(s.get());
    if (verb == "solve") return finish(pg_solve(ctx, p, s.get(), &doc), &doc, o);
    if (verb == "coordgroup") return finish(pg_coordinate_group(ctx, p, s.get(), &doc), &doc, o);
    if (verb == "minsys") return finish(pg_minimal_subsystem(ctx, p, s.get(), &doc), &doc, o);
    return finish(pg_compare_cover(ctx, p, s.get(), &doc), &doc, o);
  }

  Polyadic p;
  load_polyadic(ctx, first_polyadic(), p);
  if (verb == "derive") return finish(pg_derive(ctx, p.get(), &doc), &doc, o);
  if (verb == "skew") return finish(pg_skew(ctx, p.get(), &doc), &doc, o);
  if (verb == "retract") return finish(pg_retract(ctx, p.get(), opt(o.anchor), &doc), &doc, o);
  if (verb == "hg") return finish(pg_hosszu_gloskin(ctx, p.get(), opt(o.anchor), &doc), &doc, o);
  if (verb == "identity") return finish(pg_identity(ctx, p.get(), &doc), &doc, o);
  if (verb == "subgroups") return finish(pg_subgroups(ctx, p.get(), &doc), &doc, o);
  if (verb == "postcover") return finish(pg_post_cover(ctx, p.get(), &doc), &doc, o);
  if (verb == "homs") {
    if (o.polyadic.size() != 2) throw CLI::ValidationError("homs needs --polyadic twice (source, target)");
    Polyadic q;
    load_polyadic(ctx, o.polyadic[1], q);
    return finish(pg_homs(ctx, p.get(), q.get(), &doc), &doc, o);
  }
  if (verb == "translate") {
    if (o.positional.size() != 1) throw CLI::ValidationError("translate takes one equation");
    return finish(pg_translate(ctx, p.get(), o.positional.front().c_str(),
                               need(o.direction, "--direction").c_str(), opt(o.anchor), &doc),
                  &doc, o);
  }
  if (verb == "closure" || verb == "irreducible") {
    Points z;
    check(pg_points_load(ctx, need(o.points, "--points").c_str(), p.get(), z.out()));
    if (verb == "closure") return finish(pg_closure(ctx, p.get(), z.get(), &doc), &doc, o);
    return finish(pg_irreducible(ctx, p.get(), z.get(), &doc), &doc, o);
  }
  throw CLI::ValidationError("unhandled command " + verb);
}

struct VerbSpec {
  const char* name;
  const char* help;
};

const VerbSpec kVerbs[] = {
    {"validate", "check a group (--group) or polyadic group (--polyadic) file"},
    {"derive", "tabulate a derived-form polyadic group"},
    {"skew", "skew element of every element"},
    {"retract", "retract group at --anchor (default: first element)"},
    {"hg", "Hosszu-Gloskin recovery at --anchor"},
    {"identity", "n-ary identity element, if any"},
    {"subgroups", "all polyadic subgroups"},
    {"homs", "homomorphisms between two polyadic groups"},
    {"postcover", "covering group and its properties"},
    {"present2group", "polyadic presentation to group presentation"},
    {"cosets", "coset enumeration of a presentation"},
    {"freereduce", "reduce free-group words"},
    {"translate", "translate an equation (--direction g2p|p2g)"},
    {"solve", "solution set of a system"},
    {"coordgroup", "coordinate group of a system's solution set"},
    {"closure", "Zariski closure of a point set"},
    {"irreducible", "irreducibility of a point set"},
    {"minsys", "minimal equivalent subsystem"},
    {"thm63", "compare the cover of the coordinate group with the cover-side one"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with finite polyadic groups", "polyadic"};
  app.require_subcommand(1, 1);
  Options o;

  for (const auto& v : kVerbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("--group", o.group, "group file");
    sub->add_option("--polyadic", o.polyadic, "polyadic group file")->allow_extra_args(false);
    sub->add_option("--system", o.system, "system file");
    sub->add_option("--presentation", o.presentation, "presentation file");
    sub->add_option("--points", o.points, "point set file");
    sub->add_option("--n", o.n, "arity");
    sub->add_option("--anchor", o.anchor, "anchor element");
    sub->add_option("--direction", o.direction, "g2p or p2g")->check(CLI::IsMember({"g2p", "p2g"}));
    sub->add_option("--cap", o.cap, "coset cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
    sub->add_option("args", o.positional, "words or equation");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  Context ctx;
  if (pg_context_new(ctx.out()) != PG_OK) return 2;
  pg_context_set_limit(ctx.get(), "jobs", o.jobs);

  try {
    return run_verb(verb, o, ctx.get());
  } catch (const Failed& f) {
    char* doc = nullptr;
    if (pg_error_document(ctx.get(), &doc) == PG_OK) {
      std::cout << doc;
      pg_string_free(doc);
    }
    std::cerr << "polyadic: " << pg_last_error(ctx.get()) << "\n";
    return pg_status_is_input_error(f.status) || f.status == PG_ERR_INTERNAL ? 2 : 1;
  } catch (const CLI::ValidationError& e) {
    std::cout << "{\n  \"error\": {\n    \"code\": \"InvalidInput\",\n    \"message\": "
              << json(e.what()).dump() << ",\n    \"witness\": []\n  }\n}\n";
    std::cerr << "polyadic: " << e.what() << "\n";
    return 2;
  }
}
