#include "polyadic/polyadic.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "commands.hpp"
#include "polyadic/error.hpp"

using namespace polyadic;

struct pg_context {
  Limits limits;
  std::string message;
  std::string code;
  std::vector<std::int64_t> witness;
};

struct pg_group {
  FiniteGroup value;
};

struct pg_polyadic {
  PolyadicGroup value;
};

struct pg_presentation {
  Presentation value;
};

struct pg_system {
  EquationSystem value;
  std::unique_ptr<pg_polyadic> owned;
  const pg_polyadic* polyadic = nullptr;
};

struct pg_points {
  AlgebraicSet value;
};

namespace {

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int status_of(ErrorCode code) { return 2 + static_cast<int>(code); }

// Runs body, translating exceptions into status codes on ctx.
template <class F>
int guarded(pg_context* ctx, F&& body) {
  if (!ctx) return PG_ERR_INVALID_INPUT;
  ctx->message.clear();
  ctx->code.clear();
  ctx->witness.clear();
  try {
    return body();
  } catch (const Error& e) {
    ctx->message = e.what();
    ctx->code = to_string(e.code());
    ctx->witness.assign(e.witness().begin(), e.witness().end());
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    ctx->message = "out of memory";
    ctx->code = "Internal";
    return PG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->message = e.what();
    ctx->code = "Internal";
    return PG_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidInput, what);
}

int emit(const cmd::Doc& doc, char** out) {
  *out = copy_string(doc.text);
  return doc.failure ? PG_REPORTED_FAILURE : PG_OK;
}

std::optional<std::string> optional_string(const char* s) {
  if (!s) return std::nullopt;
  return std::string(s);
}

std::size_t effective_cap(const pg_context* ctx, std::size_t cap) {
  return cap == 0 ? ctx->limits.coset_cap : cap;
}

}  // namespace

extern "C" {

int pg_context_new(pg_context** out) {
  if (!out) return PG_ERR_INVALID_INPUT;
  *out = new (std::nothrow) pg_context();
  return *out ? PG_OK : PG_ERR_INTERNAL;
}

void pg_context_free(pg_context* ctx) { delete ctx; }

int pg_context_set_limit(pg_context* ctx, const char* name, uint64_t value) {
  return guarded(ctx, [&] {
    require(name != nullptr, "limit name is null");
    std::string key = name;
    Limits& l = ctx->limits;
    if (key == "max_group_order") l.max_group_order = value;
    else if (key == "max_derived_order") l.max_derived_order = value;
    else if (key == "max_power_size") l.max_power_size = value;
    else if (key == "max_arity") l.max_arity = static_cast<unsigned>(value);
    else if (key == "max_table_entries") l.max_table_entries = value;
    else if (key == "max_axiom_tuples") l.max_axiom_tuples = value;
    else if (key == "max_points") l.max_points = value;
    else if (key == "max_tuple_entries") l.max_tuple_entries = value;
    else if (key == "max_irreducible_points") l.max_irreducible_points = value;
    else if (key == "max_hom_candidates") l.max_hom_candidates = value;
    else if (key == "coset_cap") l.coset_cap = value;
    else if (key == "jobs") l.jobs = static_cast<unsigned>(value);
    else throw Error(ErrorCode::InvalidInput, "unknown limit '" + key + "'");
    return PG_OK;
  });
}

const char* pg_last_error(const pg_context* ctx) { return ctx ? ctx->message.c_str() : ""; }

size_t pg_last_witness(const pg_context* ctx, const int64_t** out) {
  if (!ctx) return 0;
  if (out) *out = ctx->witness.data();
  return ctx->witness.size();
}

int pg_error_document(const pg_context* ctx, char** out) {
  if (!ctx || !out) return PG_ERR_INVALID_INPUT;
  try {
    *out = copy_string(cmd::error_document(ctx->code, ctx->message, ctx->witness));
    return PG_OK;
  } catch (...) {
    return PG_ERR_INTERNAL;
  }
}

const char* pg_status_name(int status) {
  if (status == PG_OK) return "OK";
  if (status == PG_REPORTED_FAILURE) return "ReportedFailure";
  if (status >= 2 && status <= status_of(ErrorCode::InvalidInput))
    return to_string(static_cast<ErrorCode>(status - 2));
  return "Internal";
}

int pg_status_is_input_error(int status) {
  if (status >= 2 && status <= status_of(ErrorCode::InvalidInput))
    return is_input_error(static_cast<ErrorCode>(status - 2)) ? 1 : 0;
  return 0;
}

void pg_string_free(char* s) { std::free(s); }

int pg_group_load(pg_context* ctx, const char* path, pg_group** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    *out = new pg_group{load_group(path, ctx->limits)};
    return PG_OK;
  });
}

int pg_group_parse(pg_context* ctx, const char* json, pg_group** out) {
  return guarded(ctx, [&] {
    require(json && out, "null argument");
    *out = new pg_group{parse_group(json, ctx->limits)};
    return PG_OK;
  });
}

void pg_group_free(pg_group* g) { delete g; }

size_t pg_group_order(const pg_group* g) { return g ? g->value.order() : 0; }

int pg_group_mul(pg_context* ctx, const pg_group* g, uint32_t x, uint32_t y, uint32_t* out) {
  return guarded(ctx, [&] {
    require(g && out, "null argument");
    if (x >= g->value.order() || y >= g->value.order())
      throw Error(ErrorCode::IndexOutOfRange, "element index out of range", {x, y});
    *out = g->value.mul(x, y);
    return PG_OK;
  });
}

int pg_group_to_json(pg_context* ctx, const pg_group* g, char** out) {
  return guarded(ctx, [&] {
    require(g && out, "null argument");
    *out = copy_string(group_to_json(g->value));
    return PG_OK;
  });
}

int pg_polyadic_load(pg_context* ctx, const char* path, pg_polyadic** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    *out = new pg_polyadic{load_polyadic(path, ctx->limits)};
    return PG_OK;
  });
}

int pg_polyadic_parse(pg_context* ctx, const char* json, const char* base_dir, pg_polyadic** out) {
  return guarded(ctx, [&] {
    require(json && out, "null argument");
    std::filesystem::path dir = base_dir ? base_dir : "";
    *out = new pg_polyadic{parse_polyadic(json, dir, ctx->limits)};
    return PG_OK;
  });
}

void pg_polyadic_free(pg_polyadic* p) { delete p; }

unsigned pg_polyadic_arity(const pg_polyadic* p) { return p ? p->value.arity() : 0; }

size_t pg_polyadic_order(const pg_polyadic* p) { return p ? p->value.order() : 0; }

int pg_polyadic_eval(pg_context* ctx, const pg_polyadic* p, const uint32_t* args, size_t count,
                     uint32_t* out) {
  return guarded(ctx, [&] {
    require(p && args && out, "null argument");
    std::vector<Elem> xs(args, args + count);
    *out = p->value.eval(xs);
    return PG_OK;
  });
}

int pg_polyadic_to_json(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = copy_string(polyadic_to_json(p->value));
    return PG_OK;
  });
}

int pg_presentation_load(pg_context* ctx, const char* path, pg_presentation** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    *out = new pg_presentation{load_presentation(path)};
    return PG_OK;
  });
}

int pg_presentation_parse(pg_context* ctx, const char* json, pg_presentation** out) {
  return guarded(ctx, [&] {
    require(json && out, "null argument");
    *out = new pg_presentation{parse_presentation(json)};
    return PG_OK;
  });
}

void pg_presentation_free(pg_presentation* pres) { delete pres; }

static int system_from_text(pg_context* ctx, const std::string& text,
                            const std::filesystem::path& base_dir, const pg_polyadic* p,
                            pg_system** out) {
  auto s = std::make_unique<pg_system>();
  if (p) {
    s->polyadic = p;
  } else {
    auto path = system_polyadic_path(text, base_dir);
    if (path.empty())
      throw Error(ErrorCode::ParseError, "system has no 'polyadic:' line and no group was given");
    s->owned = std::make_unique<pg_polyadic>(pg_polyadic{load_polyadic(path, ctx->limits)});
    s->polyadic = s->owned.get();
  }
  s->value = parse_system(text, s->polyadic->value, base_dir).system;
  *out = s.release();
  return PG_OK;
}

int pg_system_load(pg_context* ctx, const char* path, const pg_polyadic* p, pg_system** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    std::filesystem::path file = path;
    return system_from_text(ctx, read_text_file(file), file.parent_path(), p, out);
  });
}

int pg_system_parse(pg_context* ctx, const char* text, const pg_polyadic* p, pg_system** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    return system_from_text(ctx, text, {}, p, out);
  });
}

void pg_system_free(pg_system* s) { delete s; }

const pg_polyadic* pg_system_polyadic(const pg_system* s) { return s ? s->polyadic : nullptr; }

size_t pg_system_equation_count(const pg_system* s) { return s ? s->value.equations.size() : 0; }

int pg_points_load(pg_context* ctx, const char* path, const pg_polyadic* p, pg_points** out) {
  return guarded(ctx, [&] {
    require(path && p && out, "null argument");
    *out = new pg_points{load_points(path, p->value)};
    return PG_OK;
  });
}

int pg_points_parse(pg_context* ctx, const char* json, const pg_polyadic* p, pg_points** out) {
  return guarded(ctx, [&] {
    require(json && p && out, "null argument");
    *out = new pg_points{parse_points(json, p->value)};
    return PG_OK;
  });
}

void pg_points_free(pg_points* z) { delete z; }

int pg_validate_group_file(pg_context* ctx, const char* path, char** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    return emit(cmd::validate_group_file(path, ctx->limits), out);
  });
}

int pg_validate_polyadic_file(pg_context* ctx, const char* path, char** out) {
  return guarded(ctx, [&] {
    require(path && out, "null argument");
    return emit(cmd::validate_polyadic_file(path, ctx->limits), out);
  });
}

int pg_derive(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::derive(p->value, ctx->limits), out);
  });
}

int pg_skew(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::skew(p->value), out);
  });
}

int pg_retract(pg_context* ctx, const pg_polyadic* p, const char* anchor, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::retract(p->value, optional_string(anchor)), out);
  });
}

int pg_hosszu_gloskin(pg_context* ctx, const pg_polyadic* p, const char* anchor, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::hosszu_gloskin(p->value, optional_string(anchor), ctx->limits), out);
  });
}

int pg_identity(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::identity(p->value), out);
  });
}

int pg_subgroups(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::subgroups(p->value, ctx->limits), out);
  });
}

int pg_homs(pg_context* ctx, const pg_polyadic* p, const pg_polyadic* q, char** out) {
  return guarded(ctx, [&] {
    require(p && q && out, "null argument");
    return emit(cmd::homs(p->value, q->value, ctx->limits), out);
  });
}

int pg_post_cover(pg_context* ctx, const pg_polyadic* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    return emit(cmd::post_cover(p->value, ctx->limits), out);
  });
}

int pg_present_to_group(pg_context* ctx, const pg_presentation* pres, unsigned n, char** out) {
  return guarded(ctx, [&] {
    require(pres && out, "null argument");
    return emit(cmd::present_to_group(pres->value, n), out);
  });
}

int pg_cosets(pg_context* ctx, const pg_presentation* pres, unsigned n, size_t cap, char** out) {
  return guarded(ctx, [&] {
    require(pres && out, "null argument");
    return emit(cmd::cosets(pres->value, n, effective_cap(ctx, cap), ctx->limits), out);
  });
}

int pg_free_reduce(pg_context* ctx, const char* const* words, size_t count, unsigned n,
                   char** out) {
  return guarded(ctx, [&] {
    require((words || count == 0) && out, "null argument");
    std::vector<std::string> list;
    for (size_t i = 0; i < count; ++i) {
      require(words[i] != nullptr, "null word");
      list.emplace_back(words[i]);
    }
    return emit(cmd::free_reduce(list, n), out);
  });
}

int pg_translate(pg_context* ctx, const pg_polyadic* p, const char* equation,
                 const char* direction, const char* anchor, char** out) {
  return guarded(ctx, [&] {
    require(p && equation && direction && out, "null argument");
    return emit(cmd::translate(p->value, equation, direction, optional_string(anchor), ctx->limits),
                out);
  });
}

int pg_solve(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out) {
  return guarded(ctx, [&] {
    require(p && s && out, "null argument");
    return emit(cmd::solve(p->value, s->value, ctx->limits), out);
  });
}

int pg_coordinate_group(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out) {
  return guarded(ctx, [&] {
    require(p && s && out, "null argument");
    return emit(cmd::coordinate_group(p->value, s->value, ctx->limits), out);
  });
}

int pg_closure(pg_context* ctx, const pg_polyadic* p, const pg_points* z, char** out) {
  return guarded(ctx, [&] {
    require(p && z && out, "null argument");
    return emit(cmd::closure(p->value, z->value, ctx->limits), out);
  });
}

int pg_irreducible(pg_context* ctx, const pg_polyadic* p, const pg_points* y, char** out) {
  return guarded(ctx, [&] {
    require(p && y && out, "null argument");
    return emit(cmd::irreducible(p->value, y->value, ctx->limits), out);
  });
}

int pg_minimal_subsystem(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out) {
  return guarded(ctx, [&] {
    require(p && s && out, "null argument");
    return emit(cmd::minimal_subsystem(p->value, s->value, ctx->limits), out);
  });
}

int pg_compare_cover(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out) {
  return guarded(ctx, [&] {
    require(p && s && out, "null argument");
    return emit(cmd::compare_cover(p->value, s->value, ctx->limits), out);
  });
}

}  // extern "C"
