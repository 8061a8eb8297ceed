#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "polyadic/alggeo.hpp"
#include "polyadic/group.hpp"
#include "polyadic/polyadic_group.hpp"
#include "polyadic/post_cover.hpp"

namespace polyadic {

// File formats. All JSON documents are written with sorted keys and two
// space indentation so that output is byte-stable.
//
// Group:       {"name": s, "elements": [s...], "table": [[s...]...]}
// Automorphism {"map": {s: s, ...}}; a bare object of pairs is accepted too.
// Polyadic:    {"group": <group or path>, "theta": <automorphism>, "b": s, "n": k}
//           or {"elements": [s...], "n": k, "table": [s...]}  (|G|^n, row-major)
// Presentation {"generators": [s...], "relations": [[term, term]...]}   polyadic
//           or {"generators": [s...], "relators": [word...]}             group
// Points:      {"vars": m, "points": [[s...]...]}
// System (text):
//     # comment
//     polyadic: path/to/polyadic.json
//     vars: m
//     <term> = <term>
//     ...

std::string read_text_file(const std::filesystem::path& path);

FiniteGroup parse_group(std::string_view json, const Limits& limits = {});
FiniteGroup load_group(const std::filesystem::path& path, const Limits& limits = {});
std::string group_to_json(const FiniteGroup& g);

Automorphism parse_automorphism(std::string_view json, const FiniteGroup& g);
std::string automorphism_to_json(const FiniteGroup& g, const Automorphism& theta);

// Relative group paths resolve against base_dir.
PolyadicGroup parse_polyadic(std::string_view json, const std::filesystem::path& base_dir = {},
                             const Limits& limits = {});
PolyadicGroup load_polyadic(const std::filesystem::path& path, const Limits& limits = {});
// Derived groups are written in derived form, table groups as tables.
std::string polyadic_to_json(const PolyadicGroup& p);
std::string derived_to_json(const DerivedData& d, unsigned n, const std::string& name);

using Presentation = std::variant<PolyadicPresentation, GroupPresentation>;
Presentation parse_presentation(std::string_view json);
Presentation load_presentation(const std::filesystem::path& path);
std::string presentation_to_json(const GroupPresentation& pres,
                                 const std::vector<FreeWord>* positive_forms = nullptr);

AlgebraicSet parse_points(std::string_view json, const PolyadicGroup& p);
AlgebraicSet load_points(const std::filesystem::path& path, const PolyadicGroup& p);

struct SystemFile {
  std::filesystem::path polyadic_path;  // as resolved from the header, may be empty
  EquationSystem system;
};
// Equations are parsed against the constants of p. The "polyadic:" header
// is only recorded; system_polyadic_path extracts it so that callers can
// load the group before parsing the equations.
SystemFile parse_system(std::string_view text, const PolyadicGroup& p,
                        const std::filesystem::path& base_dir = {});
std::filesystem::path system_polyadic_path(std::string_view text,
                                           const std::filesystem::path& base_dir = {});

}  // namespace polyadic
