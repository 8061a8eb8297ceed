#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polyadic/io.hpp"

namespace polyadic::cmd {

// A JSON document; failure marks a mathematical failure report (the CLI
// exits with status 1 but still prints the document).
struct Doc {
  std::string text;
  bool failure = false;
};

Doc validate_group_file(const std::filesystem::path& path, const Limits& limits);
Doc validate_polyadic_file(const std::filesystem::path& path, const Limits& limits);
Doc derive(const PolyadicGroup& p, const Limits& limits);
Doc skew(const PolyadicGroup& p);
Doc retract(const PolyadicGroup& p, std::optional<std::string> anchor);
Doc hosszu_gloskin(const PolyadicGroup& p, std::optional<std::string> anchor, const Limits& limits);
Doc identity(const PolyadicGroup& p);
Doc subgroups(const PolyadicGroup& p, const Limits& limits);
Doc homs(const PolyadicGroup& p, const PolyadicGroup& q, const Limits& limits);
Doc post_cover(const PolyadicGroup& p, const Limits& limits);
Doc present_to_group(const Presentation& pres, unsigned n);
Doc cosets(const Presentation& pres, unsigned n, std::size_t cap, const Limits& limits);
Doc free_reduce(const std::vector<std::string>& words, unsigned n);
Doc translate(const PolyadicGroup& p, const std::string& equation, const std::string& direction,
              std::optional<std::string> anchor, const Limits& limits);
Doc solve(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits);
Doc coordinate_group(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits);
Doc closure(const PolyadicGroup& p, const AlgebraicSet& z, const Limits& limits);
Doc irreducible(const PolyadicGroup& p, const AlgebraicSet& y, const Limits& limits);
Doc minimal_subsystem(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits);
Doc compare_cover(const PolyadicGroup& p, const EquationSystem& s, const Limits& limits);

// {"error": {"code", "message", "witness"}}
std::string error_document(const std::string& code, const std::string& message,
                           const std::vector<std::int64_t>& witness);

}  // namespace polyadic::cmd
