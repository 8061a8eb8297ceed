#include <filesystem>

#include "doctest.h"
#include "polyadic/io.hpp"
#include "support.hpp"

using namespace testing;

#ifndef POLYADIC_DATA_DIR
#error "POLYADIC_DATA_DIR must be defined"
#endif

namespace {
const std::filesystem::path data_dir = POLYADIC_DATA_DIR;
}

TEST_SUITE("io") {

TEST_CASE("group documents round trip") {
  FiniteGroup s3 = symmetric_group(3);
  std::string text = group_to_json(s3);
  FiniteGroup back = parse_group(text);
  CHECK(back.names() == s3.names());
  CHECK(std::equal(back.table().begin(), back.table().end(), s3.table().begin()));
  CHECK(group_to_json(back) == text);
}

TEST_CASE("polyadic documents round trip in both forms") {
  for (const auto& p : valid_catalog()) {
    for (const auto& q : {p, tabulate(p)}) {
      std::string text = polyadic_to_json(q);
      PolyadicGroup back = parse_polyadic(text);
      CHECK(back.is_derived() == q.is_derived());
      CHECK(polyadic_to_json(back) == text);
      for_each_tuple(q.order(), q.arity(), [&](const std::vector<Elem>& xs) {
        CHECK(back.eval(xs) == q.eval(xs));
      });
    }
  }
}

TEST_CASE("sample files load") {
  PolyadicGroup p = load_polyadic(data_dir / "der_z3_neg.json");
  CHECK(p.arity() == 3);
  CHECK(p.label() == "der(Z3,neg,0,3)");
  for (Elem x = 0; x < 3; ++x) CHECK(skew(p, x) == x);
  std::string text = read_text_file(data_dir / "cube.system");
  CHECK(system_polyadic_path(text, data_dir) == data_dir / "der_z3_neg.json");
  SystemFile s = parse_system(text, p, data_dir);
  CHECK(s.system.vars == 1);
  CHECK(s.system.equations.size() == 1);
  AlgebraicSet z = load_points(data_dir / "line_two_points.json", p);
  CHECK(z.points == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("presentations") {
  Presentation a = load_presentation(data_dir / "skew_fixed.presentation.json");
  CHECK(std::holds_alternative<PolyadicPresentation>(a));
  Presentation b = parse_presentation(R"({"generators":["a","b"],"relators":["a^2","b^3","(a b)^5"]})");
  REQUIRE(std::holds_alternative<GroupPresentation>(b));
  CHECK(std::get<GroupPresentation>(b).relators.size() == 3);
  std::string out = presentation_to_json(std::get<GroupPresentation>(b));
  Presentation c = parse_presentation(out);
  CHECK(std::get<GroupPresentation>(c).relators == std::get<GroupPresentation>(b).relators);
}

TEST_CASE("input errors") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  CHECK(code_of([] { load_group("/nonexistent/g.json"); }) == ErrorCode::FileNotFound);
  CHECK(code_of([] { parse_group("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_group(R"({"elements":["a"]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_group(R"({"elements":["a","b"],"table":[["a","b"],["b","b"]]})"); }) ==
        ErrorCode::NotLatinSquare);
  CHECK(code_of([] {
          parse_polyadic(R"({"elements":["a"],"n":9,"table":["a"]})");
        }) == ErrorCode::InvalidInput);
  PolyadicGroup p = z3_neg();
  CHECK(code_of([&] { parse_system("vars: 1\nf(x1,x1) = x1\n", p); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_system("vars: x\n", p); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_points(R"({"vars":1,"points":[["c7"]]})", p); }) == ErrorCode::ParseError);
}

TEST_CASE("size caps on input") {
  Limits small;
  small.max_group_order = 4;
  CHECK_THROWS_AS(parse_group(group_to_json(symmetric_group(3)), small), Error);
}

}
