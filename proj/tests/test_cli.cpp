#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#if !defined(POLYADIC_DATA_DIR) || !defined(POLYADIC_CLI)
#error "POLYADIC_DATA_DIR and POLYADIC_CLI must be defined"
#endif

namespace {

using nlohmann::json;

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(POLYADIC_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(POLYADIC_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "polyadic-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path) << text;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve the cube equation") {
  Result r = run("solve --system " + data("cube.system"));
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["points"] == json::parse(R"([["c2"]])"));
}

TEST_CASE("present2group then cosets") {
  Result g = run("present2group --presentation " + data("skew_fixed.presentation.json") + " --n 3");
  REQUIRE(g.status == 0);
  auto file = scratch("cover_presentation.json");
  write(file, g.out);
  Result c = run("cosets --presentation " + file.string());
  REQUIRE(c.status == 0);
  CHECK(json::parse(c.out)["order"] == 2);
}

TEST_CASE("validate reports a corrupted table") {
  Result r = run("validate --group " + data("z3_corrupt.json"));
  CHECK(r.status == 1);
  auto j = json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(!j["error"]["witness"].empty());

  // A corrupted polyadic table: the associativity witness is a full tuple.
  Result t = run("derive --polyadic " + data("der_z3_neg.json"));
  REQUIRE(t.status == 0);
  auto doc = json::parse(t.out);
  doc["table"][4] = doc["table"][4] == "c0" ? "c1" : "c0";
  auto file = scratch("corrupt_polyadic.json");
  write(file, doc.dump());
  Result v = run("validate --polyadic " + file.string());
  CHECK(v.status == 1);
  auto vj = json::parse(v.out);
  CHECK(vj["valid"] == false);
  CHECK((vj.contains("associativity_witness") || vj.contains("solvability_witness")));
}

TEST_CASE("input errors exit 2 with an error document") {
  Result r = run("solve --system /nonexistent/file.system");
  CHECK(r.status == 2);
  CHECK(json::parse(r.out)["error"]["code"] == "FileNotFound");
  Result bad = run("frobnicate --polyadic /nonexistent/file.json");
  CHECK(bad.status == 2);
  Result missing = run("skew");
  CHECK(missing.status == 2);
  Result fmt = run("skew --polyadic " + data("der_z3_neg.json") + " --format xml");
  CHECK(fmt.status == 2);
  auto sys = scratch("broken.system");
  write(sys, "polyadic: " + data("der_z3_neg.json") + "\nvars: 1\nf(x1,x1 = x1\n");
  Result parse = run("solve --system " + sys.string());
  CHECK(parse.status == 2);
  auto perr = json::parse(parse.out)["error"];
  CHECK(perr["code"] == "ParseError");
  CHECK(perr["message"].get<std::string>().find("line 3") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const std::string& args :
       {"postcover --polyadic " + data("der_z3_neg.json"),
        "coordgroup --system " + data("fixed_skew.system"),
        "homs --polyadic " + data("der_z3_id.json") + " --polyadic " + data("der_z3_neg.json"),
        "subgroups --polyadic " + data("der_z3_neg.json") + " --jobs 3"}) {
    Result a = run(args), b = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("emitted files re-parse to equal values") {
  Result t = run("derive --polyadic " + data("der_z3_neg.json"));
  auto table_file = scratch("table.json");
  write(table_file, t.out);
  Result again = run("derive --polyadic " + table_file.string());
  CHECK(again.out == t.out);
  Result v = run("validate --polyadic " + table_file.string());
  CHECK(v.status == 0);

  Result hg = run("hg --polyadic " + data("der_z3_neg.json") + " --anchor c2");
  auto hg_file = scratch("hg.json");
  write(hg_file, hg.out);
  CHECK(run("validate --polyadic " + hg_file.string()).status == 0);
  Result hg_table = run("derive --polyadic " + hg_file.string());
  CHECK(json::parse(hg_table.out)["table"] == json::parse(t.out)["table"]);

  Result r = run("retract --polyadic " + data("der_z3_neg.json") + " --anchor c1");
  auto r_file = scratch("retract.json");
  write(r_file, r.out);
  Result rv = run("validate --group " + r_file.string());
  CHECK(rv.status == 0);
  CHECK(json::parse(rv.out)["identity"] == "c1");

  Result c = run("postcover --polyadic " + data("der_z3_neg.json"));
  auto cover_file = scratch("cover.json");
  write(cover_file, json::parse(c.out)["cover"].dump());
  CHECK(run("validate --group " + cover_file.string()).status == 0);
}

TEST_CASE("translate both ways") {
  Result g = run("translate --polyadic " + data("der_z3_neg.json") +
                 " --direction g2p --anchor c1 'c1*x1^2*x2^-1*c2*x1 = 1'");
  CHECK(g.status == 0);
  CHECK(json::parse(g.out)["output"].get<std::string>().rfind("f(", 0) == 0);
  Result p = run("translate --polyadic " + data("der_z3_neg.json") +
                 " --direction p2g 'f(x1,~x1,x1) = x1'");
  CHECK(p.status == 0);
  CHECK(json::parse(p.out)["identical_in_GX"] == true);
}

TEST_CASE("remaining verbs run") {
  std::string p = data("der_z3_neg.json");
  CHECK(run("identity --polyadic " + data("der_z3_id.json")).status == 0);
  CHECK(run("closure --polyadic " + p + " --points " + data("line_two_points.json")).status == 0);
  CHECK(run("irreducible --polyadic " + p + " --points " + data("line_two_points.json")).status == 0);
  CHECK(run("minsys --system " + data("fixed_skew.system")).status == 0);
  CHECK(run("thm63 --system " + data("fixed_skew.system")).status == 0);
  Result fr = run("freereduce --n 4 'x^2 y^-1 x y^2'");
  CHECK(json::parse(fr.out)["results"][0]["height"] == 4);
  Result tbl = run("postcover --polyadic " + p + " --format table");
  CHECK(tbl.status == 0);
  CHECK(tbl.out.find("order: 6") != std::string::npos);
}

}
