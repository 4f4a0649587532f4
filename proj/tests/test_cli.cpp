// Exercises the installed binary: exit-code contract and output shapes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
  const char* b = std::getenv("COX_BIN");
  REQUIRE_MESSAGE(b != nullptr, "COX_BIN must point at the cox binary");
  return b;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string outfile = "cli_test_out.tmp";
  std::string cmd = bin() + " " + args + " > " + outfile + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(outfile.c_str());
  return {WEXITSTATUS(rc), ss.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("scroll subcommand") {
  auto r = run("scroll --n 4 --d 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("S(0,0,0)") != std::string::npos);
  CHECK(r.out.find("P^1 x P^2") != std::string::npos);
  auto r2 = run("scroll --n 5 --d 7");
  CHECK(r2.code == 0);
  CHECK(r2.out.find("S(0,1,1,1)") != std::string::npos);
  CHECK(run("scroll --n 2 --d 1").code == 1);
}

TEST_CASE("localize on the cone input file") {
  auto r = run("localize cone.cox");
  CHECK(r.code == 0);
  CHECK(r.out.find("status certified") != std::string::npos);
  CHECK(r.out.find("S1") != std::string::npos);
  // explicit pivot by marker text
  auto r2 = run("localize cone.cox --pivot y");
  CHECK(r2.code == 0);
}

TEST_CASE("single marker gives the dedicated usage error") {
  auto r = run("localize cone.cox --markers x");
  CHECK(r.code == 1);
  CHECK(r.out.find("single-marker") != std::string::npos);
}

TEST_CASE("parse errors exit with 1 and a location") {
  write_file("broken.cox", "ring F32003[x,y\nrelations x\n");
  auto r = run("localize broken.cox");
  CHECK(r.code == 1);
  CHECK(r.out.find("syntax-error") != std::string::npos);
  std::remove("broken.cox");
}

TEST_CASE("budget exhaustion exits with 2") {
  auto sample = run("sample bl2p4.ambient --degree [3,-1,-1] --seed 20250810 --emit-input");
  REQUIRE(sample.code == 0);
  write_file("bl2p4_input.cox", sample.out);
  auto r = run("localize bl2p4_input.cox --pivot T6*T7 --max-rounds 1");
  CHECK(r.code == 2);
  CHECK(r.out.find("status budget-exhausted") != std::string::npos);
  std::remove("bl2p4_input.cox");
}

TEST_CASE("hypersurface maps hypothesis failures to exit 3") {
  // two codim-2 components in the ambient
  auto r = run("hypersurface bl2p4.ambient --degree [3,-1,-1] --seed 1");
  CHECK(r.code == 3);
  CHECK(r.out.find("non-unique-codim2-component") != std::string::npos);
}

TEST_CASE("hypersurface + verify round trip") {
  auto r = run("hypersurface blpp4.ambient --degree [5,-3] --seed 20250812");
  REQUIRE(r.code == 0);
  // strip the leading "hypersurface <equation>" line, keep the report
  std::string report = r.out.substr(r.out.find("ring "));
  write_file("blpp4_pres.cox", report);
  auto v = run("verify blpp4_pres.cox");
  CHECK(v.code == 0);
  CHECK(v.out.find("verify pass") != std::string::npos);
  CHECK(v.out.find("codim-markers 2") != std::string::npos);

  // delete one relation: the codim condition must fail
  std::istringstream in(report);
  std::string line, mangled;
  while (std::getline(in, line)) {
    if (line.rfind("relations ", 0) == 0) {
      size_t cut = line.rfind(';');
      REQUIRE(cut != std::string::npos);
      line = line.substr(0, cut);
    }
    mangled += line + "\n";
  }
  write_file("blpp4_broken.cox", mangled);
  auto vb = run("verify blpp4_broken.cox");
  CHECK(vb.code == 3);
  CHECK(vb.out.find("condition-failed") != std::string::npos);
  std::remove("blpp4_pres.cox");
  std::remove("blpp4_broken.cox");
}

TEST_CASE("fixture listing and runs") {
  auto r = run("fixtures --list");
  CHECK(r.code == 0);
  CHECK(r.out.find("bl2p4") != std::string::npos);
  auto c = run("fixtures cone");
  CHECK(c.code == 0);
  CHECK(c.out.find("status certified") != std::string::npos);
}

TEST_CASE("anticanonical and surface subcommands") {
  auto r = run("anticanonical --params 4,3,0,0,1 --seed 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("row d1-table") != std::string::npos);
  auto nf = run("anticanonical --params 4,3,0,0,2 --seed 3");
  CHECK(nf.code == 3);
  CHECK(nf.out.find("not-fano") != std::string::npos);
  auto s = run("surface --params 2,0,1 --degree [1,3] --seed 5");
  CHECK(s.code == 0);
  auto sbad = run("surface --params 1,0 --degree [2,2] --seed 5");
  CHECK(sbad.code == 3);
  CHECK(sbad.out.find("conditions-violated") != std::string::npos);
}
