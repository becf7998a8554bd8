// SPDX-FileCopyrightText: Copyright (c) 2026 the latgal authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the installed command-line interface: spawns the real
// binary and asserts exit codes and output bytes.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = LATGAL_CLI_PATH;
const std::string kData = LATGAL_DATA_DIR;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  static int counter = 0;
  std::string out_path = "/tmp/latgal_cli_out_" + std::to_string(counter);
  std::string err_path = "/tmp/latgal_cli_err_" + std::to_string(counter);
  ++counter;
  std::string command = "LATGAL_COLOR=0 " + kCli + " " + args + " > " + out_path +
                        " 2> " + err_path;
  int raw = std::system(command.c_str());
  RunResult result;
  if (WIFEXITED(raw)) result.exit_code = WEXITSTATUS(raw);
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/latgal_fixture_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::size_t count_substring(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

const char* kGoldenCsv =
    "x\\y,0,a,b,c,d,1\n"
    "0,0,0,b,b,b,b\n"
    "a,c,c,1,1,1,1\n"
    "b,c,c,1,1,1,1\n"
    "c,a,a,b,b,b,b\n"
    "d,d,d,1,1,1,1\n"
    "1,d,d,1,1,1,1\n";

}  // namespace

TEST_CASE("lattice subcommands") {
  RunResult ok = run("lattice validate " + kData + "/l6.json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "OK\n");

  RunResult dot = run("lattice dot " + kData + "/l6.json");
  CHECK(dot.exit_code == 0);
  CHECK(count_substring(dot.out, "->") == 7);

  RunResult show = run("lattice show " + kData + "/l6.json");
  CHECK(show.exit_code == 0);
  CHECK(show.out.find("join") != std::string::npos);
  CHECK(show.out.find("\x1b[") == std::string::npos);  // LATGAL_COLOR=0

  RunResult shown_json = run("lattice show --format json " + kData + "/l6.json");
  CHECK(shown_json.exit_code == 0);
  CHECK(shown_json.out.find("\"top\": \"1\"") != std::string::npos);

  SUBCASE("missing file exits 2 with a JSON error") {
    RunResult missing = run("lattice validate /nonexistent/lat.json");
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("\"IoError\"") != std::string::npos);
  }
  SUBCASE("malformed json exits 2") {
    std::string bad = write_temp("bad.json", "{oops");
    RunResult r = run("lattice validate " + bad);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("\"ParseError\"") != std::string::npos);
  }
  SUBCASE("non-lattice order exits 1") {
    std::string bad = write_temp(
        "nonlattice.json",
        "{\"elements\": [\"x\",\"y\",\"z\"], \"covers\": [[\"x\",\"y\"],[\"x\",\"z\"]]}");
    RunResult r = run("lattice validate " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"NotALattice\"") != std::string::npos);
  }
  SUBCASE("unsupported format exits 2") {
    RunResult r = run("lattice show --format dot " + kData + "/l6.json");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
  }
}

TEST_CASE("agg subcommands") {
  const std::string spec = kData + "/example1.json";

  RunResult eval = run("agg eval " + spec + " c d");
  CHECK(eval.exit_code == 0);
  CHECK(eval.out == "b\n");

  RunResult corners = run("agg eval " + spec + " 1 1");
  CHECK(corners.out == "1\n");

  RunResult table = run("agg table " + spec);
  CHECK(table.exit_code == 0);
  CHECK(table.out == kGoldenCsv);

  RunResult table_text = run("agg table --format table " + spec);
  CHECK(table_text.exit_code == 0);
  CHECK(table_text.out.find("x\\y") != std::string::npos);
  CHECK(table_text.out.find("\x1b[") == std::string::npos);

  RunResult build = run("agg build " + spec);
  CHECK(build.exit_code == 0);
  CHECK(build.out.find("\"arity\": 2") != std::string::npos);

  RunResult decompose = run("agg decompose " + spec);
  CHECK(decompose.exit_code == 0);
  CHECK(decompose.out.find("\"c\": \"a\"") != std::string::npos);

  RunResult subdirect = run("agg subdirect " + spec);
  CHECK(subdirect.exit_code == 0);
  CHECK(subdirect.out.find("\"irreducibles\"") != std::string::npos);

  SUBCASE("boundary violation exits 1") {
    std::string bad = write_temp("boundary.json",
                                 "{\"lattice\": \"" + kData + "/l6.json\"," +
                                     R"("slots": [
          {"closure": ["1", "a"], "interior": ["b", "0"],
           "iso": {"1": "b", "a": "0"}}]})");
    RunResult r = run("agg build " + bad);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"BoundaryViolation\"") != std::string::npos);
  }
  SUBCASE("wrong tuple length is a usage error") {
    RunResult r = run("agg eval " + spec + " c");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("unknown label exits 1") {
    RunResult r = run("agg eval " + spec + " q d");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"UnknownLabel\"") != std::string::npos);
  }
  SUBCASE("table respects --max-elements") {
    RunResult r = run("agg table --max-elements 10 " + spec);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"SizeLimit\"") != std::string::npos);
  }
  SUBCASE("output file flag") {
    std::string out_path = "/tmp/latgal_fixture_table_out.csv";
    RunResult r = run("agg table --out " + out_path + " " + spec);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out_path) == kGoldenCsv);
    std::remove(out_path.c_str());
  }
}

TEST_CASE("fca subcommands") {
  RunResult concepts = run("fca concepts " + kData + "/context_crisp.csv " +
                           kData + "/family_bool.json");
  CHECK(concepts.exit_code == 0);
  CHECK(count_substring(concepts.out, "\"extent\"") == 4);

  RunResult lattice = run("fca lattice " + kData + "/context_crisp.csv " + kData +
                          "/family_bool.json");
  CHECK(lattice.exit_code == 0);
  CHECK(count_substring(lattice.out, "[label=") == 4);

  RunResult crisp = run("fca crisp " + kData + "/context_crisp.csv");
  CHECK(crisp.exit_code == 0);
  CHECK(count_substring(crisp.out, "\"extent\"") == 4);

  SUBCASE("non-binary context for crisp exits 1") {
    RunResult r = run("fca crisp " + kData + "/context_grades.csv");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"NotBinary\"") != std::string::npos);
  }
  SUBCASE("unmapped token exits 1") {
    RunResult r = run("fca concepts " + kData + "/context_l6.csv " + kData +
                      "/family_bool.json");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"UnmappedToken\"") != std::string::npos);
  }
  SUBCASE("missing context exits 2") {
    RunResult r = run("fca crisp /nonexistent/ctx.csv");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("concept cap exits 1") {
    RunResult r = run("fca concepts --max-concepts 1 " + kData +
                      "/context_crisp.csv " + kData + "/family_bool.json");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("\"SizeLimit\"") != std::string::npos);
  }
  SUBCASE("grades context with the chain family") {
    RunResult r = run("fca concepts " + kData + "/context_grades.csv " + kData +
                      "/family_godel3.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"shop1\"") != std::string::npos);
  }
  SUBCASE("one-cell crisp context prints its two concepts") {
    std::string tiny = write_temp("tiny.csv", ",a\no,1\n");
    RunResult r = run("fca concepts " + tiny + " " + kData + "/family_bool.json");
    CHECK(r.exit_code == 0);
    CHECK(count_substring(r.out, "\"extent\"") == 2);
  }
}

TEST_CASE("identical runs produce identical bytes") {
  const std::string spec = kData + "/example1.json";
  RunResult first = run("agg table " + spec);
  RunResult second = run("agg table " + spec);
  CHECK(first.out == second.out);
  RunResult c1 = run("fca concepts " + kData + "/context_grades.csv " + kData +
                     "/family_godel3.json");
  RunResult c2 = run("fca concepts " + kData + "/context_grades.csv " + kData +
                     "/family_godel3.json");
  CHECK(c1.out == c2.out);
}

TEST_CASE("usage errors") {
  RunResult r = run("frobnicate");
  CHECK(r.exit_code == 2);
  RunResult help = run("--help");
  CHECK(help.exit_code == 0);
}
