// End-to-end tests of the nilrep binary: exit codes, JSON contracts and the
// NILREP_MAX_DIM cap. Pass the binary path as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_cli;
std::string g_dir;
int g_failures = 0;

void expect(bool condition, const std::string& label) {
  if (condition) {
    std::printf("[ok] %s\n", label.c_str());
  } else {
    std::printf("[FAIL] %s\n", label.c_str());
    ++g_failures;
  }
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string out_file = g_dir + "/out.txt";
  const std::string command = g_cli + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-nilrep>\n");
    return 1;
  }
  g_cli = argv[1];
  g_dir = "/tmp/nilrep_cli_tests_" + std::to_string(::getpid());
  if (std::system(("mkdir -p " + g_dir).c_str()) != 0) return 1;

  const std::string h3 = g_dir + "/h3.json";
  expect(run("corpus heisenberg 3 --out " + h3).exit_code == 0, "corpus heisenberg 3");
  expect(run("validate " + h3).exit_code == 0, "validate accepts the corpus file");

  {
    const RunResult r = run("bch " + h3 + " --x 1,0,0 --y 0,1,0");
    expect(r.exit_code == 0, "bch runs");
    expect(r.output.find("\"1/2\"") != std::string::npos,
           "bch product carries the half coordinate");
  }
  {
    const RunResult r = run("analyze " + h3);
    expect(r.exit_code == 0, "analyze runs");
    expect(r.output.find("\"N\": 2") != std::string::npos, "analyze reports N=2");
  }
  {
    const RunResult r = run("represent " + h3);
    expect(r.exit_code == 0, "represent runs");
    expect(r.output.find("\"dim_FG\": 4") != std::string::npos,
           "represent reports dim_FG=4");
  }
  {
    const RunResult r = run("verify " + h3 + " --samples 10 --seed 5");
    expect(r.exit_code == 0, "verify passes on heisenberg");
    expect(r.output.find("\"all_pass\": true") != std::string::npos,
           "verify report says all_pass");
  }
  {
    const RunResult r = run("report " + h3 + " --samples 10");
    expect(r.exit_code == 0, "report runs");
    expect(r.output.find("pass") != std::string::npos, "report table has a pass row");
    expect(r.output.find("max_nilpotence_index") != std::string::npos,
           "table numerics also appear in the JSON");
  }
  {
    const std::string a2 = g_dir + "/a2.json";
    expect(run("corpus abelian 2 --out " + a2).exit_code == 0, "corpus abelian 2");
    const RunResult r = run("report " + a2 + " " + h3 + " --samples 10");
    expect(r.exit_code == 0, "multi-file report runs");
    expect(r.output.find("abelian2") < r.output.find("heisenberg3"),
           "rows follow the input order");
  }

  // Exit code contract: validation failures are 1, usage errors are 2.
  const std::string so3 = g_dir + "/so3.json";
  write_file(so3, R"({"name":"so3like","dim":3,
    "brackets":[{"i":0,"j":1,"coeffs":["0","0","1"]},
                {"i":1,"j":2,"coeffs":["1","0","0"]},
                {"i":0,"j":2,"coeffs":["0","-1","0"]}]})");
  {
    const RunResult r = run("validate " + so3);
    expect(r.exit_code == 1, "non-nilpotent input exits 1");
    expect(r.output.find("NotNilpotent") != std::string::npos,
           "diagnostics carry the error kind");
  }
  const std::string bad = g_dir + "/bad.json";
  write_file(bad, R"({"dim":2,"brackets":[{"i":0,"j":1,"coeffs":["1//2","0"]}]})");
  {
    const RunResult r = run("validate " + bad);
    expect(r.exit_code == 1, "malformed rational exits 1");
    expect(r.output.find("ParseError") != std::string::npos, "kind is ParseError");
  }
  expect(run("corpus heisenberg 4").exit_code == 1, "even heisenberg dimension exits 1");
  expect(run("nosuchcommand").exit_code == 2, "unknown subcommand exits 2");
  expect(run("bch " + h3 + " --x 1,0 --y 0,1,0").exit_code == 1,
         "wrong coordinate count exits 1");

  // Jacobi violations carry the offending triple.
  const std::string jac = g_dir + "/jac.json";
  write_file(jac, R"({"dim":3,"brackets":[{"i":0,"j":1,"coeffs":["0","0","1"]},
                                           {"i":1,"j":2,"coeffs":["0","1","0"]}]})");
  {
    const RunResult r = run("validate " + jac);
    expect(r.exit_code == 1, "Jacobi violation exits 1");
    expect(r.output.find("JacobiViolation") != std::string::npos, "kind is reported");
    expect(r.output.find("indices") != std::string::npos, "offending triple is reported");
  }

  // NILREP_MAX_DIM caps loaded dimensions (default 8).
  {
    const RunResult big = run("corpus strict_upper 5 --out " + g_dir + "/su5.json");
    expect(big.exit_code == 0, "corpus can emit dim 10");
    const RunResult r = run("validate " + g_dir + "/su5.json");
    expect(r.exit_code == 1, "dim 10 input is capped by default");
    expect(r.output.find("NILREP_MAX_DIM") != std::string::npos,
           "cap diagnostics name the variable");
    const std::string lifted =
        "NILREP_MAX_DIM=12 " + g_cli + " validate " + g_dir + "/su5.json > " +
        g_dir + "/out.txt 2>&1";
    expect(WEXITSTATUS(std::system(lifted.c_str())) == 0,
           "raising NILREP_MAX_DIM admits it");
  }

  (void)!std::system(("rm -rf " + g_dir).c_str());
  if (g_failures == 0) {
    std::printf("all cli tests passed\n");
    return 0;
  }
  std::printf("%d cli test(s) failed\n", g_failures);
  return 1;
}
