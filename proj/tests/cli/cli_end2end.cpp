// End-to-end checks of the command-line surface: subcommands, flags, exit
// codes (0 success, 1 validation failure, 2 usage error) and output shape.
// Takes the CLI binary path as argv[1].

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_cli;
int g_failures = 0;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run(const std::string& args) {
  CommandResult result;
  FILE* pipe = popen((g_cli + " " + args + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), got);
    if (got < buffer.size()) break;
  }
  int status = pclose(pipe);
  result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return result;
}

void check(bool ok, const std::string& what, const std::string& context = "") {
  if (ok) {
    std::cout << "[ok] " << what << "\n";
  } else {
    std::cout << "[FAIL] " << what << (context.empty() ? "" : "\n  --- output ---\n" + context)
              << "\n";
    ++g_failures;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_end2end <path-to-liepoisson-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  const std::string tmp = "/tmp/liepoisson_e2e_";

  // --- usage errors: exit 2 ---
  check(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
  check(run("analyze").exit_code == 2, "missing required argument exits 2");
  check(run("catalog build exF --theta 1/2 --theta-irrational sqrt2 -o /tmp/x.json").exit_code ==
            2,
        "mutually exclusive theta flags exit 2");
  check(run("catalog build nosuch -o /tmp/x.json").exit_code == 2, "unknown catalog name exits 2");
  check(run("catalog build exF --n 3 -o /tmp/x.json").exit_code == 2, "exF with n != 4 exits 2");
  check(run("--help").exit_code == 0, "--help exits 0");

  // --- catalog list ---
  {
    CommandResult r = run("catalog list");
    check(r.exit_code == 0, "catalog list exits 0", r.output);
    for (const char* name :
         {"heisenberg", "aff_real", "aff_complex", "exF", "abelian_extension"})
      check(r.output.find(name) != std::string::npos, std::string("catalog list mentions ") + name,
            r.output);
  }

  // --- catalog build + validate ---
  {
    const std::string file = tmp + "h9.json";
    CommandResult r = run("catalog build heisenberg --n 4 -o " + file);
    check(r.exit_code == 0, "catalog build heisenberg --n 4 exits 0", r.output);
    CommandResult v = run("validate " + file);
    check(v.exit_code == 0, "validate accepts a built file", v.output);
    check(v.output.find("dim 9") != std::string::npos, "validate reports dim 9", v.output);
    std::remove(file.c_str());
  }

  // --- validate failures: exit 1 ---
  {
    const std::string file = tmp + "malformed.json";
    write_file(file, "{ this is not json");
    CommandResult r = run("validate " + file);
    check(r.exit_code == 1, "malformed file exits 1", r.output);
    std::remove(file.c_str());

    const std::string bad = tmp + "bad_jacobi.json";
    write_file(bad, R"({"format_version":"1","dim":3,"basis":["x","y","z"],
      "brackets":[{"i":0,"j":1,"coeffs":{"2":"1"}},
                  {"i":1,"j":2,"coeffs":{"1":"1"}},
                  {"i":0,"j":2,"coeffs":{"1":"-1"}}]})");
    CommandResult rb = run("validate " + bad);
    check(rb.exit_code == 1, "Jacobi-violating file exits 1", rb.output);
    check(rb.output.find("Jacobi identity fails at basis triple") != std::string::npos,
          "error names the violating triple", rb.output);
    std::remove(bad.c_str());

    check(run("validate /nonexistent/missing.json").exit_code == 1, "missing file exits 1");
  }

  // --- analyze: catalog inline targets ---
  {
    CommandResult r = run("analyze catalog:heisenberg --n 1");
    check(r.exit_code == 0, "analyze catalog:heisenberg --n 1 exits 0", r.output);
    check(r.output.find("index: 1") != std::string::npos, "heisenberg index 1", r.output);
    check(r.output.find("witness xi0") != std::string::npos, "heisenberg Casimir witness xi0",
          r.output);

    CommandResult m = run(
        "analyze catalog:exF --n 4 --theta-irrational sqrt2 --c 1 --max-casimir-degree 2 "
        "--format machine");
    check(m.exit_code == 0, "analyze catalog:exF (symbolic theta) exits 0", m.output);
    check(m.output.find("\"dim\": 10") != std::string::npos, "exF machine report has dim 10",
          m.output);
    check(m.output.find("\"overall\": \"frobenius_type_I\"") != std::string::npos,
          "exF overall frobenius_type_I", m.output);
    check(m.output.find("\"type1_obstruction\": true") != std::string::npos,
          "exF type1_obstruction true", m.output);
  }

  // --- analyze a file target ---
  {
    const std::string file = tmp + "aff.json";
    check(run("catalog build aff_real -o " + file).exit_code == 0, "build aff_real");
    CommandResult r = run("analyze " + file);
    check(r.exit_code == 0, "analyze <file> exits 0", r.output);
    check(r.output.find("overall: frobenius_type_I") != std::string::npos,
          "aff_real file analyzes to frobenius_type_I", r.output);
    std::remove(file.c_str());
  }

  // --- casimir ---
  {
    CommandResult r = run("casimir catalog:heisenberg --n 1 --degree 2");
    check(r.exit_code == 0, "casimir subcommand exits 0", r.output);
    check(r.output.find("xi0") != std::string::npos &&
              r.output.find("xi0^2") != std::string::npos,
          "h_3 degree-2 basis prints xi0 and xi0^2", r.output);

    CommandResult m = run("casimir catalog:heisenberg --n 1 --degree 1 --format machine");
    check(m.output.find("{\"exps\":[1,0,0],\"coeff\":\"1\"}") != std::string::npos,
          "machine casimir output uses sparse term lists", m.output);
  }

  // --- spectral ---
  {
    const std::string file = tmp + "matrix.json";
    write_file(file, R"([["0","1","0","0"],["-1","0","0","0"],["0","0","0","1"],["0","0","-2","0"]])");
    CommandResult r = run("spectral --matrix " + file);
    check(r.exit_code == 0, "spectral --matrix exits 0", r.output);
    check(r.output.find("not_closed") != std::string::npos,
          "diag(J, sqrt2-scaled J) block matrix gives not_closed", r.output);
    CommandResult m = run("spectral --matrix " + file + " --format machine");
    check(m.output.find("\"closedness\": \"not_closed\"") != std::string::npos,
          "machine spectral output carries the enumerated verdict", m.output);
    std::remove(file.c_str());
  }

  if (g_failures == 0) {
    std::cout << "cli end-to-end: all checks passed\n";
    return 0;
  }
  std::cout << "cli end-to-end: " << g_failures << " checks FAILED\n";
  return 1;
}
