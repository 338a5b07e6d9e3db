// End-to-end exercise of the command line binary (path in argv[1]).
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

static int failures = 0;
#define EXPECT(cond, what)                                                      \
  do {                                                                          \
    if (!(cond)) {                                                              \
      ++failures;                                                               \
      std::cerr << "FAILED: " << what << " at line " << __LINE__ << "\n";       \
    }                                                                           \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
};

static std::string g_cli;
static fs::path g_dir;

static RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path outfile = g_dir / ("out_" + std::to_string(counter++) + ".txt");
  std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + outfile.string() + "\" 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.exit_code = rc;
#else
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
#endif
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

static bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_roundtrip <path-to-cli>\n";
    return 1;
  }
  g_cli = argv[1];
  g_dir = fs::path("cli_roundtrip_tmp");
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);

  // --- catalog listing and emission
  RunResult list = run("catalog --list");
  EXPECT(list.exit_code == 0, "catalog --list exits 0");
  EXPECT(has(list.out, "act3") && has(list.out, "paper_bc"), "listing names families");

  std::string act3 = (g_dir / "act3.nsla").string();
  std::string bc = (g_dir / "bc.nsla").string();
  EXPECT(run("catalog act3 --field F3 --out " + act3).exit_code == 0, "emit act3");
  EXPECT(run("catalog paper_bc 4 --field F3 --out " + bc).exit_code == 0, "emit paper_bc");
  RunResult shown = run("catalog act3 --field F5");
  EXPECT(shown.exit_code == 0, "catalog to stdout");
  EXPECT(has(shown.out, "nsla-v1") && has(shown.out, "field F5"), "serialized body");

  // --- validate
  RunResult val = run("validate " + act3);
  EXPECT(val.exit_code == 0, "validate exits 0 on a valid algebra");
  EXPECT(has(val.out, "valid: yes"), "validate verdict line");

  RunResult valm = run("--report machine validate " + act3);
  EXPECT(valm.exit_code == 0, "machine validate exits 0");
  EXPECT(has(valm.out, "\"nsla-validation-v1\""), "machine validate format tag");

  // --- analyze: deterministic machine reports
  RunResult a1 = run("analyze " + act3 + " --report machine");
  RunResult a2 = run("analyze " + act3 + " --report machine");
  EXPECT(a1.exit_code == 0 && a2.exit_code == 0, "analyze exits 0");
  EXPECT(a1.out == a2.out, "machine analyze is byte-deterministic");
  EXPECT(has(a1.out, "\"nsla-analysis-v1\""), "analyze format tag");
  RunResult at = run("analyze " + act3);
  EXPECT(has(at.out, "nilpotent: no"), "act3 is not nilpotent");
  RunResult abt = run("analyze " + bc);
  EXPECT(abt.exit_code == 0, "analyze bc exits 0");
  EXPECT(has(abt.out, "nilpotent: yes"), "the tower is nilpotent");

  // --- lattice
  RunResult lat = run("lattice " + act3);
  EXPECT(lat.exit_code == 0, "lattice exits 0");
  EXPECT(has(lat.out, "graded subspaces: 12"), "act3 has 12 graded subspaces");

  // --- conformance: single files
  RunResult cb = run("conformance " + bc);
  EXPECT(cb.exit_code == 0, "every law holds on the tower");
  EXPECT(has(cb.out, "[PASS]"), "pass lines present");
  EXPECT(!has(cb.out, "[FAIL]"), "no fail lines");

  RunResult ca = run("conformance " + act3);
  EXPECT(ca.exit_code == 1, "the dichotomy law fails on act3");
  EXPECT(has(ca.out, "[FAIL]"), "fail line present");
  EXPECT(has(ca.out, "dichotomy_iff_nilpotent"), "the failing law is named");

  RunResult cm = run("--report machine conformance " + act3);
  EXPECT(cm.exit_code == 1, "machine conformance exit matches");
  EXPECT(has(cm.out, "\"all_ok\": false"), "machine all_ok flag");

  // --- enumerate + corpus conformance
  std::string edir = (g_dir / "enum").string();
  RunResult en = run("enumerate --dim-even 1 --dim-odd 1 --arity 3 --prime 3 --out " + edir);
  EXPECT(en.exit_code == 0, "enumerate exits 0");
  EXPECT(has(en.out, "valid algebras: 3"), "three valid algebras of this shape");
  size_t files = 0;
  for (auto& e : fs::directory_iterator(edir))
    if (e.path().extension() == ".nsla") ++files;
  EXPECT(files == 3, "three files written");

  RunResult cc = run("conformance --corpus " + edir);
  EXPECT(has(cc.out, "corpus: 3 files"), "corpus summary line");
  bool all_hold = has(cc.out, "all laws hold");
  EXPECT(cc.exit_code == (all_hold ? 0 : 1), "corpus exit matches its verdict");
  EXPECT(all_hold, "every law holds on the enumerated corpus");

  RunResult enm = run("--report machine enumerate --dim-even 1 --dim-odd 1 --arity 4 --prime 2 "
                      "--out " + (g_dir / "enum2").string());
  EXPECT(enm.exit_code == 0, "machine enumerate exits 0");
  EXPECT(has(enm.out, "\"valid\": 5"), "machine enumerate counts");

  // --- failure paths
  std::ofstream(g_dir / "invalid.nsla")
      << "nsla-v1\nfield F3\narity 3\nalpha 0\n"
         "basis x1 even\nbasis x2 even\nbasis y odd\n"
         "bracket x1 x2 y = x1:1\n";
  RunResult vi = run("validate " + (g_dir / "invalid.nsla").string());
  EXPECT(vi.exit_code == 1, "invalid algebra exits 1");
  EXPECT(has(vi.out, "valid: no") && has(vi.out, "witness"), "witness is printed");

  std::ofstream(g_dir / "garbage.nsla") << "this is not an algebra\n";
  RunResult gr = run("validate " + (g_dir / "garbage.nsla").string());
  EXPECT(gr.exit_code == 2, "garbage input exits 2");
  EXPECT(has(gr.out, "error:"), "error message printed");

  EXPECT(run("validate no_such_file.nsla").exit_code == 2, "missing file exits 2");
  EXPECT(run("catalog paper_bc 3 --field F3").exit_code == 2, "obstructed arity exits 2");
  EXPECT(run("catalog nope --field F3").exit_code == 2, "unknown family exits 2");
  EXPECT(run("validate").exit_code == 2, "missing argument exits 2");
  EXPECT(run("frobnicate").exit_code == 2, "unknown subcommand exits 2");
  EXPECT(run("conformance").exit_code == 2, "conformance needs a source");
  EXPECT(run("conformance " + act3 + " --corpus " + edir).exit_code == 2,
         "conformance rejects two sources");
  EXPECT(run("lattice " + (g_dir / "invalid.nsla").string()).exit_code == 1,
         "lattice on an invalid algebra reports validation and exits 1");

  RunResult ver = run("--version");
  EXPECT(ver.exit_code == 0, "--version exits 0");

  if (failures == 0) {
    std::cout << "cli_roundtrip: all checks passed\n";
    fs::remove_all(g_dir);
    return 0;
  }
  std::cout << "cli_roundtrip: " << failures << " check(s) failed\n";
  return 1;
}
