// Behavior tests for the hardlearn binary: exit codes, output routing,
// config/preset/override precedence. The heavier determinism matrix lives
// in the acceptance suite.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HL_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    res.exit_code = -1;
    return res;
  }
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) {
    res.out.append(buf, n);
  }
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

int failures = 0;

void check(bool ok, const std::string& what) {
  if (ok) {
    std::cout << "ok   " << what << "\n";
  } else {
    std::cout << "FAIL " << what << "\n";
    ++failures;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "hardlearn_cli_tests";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  const auto file = [&tmp](const char* name) { return (tmp / name).string(); };

  {
    const RunResult r = run("selftest");
    check(r.exit_code == 0, "selftest exits 0");
    check(r.out.find("all invariants hold") != std::string::npos, "selftest reports health");
  }
  {
    const RunResult r = run("reduce bound --k 16 --queries 16");
    check(r.exit_code == 0, "reduce bound exits 0");
    check(r.out.find("0.5625") != std::string::npos, "reduce bound prints 0.5625");
  }
  {
    const RunResult r = run("frobnicate");
    check(r.exit_code == 2, "unknown subcommand is a usage error (exit 2)");
    const RunResult r2 = run("reduce bound --bogus-flag 3");
    check(r2.exit_code == 2, "unknown flag is a usage error (exit 2)");
    const RunResult r3 = run("reduce bound");
    check(r3.exit_code == 2, "missing required flags are usage errors");
  }
  {
    // q=1000 cannot be a rounding modulus; the violated invariant is named.
    const std::string cmd = "prf keygen --set q=1000 --key-out " + file("k.txt");
    const RunResult r = run(cmd + " --preset desk-prf");
    check(r.exit_code == 1, "invalid q=1000 with rounding is a domain error (exit 1)");
  }
  {
    const RunResult r = run("pke keygen --preset desk --seed 5 --priv-out " + file("priv.txt") +
                            " --pub-out " + file("pub.txt"));
    check(r.exit_code == 0, "pke keygen with the desk preset alias");
    const RunResult enc =
        run("pke enc --pub " + file("pub.txt") + " --bit 1 --seed 9 --ct-out " + file("ct.txt"));
    check(enc.exit_code == 0, "pke enc");
    const RunResult dec = run("pke dec --priv " + file("priv.txt") + " --ct " + file("ct.txt"));
    check(dec.exit_code == 0 && dec.out.find("1") != std::string::npos,
          "pke dec round-trips the bit");
    const RunResult dec_lit = run("pke dec --priv " + file("priv.txt") + " --ct " +
                                  file("ct.txt") + " --literal-rule");
    check(dec_lit.exit_code == 0, "pke dec accepts --literal-rule");
  }
  {
    const RunResult r = run("pke error-rate --preset desk --set trials=150 --seed 7 --out " +
                            file("rate.json"));
    check(r.exit_code == 0, "pke error-rate writes --out");
    const auto parsed = nlohmann::json::parse(slurp(file("rate.json")));
    check(parsed["seed"] == 7, "result record echoes the seed");
    check(parsed["config"]["trials"] == 150, "config override reaches the record");
  }
  {
    // Environment-variable seed fallback.
    setenv("HARDLEARN_SEED", "123", 1);
    const RunResult r = run("pke error-rate --set trials=50 --preset desk");
    unsetenv("HARDLEARN_SEED");
    check(r.exit_code == 0 && nlohmann::json::parse(r.out)["seed"] == 123,
          "HARDLEARN_SEED provides the seed fallback");
  }
  {
    const RunResult gen = run("gen --type rlwr --set d=4 --set q=16 --set p=4 --set m=25 "
                              "--arm planted --seed 3 --batch-out " +
                              file("batch.txt"));
    check(gen.exit_code == 0, "gen writes a batch");
    const std::string content = slurp(file("batch.txt"));
    check(content.rfind("type=rlwr d=4 q=16 p=4 m=25", 0) == 0, "batch header format");
  }
  {
    // Config file < preset gap-filling < --set overrides.
    {
      std::ofstream cfg(file("cfg.txt"));
      cfg << "q=16384\n";
    }
    const RunResult r = run("pke error-rate --config " + file("cfg.txt") +
                            " --preset desk --set trials=60 --seed 2");
    check(r.exit_code == 0, "config + preset + overrides run");
    const auto parsed = nlohmann::json::parse(r.out);
    check(parsed["config"]["q"] == 16384, "config file value beats the preset");
    check(parsed["config"]["m"] == 300, "preset fills unset keys");
  }
  {
    const RunResult key = run("prf keygen --preset desk-prf --set k=8 --seed 11 --key-out " +
                              file("prf.key"));
    check(key.exit_code == 0, "prf keygen");
    const RunResult table =
        run("prf table --key " + file("prf.key") + " --table-out " + file("prf.tab"));
    check(table.exit_code == 0, "prf table");
    const RunResult eval = run("prf eval --key " + file("prf.key") + " --x 5");
    check(eval.exit_code == 0, "prf eval");
    const RunResult learn =
        run("learn memorizing --target " + file("prf.tab") + " --budget 256 --seed 4");
    check(learn.exit_code == 0, "learn consumes the table");
    const auto parsed = nlohmann::json::parse(learn.out);
    check(parsed["metrics"]["agreement"] == 1.0, "full-budget memorizer is exact");
    const RunResult wht = run("fourier wht --table " + file("prf.tab") + " --spectrum-out " +
                              file("spec.csv"));
    check(wht.exit_code == 0, "fourier wht");
    check(slurp(file("spec.csv")).rfind("S,coefficient", 0) == 0, "spectrum CSV header");
    const RunResult fsample =
        run("fourier sample --table " + file("prf.tab") + " -n 8 --seed 13");
    check(fsample.exit_code == 0, "fourier sample");
  }
  {
    const RunResult r = run("reduce params-tc0 --n 1048576 --alpha 3 --tau 0.5 --delta 1");
    const auto parsed = nlohmann::json::parse(r.out);
    check(r.exit_code == 0 && parsed["metrics"]["all_pass"] == true, "reduce params-tc0");
    const RunResult bad = run("reduce params-tc0 --n 1024 --alpha 1.5 --tau 0.5 --delta 1");
    check(bad.exit_code == 1, "violated precondition is a domain error");
  }

  std::cout << (failures == 0 ? "cli_tests: all passed\n"
                              : "cli_tests: " + std::to_string(failures) + " failures\n");
  return failures == 0 ? 0 : 1;
}
