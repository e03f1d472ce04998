// End-to-end checks of the pgl binary: exit codes, report fields, and
// byte-level determinism of JSON output (modulo the elapsed_ms field).

#include <array>
#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PGL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(PGL_TEST_DATA) + "/" + name;
}

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

using json = nlohmann::json;

json strip_elapsed(json j) {
  j.erase("elapsed_ms");
  if (j.contains("results") && j["results"].contains("witnesses"))
    for (auto& w : j["results"]["witnesses"]) w.erase("elapsed_ms");
  return j;
}

}  // namespace

int main() {
  {
    RunResult r = run("--json analyze " + data("r2.pres"));
    expect(r.exit_code == 0, "analyze exit code");
    json j = json::parse(r.out);
    expect(j["results"]["order"] == 32, "analyze order");
    expect(j["results"]["abelian_invariants"] == json::array({4, 4}),
           "analyze invariants");
    expect(j["results"]["powerful"] == false, "analyze powerful flag");
    expect(j["failures"].empty(), "analyze failure list");
    expect(j.contains("tool_version") && j.contains("elapsed_ms"),
           "analyze envelope fields");
  }
  {
    RunResult r = run("--json goursat-census " + data("c2.pres") + " " + data("c2.pres"));
    expect(r.exit_code == 0, "census exit code");
    json j = json::parse(r.out);
    expect(j["results"]["subgroup_count"] == 5, "census subgroup count");
    expect(j["results"]["tuple_count"] == 5, "census tuple count");
    expect(j["results"]["roundtrip_failures"].empty(), "census roundtrips");
  }
  {
    RunResult a = run("--json --seed 3 --count 10 scenario lemma34");
    RunResult b = run("--json --seed 3 --count 10 scenario lemma34");
    expect(a.exit_code == 0 && b.exit_code == 0, "lemma34 exit codes");
    expect(strip_elapsed(json::parse(a.out)) == strip_elapsed(json::parse(b.out)),
           "same seed gives identical reports");
    RunResult c = run("--json --seed 4 --count 10 scenario lemma34");
    expect(c.exit_code == 0, "lemma34 reseeded exit code");
  }
  {
    RunResult r = run("scenario witness --p 3");
    expect(r.exit_code == 0, "witness scenario exit code");
    RunResult r2 = run("scenario witness --p 2");
    expect(r2.exit_code == 0, "witness p=2 exit code");
  }
  {
    RunResult r = run("build " + data("c4.pres"));
    expect(r.exit_code == 0, "build exit code");
    expect(r.out.find("order 4") != std::string::npos, "build output");
  }
  {
    RunResult r = run("scenario lemma44 --json");
    expect(r.exit_code == 0, "lemma44 exit code");
    json j = json::parse(r.out);
    bool r2_isomorphic = false;
    for (const auto& g : j["results"]["groups"])
      if (g["group"] == "R2") r2_isomorphic = g["status"] == "isomorphic";
    expect(r2_isomorphic, "lemma44 finds the R2 isomorphism");
  }
  {
    expect(run("no-such-command").exit_code == 2, "unknown command exit code");
    expect(run("analyze /no/such/file.pres").exit_code == 2, "missing file exit code");
    expect(run("corpus list --p 7").exit_code == 2, "unsupported prime exit code");
    expect(run("scenario violations --p 3").exit_code == 2,
           "violations without a group");
    expect(run("").exit_code == 2, "missing subcommand");
  }
  {
    RunResult r = run("scenario violations --group Q8 --mode poset --json");
    expect(r.exit_code == 0, "violations exit code");
    json j = json::parse(r.out);
    expect(j["results"]["violations"].get<long long>() > 0, "Q8 poset violations");
  }
  {
    RunResult r = run("scenario torsion --element \"x\" --n 1 --m 1 --json");
    expect(r.exit_code == 0, "torsion with explicit element");
    json j = json::parse(r.out);
    expect(j["results"]["witnesses"][0]["claims"][0]["holds"] == true,
           "torsion claim holds");
  }
  {
    RunResult r = run("lattice " + data("d4.pres") + " --json");
    expect(r.exit_code == 0, "lattice exit code");
    json j = json::parse(r.out);
    expect(j["results"]["subgroup_count"] == 10, "D4 lattice size");
  }

  if (failures) std::cerr << failures << " CLI check(s) failed\n";
  else std::cout << "all CLI checks passed\n";
  return failures == 0 ? 0 : 1;
}
