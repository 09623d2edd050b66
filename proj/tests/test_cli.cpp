#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(BSK_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(BSK_TEST_DIR) + "/data/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(BSK_TEST_DIR) + "/golden/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("membership") {
  auto r = run("membership " + data("kollar.bsk") + " --min");
  CHECK(r.code == 0);
  CHECK(r.out == golden("kollar_membership.txt"));
  CHECK(r.out.rfind("rho_min: 4\n", 0) == 0);

  r = run("membership " + data("kollar.bsk") + " --rho 8 --cap-gen 1:1");
  CHECK(r.code == 0);
  CHECK(r.out == "not in ideal at rho<=8\n");

  r = run("membership " + data("cusp5.bsk") + " --rho 20");
  CHECK(r.code == 0);
  CHECK(r.out == "not in ideal at rho<=20\n");

  r = run("membership " + data("macaulay_pair.bsk") + " --min");
  CHECK(r.out.rfind("rho_min: 3\n", 0) == 0);

  r = run("membership " + data("kollar_power.bsk") + " --min");
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: true") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = run("membership " + data("malformed.bsk") + " --min", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("malformed.bsk:3") != std::string::npos);
  CHECK(run("membership " + data("kollar.bsk") + " --min --budget-matrix 5").code == 3);
  CHECK(run("resolve " + data("twisted_cubic.bsk") + " --budget-pairs 1").code == 3);
  CHECK(run("membership " + data("does_not_exist.bsk")).code == 1);
  CHECK(run("resolve " + data("cusp5.bsk")).code == 1);
  CHECK(run("bounds " + data("kollar.bsk") + " --char 7").code == 1);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("bench nosuchfamily").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("bounds") {
  auto r = run("bounds " + data("kollar.bsk"));
  CHECK(r.code == 0);
  CHECK(r.out == golden("kollar_bounds.txt"));
  CHECK(run("bounds " + data("kollar.bsk") + " --records").out == golden("kollar_records.txt"));

  r = run("bounds " + data("cusp5.bsk") + " --compute-invariants");
  CHECK(r.code == 0);
  CHECK(r.out.find("computed: n=1 degX=5 regX=5\n") == 0);
  CHECK(r.out.find("hickel_i: needs muZero") != std::string::npos);
}

TEST_CASE("resolve and invariants") {
  auto r = run("resolve " + data("twisted_cubic.bsk"));
  CHECK(r.code == 0);
  CHECK(r.out == golden("twisted_cubic_resolve.txt"));
  CHECK(run("resolve " + data("p2.bsk")).out.find("reg X: 1\n") != std::string::npos);

  // Values agree with the bounds pipeline.
  CHECK(run("resolve " + data("cusp5.bsk") + " --homogenize-saturate").out.find("reg X: 5\n") != std::string::npos);
  auto inv = run("invariants " + data("cusp5.bsk") + " --homogenize-saturate");
  CHECK(inv.out.find("degree: 5\n") != std::string::npos);
  CHECK(inv.out.find("dim: 1\n") != std::string::npos);
  auto mod7 = run("invariants --char 7 " + data("twisted_cubic.bsk"));
  CHECK(mod7.out.find("characteristic: 7\n") != std::string::npos);
  CHECK(mod7.out.find("degree: 3\n") != std::string::npos);
}

TEST_CASE("bench") {
  CHECK(run("bench kollar d=2..3 --no-timing").out == golden("bench_kollar.csv"));
  CHECK(run("bench cusp --no-timing").out == golden("bench_cusp.csv"));
  auto a = run("bench macaulay-generic seed=1..3 --no-timing --seed 9");
  auto b = run("bench macaulay-generic seed=1..3 --no-timing --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("bench kollar q=1").code == 1);
}

TEST_CASE("determinism") {
  for (const char* args : {"membership KOLLAR --min", "bounds KOLLAR", "resolve CUBIC"}) {
    std::string s = args;
    if (auto p = s.find("KOLLAR"); p != std::string::npos) s.replace(p, 6, data("kollar.bsk"));
    if (auto p = s.find("CUBIC"); p != std::string::npos) s.replace(p, 5, data("twisted_cubic.bsk"));
    CHECK(run(s).out == run(s).out);
  }
}
