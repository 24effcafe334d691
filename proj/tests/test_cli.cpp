// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EUMAX_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string instance(const std::string& name) {
  return std::string(EUMAX_INSTANCE_DIR) + "/" + name;
}

nlohmann::json strip_timing(nlohmann::json j) {
  j.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("decompose emits a certified report") {
  const auto r = run("decompose --utility '{\"kind\":\"threshold_ramp\",\"delta_u\":0.5}' "
                     "--eps 0.1 --max-terms 801");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["expsum"]["certified_error"].get<double>() <= 0.2);
  CHECK(j["expsum"]["terms"].get<int>() >= 3);
  CHECK(j["expsum"]["term_list"].size() == j["expsum"]["terms"].get<std::size_t>());
  for (const auto& t : j["expsum"]["term_list"])
    CHECK(t["base_modulus"].get<double>() <= 1.0 + 1e-12);
}

TEST_CASE("decompose rejects eps outside the accepted range") {
  const auto r = run("decompose --utility '{\"kind\":\"inverse\"}' --eps 0.9");
  CHECK(r.exit_code == 2);
}

TEST_CASE("decompose of an everywhere-zero utility is the empty report") {
  const auto r = run(
      "decompose --utility "
      "'{\"kind\":\"piecewise_linear\",\"points\":[[0.0,0.0],[1.0,0.0]]}' --eps 0.1");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["expsum"]["terms"].get<int>() == 0);
  CHECK(j["expsum"]["certified_error"].get<double>() == 0.0);
}

TEST_CASE("decompose exits 4 when the budget cannot be met") {
  const auto r = run("decompose --utility '{\"kind\":\"threshold_ramp\",\"delta_u\":0.05}' "
                     "--eps 0.05 --max-terms 9");
  CHECK(r.exit_code == 4);
}

TEST_CASE("solve picks e1 under the ramp utility") {
  const auto r = run("solve " + instance("two_edge_threshold.json"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["solution"]["labels"] == nlohmann::json::array({"e1"}));
}

TEST_CASE("solve picks e2 under the inverse utility") {
  const auto r = run("solve " + instance("two_edge_inverse.json"));
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["solution"]["labels"] == nlohmann::json::array({"e2"}));
}

TEST_CASE("malformed instance files exit 2 with a diagnostic") {
  const auto bad = std::string("/tmp/eumax_bad_instance.json");
  std::FILE* f = std::fopen(bad.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("{\"problem\": \"shortest_path\", \"graph\": {\"nodes\": [\"s\"", f);
  std::fclose(f);
  const auto r = run("solve " + bad);
  CHECK(r.exit_code == 2);
  const auto missing = run("solve /tmp/does_not_exist_eumax.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("unreachable sink exits 3") {
  const auto r = run("solve " + instance("diamond_path.json") + " --hop-cap 1");
  CHECK(r.exit_code == 3);
}

TEST_CASE("tiny term budget exits 4") {
  const auto r = run("solve " + instance("two_edge_threshold.json") + " --max-terms 5");
  CHECK(r.exit_code == 4);
}

TEST_CASE("verify passes on the bundled instances") {
  for (const std::string name :
       {"two_edge_threshold.json", "two_edge_inverse.json", "diamond_path.json",
        "triangle_tree.json", "band_knapsack_small.json", "knapsack_size_small.json",
        "knapsack_profit_small.json"}) {
    const auto r = run("verify " + instance(name));
    CAPTURE(name);
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"].get<bool>());
  }
}

TEST_CASE("oracle and solve reports share the element schema") {
  const auto o = run("oracle " + instance("two_edge_threshold.json"));
  REQUIRE(o.exit_code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["best"]["elements"] == nlohmann::json::array({0}));
  CHECK(j["best"]["value"].get<double>() == doctest::Approx(1.0));
  CHECK(j["solutions"].size() == 2);
}

TEST_CASE("repeated runs produce identical reports modulo timing") {
  const auto a = run("solve " + instance("band_knapsack_small.json"));
  const auto b = run("solve " + instance("band_knapsack_small.json"));
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(strip_timing(nlohmann::json::parse(a.out)) == strip_timing(nlohmann::json::parse(b.out)));
}

TEST_CASE("bench emits one CSV row per sweep point and is seed-stable") {
  const auto a = run("bench --sweep '{\"n\":[4,6,8],\"eps\":[0.3],\"seed\":1}'");
  REQUIRE(a.exit_code == 0);
  // Header plus three rows.
  int lines = 0;
  for (const char c : a.out) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(a.out.rfind("n,eps,L,reachable,wall_ms,gap\n", 0) == 0);

  const auto b = run("bench --sweep '{\"n\":[4,6,8],\"eps\":[0.3],\"seed\":1}'");
  // Identical up to the wall-time column: compare with that column blanked.
  const auto scrub = [](const std::string& csv) {
    std::string out;
    int col = 0;
    for (const char c : csv) {
      if (c == ',') ++col;
      if (c == '\n') col = 0;
      if (col != 4 || c == ',') out.push_back(c);
    }
    return out;
  };
  CHECK(scrub(a.out) == scrub(b.out));
}

TEST_CASE("empty sweep prints only the header") {
  const auto r = run("bench --sweep '{\"n\":[]}'");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out == "n,eps,L,reachable,wall_ms,gap\n");
}

TEST_CASE("table format prints the human summary to stdout") {
  const auto r = run("--format table solve " + instance("two_edge_threshold.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("picked [e1]") != std::string::npos);
  CHECK(r.out.find("{") == std::string::npos);
}
