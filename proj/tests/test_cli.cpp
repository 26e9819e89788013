#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef SYMFN_CLI_PATH
#error "SYMFN_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string command = env.empty() ? "" : env + " ";
  command += std::string(SYMFN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval prints the value with its residual against the table") {
  RunResult r = run_cli("eval --family chi --m 4 --r 3 --method half_sum");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "method       half_sum"));
  CHECK(contains(r.out, "value_re     1.1488408"));
  CHECK(contains(r.out, "constant_id  L3.chi8"));
  CHECK(contains(r.out, "residual"));

  RunResult trig = run_cli("eval --family f --m 1 --r 3 --method trig3_f");
  CHECK(trig.exit_code == 0);
  CHECK(contains(trig.out, "value_re     9.689461462593693804"));
  CHECK(contains(trig.out, "constant_id  L3.f4"));
}

TEST_CASE("eval json carries the wire schema") {
  RunResult r = run_cli("eval --family chi --m 2 --r 3 --method theorem23 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("value_re"));
  CHECK(j.contains("value_im"));
  CHECK(j.contains("error_bound"));
  CHECK(j["method"] == "theorem23");
  CHECK(j["terms_used"] == 2);
  CHECK(j["function"]["modulus"] == 4);
  CHECK(j["function"]["parity"] == "odd");
  CHECK(j["function"]["values"].size() == 3);
  CHECK(j["constant_id"] == "L3.chi4");
  const std::string value = j["value_re"].get<std::string>();
  CHECK(value.substr(0, 10) == "9.68946146");
}

TEST_CASE("eval decimal output width follows the precision") {
  RunResult wide = run_cli("eval --family chi --m 2 --r 3 --method half_sum --format csv");
  RunResult narrow =
      run_cli("eval --family chi --m 2 --r 3 --method half_sum --prec 128 --format csv");
  RunResult via_env = run_cli("eval --family chi --m 2 --r 3 --method half_sum --format csv",
                              "SYMFN_PREC=128");
  CHECK(wide.exit_code == 0);
  CHECK(narrow.exit_code == 0);
  CHECK(via_env.exit_code == 0);
  CHECK(narrow.out == via_env.out);       // env default matches the flag
  CHECK(wide.out != narrow.out);          // 256-bit run prints more digits
  CHECK(contains(wide.out, "value_re,value_im,error_bound,method,terms_used"));
}

TEST_CASE("byte-identical output across repeated and parallel runs") {
  const std::string args = "eval --family chi --m 3 --r 3 --method direct --tol 1e-8 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  RunResult c = run_cli(args + " --jobs 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);

  RunResult v1 = run_cli("verify --format csv");
  RunResult v2 = run_cli("verify --format csv");
  CHECK(v1.out == v2.out);
}

TEST_CASE("verify certifies the whole table") {
  RunResult r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "14/14 constants matched"));
  CHECK(contains(r.out, "inv.conjugation      ok"));
  CHECK(contains(r.out, "inv.split_identity   ok"));
  CHECK(contains(r.out, "inv.double_angle     ok"));

  RunResult json = run_cli("verify --format json");
  CHECK(json.exit_code == 0);
  auto j = nlohmann::json::parse(json.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 14);
  CHECK(j[0]["id"] == "L3.chi4");
  for (const auto& row : j) {
    CHECK(row["matched"] == true);
    CHECK(row.contains("decimal_value"));
    CHECK(row.contains("residual"));
  }
}

TEST_CASE("verify single-entry filter and negative control") {
  RunResult only = run_cli("verify --only L5.chi24");
  CHECK(only.exit_code == 0);
  CHECK(contains(only.out, "L5.chi24"));
  CHECK(contains(only.out, "1/1 constants matched"));
  CHECK_FALSE(contains(only.out, "L3.chi4"));

  RunResult unknown = run_cli("verify --only L9.bogus");
  CHECK(unknown.exit_code == 2);

  RunResult corrupt = run_cli("verify --self-test-corrupt");
  CHECK(corrupt.exit_code == 1);
}

TEST_CASE("eval omits the residual when the table has no matching constant") {
  RunResult r = run_cli("eval --family chi --m 5 --r 5 --method half_sum");
  CHECK(r.exit_code == 0);
  CHECK_FALSE(contains(r.out, "constant_id"));
  CHECK_FALSE(contains(r.out, "residual"));

  RunResult j = run_cli("eval --family chi --m 5 --r 5 --method half_sum --format json");
  auto parsed = nlohmann::json::parse(j.out);
  CHECK_FALSE(parsed.contains("constant_id"));
  CHECK_FALSE(parsed.contains("residual"));
}

TEST_CASE("classify surfaces a multiplicative pair witness when gcd passes") {
  // Every odd residue mod 16 is a unit, so f_16 fails only on a pair.
  RunResult r = run_cli("classify --family f --m 4 --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["is_character"] == false);
  CHECK(j["witness"]["kind"] == "pair");
  CHECK(j["witness"]["a"] == 3);
  CHECK(j["witness"]["b"] == 3);
}

TEST_CASE("classify reports the census verdicts") {
  RunResult yes = run_cli("classify --family chi --m 2");
  CHECK(yes.exit_code == 0);
  CHECK(contains(yes.out, "character  yes"));

  RunResult no = run_cli("classify --family chi --m 3");
  CHECK(no.exit_code == 0);
  CHECK(contains(no.out, "character  no"));
  CHECK(contains(no.out, "witness"));

  RunResult f3 = run_cli("classify --family f --m 3 --format json");
  CHECK(f3.exit_code == 0);
  auto j = nlohmann::json::parse(f3.out);
  CHECK(j["is_character"] == false);
  CHECK(j["witness"]["kind"] == "gcd");
  CHECK(j["function"]["modulus"] == 12);

  CHECK(run_cli("classify --family chi --m 1").exit_code == 2);
  CHECK(run_cli("classify --family q --m 3").exit_code == 2);
}

TEST_CASE("converge emits the gap table") {
  RunResult csv = run_cli("converge --r 3 --schedule 2,4,8,16 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.substr(0, 12) == "m,value,gap\n");
  CHECK(contains(csv.out, "\n2,"));
  CHECK(contains(csv.out, "\n16,"));

  RunResult f = run_cli("converge --r 3 --family f --schedule 1,2,4 --format json");
  CHECK(f.exit_code == 0);
  auto j = nlohmann::json::parse(f.out);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0]["m"] == 1);
  CHECK(j.contains("reference"));

  RunResult r5 = run_cli("converge --r 5 --schedule 2,4,8");
  CHECK(r5.exit_code == 0);
  CHECK(contains(r5.out, "reference"));
}

TEST_CASE("exit code contract") {
  CHECK(run_cli("eval --family chi --m 2 --r 3 --method half_sum").exit_code == 0);
  CHECK(run_cli("verify --self-test-corrupt").exit_code == 1);

  // Usage errors.
  CHECK(run_cli("eval --family chi --m 2 --r 3").exit_code == 2);          // no method
  CHECK(run_cli("eval --family chi --m 2 --r 3 --method nope").exit_code == 2);
  CHECK(run_cli("eval --family chi --m 2 --r 4 --method theorem23").exit_code == 2);
  CHECK(run_cli("eval --family chi --m 1 --r 3 --method half_sum").exit_code == 2);
  CHECK(run_cli("eval --family f --m 2 --r 3 --method trig3").exit_code == 2);
  CHECK(run_cli("eval --family chi --m 2 --r 3 --method half_sum --prec 32").exit_code == 2);
  CHECK(run_cli("converge --r 4 --schedule 2,4").exit_code == 2);
  CHECK(run_cli("converge --r 3 --schedule 4,2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);

  // Infeasible budgets.
  CHECK(run_cli("eval --family chi --m 2 --r 3 --method direct --tol 1e-40").exit_code == 3);
  CHECK(run_cli("converge --r 3 --schedule 2,4 --tol 1e-80").exit_code == 3);

  CHECK(run_cli("--help").exit_code == 0);
}
