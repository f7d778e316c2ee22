#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "schema_check.hpp"
#include "subprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <string>
#include <vector>

#ifndef PLACIRC_CLI_PATH
#error "PLACIRC_CLI_PATH must point at the placirc binary"
#endif
#ifndef PLACIRC_SCHEMA_PATH
#error "PLACIRC_SCHEMA_PATH must point at tools/schema/output.schema.json"
#endif

namespace {

using nlohmann::json;

subprocess::Result run_cli(const std::string& args) {
  return subprocess::run(std::string(PLACIRC_CLI_PATH) + " " + args);
}

const json& schema() {
  static const json s = [] {
    std::ifstream in(PLACIRC_SCHEMA_PATH);
    if (!in) throw std::runtime_error("cannot open schema file");
    json j;
    in >> j;
    return j;
  }();
  return s;
}

// Runs a subcommand expected to succeed and returns its schema-validated
// JSON document.
json run_json(const std::string& args) {
  const subprocess::Result r = run_cli(args);
  CAPTURE(args);
  CAPTURE(r.output);
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  const std::string reason = schema_check::validate(schema(), doc);
  CAPTURE(reason);
  REQUIRE(reason.empty());
  return doc;
}

}  // namespace

TEST_CASE("seq emits exact terms over a signed index range") {
  const json doc = run_json("seq --preset perrin --from -3 --to 5");
  CHECK(doc.at("meta").at("command") == "seq");
  CHECK(doc.at("meta").at("parameters").at("family") == "perrin");
  const auto& rows = doc.at("terms");
  REQUIRE(rows.size() == 9);
  const std::vector<std::string> want = {"2", "1", "-1", "3", "0",
                                         "2", "3", "2",  "5"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].at("n") == static_cast<std::int64_t>(i) - 3);
    CHECK(rows[i].at("value") == want[i]);
  }
}

TEST_CASE("seq identity columns agree with the running accumulators") {
  const json doc =
      run_json("seq --preset cordonnier --from 0 --to 12 --sums --squares");
  for (const auto& row : doc.at("terms")) {
    CHECK(row.at("sum") == row.at("sum_identity"));
    CHECK(row.at("sum_squares") == row.at("sum_squares_identity"));
  }
  const auto& last = doc.at("terms").back();
  CHECK(last.at("n") == 12);
  CHECK(last.at("value") == "21");
  // Custom seeds get the anchored constant, so the identity still closes.
  const json custom =
      run_json("seq --init 2,-1,4 --from 0 --to 20 --sums --squares");
  for (const auto& row : custom.at("terms")) {
    CHECK(row.at("sum") == row.at("sum_identity"));
    CHECK(row.at("sum_squares") == row.at("sum_squares_identity"));
  }
}

TEST_CASE("eig reports closed and oracle sides that agree") {
  const json doc = run_json("eig --preset perrin --n 4");
  const auto& rows = doc.at("spectrum");
  REQUIRE(rows.size() == 4);
  const std::vector<std::pair<double, double>> want = {
      {8, 0}, {1, 3}, {2, 0}, {1, -3}};
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(rows[j].at("j") == j);
    CHECK(std::abs(rows[j].at("re").get<double>() - want[j].first) < 1e-9);
    CHECK(std::abs(rows[j].at("im").get<double>() - want[j].second) < 1e-9);
    CHECK(rows[j].at("rel_err").get<double>() <= 1e-9);
  }
  // Single-method outputs carry only their own columns.
  const json closed = run_json("eig --init 1,-4,2 --n 3 --method closed");
  for (const auto& row : closed.at("spectrum")) {
    CHECK(row.contains("re"));
    CHECK_FALSE(row.contains("oracle_re"));
  }
}

TEST_CASE("norm reports the exact value against the float oracle") {
  const json doc = run_json("norm --preset cordonnier --n 4");
  const auto& s = doc.at("scalar");
  CHECK(s.at("value") == "5");
  CHECK(std::abs(s.at("oracle").get<double>() - 5.0) < 1e-9);
  CHECK(s.at("rel_err").get<double>() <= 1e-9);
  const json closed = run_json("norm --preset perrin --n 4 --method closed");
  CHECK(closed.at("scalar").at("value") == "8");
}

TEST_CASE("det reports all three routes in agreement") {
  const json doc = run_json("det --preset perrin --n 4");
  const auto& s = doc.at("scalar");
  CHECK(s.at("exact") == "160");
  CHECK(std::abs(s.at("closed").at("re").get<double>() - 160.0) < 1e-3);
  CHECK(s.at("closed").at("fallback") == false);
  CHECK(std::abs(s.at("eigprod").at("re").get<double>() - 160.0) < 1e-3);
  CHECK(s.at("max_rel_err").get<double>() <= 1e-6);

  const json fb = run_json("det --preset vanderlaan --n 2 --method closed");
  CHECK(fb.at("scalar").at("fallback") == true);
  CHECK(std::abs(fb.at("scalar").at("re").get<double>() - (-1.0)) < 1e-9);

  const json ex = run_json("det --preset cordonnier --n 3 --method exact");
  CHECK(ex.at("scalar").at("value") == "0");
}

TEST_CASE("verify exits 0 on a healthy run and its report validates") {
  const subprocess::Result r = run_cli("verify --n-max 8 --trials 2");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(schema_check::validate(schema(), doc).empty());
  const auto& report = doc.at("report");
  CHECK(report.at("summary").at("fail") == 0);
  CHECK(report.at("summary").at("erratum_expected_fail") == 4);
  CHECK(report.at("meta").at("n_max") == 8);
  CHECK(doc.at("meta").at("parameters").at("n_max") == 8);
}

TEST_CASE("verify exits 1 when a check hard-fails") {
  const subprocess::Result r =
      run_cli("verify --n-max 4 --trials 1 --tol-eig 1e-30");
  CHECK(r.exit_code == 1);
  const json doc = json::parse(r.output);
  CHECK(doc.at("report").at("summary").at("fail").get<int>() > 0);
}

TEST_CASE("verify output is byte-deterministic for a fixed config") {
  const std::string cmd = "verify --n-max 8 --trials 3 --seed 5";
  const subprocess::Result a = run_cli(cmd);
  const subprocess::Result b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  const subprocess::Result c = run_cli("verify --n-max 8 --trials 3 --seed 6");
  CHECK(a.output != c.output);
}

TEST_CASE("verify --out writes the document and summarizes to stdout") {
  const std::string path = "/tmp/placirc_test_report.json";
  std::remove(path.c_str());
  const subprocess::Result r =
      run_cli("verify --n-max 8 --trials 2 --out " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("report written to " + path) != std::string::npos);
  CHECK(r.output.find("checks:") != std::string::npos);
  CHECK(r.output.find("fail: 0") != std::string::npos);
  std::ifstream in(path);
  REQUIRE(in.good());
  json doc;
  in >> doc;
  CHECK(schema_check::validate(schema(), doc).empty());
  CHECK(doc.at("meta").at("parameters").at("out") == path);
  std::remove(path.c_str());
}

TEST_CASE("verify --timestamp stamps the report metadata") {
  const json doc = run_json("verify --n-max 4 --trials 1 --timestamp");
  const std::string ts = doc.at("report").at("meta").at("timestamp");
  CHECK(std::regex_match(
      ts, std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
  const json plain = run_json("verify --n-max 4 --trials 1");
  CHECK(plain.at("report").at("meta").at("timestamp") == "");
}

TEST_CASE("table output is plain text when piped") {
  const subprocess::Result seq =
      run_cli("seq --preset cordonnier --from 0 --to 3 --format table");
  REQUIRE(seq.exit_code == 0);
  CHECK(seq.output.find('\x1b') == std::string::npos);
  CHECK(seq.output.find("value") != std::string::npos);
  const subprocess::Result ver =
      run_cli("verify --n-max 4 --trials 1 --format table");
  REQUIRE(ver.exit_code == 0);
  CHECK(ver.output.find('\x1b') == std::string::npos);
  CHECK(ver.output.find("pass") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  // Conflicting / malformed flag combinations.
  CHECK(run_cli("seq --preset perrin --init 1,2,3 --from 0 --to 3 2>&1")
            .exit_code == 2);
  CHECK(run_cli("seq --preset perrin --from 3 --to 1 2>&1").exit_code == 2);
  CHECK(run_cli("seq --init 1,2 --from 0 --to 3 2>&1").exit_code == 2);
  CHECK(run_cli("seq --coeffs 1,1,1 --from 0 --to 2 2>&1").exit_code == 2);
  CHECK(run_cli("eig --preset perrin --n 0 2>&1").exit_code == 2);
  CHECK(run_cli("eig --preset perrin 2>&1").exit_code == 2);
  CHECK(run_cli("nonsense 2>&1").exit_code == 2);
  CHECK(run_cli("2>&1").exit_code == 2);
  // Identity columns need n >= 0.
  CHECK(run_cli("seq --preset perrin --from -1 --to 3 --sums 2>&1").exit_code ==
        2);
  // Backward extension that the coefficients cannot support.
  CHECK(run_cli("seq --init 1,1,1 --coeffs 1,1,0 --from -2 --to 2 2>&1")
            .exit_code == 2);
  CHECK(run_cli("seq --init 1,1,1 --coeffs 1,1,2 --from -2 --to 2 2>&1")
            .exit_code == 2);
  CHECK(run_cli("bench --n-list 8 --methods nope 2>&1").exit_code == 2);
}

TEST_CASE("domain errors exit with code 3 and explain themselves") {
  const subprocess::Result eig =
      run_cli("eig --init 1,1,1 --coeffs 1,1,1 --n 3 2>&1");
  CHECK(eig.exit_code == 3);
  CHECK(eig.output.find("error:") != std::string::npos);
  CHECK(run_cli("norm --init -1,2,-3 --n 3 2>&1").exit_code == 3);
  CHECK(run_cli("seq --init 1,1,1 --coeffs 1,1,1 --from 0 --to 3 --sums 2>&1")
            .exit_code == 3);
}

TEST_CASE("bench emits one row per (n, method) in canonical order") {
  const json doc =
      run_json("bench --n-list 8,16 --repeat 1 --methods eig-closed,norm-closed");
  CHECK(doc.at("meta").at("parameters").at("preset") == "perrin");
  const auto& rows = doc.at("bench");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].at("n") == 8);
  CHECK(rows[0].at("method") == "eig-closed");
  CHECK(rows[1].at("n") == 8);
  CHECK(rows[1].at("method") == "norm-closed");
  CHECK(rows[2].at("n") == 16);
  CHECK(rows[3].at("n") == 16);
  for (const auto& row : rows) CHECK(row.at("seconds").get<double>() > 0.0);
}

TEST_CASE("bench: oracle scales quadratically, closed form near-linearly") {
  // Median-of-15: the 2 ms batches are individually vulnerable to scheduler
  // preemption, and a median of 3 flips on a single bad batch.
  const json doc = run_json(
      "bench --n-list 64,256 --preset perrin --repeat 15 "
      "--methods eig-closed,eig-oracle");
  double closed64 = 0, closed256 = 0, oracle64 = 0, oracle256 = 0;
  for (const auto& row : doc.at("bench")) {
    const double s = row.at("seconds").get<double>();
    const bool closed = row.at("method") == "eig-closed";
    if (row.at("n") == 64) (closed ? closed64 : oracle64) = s;
    else (closed ? closed256 : oracle256) = s;
  }
  REQUIRE(oracle64 > 0.0);
  REQUIRE(closed64 > 0.0);
  const double oracle_ratio = oracle256 / oracle64;
  const double closed_ratio = closed256 / closed64;
  CAPTURE(oracle_ratio);
  CAPTURE(closed_ratio);
  // 64 -> 256 is 4x the order, so the O(n^2) oracle lands near 16x (50%
  // slack). The closed form is O(n) trig plus a term walk whose integer
  // digits also grow ~4x, so its ratio sits above a pure-linear 4x; allow
  // up to 8x but insist it stays well under the oracle's growth.
  CHECK(oracle_ratio >= 8.0);
  CHECK(oracle_ratio <= 24.0);
  CHECK(closed_ratio >= 2.0);
  CHECK(closed_ratio <= 8.0);
  CHECK(closed_ratio < oracle_ratio);
}

TEST_CASE("bench: a 1x1 run emits one row per default method") {
  const json doc = run_json("bench --n-list 1 --preset vanderlaan --repeat 1");
  const auto& rows = doc.at("bench");
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].at("method") == "eig-closed");
  CHECK(rows[1].at("method") == "eig-oracle");
  CHECK(rows[2].at("method") == "det-exact");
  CHECK(rows[3].at("method") == "norm-closed");
}

TEST_CASE("bench: exact elimination dominates every method at n = 128") {
  const json doc =
      run_json("bench --n-list 128 --preset cordonnier --repeat 1");
  double det_exact_s = 0.0, max_other = 0.0;
  for (const auto& row : doc.at("bench")) {
    const double s = row.at("seconds").get<double>();
    if (row.at("method") == "det-exact") det_exact_s = s;
    else max_other = std::max(max_other, s);
  }
  REQUIRE(det_exact_s > 0.0);
  CHECK(det_exact_s > max_other);
}

TEST_CASE("every subcommand's JSON conforms to the published schema") {
  // run_json validates internally; this sweep pins one document per command.
  run_json("seq --init 0,0,1 --from -5 --to 5");
  run_json("eig --preset vanderlaan --n 6 --method oracle");
  run_json("norm --init 1,0,2 --n 5 --method oracle");
  run_json("det --preset cordonnier --n 5 --method eigprod");
  run_json("verify --n-max 6 --trials 1");
  run_json("bench --n-list 4 --repeat 1 --methods norm-closed");
}
