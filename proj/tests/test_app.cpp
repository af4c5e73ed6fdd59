#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "report.hpp"
#include "slcomb/invariant_engine.hpp"
#include "state_file.hpp"
#include "suites.hpp"

using namespace slcomb;
using namespace slcomb::app;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SLCOMB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(SLCOMB_DATA) + "/states/" + name; }

// Exit code must agree with the statuses listed in the report.
void expect_consistent(const nlohmann::json& j, int exit_code) {
  ASSERT_EQ(j.at("schema"), kSchema);
  std::size_t pass = 0, fail = 0, warn = 0;
  std::string prev;
  for (const auto& c : j.at("checks")) {
    const std::string st = c.at("status");
    pass += st == "PASS";
    fail += st == "FAIL";
    warn += st == "WARN";
    EXPECT_LE(prev, c.at("name").get<std::string>());
    prev = c.at("name");
    EXPECT_TRUE(c.contains("provenance"));
  }
  EXPECT_EQ(j.at("summary").at("pass"), pass);
  EXPECT_EQ(j.at("summary").at("fail"), fail);
  EXPECT_EQ(j.at("summary").at("warn"), warn);
  EXPECT_EQ(j.at("summary").at("ok"), fail == 0);
  EXPECT_EQ(exit_code, fail == 0 ? 0 : 1);
}

const nlohmann::json* find_check(const nlohmann::json& j, const std::string& name) {
  for (const auto& c : j.at("checks"))
    if (c.at("name") == name) return &c;
  return nullptr;
}

}  // namespace

TEST(Report, StatusesAndExitCode) {
  RunReport r;
  r.checks.push_back(compare_check("b", Provenance::Property, 1.0, 1.0 + 1e-12, 1e-9));
  r.checks.push_back(bound_check("a", Provenance::Oracle, 1e-3, 1e-6));
  r.checks.push_back(advisory_check("c", Provenance::Regression, 0.0, 1.0, 1e-9));
  r.finalize();
  EXPECT_EQ(r.checks[0].name, "a");
  EXPECT_EQ(r.checks[0].status, Status::Fail);
  EXPECT_EQ(r.checks[1].status, Status::Pass);
  EXPECT_EQ(r.checks[2].status, Status::Warn);
  EXPECT_EQ(r.exit_code(), 1);
  const auto j = r.to_json();
  EXPECT_FALSE(j.contains("wall_time_s"));
  EXPECT_EQ(j["summary"]["warn"], 1);
  EXPECT_EQ(to_string(Provenance::Reference), "reference");
}

TEST(Report, NanNeverPasses) {
  EXPECT_EQ(compare_check("x", Provenance::Property, 0.0, std::nan(""), 1.0).status, Status::Fail);
  EXPECT_EQ(bound_check("x", Provenance::Property, std::nan(""), 1.0).status, Status::Fail);
}

TEST(StateFile, RoundTrip) {
  const PureState psi(2, 2, {0.5, Complex(0.0, 0.5), -0.5, 0.5}, "test");
  const PureState back = parse_state(state_to_json(psi));
  EXPECT_EQ(back.label(), "test");
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(back[k], psi[k]);
}

TEST(StateFile, Rejections) {
  EXPECT_THROW(parse_state("{"), StateFileError);
  EXPECT_THROW(parse_state(R"({"local_dim":3,"parties":2})"), StateFileError);
  EXPECT_THROW(parse_state(R"({"local_dim":3,"parties":1,"amplitudes":[[1,0],[0,0]]})"), StateFileError);
  EXPECT_THROW(parse_state(R"({"local_dim":2,"parties":1,"amplitudes":[[1,0],[0]]})"), StateFileError);
  EXPECT_THROW(parse_state(R"({"local_dim":1,"parties":1,"amplitudes":[[1,0]]})"), StateFileError);
  EXPECT_THROW(load_state_file(fixture("bad_length.json")), StateFileError);
  EXPECT_THROW(load_state_file(fixture("missing.json")), StateFileError);
}

TEST(StateFile, Fixtures) {
  EXPECT_NEAR(std::abs(t2_spin1(load_state_file(fixture("ghz3_2party.json")))), 1.0 / 27.0, 1e-13);
  EXPECT_NEAR(std::abs(det_spin32_from_combs(load_state_file(fixture("bell4.json")))), 1.0 / 16.0, 1e-13);
  EXPECT_NEAR(t3_spin1(load_state_file(fixture("ghz3_3party.json"))).real(), 16.0 / 243.0, 1e-13);
  EXPECT_LT(std::abs(t3_spin1(load_state_file(fixture("product3_3party.json")))), 1e-12);
}

TEST(Suites, VerifyRejectsUnknownSector) {
  VerifyOptions o;
  o.spin = "5/2";
  EXPECT_THROW(run_verify(o), std::invalid_argument);
}

TEST(Suites, VerifyIsDeterministic) {
  VerifyOptions o;
  o.spin = "1/2";
  o.trials = 20;
  o.seed = 5;
  EXPECT_EQ(run_verify(o).to_json().dump(), run_verify(o).to_json().dump());
}

TEST(Suites, PanelFitsDenseCap) {
  const auto panel = oracle_panel();
  EXPECT_GE(panel.size(), 15u);
  for (const auto& [name, e] : panel) EXPECT_LE(e.dense_dim(), kMaxDenseDim) << name;
}

TEST(Cli, VerifyQubitPasses) {
  const auto r = run_cli("verify --spin 1/2 --trials 50 --format json");
  const auto j = nlohmann::json::parse(r.out);
  expect_consistent(j, r.exit_code);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(find_check(j, "(sigma_y∘sigma_y)·P2 = -1/2(L2_qubit - sigma_y∘sigma_y)"), nullptr);
}

TEST(Cli, VerifySpin1ReportsTraceConstants) {
  const auto r = run_cli("verify --spin 1 --trials 30 --format json");
  const auto j = nlohmann::json::parse(r.out);
  expect_consistent(j, r.exit_code);
  for (const char* name : {"tr(L3∘L3) = 2304", "tr((L3∘L3)·L6) = 31104", "orthogonalization coefficient 27/2",
                           "P3 generator expansion = swap", "tabulated O_32 (d=3) vs (t_i⊗t_j)·P3"}) {
    const auto* c = find_check(j, name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->at("provenance"), name[0] == 't' && name[1] == 'a' ? "regression" : "reference");
  }
  EXPECT_EQ(find_check(j, "tr(L3∘L3) = 2304")->at("status"), "PASS");
  EXPECT_EQ(find_check(j, "tabulated O_32 (d=3) vs (t_i⊗t_j)·P3")->at("status"), "WARN");
}

TEST(Cli, VerifySpin32ReportsTraceConstants) {
  const auto r = run_cli("verify --spin 3/2 --trials 30 --format json");
  const auto j = nlohmann::json::parse(r.out);
  expect_consistent(j, r.exit_code);
  EXPECT_EQ(find_check(j, "orthogonalization coefficient 1/6")->at("status"), "PASS");
  EXPECT_NE(find_check(j, "tr(L2∘L2) = 9"), nullptr);
  EXPECT_NE(find_check(j, "tr(L4·(L2∘L2)) = 3/2"), nullptr);
}

TEST(Cli, InvariantJson) {
  const auto r = run_cli("invariant t2_spin1 " + fixture("ghz3_2party.json") + " --check-sl --trials 10 --format json");
  const auto j = nlohmann::json::parse(r.out);
  expect_consistent(j, r.exit_code);
  EXPECT_EQ(r.exit_code, 0);
  const auto& inv = j.at("invariant");
  EXPECT_NEAR(inv.at("abs").get<double>(), 1.0 / 27.0, 1e-12);
  EXPECT_EQ(inv.at("degree"), 6);
  EXPECT_FALSE(inv.at("notes").empty());
  EXPECT_NE(find_check(j, "sl_invariance(t2_spin1)"), nullptr);
}

TEST(Cli, TimingOnlyWhenRequested) {
  const auto a = nlohmann::json::parse(run_cli("verify --spin 1/2 --trials 5 --format json").out);
  const auto b = nlohmann::json::parse(run_cli("verify --spin 1/2 --trials 5 --format json --timing").out);
  EXPECT_FALSE(a.contains("wall_time_s"));
  EXPECT_TRUE(b.contains("wall_time_s"));
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli("invariant t2_spin1 " + fixture("bad_length.json")).exit_code, 2);
  EXPECT_EQ(run_cli("invariant t3_spin1 " + fixture("ghz3_2party.json")).exit_code, 2);
  EXPECT_EQ(run_cli("invariant t2_spin1 /nonexistent.json").exit_code, 2);
  EXPECT_EQ(run_cli("invariant nope " + fixture("ghz3_2party.json")).exit_code, 2);
  EXPECT_EQ(run_cli("verify --spin 7").exit_code, 2);
  EXPECT_EQ(run_cli("verify --trials 0").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("selfcheck --state " + fixture("bad_length.json")).exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(Cli, TextAndOutFile) {
  const std::string path = ::testing::TempDir() + "slcomb_report.json";
  const auto r = run_cli("verify --spin 1/2 --trials 5 --format json --out " + path);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  expect_consistent(j, r.exit_code);
  const auto t = run_cli("verify --spin 1/2 --trials 5");
  EXPECT_NE(t.out.find("summary:"), std::string::npos);
  EXPECT_NE(t.out.find("PASS  "), std::string::npos);
}
