#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"
#include "slcomb/invariant_engine.hpp"
#include "state_file.hpp"
#include "suites.hpp"

namespace {

constexpr int kUsageError = 2;

struct OutputOptions {
  std::string format = "text";
  std::string out;
  bool timing = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "Write the report to a file instead of stdout");
  cmd->add_flag("--timing", o.timing, "Include wall-clock time in the report");
}

int emit(slcomb::app::RunReport report, const OutputOptions& o, double seconds) {
  if (o.timing) report.wall_time = seconds;
  const std::string body = o.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kUsageError;
    }
    f << body;
  }
  return report.exit_code();
}

template <class Fn>
int timed(Fn&& fn, const OutputOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  slcomb::app::RunReport r = fn();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return emit(std::move(r), o, s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SL-invariant combs and local-unitary entanglement invariants for d = 2, 3, 4"};
  app.require_subcommand(1);

  slcomb::app::VerifyOptions vopt;
  OutputOptions vout;
  auto* verify = app.add_subcommand("verify", "Check comb identities of a spin sector");
  verify->add_option("--spin", vopt.spin, "Spin sector")->check(CLI::IsMember({"1/2", "1", "3/2", "all"}));
  verify->add_option("--trials", vopt.trials, "Random states per Monte Carlo check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", vopt.tol, "Monte Carlo tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Master seed");
  add_output_flags(verify, vout);

  slcomb::app::InvariantOptions iopt;
  OutputOptions iout;
  std::string names;
  for (const auto& n : slcomb::invariant_names()) names += (names.empty() ? "" : ", ") + n;
  auto* invariant = app.add_subcommand("invariant", "Evaluate a named invariant on a state file");
  invariant->add_option("spec", iopt.spec_name, names)->required()->check(CLI::IsMember(slcomb::invariant_names()));
  invariant->add_option("state", iopt.state_path, "State JSON file")->required();
  invariant->add_flag("--check-sl", iopt.check_sl, "Also test invariance under random local SL transformations");
  invariant->add_option("--trials", iopt.trials, "SL trials")->check(CLI::PositiveNumber);
  invariant->add_option("--tol", iopt.tol, "SL relative tolerance")->check(CLI::PositiveNumber);
  invariant->add_option("--seed", iopt.seed, "Master seed");
  add_output_flags(invariant, iout);

  slcomb::app::SelfcheckOptions sopt;
  OutputOptions sout;
  std::string state;
  auto* selfcheck = app.add_subcommand("selfcheck", "Compare the engine against brute-force oracles");
  selfcheck->add_option("--trials", sopt.trials, "Random states per oracle check")->check(CLI::PositiveNumber);
  selfcheck->add_option("--seed", sopt.seed, "Master seed");
  selfcheck->add_option("--state", state, "Additionally check on this state file");
  add_output_flags(selfcheck, sout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return timed([&] { return slcomb::app::run_verify(vopt); }, vout);
    if (*invariant) return timed([&] { return slcomb::app::run_invariant(iopt); }, iout);
    if (!state.empty()) sopt.state_path = state;
    return timed([&] { return slcomb::app::run_selfcheck(sopt); }, sout);
  } catch (const slcomb::app::StateFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsageError;
}
