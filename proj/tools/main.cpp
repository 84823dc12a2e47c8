// mcsa: verify, construct and bound maximal commutative matrix subalgebras.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mcsa/bounds.hpp"

int main(int argc, char** argv) {
  using namespace mcsa::cli;

  CLI::App app{"Exact verification, construction and bounds for maximal commutative matrix subalgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  unsigned jobs = 1;
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for row-parallel commands")->check(CLI::PositiveNumber);
  app.add_option("--output", output_path, "Write results to PATH instead of stdout");

  auto* verify = app.add_subcommand("verify", "Certify an algebra document or builtin (e, d, d-appendix)");
  std::string verify_input;
  verify->add_option("input", verify_input, "Document path or builtin name")->required();

  auto* courter = app.add_subcommand("courter", "Build the stacked Courter-like algebra A_n (n >= 14)");
  std::int64_t courter_n = 0;
  bool courter_verify = false;
  bool courter_no_verify = false;
  std::string courter_emit;
  courter->add_option("n", courter_n, "Matrix size")->required();
  auto* v_on = courter->add_flag("--verify", courter_verify, "Run the centralizer certification");
  courter->add_flag("--no-verify", courter_no_verify, "Skip the centralizer certification")->excludes(v_on);
  courter->add_option("--emit", courter_emit, "Write the basis as an algebra document");

  auto* bounds = app.add_subcommand("bounds", "Signature-free lower bounds D_r(n) with Laffey comparison");
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::vector<std::size_t> bound_rs{3};
  bounds->add_option("n_min", n_min)->required();
  bounds->add_option("n_max", n_max)->required();
  bounds->add_option("-r,--r", bound_rs, "Nilpotency degrees (3..8)")->delimiter(',');

  auto* first = app.add_subcommand("first-exceptional", "Smallest n with D_r(n) < n");
  std::vector<std::size_t> first_rs{3, 4, 5, 6};
  std::int64_t cap = mcsa::kDefaultSearchCap;
  first->add_option("-r,--r", first_rs, "Nilpotency degrees (3..8)")->delimiter(',');
  first->add_option("--cap", cap, "Search limit on n")->capture_default_str();

  auto* table1 = app.add_subcommand("table1", "Reproduce the stack-construction table for n = 14..28");
  auto* rigidity = app.add_subcommand("rigidity", "Mixed rigidity ranks for brick pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  static const std::map<std::string, Format> formats{
      {"csv", Format::kCsv}, {"json", Format::kJson}, {"text", Format::kText}};

  std::ofstream file;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      std::cerr << "error: cannot write '" << output_path << "'\n";
      return kExitUsage;
    }
  }
  Context ctx{formats.at(format_name), jobs, output_path.empty() ? &std::cout : &file, &std::cerr};

  try {
    if (*verify) return cmd_verify(verify_input, ctx);
    if (*courter) {
      std::optional<bool> run;
      if (courter_verify) run = true;
      if (courter_no_verify) run = false;
      std::optional<std::string> emit;
      if (!courter_emit.empty()) emit = courter_emit;
      return cmd_courter(courter_n, run, emit, ctx);
    }
    if (*bounds) return cmd_bounds(n_min, n_max, bound_rs, ctx);
    if (*first) return cmd_first_exceptional(first_rs, cap, ctx);
    if (*table1) return cmd_table1(ctx);
    if (*rigidity) return cmd_rigidity(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSemantic;
  }
  return kExitUsage;
}
