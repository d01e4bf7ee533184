#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "conezeta/cli/run.hpp"

using namespace conezeta;

namespace {

int emit_error(const std::string& code, const std::string& message, int exit_code) {
  Json r;
  r["schema"] = kReportSchema;
  r["status"] = "error";
  r["error"] = {{"code", code}, {"message", message}};
  std::cout << r.dump(2) << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cone zeta values as cyclotomic multiple zeta values"};
  app.require_subcommand(1);
  std::string job_path;
  std::optional<int> precision;
  std::optional<std::string> trace;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_pieces;
  double tolerance = 1e-5;
  std::string output;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("job", job_path, "job file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--precision", precision, "decimal digits for numeric evaluation (over 16 uses 50 digits)");
    sub->add_option("--trace", trace, "write the reduction trace to this path");
    sub->add_option("--seed", seed, "seed recorded in the report");
    sub->add_option("--max-pieces", max_pieces, "limit on simplicial and flag pieces");
    sub->add_option("-o,--output", output, "write the report here instead of stdout");
  };
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a job to a combination of cyclotomic MZVs");
  CLI::App* verify = app.add_subcommand("verify", "reduce and check against direct summation");
  add_common(reduce);
  add_common(verify);
  verify->add_option("--tolerance", tolerance, "absolute tolerance of the comparison");
  CLI11_PARSE(app, argc, argv);

  JobSpec job;
  std::vector<std::string> warnings;
  try {
    std::ifstream in(job_path);
    Json j = Json::parse(in);
    job = parse_job(j, &warnings);
  } catch (const SchemaError& e) {
    return emit_error("VALIDATION", e.what(), kExitValidation);
  } catch (const nlohmann::json::exception& e) {
    return emit_error("VALIDATION", e.what(), kExitValidation);
  }
  if (precision) job.options.precision = *precision;
  if (trace) job.options.trace = *trace;
  if (seed) job.options.seed = *seed;
  if (max_pieces) job.options.max_pieces = *max_pieces;
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  RunSettings settings;
  settings.verify = verify->parsed();
  settings.tolerance = tolerance;
  RunOutcome out;
  try {
    out = run_job(job, settings, warnings);
  } catch (const std::exception& e) {
    return emit_error("INTERNAL", e.what(), 1);
  }
  const std::string text = out.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    f << text;
  }
  std::cerr << "elapsed " << out.seconds << " s\n";
  return out.exit_code;
}
