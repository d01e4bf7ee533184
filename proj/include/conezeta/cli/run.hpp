#pragma once

#include <string>
#include <vector>

#include "conezeta/cli/io.hpp"

namespace conezeta {

enum ExitCode { kExitPass = 0, kExitVerifyFail = 2, kExitValidation = 3, kExitDivergent = 4 };

struct RunSettings {
  bool verify = false;
  double tolerance = 1e-5;
  double divergent_tolerance = 1e-8;
};

struct RunOutcome {
  Json report;
  int exit_code = kExitPass;
  double seconds = 0;  // kept out of the report so reports stay byte-identical
};

/// Reduction, numeric evaluation of the result and (optionally) verification
/// against direct summation. Writes the trace file when the job asks for one.
RunOutcome run_job(const JobSpec& job, const RunSettings& settings, const std::vector<std::string>& warnings = {});

}  // namespace conezeta
