#include "conezeta/cli/run.hpp"

#include <chrono>
#include <fstream>

namespace conezeta {

namespace {

Json error_report(const JobSpec& job, const std::string& code, const std::string& message,
                  const std::vector<std::string>& warnings) {
  Json r;
  r["schema"] = kReportSchema;
  r["job"] = job_to_json(job);
  r["warnings"] = warnings;
  r["status"] = "error";
  r["error"] = {{"code", code}, {"message", message}};
  return r;
}

}  // namespace

RunOutcome run_job(const JobSpec& job, const RunSettings& settings, const std::vector<std::string>& warnings) {
  RunOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const bool tracing = !job.options.trace.empty();
  ReductionResult res;
  try {
    res = reduce_job(job, tracing);
  } catch (const PipelineError& e) {
    out.report = error_report(job, e.code(), e.what(), warnings);
    out.exit_code = e.code() == "DIVERGENT" ? kExitDivergent : kExitValidation;
    return out;
  } catch (const std::invalid_argument& e) {
    out.report = error_report(job, "VALIDATION", e.what(), warnings);
    out.exit_code = kExitValidation;
    return out;
  }

  Json r;
  r["schema"] = kReportSchema;
  r["job"] = job_to_json(job);
  r["warnings"] = warnings;
  r["status"] = "ok";
  r["value"] = to_json(res.value);
  r["valueText"] = to_string(res.value);
  EvalResult sym = eval_zexpression(res.value, job.options.precision);
  r["numericSymbolic"] = to_json(sym);

  double residual = 0;
  Json div = Json::array();
  for (const auto& [key, z] : res.divergent) {
    const double v = std::abs(eval_zexpression(z, job.options.precision).value);
    residual = std::max(residual, v);
    div.push_back({{"sPower", key.first}, {"logPower", key.second}, {"value", to_json(z)}, {"numeric", v}});
  }
  r["divergentParts"] = div;
  r["divergentResidual"] = residual;
  r["counts"] = {{"openPieces", res.pieces},
                 {"flaggedPieces", res.flagged_pieces},
                 {"univariateTerms", res.univariate_terms},
                 {"symbols", res.value.size()}};
  const bool divergent_ok = residual <= settings.divergent_tolerance;

  if (settings.verify) {
    Verification v = verify(res.value, Cone{job.ambient_dim, job.generators}, job.forms,
                            CharacterData{job.modulus, job.character}, settings.tolerance, job.options.precision);
    Json vb;
    vb["symbolicValue"] = r["valueText"];
    vb["numericSymbolic"] = to_json(v.symbolic);
    vb["numericDirect"] = to_json(v.direct.extrapolated);
    vb["numericTruncated"] = to_json(v.direct.truncated);
    vb["tolerance"] = settings.tolerance;
    vb["difference"] = std::abs(v.symbolic.value - v.direct.extrapolated.value);
    vb["pass"] = v.pass && divergent_ok;
    std::string note = v.note;
    if (!divergent_ok) note = "divergent coefficients do not vanish numerically";
    if (!note.empty()) vb["note"] = note;
    vb["seed"] = job.options.seed;
    vb["budgets"] = {{"maxPieces", job.options.max_pieces}, {"precision", job.options.precision}};
    r["verification"] = vb;
    out.exit_code = vb["pass"].get<bool>() ? kExitPass : kExitVerifyFail;
  } else {
    out.exit_code = divergent_ok ? kExitPass : kExitVerifyFail;
  }

  if (tracing) {
    Json tr;
    tr["schema"] = "conezeta-trace/1";
    Json seqs = Json::array();
    for (const auto& d : res.sequences) seqs.push_back(to_json(d));
    tr["derivedSequences"] = seqs;
    tr["parameter"] = job.forms.size() - 1;
    tr["steps"] = to_json(res.trace);
    std::ofstream f(job.options.trace);
    if (!f) throw std::runtime_error("cannot write trace file " + job.options.trace);
    f << tr.dump(1) << "\n";
    r["trace"] = job.options.trace;
  }
  out.report = std::move(r);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace conezeta
