#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conezeta/exact/rational.hpp"
#include "conezeta/polylog/word.hpp"
#include "conezeta/rewrite/reduce.hpp"

namespace conezeta {

struct JobOptions {
  int precision = 16;
  std::string trace;
  std::uint64_t seed = 0;
  std::size_t max_pieces = 10000;
};

struct JobSpec {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> generators;
  std::vector<RationalVector> forms;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> character;  // chi(x) = zeta_N^{<character, x>}
  JobOptions options;
};

/// Machine-readable failure: VALIDATION, POSITIVITY, DIVERGENT or BUDGET.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Checks dimensions, cone shape and positivity of the forms on the interior.
void validate_job(const JobSpec& job);

/// Simplicial piece data after lattice enlargement, before any rewriting.
struct PieceIntegral {
  Rational scale;  // (1/kappa) prod lambda_i
  std::vector<std::vector<Rational>> values;  // lambda_i l_i(u_j)
  std::vector<RootOfUnity> chi;                // psi(u_j)
};

/// Open pieces, superlattices and induced characters. Throws DIVERGENT when a
/// piece fails the convergence criterion.
std::vector<PieceIntegral> piece_integrals(const JobSpec& job);

struct ReductionResult {
  ZExpression value;
  std::map<std::pair<int, int>, ZExpression> divergent;
  std::size_t pieces = 0;
  std::size_t flagged_pieces = 0;
  std::size_t univariate_terms = 0;
  ReductionTrace trace;
  std::vector<DerivedSequence> sequences;  // filled with the trace
};

ReductionResult reduce_job(const JobSpec& job, bool with_trace = false);

}  // namespace conezeta
