#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "conezeta/exact/rational.hpp"
#include "conezeta/geometry/cone.hpp"
#include "conezeta/polylog/word.hpp"
#include "conezeta/rewrite/integrand.hpp"

namespace conezeta {

struct EvalResult {
  std::complex<double> value;
  double error_bound = 0;
  std::string method;
  long long terms_used = 0;
  bool heuristic = false;  // bound is an estimate, not a proof
  bool within_eps = true;
};

/// Nested sum over 0 < n_1 < ... < n_m with a tail bound; throws
/// std::runtime_error when eps needs more than max_terms outer terms.
EvalResult eval_mzv(const MZVSymbol& s, double eps, long long max_terms = 100'000'000);

/// Value through the iterated integral at 1. digits <= 16 uses double,
/// otherwise 50 decimal digits.
std::complex<double> symbol_value(const MZVSymbol& s, int digits = 16);
EvalResult eval_zexpression(const ZExpression& z, int digits = 16);

/// Character x -> exp(2 pi i <exps, x> / modulus).
struct CharacterData {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> exponents;
};

struct ConeZetaResult {
  EvalResult extrapolated;  // fit of the box sums in 1/R and log R / R^p, heuristic
  EvalResult truncated;     // largest box, rigorous bound when every form is positive on every generator
  bool rigorous_tail = false;
};

/// Sum over integral points of the open cone in |x|_inf <= R, for growing R.
/// Only full-dimensional cones are supported. budget 0 picks a size per dimension.
ConeZetaResult eval_cone_zeta(const Cone& c, const std::vector<RationalVector>& forms, const CharacterData& chi,
                              double eps, long long budget = 0);

/// Integrand of a term at a point, including 1/y_v for each integrated v.
std::complex<double> term_density(const Term& t, const std::vector<double>& y);

struct QuadEstimate {
  std::complex<double> mean;
  double stderr_ = 0;
};

/// Monte Carlo over the integrated variables of each term, parameters fixed at
/// `params` (indexed by variable). Samples are warped by y = 1 - (1 - v)^3.
QuadEstimate quad_estimate(const Combination& c, const std::vector<double>& params, std::uint64_t seed,
                           long samples);
bool quad_check(const Combination& in, const Combination& out, const std::vector<double>& params, double eps,
                std::uint64_t seed = 12345, long samples = 1'000'000);

struct Verification {
  EvalResult symbolic;
  ConeZetaResult direct;
  double tolerance = 0;
  bool pass = false;
  std::string note;
};

/// Pass needs the symbolic value within tolerance of the extrapolated sum and,
/// when a rigorous tail exists, inside the truncated sum's bound.
Verification verify(const ZExpression& value, const Cone& c, const std::vector<RationalVector>& forms,
                    const CharacterData& chi, double tolerance, int digits = 16);

}  // namespace conezeta
