#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conezeta/polylog/pnormal.hpp"
#include "conezeta/rewrite/integrand.hpp"

namespace conezeta {

struct TraceStep {
  std::string rule;
  std::string anchor;
  Term input;
  std::size_t var = 0;  // differentiation variable of reduce_B
  std::string output;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

/// One factor per integrated level, each with mu = 1, and every integrated
/// variable divides the numerator.
bool is_reduced(const Term& t);
/// Reduced and without factors at parameter levels.
bool is_simple(const Term& t);

/// Weight descent for integrals whose only surviving free variable at the end
/// is `param`.
class Reducer {
 public:
  explicit Reducer(std::size_t param, ReductionTrace* trace = nullptr) : param_(param), trace_(trace) {}

  /// Rewrites h as a combination of reduced terms (integrated levels carry single
  /// simple factors; parameter levels may carry any factors).
  Combination reduce_A(const Term& h);
  /// y_i d/dy_i of a simple term, i a parameter; output terms are normalized but not reduced.
  Combination reduce_B(const Term& f, std::size_t i);
  /// A reduced term whose parameter levels are all `param`, as a function of y_param.
  PNormalForm to_P(const Term& u);
  /// I(y_param) for a combination of terms integrated over every variable but `param`.
  PNormalForm reduce_to_univariate(const Combination& in);

  std::size_t param() const { return param_; }

 private:
  void finish(const Term& u, std::size_t t, const CycloNumber& c, Combination& out);
  void record(const char* rule, const char* anchor, const Term& in, std::size_t var, std::string out);

  std::size_t param_;
  ReductionTrace* trace_;
  int depth_ = 0;
  std::map<Term, Combination> a_memo_;
  std::map<std::pair<Term, std::size_t>, Combination> b_memo_;
  std::map<Term, PNormalForm> p_memo_;
};

/// Recomputes every step with a fresh reducer; returns the index of the first
/// mismatching step, or -1.
long replay(const ReductionTrace& trace, std::size_t param);

}  // namespace conezeta
