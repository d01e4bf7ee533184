#pragma once

#include <map>
#include <utility>

#include "conezeta/polylog/pnormal.hpp"
#include "conezeta/polylog/word.hpp"

namespace conezeta {

/// Shuffle-regularized value at 1 (omega_1 -> 0) as a combination of words
/// not starting with omega_1.
const WordCombination& regularized_word(const Word& w);

/// ZExpression of a combination of words convergent at 1. The empty symbol is 1.
ZExpression words_to_zexpression(const WordCombination& c);

/// Expansion of w(1 - s) as sum over (j, i) of C_{j,i} s^j (log s)^i, j <= max_order.
using WordExpansion = std::map<std::pair<int, int>, WordCombination>;
WordExpansion expand_at_one(const Word& w, int max_order);

struct RegularizedExpansion {
  ZExpression finite;
  /// Coefficients of s^j (log s)^i with j < 0, or j = 0 and i > 0 (s = 1 - y).
  std::map<std::pair<int, int>, ZExpression> divergent;
};

/// lim_{y -> 1} f(y) term by term; divergent parts are returned, not checked.
RegularizedExpansion regularize_limit(const PNormalForm& f);

}  // namespace conezeta
