#pragma once

#include <vector>

#include "conezeta/exact/rational.hpp"

namespace conezeta {

using IntMatrix = std::vector<IntVector>;  // row-major

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... ,
/// all d_i >= 0. V_inv is V^{-1}.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inv;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix int_identity(std::size_t n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace conezeta
