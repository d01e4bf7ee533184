#include "conezeta/exact/smith.hpp"

#include <stdexcept>

namespace conezeta {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("int_mul: shape mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

namespace {

struct Work {
  IntMatrix a, u, v, vinv;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
    std::swap(vinv[i], vinv[j]);
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] += f * u[j][c];
  }
  // col_i += f * col_j ; V_inv gets row_j -= f * row_i
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] += f * v[r][j];
    for (std::size_t c = 0; c < cols; ++c) vinv[j][c] -= f * vinv[i][c];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  Work w;
  w.rows = input.size();
  w.cols = w.rows ? input[0].size() : 0;
  for (const auto& r : input)
    if (r.size() != w.cols) throw std::invalid_argument("smith_normal_form: ragged matrix");
  w.a = input;
  w.u = int_identity(w.rows);
  w.v = int_identity(w.cols);
  w.vinv = int_identity(w.cols);

  const std::size_t n = std::min(w.rows, w.cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block
      std::size_t pr = w.rows, pc = w.cols;
      for (std::size_t r = t; r < w.rows; ++r)
        for (std::size_t c = t; c < w.cols; ++c)
          if (w.a[r][c] != 0 && (pr == w.rows || abs(w.a[r][c]) < abs(w.a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == w.rows) goto done;
      if (pr != t) w.swap_rows(pr, t);
      if (pc != t) w.swap_cols(pc, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < w.rows; ++r) {
        if (w.a[r][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.a[r][t].get_mpz_t(), w.a[t][t].get_mpz_t());
        w.add_row(r, t, -q);
        if (w.a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < w.cols; ++c) {
        if (w.a[t][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), w.a[t][c].get_mpz_t(), w.a[t][t].get_mpz_t());
        w.add_col(c, t, -q);
        if (w.a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and retry
      bool divisible = true;
      for (std::size_t r = t + 1; r < w.rows && divisible; ++r)
        for (std::size_t c = t + 1; c < w.cols; ++c)
          if (w.a[r][c] % w.a[t][t] != 0) {
            w.add_row(t, r, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (w.a[t][t] < 0) w.negate_row(t);
  }
done:
  SmithForm out;
  out.rank = t;
  out.diagonal.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = w.a[i][i];
  out.U = std::move(w.u);
  out.V = std::move(w.v);
  out.V_inv = std::move(w.vinv);
  return out;
}

}  // namespace conezeta
