#pragma once

#include <optional>
#include <vector>

#include "conezeta/exact/rational.hpp"

namespace conezeta {

/// Dense row-major rational matrix. Small dimensions only (cones of
/// dimension <= 8 in practice), so no attempt at blocking.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_int_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalVector operator*(const RationalVector& v) const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Inverse of a square matrix; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
/// Some solution x of m x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);
/// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

}  // namespace conezeta
