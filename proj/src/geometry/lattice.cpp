#include "conezeta/geometry/lattice.hpp"

#include <stdexcept>

#include "conezeta/exact/smith.hpp"

namespace conezeta {

Lattice::Lattice(std::size_t ambient_dim, std::vector<RationalVector> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)), basis_t_(ambient_dim, basis_.size()) {
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (basis_[j].size() != ambient_) throw std::invalid_argument("Lattice: basis vector of wrong length");
    for (std::size_t i = 0; i < ambient_; ++i) basis_t_(i, j) = basis_[j][i];
  }
  if (conezeta::rank(basis_t_) != basis_.size()) throw std::invalid_argument("Lattice: dependent basis");
}

Lattice Lattice::standard(std::size_t m) {
  std::vector<RationalVector> b(m, RationalVector(m));
  for (std::size_t i = 0; i < m; ++i) b[i][i] = 1;
  return {m, std::move(b)};
}

std::optional<RationalVector> Lattice::rational_coords(const RationalVector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("Lattice: point of wrong dimension");
  auto sol = solve(basis_t_, x);
  if (!sol) return std::nullopt;
  return sol;
}

std::optional<IntVector> Lattice::coords(const RationalVector& x) const {
  auto rc = rational_coords(x);
  if (!rc) return std::nullopt;
  IntVector out(rc->size());
  for (std::size_t i = 0; i < rc->size(); ++i) {
    if ((*rc)[i].get_den() != 1) return std::nullopt;
    out[i] = (*rc)[i].get_num();
  }
  return out;
}

bool Lattice::contains(const Lattice& sub) const {
  for (const auto& b : sub.basis_)
    if (!contains(b)) return false;
  return true;
}

Integer Lattice::index_of(const Lattice& sub) const {
  if (sub.rank() != rank()) throw std::invalid_argument("index_of: ranks differ");
  RationalMatrix m(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    auto c = coords(sub.basis_[i]);
    if (!c) throw std::invalid_argument("index_of: not a sublattice");
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) = (*c)[j];
  }
  Rational d = determinant(m);
  if (d == 0) throw std::invalid_argument("index_of: infinite index");
  return abs(d.get_num());
}

RationalVector Lattice::point(const IntVector& c) const {
  RationalVector x(ambient_);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < ambient_; ++i) x[i] += basis_[j][i] * c[j];
  return x;
}

bool Lattice::operator==(const Lattice& other) const {
  return ambient_ == other.ambient_ && rank() == other.rank() && contains(other) && other.contains(*this);
}

Lattice saturated_lattice(std::size_t m, const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return {m, {}};
  SmithForm snf = smith_normal_form(vectors);
  std::vector<RationalVector> basis;
  for (std::size_t i = 0; i < snf.rank; ++i) basis.push_back(to_rational(snf.V_inv[i]));
  return {m, std::move(basis)};
}

}  // namespace conezeta
