#pragma once

#include <optional>
#include <vector>

#include "conezeta/exact/linalg.hpp"
#include "conezeta/exact/rational.hpp"

namespace conezeta {

/// Lattice of rank r inside Q^m given by r linearly independent rational
/// basis vectors (rows). Full rank when r = m.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient_dim, std::vector<RationalVector> basis);
  static Lattice standard(std::size_t m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RationalVector>& basis() const { return basis_; }

  /// Rational coordinates w.r.t. the basis, nullopt when x is outside the span.
  std::optional<RationalVector> rational_coords(const RationalVector& x) const;
  /// Integer coordinates, nullopt when x is not a lattice point.
  std::optional<IntVector> coords(const RationalVector& x) const;
  bool contains(const RationalVector& x) const { return coords(x).has_value(); }
  bool contains(const Lattice& sub) const;
  /// [this : sub] for a sublattice of equal rank.
  Integer index_of(const Lattice& sub) const;
  RationalVector point(const IntVector& c) const;

  bool operator==(const Lattice& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<RationalVector> basis_;
  RationalMatrix basis_t_;  // columns are basis vectors
};

/// span_R(vectors) ∩ Z^m, vectors integral.
Lattice saturated_lattice(std::size_t m, const std::vector<IntVector>& vectors);

}  // namespace conezeta
