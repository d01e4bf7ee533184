#pragma once

#include <cstdint>
#include <vector>

#include "conezeta/exact/rational.hpp"
#include "conezeta/exact/root_of_unity.hpp"
#include "conezeta/geometry/lattice.hpp"

namespace conezeta {

/// chi(x) = zeta_N^{<c, coords(x)>} where coords are taken in the lattice basis.
class LatticeCharacter {
 public:
  LatticeCharacter() = default;
  LatticeCharacter(Lattice lattice, std::int64_t modulus, std::vector<std::int64_t> exponents);
  static LatticeCharacter trivial(const Lattice& lattice);

  const Lattice& lattice() const { return lattice_; }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }
  bool is_trivial() const;

  /// Throws std::invalid_argument when x is not in the lattice.
  RootOfUnity operator()(const RationalVector& x) const;
  /// Value on the lattice point with basis coordinates c.
  RootOfUnity on_coords(const IntVector& c) const;
  /// Restriction to a sublattice; exponents re-expressed in its basis.
  LatticeCharacter restrict_to(const Lattice& sub) const;

 private:
  Lattice lattice_;
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> exponents_;
};

RootOfUnity character_eval(const LatticeCharacter& chi, const RationalVector& x);

/// The kappa = [big : chi.lattice()] characters of `big` extending chi. For
/// x in chi's lattice their sum is kappa * chi(x); for other points of `big`
/// it vanishes.
std::vector<LatticeCharacter> induced_character_decompose(const Lattice& big, const LatticeCharacter& chi);

}  // namespace conezeta
