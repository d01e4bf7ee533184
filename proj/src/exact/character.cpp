#include "conezeta/exact/character.hpp"

#include <stdexcept>

#include "conezeta/exact/smith.hpp"

namespace conezeta {

namespace {

std::int64_t reduce_exponent(const Integer& v, std::int64_t n) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  return to_int64(r);
}

}  // namespace

LatticeCharacter::LatticeCharacter(Lattice lattice, std::int64_t modulus, std::vector<std::int64_t> exponents)
    : lattice_(std::move(lattice)), modulus_(modulus), exponents_(std::move(exponents)) {
  if (modulus_ < 1) throw std::invalid_argument("LatticeCharacter: modulus must be >= 1");
  if (exponents_.size() != lattice_.rank()) throw std::invalid_argument("LatticeCharacter: exponent vector length != lattice rank");
  for (auto& e : exponents_) e = mod64(e, modulus_);
}

LatticeCharacter LatticeCharacter::trivial(const Lattice& lattice) {
  return {lattice, 1, std::vector<std::int64_t>(lattice.rank(), 0)};
}

bool LatticeCharacter::is_trivial() const {
  for (auto e : exponents_)
    if (e != 0) return false;
  return true;
}

RootOfUnity LatticeCharacter::on_coords(const IntVector& c) const {
  Integer acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * exponents_[i];
  return {modulus_, reduce_exponent(acc, modulus_)};
}

RootOfUnity LatticeCharacter::operator()(const RationalVector& x) const {
  auto c = lattice_.coords(x);
  if (!c) throw std::invalid_argument("character_eval: point not in the character's lattice");
  return on_coords(*c);
}

LatticeCharacter LatticeCharacter::restrict_to(const Lattice& sub) const {
  std::vector<std::int64_t> ex;
  for (const auto& b : sub.basis()) {
    auto c = lattice_.coords(b);
    if (!c) throw std::invalid_argument("restrict_to: not a sublattice");
    Integer acc = 0;
    for (std::size_t i = 0; i < c->size(); ++i) acc += (*c)[i] * exponents_[i];
    ex.push_back(reduce_exponent(acc, modulus_));
  }
  return {sub, modulus_, std::move(ex)};
}

RootOfUnity character_eval(const LatticeCharacter& chi, const RationalVector& x) { return chi(x); }

std::vector<LatticeCharacter> induced_character_decompose(const Lattice& big, const LatticeCharacter& chi) {
  const Lattice& small = chi.lattice();
  if (big.rank() != small.rank() || big.ambient_dim() != small.ambient_dim())
    throw std::invalid_argument("induced_character_decompose: lattices of different rank");
  const std::size_t r = big.rank();
  IntMatrix m;
  for (const auto& b : small.basis()) {
    auto c = big.coords(b);
    if (!c) throw std::invalid_argument("induced_character_decompose: lattice does not contain the character's lattice");
    m.push_back(*c);
  }
  if (r == 0) return {chi};
  SmithForm snf = smith_normal_form(m);
  if (snf.rank != r) throw std::invalid_argument("induced_character_decompose: infinite index");

  const std::int64_t n = chi.modulus();
  // (U c)_k
  std::vector<Integer> uc(r, 0);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < r; ++i) uc[k] += snf.U[k][i] * chi.exponents()[i];

  std::vector<std::int64_t> d(r);
  for (std::size_t k = 0; k < r; ++k) d[k] = to_int64(snf.diagonal[k]);

  std::vector<LatticeCharacter> out;
  std::vector<std::int64_t> j(r, 0);
  for (;;) {
    // t' = (uc + j n) / (n d), t = V t'
    RationalVector tp(r);
    for (std::size_t k = 0; k < r; ++k) {
      tp[k] = Rational(uc[k] + Integer(j[k]) * n, Integer(n) * d[k]);
      tp[k].canonicalize();
    }
    RationalVector t(r);
    Integer den = 1;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) t[i] += snf.V[i][k] * tp[k];
      t[i].canonicalize();
      den = lcm(den, t[i].get_den());
    }
    const std::int64_t nn = to_int64(den);
    std::vector<std::int64_t> ex(r);
    for (std::size_t i = 0; i < r; ++i) {
      Rational scaled = t[i] * den;
      ex[i] = reduce_exponent(scaled.get_num(), nn);
    }
    out.emplace_back(big, nn, std::move(ex));

    std::size_t k = 0;
    while (k < r && ++j[k] == d[k]) j[k++] = 0;
    if (k == r) break;
  }
  return out;
}

}  // namespace conezeta
