#include <complex>
#include <random>

#include "conezeta/exact/character.hpp"
#include "conezeta/exact/cyclo.hpp"
#include "conezeta/exact/linalg.hpp"
#include "conezeta/exact/rational.hpp"
#include "conezeta/exact/root_of_unity.hpp"
#include "conezeta/exact/smith.hpp"
#include "doctest.h"

using namespace conezeta;

namespace {

std::complex<double> zeta(long n, long k) { return std::polar(1.0, 2.0 * M_PI * double(k) / double(n)); }

CycloNumber random_cyclo(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Rational> p(static_cast<std::size_t>(n));
  for (auto& c : p) c = Rational(coef(rng), 1 + (rng() % 4));
  for (auto& c : p) c.canonicalize();
  return {n, p};
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("root_mul") {
  CHECK(root_mul({4, 1}, {4, 1}) == RootOfUnity(2, 1));
  CHECK(root_mul({3, 1}, {3, 2}).is_one());
  CHECK(root_mul({2, 1}, {3, 1}) == RootOfUnity(6, 5));
  CHECK(RootOfUnity(6, 3) == RootOfUnity::minus_one());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("cyclo arithmetic examples") {
  CycloNumber z4 = RootOfUnity(4, 1);
  CHECK((CycloNumber(1) + z4) * (CycloNumber(1) - z4) == CycloNumber(2));

  CycloNumber z3 = RootOfUnity(3, 1);
  CycloNumber z3sq = RootOfUnity(3, 2);
  CycloNumber inv = (CycloNumber(1) - z3).inverse();
  // oracle: (1 - z)(1 - z^2) = 3 evaluated in C
  auto prod = (1.0 - zeta(3, 1)) * (1.0 - zeta(3, 2));
  CHECK(std::abs(prod - 3.0) < 1e-12);
  CHECK(inv == (CycloNumber(1) - z3sq) * CycloNumber(Rational(1, 3)));
  CHECK(std::abs(inv.to_complex() - 1.0 / (1.0 - zeta(3, 1))) < 1e-12);

  CycloNumber m1 = RootOfUnity(2, 1);
  CycloNumber z6c = CycloNumber(RootOfUnity(6, 3));
  CHECK(m1.embed(6) == z6c);
  CHECK(cyclo_arith(CycloOp::Eq, m1, z6c) == CycloNumber(1));
  CHECK_THROWS(CycloNumber(0).inverse());
}

TEST_CASE("cyclo field axioms on random inputs") {
  std::mt19937_64 rng(7);
  const std::int64_t mods[] = {1, 2, 3, 4, 5, 6, 8, 12};
  for (int iter = 0; iter < 60; ++iter) {
    auto a = random_cyclo(rng, mods[rng() % 8]);
    auto b = random_cyclo(rng, mods[rng() % 8]);
    auto c = random_cyclo(rng, mods[rng() % 8]);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
    auto diff = (a * b).to_complex() - a.to_complex() * b.to_complex();
    CHECK(std::abs(diff) < 1e-9);
    // embedding compatibility
    CHECK(a.embed(2 * a.modulus()) * b == a * b);
    CHECK(a.embed(3 * a.modulus()) + b == a + b);
    CHECK(a.reduced() == a);
  }
}

TEST_CASE("galois and reduction") {
  CycloNumber z8 = RootOfUnity(8, 1);
  CycloNumber s = z8 + z8.galois(7);  // sqrt(2)
  CHECK(s * s == CycloNumber(2));
  CHECK(s.reduced().modulus() == 8);
  CycloNumber i = z8 * z8;
  CHECK(i.reduced().modulus() == 4);
}

TEST_CASE("character_eval") {
  Lattice z1 = Lattice::standard(1);
  Lattice z2 = Lattice::standard(2);
  CHECK(character_eval(LatticeCharacter::trivial(z2), {Rational(5), Rational(-3)}).is_one());
  CHECK(character_eval(LatticeCharacter(z1, 2, {1}), {Rational(3)}) == RootOfUnity::minus_one());
  CHECK(character_eval(LatticeCharacter(z2, 3, {1, 2}), {Rational(2), Rational(2)}).is_one());
  CHECK_THROWS(character_eval(LatticeCharacter(z1, 2, {1}), {Rational(1, 2)}));
}

namespace {

// Brute-force check of both sum identities on points of `big` with small coordinates.
void check_induced(const Lattice& big, const LatticeCharacter& chi, long kappa) {
  auto parts = induced_character_decompose(big, chi);
  REQUIRE(parts.size() == static_cast<std::size_t>(kappa));
  const std::size_t r = big.rank();
  std::vector<long> c(r, -3);
  for (;;) {
    IntVector ci(r);
    for (std::size_t i = 0; i < r; ++i) ci[i] = c[i];
    RationalVector x = big.point(ci);
    std::complex<double> sum = 0;
    for (const auto& p : parts) sum += p(x).to_complex();
    if (chi.lattice().contains(x)) {
      CHECK(std::abs(sum - double(kappa) * chi(x).to_complex()) < 1e-9);
    } else {
      CHECK(std::abs(sum) < 1e-9);
    }
    std::size_t k = 0;
    while (k < r && ++c[k] == 4) c[k++] = -3;
    if (k == r) break;
  }
}

}  // namespace

TEST_CASE("induced_character_decompose") {
  Lattice z1 = Lattice::standard(1);
  auto same = induced_character_decompose(z1, LatticeCharacter(z1, 2, {1}));
  REQUIRE(same.size() == 1);
  CHECK(same[0](RationalVector{Rational(1)}) == RootOfUnity::minus_one());

  Lattice half(1, {{Rational(1, 2)}});
  auto two = induced_character_decompose(half, LatticeCharacter::trivial(z1));
  REQUIRE(two.size() == 2);
  CycloNumber s = CycloNumber(two[0](RationalVector{Rational(1, 2)})) + CycloNumber(two[1](RationalVector{Rational(1, 2)}));
  CHECK(s.is_zero());

  Lattice third(1, {{Rational(1, 3)}});
  check_induced(third, LatticeCharacter::trivial(z1), 3);
  check_induced(third, LatticeCharacter(z1, 2, {1}), 3);

  Lattice z2 = Lattice::standard(2);
  Lattice skew(2, {{Rational(1, 2), Rational(0)}, {Rational(1, 2), Rational(1)}});
  check_induced(skew, LatticeCharacter(z2, 3, {1, 2}), 2);
  Lattice fine(2, {{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(1, 3)}});
  check_induced(fine, LatticeCharacter(z2, 2, {1, 0}), 6);
}

TEST_CASE("nth_roots") {
  auto r = nth_roots(RootOfUnity::one(), 2);
  CHECK(r == std::vector<RootOfUnity>{RootOfUnity::one(), RootOfUnity::minus_one()});
  auto q = nth_roots(RootOfUnity::minus_one(), 2);
  CHECK(q == std::vector<RootOfUnity>{RootOfUnity(4, 1), RootOfUnity(4, 3)});
  auto c = nth_roots(RootOfUnity(3, 1), 3);
  REQUIRE(c.size() == 3);
  CHECK(c == std::vector<RootOfUnity>{RootOfUnity(9, 1), RootOfUnity(9, 4), RootOfUnity(9, 7)});
  for (const auto& b : c) CHECK(std::abs(std::pow(b.to_complex(), 3) - zeta(3, 1)) < 1e-12);
  for (long n = 1; n <= 6; ++n)
    for (long k = 0; k < 6; ++k) {
      RootOfUnity e(6, k);
      auto roots = nth_roots(e, n);
      CHECK(roots.size() == static_cast<std::size_t>(n));
      for (const auto& b : roots) CHECK(b.pow(n) == e);
    }
}

TEST_CASE("smith normal form") {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(a);
  CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
  auto d = int_mul(int_mul(s.U, a), s.V);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(d[i][j] == (i == j ? s.diagonal[i] : Integer(0)));
  auto id = int_mul(s.V, s.V_inv);
  CHECK(id == int_identity(3));
}
