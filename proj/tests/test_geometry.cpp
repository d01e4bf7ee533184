#include <random>
#include <set>

#include "conezeta/geometry/cone.hpp"
#include "doctest.h"

using namespace conezeta;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cone cone(std::size_t m, std::initializer_list<std::initializer_list<long>> gens) {
  Cone c{m, {}};
  for (auto g : gens) c.generators.push_back(iv(g));
  return c;
}

Rational form_at(const RationalVector& a, const IntVector& g) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * g[i];
  return s;
}

RationalVector random_point(std::mt19937_64& rng, std::size_t m, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  RationalVector x(m);
  for (auto& q : x) {
    q = Rational(d(rng), 1 + long(rng() % 7));
    q.canonicalize();
  }
  return x;
}

}  // namespace

TEST_CASE("triangulate examples") {
  auto q = triangulate(cone(2, {{1, 0}, {0, 1}}));
  REQUIRE(q.size() == 1);
  CHECK(q[0].generators == std::vector<IntVector>{iv({1, 0}), iv({0, 1})});

  auto sq = triangulate(cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
  CHECK(sq.size() == 2);

  auto red = triangulate(cone(2, {{1, 0}, {1, 1}, {0, 1}}));
  REQUIRE(red.size() == 1);
  CHECK(red[0].generators == std::vector<IntVector>{iv({1, 0}), iv({0, 1})});

  CHECK_THROWS(triangulate(cone(2, {{0, 0}})));
  CHECK_THROWS(triangulate(cone(1, {{1}, {-1}})));
}

TEST_CASE("square cone: membership agreement with explicit inequalities") {
  Cone c = cone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  auto pieces = open_simplicial_decomposition(c);
  REQUIRE(pieces.size() == 3);
  std::mt19937_64 rng(11);
  int inside = 0;
  for (int i = 0; i < 10000; ++i) {
    RationalVector x = random_point(rng, 3, 6);
    if (i % 5 == 0) x[1] = 0;  // hit the shared 2-face often
    bool oracle = abs(x[0]) + abs(x[1]) < x[2];
    int count = 0;
    for (const auto& p : pieces) count += in_relative_interior(p.cone, x) ? 1 : 0;
    CHECK(count <= 1);
    CHECK(oracle == (count == 1));
    CHECK(oracle == in_cone_interior(c, x));
    inside += oracle;
  }
  CHECK(inside > 100);
}

TEST_CASE("open decomposition small cases") {
  auto q = open_simplicial_decomposition(cone(2, {{1, 0}, {0, 1}}));
  REQUIRE(q.size() == 1);
  CHECK(q[0].lattice == Lattice::standard(2));
  auto r = open_simplicial_decomposition(cone(1, {{1}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].lattice == Lattice::standard(1));
  // a cone that is not full dimensional in Z^3
  auto f = open_simplicial_decomposition(cone(3, {{1, 0, 2}, {0, 1, 2}}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].lattice.rank() == 2);
  CHECK(f[0].lattice.contains(RationalVector{Rational(1), Rational(-1), Rational(0)}));
  CHECK(!f[0].lattice.contains(RationalVector{Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("random 2D cones: membership agreement") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  int tested = 0;
  while (tested < 20) {
    Cone c{2, {}};
    for (int k = 0; k < 3; ++k) c.generators.push_back(iv({d(rng), d(rng)}));
    bool bad = false;
    for (auto& g : c.generators) bad |= (g[0] == 0 && g[1] == 0);
    if (bad || cone_dimension(c) != 2 || contains_line(c)) continue;
    ++tested;
    auto pieces = open_simplicial_decomposition(c);
    for (int i = 0; i < 500; ++i) {
      RationalVector x = random_point(rng, 2, 5);
      if (i % 4 == 0) x = to_rational(c.generators[i % 3]);
      int count = 0;
      for (const auto& p : pieces) count += in_relative_interior(p.cone, x) ? 1 : 0;
      CHECK(count <= 1);
      CHECK(in_cone_interior(c, x) == (count == 1));
    }
  }
}

namespace {

void check_refinement(const Cone& c, const std::vector<RationalVector>& forms) {
  auto pieces = refine_definite(c, forms);
  REQUIRE(!pieces.empty());
  for (const auto& p : pieces) {
    for (const auto& a : forms) {
      bool pos = false, neg = false;
      for (const auto& g : p.cone.generators) {
        int s = sgn(form_at(a, g));
        pos |= s > 0;
        neg |= s < 0;
      }
      CHECK(!(pos && neg));
      bool nonzero = false;
      for (std::size_t i = 0; i < p.cone.dim(); ++i)
        if (i != p.apex && form_at(a, p.cone.generators[i]) != 0) nonzero = true;
      CHECK(nonzero);
    }
  }
  // disjoint interiors, and covering: every sampled interior point lies in some closed piece
  std::mt19937_64 rng(3);
  for (int i = 0; i < 400; ++i) {
    RationalVector x = random_point(rng, c.ambient_dim, 9);
    if (!in_cone_interior(c, x)) continue;
    int inside = 0, closed = 0;
    for (const auto& p : pieces) {
      inside += in_relative_interior(p.cone, x);
      Cone pc{c.ambient_dim, p.cone.generators};
      closed += in_closed_cone(pc, x);
    }
    CHECK(inside <= 1);
    CHECK(closed >= 1);
  }
}

}  // namespace

TEST_CASE("refine_definite examples") {
  RationalVector x1{Rational(1), Rational(0)}, x2{Rational(0), Rational(1)};
  auto a = refine_definite(cone(2, {{1, 0}, {0, 1}}), {x1, x2});
  CHECK(a.size() == 2);
  check_refinement(cone(2, {{1, 0}, {0, 1}}), {x1, x2});

  RationalVector s{Rational(1), Rational(1)};
  auto b = refine_definite(cone(2, {{1, 0}, {0, 1}}), {s});
  CHECK(b.size() == 1);

  RationalVector diff{Rational(1), Rational(-1)};
  auto c = refine_definite(cone(2, {{1, 0}, {1, 2}}), {diff});
  CHECK(c.size() == 2);
  check_refinement(cone(2, {{1, 0}, {1, 2}}), {diff});

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-2, 2);
  for (int it = 0; it < 15; ++it) {
    std::vector<RationalVector> forms;
    for (int k = 0; k < 3; ++k) {
      RationalVector f{Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
      if (!is_zero(f)) forms.push_back(f);
    }
    check_refinement(cone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), forms);
  }
}

TEST_CASE("standard coordinates") {
  auto e = standard_coordinates(Flag{{2, {iv({1, 0}), iv({0, 1})}}});
  CHECK(e == RationalMatrix::identity(2));
  auto p = standard_coordinates(Flag{{2, {iv({0, 1}), iv({1, 0})}}});
  CHECK(p(0, 1) == 1);
  CHECK(p(1, 0) == 1);
  auto g = standard_coordinates(Flag{{2, {iv({1, 0}), iv({1, 2})}}});
  // eta_k(g_j) = delta_kj
  CHECK(g(0, 0) + g(0, 1) * 0 == 1);
  CHECK(g(0, 0) * 1 + g(0, 1) * 2 == 0);
  CHECK(g(1, 0) * 1 + g(1, 1) * 2 == 1);
  // sampled points: inside iff eta >= 0
  Cone c = cone(2, {{1, 0}, {1, 2}});
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    RationalVector x = random_point(rng, 2, 5);
    RationalVector eta = g * x;
    CHECK(in_closed_cone(c, x) == (eta[0] >= 0 && eta[1] >= 0));
  }
}

TEST_CASE("dual faces, joins, regular faces") {
  SimplicialCone d{3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}};
  CHECK(dual_face(d, {0}) == FaceIndices{1, 2});
  CHECK(dual_face(d, {0, 1, 2}).empty());
  CHECK(dual_face(d, {}) == FaceIndices{0, 1, 2});
  for (const FaceIndices& f : {FaceIndices{0}, FaceIndices{1, 2}, FaceIndices{0, 2}})
    CHECK(dual_face(d, dual_face(d, f)) == f);
  CHECK(linear_join({iv({1, 0})}, {iv({0, 1})}) == std::vector<IntVector>{iv({1, 0}), iv({0, 1})});
  CHECK(linear_join({iv({1, 0})}, {}) == std::vector<IntVector>{iv({1, 0})});

  auto r3 = regular_faces(Flag{d});
  CHECK(r3.irregular == FaceIndices{0, 1});
  CHECK(r3.regular.size() == 4);
  for (const auto& f : r3.regular) CHECK(f.back() == 2);
  auto r1 = regular_faces(Flag{{1, {iv({1})}}});
  CHECK(r1.regular == std::vector<FaceIndices>{{0}});
  auto r2 = regular_faces(Flag{{2, {iv({1, 0}), iv({0, 1})}}});
  CHECK(r2.regular == std::vector<FaceIndices>{{0, 1}, {1}});
}

TEST_CASE("free_superlattice") {
  auto u = free_superlattice({2, {iv({1, 0}), iv({0, 1})}}, Lattice::standard(2));
  CHECK(u.scale == 1);
  CHECK(u.lattice == Lattice::standard(2));

  auto s = free_superlattice({2, {iv({1, 0}), iv({1, 2})}}, Lattice::standard(2));
  CHECK(s.scale == 2);
  CHECK(s.lattice.contains(Lattice::standard(2)));
  CHECK(s.lattice.index_of(Lattice::standard(2)) == 2);
  // every lattice point of the closed cone in a box is a unique N-combination of generators
  for (long a = 0; a <= 12; ++a)
    for (long b = 0; b <= 12; ++b) {
      RationalVector x{Rational(a, 2), Rational(b, 2)};
      x[0].canonicalize();
      x[1].canonicalize();
      if (!s.lattice.contains(x)) continue;
      Cone c = cone(2, {{1, 0}, {1, 2}});
      if (!in_closed_cone(c, x)) continue;
      auto co = s.lattice.coords(x);
      REQUIRE(co);
      CHECK((*co)[0] >= 0);
      CHECK((*co)[1] >= 0);
    }

  Lattice l(2, {{Rational(3), Rational(1)}});
  auto one = free_superlattice({2, {iv({3, 1})}}, l);
  CHECK(one.scale == 1);
  CHECK(one.lattice == l);
}
