#include <random>
#include <set>

#include "conezeta/derivation/derived.hpp"
#include "doctest.h"
#include "properties.hpp"

using namespace conezeta;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector rv(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Cone orthant(std::size_t n) {
  Cone c{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    c.generators.push_back(e);
  }
  return c;
}

void check_partition(const Cone& c, const std::vector<DerivedSequence>& ds, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  for (int i = 0; i < 300; ++i) {
    RationalVector x(c.ambient_dim);
    for (auto& q : x) q = Rational(d(rng));
    if (!in_cone_interior(c, x)) continue;
    int open = 0, closed = 0;
    for (const auto& s : ds) {
      open += in_relative_interior(s.cone, x);
      closed += in_closed_cone(Cone{c.ambient_dim, s.cone.generators}, x);
    }
    CHECK(open <= 1);
    CHECK(closed >= 1);
  }
}

}  // namespace

TEST_CASE("derived_set examples") {
  // values on generators (e1, e2) of R+^2, facet opposite e1
  CHECK(derived_set({rv({0, 1}), rv({1, 1})}, 0) == std::vector<IntVector>{iv({1})});
  CHECK(derived_set({rv({1, 1}), rv({2, 1})}, 0) == std::vector<IntVector>{iv({1})});
  auto three = derived_set({rv({1, 1, 0}), rv({1, 0, 1})}, 0);
  std::set<IntVector> got(three.begin(), three.end());
  CHECK(got == std::set<IntVector>{iv({1, 0}), iv({0, 1}), iv({1, -1})});
  CHECK_THROWS(derived_set({rv({1, 0})}, 0));
}

TEST_CASE("build_derived_sequences small cases") {
  auto one = build_derived_sequences(orthant(1), {rv({1})});
  REQUIRE(one.size() == 1);
  CHECK(one[0].levels == std::vector<std::vector<IntVector>>{{iv({1})}});

  Cone q = orthant(2);
  auto two = build_derived_sequences(q, {rv({1, 0}), rv({0, 1}), rv({1, 1})});
  CHECK(!two.empty());
  std::mt19937_64 rng(2);
  for (const auto& d : two) {
    auto v = validate(d);
    CHECK_MESSAGE(v.ok, v.message);
    CHECK(has_standard_sign_pattern(d));
  }
  check_partition(q, two, rng);
}

TEST_CASE("P2: random derived sequences validate") {
  auto o = props::p2_derived_sequences(50, 2024);
  CHECK_MESSAGE(o.ok(), o.summary());
  CHECK(o.instances == 50);
}

TEST_CASE("primitive_rescale examples") {
  DerivedSequence id{{2, {iv({1, 0}), iv({0, 1})}}, {{iv({1, 1})}, {iv({1})}}};
  auto r = primitive_rescale(id);
  CHECK(r.scale == std::vector<Integer>{1, 1});

  DerivedSequence half{{2, {iv({1, 0}), iv({0, 1})}}, {{iv({2, 1})}, {iv({1})}}};  // eta1 + eta2/2
  auto h = primitive_rescale(half);
  CHECK(h.scale == std::vector<Integer>{1, 2});
  CHECK(variable_part(h.sequence, 0) == std::vector<IntVector>{iv({1, 1})});

  DerivedSequence two{{2, {iv({1, 0}), iv({0, 1})}}, {{iv({2, 1}), iv({3, 1})}, {iv({1})}}};
  CHECK(primitive_rescale(two).scale == std::vector<Integer>{1, 6});
}

TEST_CASE("variable_part and restriction") {
  DerivedSequence d{{2, {iv({1, 0}), iv({0, 1})}}, {{iv({0, 1}), iv({1, 1})}, {iv({1})}}};
  CHECK(variable_part(d, 0) == std::vector<IntVector>{iv({1, 1})});
  DerivedSequence e{{2, {iv({1, 0}), iv({0, 1})}}, {{iv({0, 1})}, {iv({1})}}};
  CHECK(variable_part(e, 0).empty());
  CHECK(variable_part(d, 1) == std::vector<IntVector>{iv({1})});

  CHECK(restrict_derived(d, {0, 1}).levels == d.levels);
  CHECK_THROWS(restrict_derived(d, {0}));

  auto ds = build_derived_sequences(orthant(3), {rv({1, 1, 0}), rv({1, 0, 1}), rv({0, 1, 2})});
  for (const auto& s : ds) {
    auto twice = restrict_derived(restrict_derived(s, {0, 2}), {1});
    auto once = restrict_derived(s, {2});
    CHECK(twice.levels == once.levels);
    CHECK(twice.cone.generators == once.cone.generators);
  }
}
