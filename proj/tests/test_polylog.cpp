#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "conezeta/polylog/pnormal.hpp"
#include "conezeta/polylog/regularize.hpp"
#include "conezeta/polylog/word.hpp"
#include "conezeta/polylog/word_numeric.hpp"
#include "doctest.h"
#include "properties.hpp"

using namespace conezeta;
using cd = std::complex<double>;

namespace {

const double kPi = 3.14159265358979323846;
const double kZeta3 = 1.2020569031595942854;

Letter w0() { return Letter::omega0(); }
Letter w1() { return Letter::omega(RootOfUnity::one()); }
Letter wm() { return Letter::omega(RootOfUnity::minus_one()); }

using props::words_mu2;

// nested-sum oracle b_1 < b_2 < ... with roots^(b_j - b_{j-1}), partial sums up to n
cd nested_sum(const MZVSymbol& s, long n) {
  const std::size_t m = s.k.size();
  std::vector<cd> r(m);
  for (std::size_t j = 0; j < m; ++j) r[j] = s.roots[j].to_complex();
  // T_j(b) = sum over chains ending at b of the j-fold product, built by prefix sums
  std::vector<cd> prefix(m, 0.0);  // sum_{b' < b} T_j(b') * r_{j+1}^{-b'}
  std::vector<cd> rpow(m, 1.0);    // r_j^b
  cd total = 0;
  for (long b = 1; b <= n; ++b) {
    for (std::size_t j = 0; j < m; ++j) rpow[j] *= r[j];
    std::vector<cd> t(m);
    for (std::size_t j = 0; j < m; ++j) {
      cd inner = j == 0 ? cd(1) : prefix[j - 1];
      t[j] = inner * rpow[j] / std::pow(double(b), s.k[j]);
    }
    total += t[m - 1];
    for (std::size_t j = 0; j + 1 < m; ++j) prefix[j] += t[j] / rpow[j + 1];
  }
  return total;
}

cd symbol_value(const MZVSymbol& s) {
  if (s.k.empty()) return 1.0;
  Word w = word_from_blocks({s.k.rbegin(), s.k.rend()}, {s.roots.rbegin(), s.roots.rend()});
  cd v = word_value<double>(w, 1.0);
  for (const auto& r : s.roots) v *= r.to_complex();
  return v;
}

cd zexpr_value(const ZExpression& z) {
  cd t = 0;
  for (const auto& [s, c] : z) t += c.to_complex() * symbol_value(s);
  return t;
}

}  // namespace

TEST_CASE("shuffle") {
  auto s = shuffle({w1()}, {w0()});
  CHECK(s.size() == 2);
  CHECK(s[Word{w1(), w0()}] == 1);
  CHECK(s[Word{w0(), w1()}] == 1);
  CHECK(shuffle({w0(), w1()}, {}) == std::map<Word, long>{{Word{w0(), w1()}, 1}});
  auto t = shuffle({w0(), w1()}, {w1()});
  long total = 0;
  for (auto& [w, c] : t) total += c;
  CHECK(t.size() == 2);  // w1 w0 w1 once, w0 w1 w1 twice
  CHECK(total == 3);
  auto big = shuffle({w0(), w1(), wm()}, {wm(), w0()});
  total = 0;
  for (auto& [w, c] : big) total += c;
  CHECK(total == 10);
}

TEST_CASE("word values") {
  CHECK(std::abs(word_value_series({w1()}, 0.5, 1e-14) - std::log(2.0)) < 1e-12);
  CHECK(word_value_series({}, 0.3, 1e-12) == cd(1));
  CHECK(std::abs(word_value<double>({w0(), w1()}, 1.0) - kPi * kPi / 6) < 1e-13);
  CHECK(std::abs(word_value<double>({w0(), w0(), w1()}, 1.0) - kZeta3) < 1e-13);
  CHECK(std::abs(word_value<double>({w0(), w1(), w1()}, 1.0) - kZeta3) < 1e-13);
  CHECK(std::abs(word_value<double>({w0(), wm()}, 1.0) - kPi * kPi / 12) < 1e-13);
  CHECK_THROWS(word_value<double>({w1(), w0(), w1()}, 1.0));
  CHECK_THROWS(word_value<double>({w1(), w0()}, 0.5));

  // path splitting against the direct series, including third roots
  std::mt19937_64 rng(4);
  std::vector<Letter> alphabet{w0(), w1(), wm(), Letter::omega({3, 1}), Letter::omega({3, 2}), Letter::omega({4, 1})};
  for (int it = 0; it < 60; ++it) {
    Word w;
    std::size_t len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
    if (w.back().zero) w.back() = wm();
    for (double y : {0.2, 0.55, 0.8, 0.93}) {
      cd a = word_value<double>(w, y), b = word_value_series(w, y, 1e-15);
      CHECK_MESSAGE(std::abs(a - b) < 1e-11, to_string(w), " y=", y);
    }
  }
}

TEST_CASE("mzv_symbol_from_word dictionary") {
  auto z2 = mzv_symbol_from_word({w0(), w1()});
  CHECK(z2.symbol.k == std::vector<int>{2});
  CHECK(z2.coefficient == CycloNumber(1));
  auto z12 = mzv_symbol_from_word({w0(), w1(), w1()});
  CHECK(z12.symbol.k == std::vector<int>{1, 2});
  auto z3 = mzv_symbol_from_word({w0(), w0(), w1()});
  CHECK(z3.symbol.k == std::vector<int>{3});
  auto alt = mzv_symbol_from_word({w0(), wm()});
  CHECK(alt.symbol.modulus() == 2);
  CHECK(alt.coefficient == CycloNumber(-1));
  CHECK(std::abs(nested_sum(alt.symbol, 200000) + kPi * kPi / 12) < 1e-8);
  CHECK_THROWS(mzv_symbol_from_word({w1(), w0(), w1()}));
  CHECK_THROWS(mzv_symbol_from_word({w0(), w0()}));

  // word value at 1 equals coefficient times the nested series, for every convergent word of weight <= 3
  for (const auto& w : words_mu2(3)) {
    if (w.front().is_omega1()) continue;
    auto t = mzv_symbol_from_word(w);
    CHECK(t.symbol.convergent());
    cd series = nested_sum(t.symbol, 400000);
    cd val = word_value<double>(w, 1.0);
    CHECK_MESSAGE(std::abs(t.coefficient.to_complex() * series - val) < 2e-4, to_string(w));
  }
}

TEST_CASE("P4: shuffle homomorphism on weight <= 3 words over mu_2") {
  auto o = props::p4_shuffle(1e-7);
  CHECK_MESSAGE(o.ok(), o.summary());
  CHECK(o.instances > 700);
}

TEST_CASE("pole products") {
  RootOfUnity one, m1 = RootOfUnity::minus_one();
  auto p = pole_product(Pole::make(one, 2), Pole::make(m1, 1));
  for (double y : {0.1, 0.4, -0.7}) {
    cd lhs = 1.0 / ((1 - y) * (1 - y) * (1 + y));
    cd rhs = 0;
    for (auto& [q, c] : p) rhs += c.to_complex() / std::pow(1.0 - q.root.to_complex() * y, q.order);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
  CHECK(pole_product(Pole::make(one, 1), Pole::make(one, 2)) == PoleCombination{{Pole::make(one, 3), CycloNumber(1)}});
}

TEST_CASE("integrate_P") {
  RootOfUnity one, m1 = RootOfUnity::minus_one();
  auto a = integrate_P(PNormalForm::constant(1), Kernel::pole(one, 1));
  CHECK(a == PNormalForm::single(Pole::none(), {w1()}));
  auto b = integrate_P(PNormalForm::single(Pole::none(), {wm()}), Kernel::dt_over_t());
  CHECK(b == PNormalForm::single(Pole::none(), {w0(), wm()}));
  CHECK_THROWS_AS(integrate_P(PNormalForm::constant(1), Kernel::dt_over_t()), std::domain_error);

  // int_0^y dt/(1-t)^2 w_e(t) at y = 1/2 against Simpson quadrature
  for (const auto& e : {one, m1, RootOfUnity(3, 1)}) {
    auto f = integrate_P(PNormalForm::single(Pole::none(), {Letter::omega(e)}), Kernel::pole(one, 2));
    bool has_pole = false;
    for (auto& [k, c] : f.terms()) has_pole |= k.first.order == 1;
    CHECK(has_pole);
    const int n = 2000;
    cd s = 0;
    for (int i = 0; i <= n; ++i) {
      double t = 0.5 * i / n;
      cd g = -std::log(1.0 - e.to_complex() * t) / e.to_complex();
      cd v = g / ((1 - t) * (1 - t));
      s += v * double(i == 0 || i == n ? 1 : (i % 2 ? 4 : 2));
    }
    s *= 0.5 / n / 3;
    CHECK(std::abs(evaluate<double>(f, 0.5) - s) < 1e-8);
  }

  // random inputs: derivative of the output matches kernel times input
  std::mt19937_64 rng(17);
  std::vector<RootOfUnity> roots{one, m1, RootOfUnity(3, 1), RootOfUnity(4, 3)};
  std::vector<Letter> alphabet{w0(), w1(), wm(), Letter::omega({3, 2})};
  for (int it = 0; it < 100; ++it) {
    bool dt = rng() % 2;
    PNormalForm f;
    for (int t = 0; t < 3; ++t) {
      Word w;
      std::size_t len = (dt ? 1 : 0) + rng() % 3;
      for (std::size_t i = 0; i < len; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
      if (!w.empty() && w.back().zero) w.back() = w1();
      f.add(Pole::make(roots[rng() % roots.size()], int(rng() % 3)), w, CycloNumber(long(rng() % 5) - 2));
    }
    Kernel k = dt ? Kernel::dt_over_t() : Kernel::pole(roots[rng() % roots.size()], 1 + int(rng() % 3));
    auto g = integrate_P(f, k);
    for (double y : {0.3, 0.6}) {
      const double h = 1e-5;
      cd d = (evaluate<double>(g, y + h) - evaluate<double>(g, y - h)) / (2 * h);
      cd kern = k.zero ? cd(1 / y) : std::pow(1.0 - k.root.to_complex() * y, -k.nu);
      cd expect = kern * evaluate<double>(f, y);
      CHECK(std::abs(d - expect) < 1e-4 * std::max(1.0, std::abs(expect)));
    }
    CHECK(std::abs(evaluate<double>(g, 1e-9)) < 1e-6);
  }
}

TEST_CASE("regularized words") {
  CHECK(regularized_word({w1()}).empty());
  CHECK(regularized_word({w0(), w1()}) == WordCombination{{Word{w0(), w1()}, CycloNumber(1)}});
  // reg(w1 w0 w1) = -(2 w0 w1 w1) after shuffle with w1
  auto r = regularized_word({w1(), w0(), w1()});
  CHECK(r == WordCombination{{Word{w0(), w1(), w1()}, CycloNumber(-2)}});
}

TEST_CASE("expansion at 1 reproduces word values near 1") {
  for (const auto& w : words_mu2(3)) {
    auto e = expand_at_one(w, 2);
    for (double s : {1e-3, 3e-4}) {
      double ls = std::log(s);
      cd approx = 0;
      for (auto& [ji, wc] : e)
        approx += zexpr_value(words_to_zexpression(wc)) * std::pow(s, ji.first) * std::pow(ls, ji.second);
      cd exact = word_value<double>(w, 1 - s);
      CHECK_MESSAGE(std::abs(approx - exact) < 1e-6, to_string(w), " s=", s);
    }
  }
}

TEST_CASE("P4: regularize_limit agrees with extrapolated limits over mu_2 words") {
  auto o = props::p4_regularize(1e-5);
  CHECK_MESSAGE(o.ok(), o.summary());
  CHECK(o.instances > 30);

  RootOfUnity one;
  auto bad = regularize_limit(PNormalForm::single(Pole::none(), {w1()}));
  CHECK(bad.divergent.size() == 1);
  auto pole = regularize_limit(PNormalForm::single(Pole::make(one, 1), {w0(), w1()}));
  CHECK(!pole.divergent.empty());
}
