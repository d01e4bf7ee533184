#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "conezeta/polylog/pnormal.hpp"
#include "conezeta/polylog/word.hpp"

namespace conezeta {

namespace word_numeric_detail {

template <class R>
std::complex<R> root_value(const RootOfUnity& e) {
  using std::cos;
  using std::sin;
  R angle = 2 * boost::math::constants::pi<R>() * R(e.exponent()) / R(e.order());
  return {cos(angle), sin(angle)};
}

// c / (1 - r u) du, or du / u when log
template <class R>
struct Kern {
  bool log = false;
  std::complex<R> c, r;
};

// Iterated integrals over [0, len] of the suffixes of `ks` (innermost last);
// out[i] is the value of ks[i..). Requires |r| len <= 1/2 for every kernel.
template <class R>
std::vector<std::complex<R>> suffix_values(const std::vector<Kern<R>>& ks, R len, int terms) {
  using C = std::complex<R>;
  const std::size_t n = ks.size();
  std::vector<C> out(n + 1);
  std::vector<C> g(terms + 1, C(0)), f(terms + 1);
  g[0] = C(1);
  out[n] = C(1);
  for (std::size_t idx = n; idx-- > 0;) {
    const auto& k = ks[idx];
    f[0] = C(0);
    if (k.log) {
      if (g[0] != C(0)) throw std::domain_error("word value: divergent at the base point");
      for (int m = 1; m <= terms; ++m) f[m] = g[m] / R(m);
    } else {
      // rescaled to the unit interval
      const C c = k.c * len, r = k.r * len;
      C acc(0);
      for (int m = 1; m <= terms; ++m) {
        acc = r * acc + g[m - 1];
        f[m] = c * acc / R(m);
      }
    }
    C s(0);
    for (int m = 0; m <= terms; ++m) s += f[m];
    out[idx] = s;
    std::swap(f, g);
  }
  return out;
}

template <class R>
int default_terms() {
  return std::numeric_limits<R>::digits + 40;
}

}  // namespace word_numeric_detail

/// Iterated integral of w from 0 to y, 0 <= y <= 1, by path splitting with
/// local power series. At y = 1 the word must not start with omega_1.
template <class R>
std::complex<R> word_value(const Word& w, R y) {
  using namespace word_numeric_detail;
  using C = std::complex<R>;
  const std::size_t n = w.size();
  if (n == 0) return C(1);
  if (w.back().zero) throw std::invalid_argument("word_value: word ends with dx/x");
  if (y < 0 || y > 1) throw std::invalid_argument("word_value: y outside [0, 1]");
  if (y == 0) return C(0);
  const int terms = default_terms<R>();
  std::vector<C> roots(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!w[i].zero) roots[i] = root_value<R>(w[i].root);

  const bool to_one = (y == 1);
  if (to_one && w.front().is_omega1()) throw std::domain_error("word_value: divergent at 1");
  R stop = y;
  if (to_one) {
    R gap = R(1) / 2;
    for (const auto& l : w)
      if (!l.zero && !l.root.is_one()) gap = std::min<R>(gap, R(std::abs(C(1) - root_value<R>(l.root))) / 2);
    stop = 1 - gap;
  }

  // D[i] = value of w[i..n) on the path so far
  R a = std::min<R>(stop, R(1) / 2);
  std::vector<Kern<R>> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = w[i].zero ? Kern<R>{true, {}, {}} : Kern<R>{false, C(1), roots[i]};
  std::vector<C> D = suffix_values<R>(base, a, terms);

  while (a < stop) {
    R radius = a;
    for (std::size_t i = 0; i < n; ++i)
      if (!w[i].zero) radius = std::min<R>(radius, R(std::abs(C(1) - roots[i] * a)));
    R h = std::min<R>(stop - a, radius / 2);
    std::vector<Kern<R>> ks(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].zero) {
        ks[i] = {false, C(1 / a), C(-1 / a)};
      } else {
        C d = C(1) - roots[i] * a;
        ks[i] = {false, C(1) / d, roots[i] / d};
      }
    }
    std::vector<C> next(n + 1, C(0));
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<Kern<R>> prefix(ks.begin(), ks.begin() + j);
      auto v = suffix_values<R>(prefix, h, terms);  // v[i] = segment value of w[i..j)
      for (std::size_t i = 0; i < j; ++i) next[i] += v[i] * D[j];
    }
    for (std::size_t i = 0; i <= n; ++i) D[i] += next[i];
    a += h;
    if (h < std::numeric_limits<R>::epsilon()) break;
  }
  if (!to_one) return D[0];

  // [stop, 1] in u = 1 - x, word reversed
  R len = 1 - stop;
  std::vector<Kern<R>> rev(n);
  for (std::size_t i = 0; i < n; ++i) {
    Kern<R> k;
    if (w[i].zero) {
      k = {false, C(1), C(1)};
    } else if (w[i].root.is_one()) {
      k = {true, {}, {}};
    } else {
      C d = C(1) - roots[i];
      k = {false, C(1) / d, -roots[i] / d};
    }
    rev[n - 1 - i] = k;
  }
  auto v = suffix_values<R>(rev, len, terms);  // v[n - j] = segment value of w[0..j)
  C total = D[0];
  for (std::size_t j = 1; j <= n; ++j) total += v[n - j] * D[j];
  return total;
}

/// Direct power series at 0 for 0 <= y < 1; every coefficient has modulus <= 1,
/// so the tail after N terms is at most y^{N+1} / (1 - y).
std::complex<double> word_value_series(const Word& w, double y, double eps);

template <class R>
R to_real(const Rational& q) {
  if constexpr (std::is_same_v<R, double>)
    return q.get_d();
  else
    return R(q.get_num().get_str()) / R(q.get_den().get_str());
}

template <class R>
std::complex<R> cyclo_value(const CycloNumber& c) {
  std::complex<R> z = word_numeric_detail::root_value<R>(RootOfUnity::primitive(c.modulus()));
  std::complex<R> s(0), p(1);
  for (const auto& q : c.coords()) {
    s += p * to_real<R>(q);
    p *= z;
  }
  return s;
}

/// f(y) for 0 <= y < 1, or y = 1 when every pole is away from 1 and every word converges.
template <class R>
std::complex<R> evaluate(const PNormalForm& f, R y) {
  std::complex<R> total(0);
  for (const auto& [k, c] : f.terms()) {
    std::complex<R> v = cyclo_value<R>(c) * word_value<R>(k.second, y);
    if (k.first.order) {
      std::complex<R> d = std::complex<R>(1) - word_numeric_detail::root_value<R>(k.first.root) * y;
      for (int i = 0; i < k.first.order; ++i) v /= d;
    }
    total += v;
  }
  return total;
}

}  // namespace conezeta
