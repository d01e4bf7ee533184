#include "conezeta/polylog/regularize.hpp"

#include <mutex>
#include <stdexcept>

namespace conezeta {

namespace {

void add(WordCombination& out, const Word& w, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

void add(WordCombination& out, const WordCombination& in, const CycloNumber& c) {
  for (const auto& [w, d] : in) add(out, w, d * c);
}

std::mutex reg_mutex;
std::map<Word, WordCombination> reg_cache;

WordCombination compute_reg(const Word& w) {
  std::size_t r = 0;
  while (r < w.size() && w[r].is_omega1()) ++r;
  if (r == 0) return {{w, CycloNumber(1)}};
  if (r == w.size()) return {};
  Word v(w.begin() + r, w.end());
  WordCombination out;
  for (std::size_t p = 1; p <= v.size(); ++p) {
    Word u(w.begin(), w.begin() + (r - 1));
    u.insert(u.end(), v.begin(), v.begin() + p);
    u.push_back(Letter::omega(RootOfUnity::one()));
    u.insert(u.end(), v.begin() + p, v.end());
    add(out, regularized_word(u), CycloNumber(Rational(-1, static_cast<long>(r))));
  }
  return out;
}

}  // namespace

const WordCombination& regularized_word(const Word& w) {
  {
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto it = reg_cache.find(w);
    if (it != reg_cache.end()) return it->second;
  }
  WordCombination v = compute_reg(w);
  std::lock_guard<std::mutex> lock(reg_mutex);
  return reg_cache.emplace(w, std::move(v)).first->second;
}

ZExpression words_to_zexpression(const WordCombination& c) {
  ZExpression z;
  for (const auto& [w, d] : c) {
    auto t = mzv_symbol_from_word(w);
    add_to(z, t.symbol, t.coefficient * d);
  }
  return z;
}

namespace {

using Series = std::map<int, CycloNumber>;  // kernel(1 - s) coefficients

// k(1 - s) = sum c_j s^j, j from -1
Series kernel_series(const Letter& l, int max_order) {
  Series out;
  if (l.zero) {
    for (int j = 0; j <= max_order; ++j) out[j] = CycloNumber(1);
  } else if (l.root.is_one()) {
    out[-1] = CycloNumber(1);
  } else {
    CycloNumber e(l.root);
    CycloNumber inv = (CycloNumber(1) - e).inverse();
    CycloNumber ratio = -(e * inv);
    CycloNumber p = inv;
    for (int j = 0; j <= max_order; ++j) {
      out[j] = p;
      p *= ratio;
    }
  }
  return out;
}

Rational falling(int i, int r) {
  Rational f = 1;
  for (int t = 0; t < r; ++t) f *= i - t;
  return f;
}

void add_term(WordExpansion& out, int j, int i, const WordCombination& c, const CycloNumber& s) {
  if (c.empty() || s.is_zero()) return;
  auto& slot = out[{j, i}];
  add(slot, c, s);
  if (slot.empty()) out.erase({j, i});
}

std::mutex exp_mutex;
std::map<std::pair<Word, int>, WordExpansion> exp_cache;

WordExpansion compute_expansion(const Word& w, int max_order) {
  WordExpansion out;
  if (w.empty()) {
    out[{0, 0}] = {{Word{}, CycloNumber(1)}};
    return out;
  }
  Word rest(w.begin() + 1, w.end());
  const WordExpansion& inner = expand_at_one(rest, max_order);
  Series k = kernel_series(w.front(), max_order);
  // derivative in s: -k * inner
  WordExpansion deriv;
  for (const auto& [ji, c] : inner)
    for (const auto& [kj, kc] : k) {
      int j = ji.first + kj;
      if (j > max_order - 1) continue;
      add_term(deriv, j, ji.second, c, -kc);
    }
  for (const auto& [ji, c] : deriv) {
    auto [j, i] = ji;
    if (j == -1) {
      add_term(out, 0, i + 1, c, CycloNumber(Rational(1, i + 1)));
      continue;
    }
    if (j < -1) throw std::logic_error("expand_at_one: unexpected pole order");
    for (int r = 0; r <= i; ++r) {
      Rational coef = falling(i, r);
      Rational d = 1;
      for (int t = 0; t <= r; ++t) d *= j + 1;
      coef /= d;
      if (r % 2) coef = -coef;
      add_term(out, j + 1, i - r, c, CycloNumber(coef));
    }
  }
  add_term(out, 0, 0, regularized_word(w), CycloNumber(1));
  return out;
}

}  // namespace

WordExpansion expand_at_one(const Word& w, int max_order) {
  {
    std::lock_guard<std::mutex> lock(exp_mutex);
    auto it = exp_cache.find({w, max_order});
    if (it != exp_cache.end()) return it->second;
  }
  WordExpansion e = compute_expansion(w, max_order);
  std::lock_guard<std::mutex> lock(exp_mutex);
  return exp_cache.emplace(std::make_pair(w, max_order), std::move(e)).first->second;
}

RegularizedExpansion regularize_limit(const PNormalForm& f) {
  int order = 0;
  for (const auto& [k, c] : f.terms())
    if (k.first.root.is_one()) order = std::max(order, k.first.order);

  std::map<std::pair<int, int>, WordCombination> divergent;
  WordCombination finite;
  for (const auto& [k, c] : f.terms()) {
    const auto& [pole, w] = k;
    WordExpansion e = expand_at_one(w, order);
    if (pole.root.is_one()) {
      const int m = pole.order;
      for (const auto& [ji, wc] : e) {
        auto [j, i] = ji;
        int shifted = j - m;
        if (shifted > 0) continue;
        if (shifted == 0 && i == 0)
          add(finite, wc, c);
        else
          add(divergent[{shifted, i}], wc, c);
      }
    } else {
      CycloNumber scale = c;
      CycloNumber inv = (CycloNumber(1) - CycloNumber(pole.root)).inverse();
      for (int t = 0; t < pole.order; ++t) scale *= inv;
      for (const auto& [ji, wc] : e) {
        auto [j, i] = ji;
        if (j != 0) continue;
        if (i == 0)
          add(finite, wc, scale);
        else
          add(divergent[{0, i}], wc, scale);
      }
    }
  }
  RegularizedExpansion out;
  out.finite = words_to_zexpression(finite);
  for (const auto& [ji, wc] : divergent) {
    auto z = words_to_zexpression(wc);
    if (!z.empty()) out.divergent.emplace(ji, std::move(z));
  }
  return out;
}

}  // namespace conezeta
