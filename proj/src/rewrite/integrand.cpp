#include "conezeta/rewrite/integrand.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "conezeta/exact/linalg.hpp"

namespace conezeta {

int Factor::level() const {
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] != 0) return static_cast<int>(i);
  return -1;
}

Term Term::make(std::size_t nvars, std::uint64_t integrated, std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  return {nvars, integrated, std::move(factors)};
}

std::size_t Term::weight() const { return static_cast<std::size_t>(__builtin_popcountll(integrated)); }

void add_to(Combination& c, const Term& t, const CycloNumber& v) {
  if (v.is_zero()) return;
  auto it = c.find(t);
  if (it == c.end()) {
    c.emplace(t, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

void add_to(Combination& c, const Combination& other, const CycloNumber& scale) {
  for (const auto& [t, v] : other) add_to(c, t, v * scale);
}

std::string to_string(const Factor& f) {
  std::string s = "G[" + to_string(f.root) + "](";
  for (std::size_t i = 0; i < f.alpha.size(); ++i) s += (i ? "," : "") + std::to_string(f.alpha[i]);
  s += ")";
  if (f.mu != 1) s += "^" + std::to_string(f.mu);
  return s;
}

std::string to_string(const Term& t) {
  std::string s = "int{";
  bool first = true;
  for (std::size_t v = 0; v < t.nvars; ++v)
    if (t.is_integrated(v)) {
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
  s += "}";
  for (const auto& f : t.factors) s += " " + to_string(f);
  return s;
}

std::string to_string(const Combination& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [t, v] : c) s += (s.empty() ? "" : " + ") + ("(" + to_string(v) + ") " + to_string(t));
  return s;
}

Term integral_expression(const std::vector<std::vector<Rational>>& values, const std::vector<RootOfUnity>& chi) {
  const std::size_t n = values.size();
  if (n == 0 || n > 63) throw std::invalid_argument("integral_expression: number of forms out of range");
  const std::size_t m = chi.size();
  std::vector<Factor> factors;
  for (std::size_t j = 0; j < m; ++j) {
    Factor f{chi[j], Exponents(n, 0), 1};
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i].size() != m) throw std::invalid_argument("integral_expression: ragged value matrix");
      const Rational& q = values[i][j];
      if (q.get_den() != 1 || q < 0) throw std::invalid_argument("integral_expression: form value not a natural number");
      f.alpha[i] = q.get_num().get_si();
    }
    if (f.level() < 0) throw std::invalid_argument("integral_expression: every form vanishes on a generator");
    factors.push_back(std::move(f));
  }
  return Term::make(n, (n == 64 ? ~0ull : bit(n) - 1), std::move(factors));
}

bool convergence_check(const std::vector<std::vector<Rational>>& values) {
  const std::size_t n = values.size();
  const std::size_t m = n ? values[0].size() : 0;
  if (m == 0) return false;
  if (m > 20) throw std::invalid_argument("convergence_check: too many generators");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::size_t hit = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool any = false;
      for (std::size_t j = 0; j < m && !any; ++j) any = ((mask >> j) & 1u) && values[i][j] > 0;
      hit += any;
    }
    if (hit <= static_cast<std::size_t>(__builtin_popcount(mask))) return false;
  }
  return true;
}

std::uint64_t zero_set(const Term& t) {
  std::uint64_t z = 0;
  for (const auto& f : t.factors)
    for (std::size_t i = 0; i < f.alpha.size(); ++i)
      if (f.alpha[i] > 0) z |= bit(i);
  return z;
}

bool check_convergence_box(const Term& t, std::size_t k) {
  std::uint64_t need = bit(k) - 1;
  return (zero_set(t) & need) == need;
}

namespace {

void add_product(FactorProducts& out, std::vector<Factor> prod, const CycloNumber& c) {
  if (c.is_zero()) return;
  std::sort(prod.begin(), prod.end());
  auto it = out.find(prod);
  if (it == out.end()) {
    out.emplace(std::move(prod), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// prod_b (1 + sum_{i <= j} G_i(b w))
FactorProducts power_expansion(const std::vector<RootOfUnity>& bs, const Exponents& beta, int j) {
  FactorProducts cur{{{}, CycloNumber(1)}};
  for (const auto& b : bs) {
    FactorProducts next;
    for (const auto& [prod, c] : cur) {
      add_product(next, prod, c);
      for (int i = 1; i <= j; ++i) {
        auto p = prod;
        p.push_back({b, beta, i});
        add_product(next, std::move(p), c);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

CycloNumber constant_value(const Factor& f) {
  if (f.root.is_one()) throw std::domain_error("constant factor 1/(1-1): divergent");
  CycloNumber e(f.root);
  CycloNumber inv = (CycloNumber(1) - e).inverse();
  CycloNumber v = e;
  for (int i = 0; i < f.mu; ++i) v *= inv;
  return v;
}

}  // namespace

FactorProducts root_split(const Factor& f) {
  const int lv = f.level();
  if (lv < 0) throw std::invalid_argument("root_split: constant factor");
  const long c = f.alpha[lv];
  if (c == 1) return {{{f}, CycloNumber(1)}};
  Exponents beta(f.alpha.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (f.alpha[i] % c != 0) throw std::logic_error("root_split: exponent " + to_string(f) + " is not a multiple of a primitive representative");
    beta[i] = f.alpha[i] / c;
  }
  auto bs = nth_roots(f.root, c);
  FactorProducts out = power_expansion(bs, beta, f.mu);
  for (const auto& [prod, d] : power_expansion(bs, beta, f.mu - 1)) add_product(out, prod, -d);
  return out;
}

FactorProducts merge_pair(const Factor& a, const Factor& b) {
  if (a.root != b.root || a.alpha != b.alpha) throw std::invalid_argument("merge_pair: factors differ");
  const int s = a.mu + b.mu;
  FactorProducts out;
  add_product(out, {{a.root, a.alpha, s}}, CycloNumber(1));
  add_product(out, {{a.root, a.alpha, s - 1}}, CycloNumber(-1));
  return out;
}

FactorProducts partial_fraction_pair(const Factor& a0, const Factor& b0) {
  const int p = a0.level();
  if (p < 0 || p != b0.level()) throw std::invalid_argument("partial_fraction_pair: factors of different levels");
  if (a0.alpha[p] != 1 || b0.alpha[p] != 1) throw std::invalid_argument("partial_fraction_pair: leading exponent not 1");
  if (a0.root == b0.root && a0.alpha == b0.alpha) throw std::invalid_argument("partial_fraction_pair: proportional factors");
  bool ge = true, le = true;
  for (std::size_t i = 0; i < a0.alpha.size(); ++i) {
    ge &= b0.alpha[i] >= a0.alpha[i];
    le &= b0.alpha[i] <= a0.alpha[i];
  }
  if (!ge && !le) throw std::logic_error("partial_fraction_pair: ratio " + to_string(a0) + " / " + to_string(b0) + " is indefinite");
  const Factor& a = ge ? a0 : b0;  // gamma_1
  const Factor& b = ge ? b0 : a0;  // gamma_2 = r gamma_1
  Exponents delta(a.alpha.size());
  bool zero = true;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    delta[i] = b.alpha[i] - a.alpha[i];
    zero &= delta[i] == 0;
  }
  RootOfUnity r = b.root * a.root.inverse();
  Factor ga{a.root, a.alpha, 1}, gb{b.root, b.alpha, 1};

  // R * G_a(g1) * (1 - g2)^{1-b}  -  (R + 1) * G_b(g2) * (1 - g1)^{1-a}
  std::vector<std::pair<std::vector<Factor>, CycloNumber>> left, right;
  left.push_back({{{a.root, a.alpha, a.mu}}, CycloNumber(1)});
  for (int j = 1; j < b.mu; ++j) left.push_back({{{a.root, a.alpha, a.mu}, {b.root, b.alpha, j}}, CycloNumber(1)});
  right.push_back({{{b.root, b.alpha, b.mu}}, CycloNumber(1)});
  for (int j = 1; j < a.mu; ++j) right.push_back({{{b.root, b.alpha, b.mu}, {a.root, a.alpha, j}}, CycloNumber(1)});

  FactorProducts out;
  if (zero) {
    Factor rc{r, delta, 1};
    CycloNumber R = constant_value(rc);
    CycloNumber R1 = R + CycloNumber(1);
    for (const auto& [prod, c] : left) add_product(out, prod, c * R);
    for (const auto& [prod, c] : right) add_product(out, prod, -(c * R1));
  } else {
    Factor rf{r, delta, 1};
    for (auto [prod, c] : left) {
      prod.push_back(rf);
      add_product(out, std::move(prod), c);
    }
    for (auto [prod, c] : right) {
      add_product(out, prod, -c);
      prod.push_back(rf);
      add_product(out, std::move(prod), -c);
    }
  }
  return out;
}

Term restrict_to_one(const Term& t, std::size_t v) {
  std::vector<Factor> fs = t.factors;
  for (auto& f : fs) f.alpha[v] = 0;
  return Term::make(t.nvars, t.integrated & ~bit(v), std::move(fs));
}

namespace {

std::mutex norm_mutex;
std::map<std::pair<Term, int>, Combination> norm_cache;

Term with_replaced(const Term& t, std::size_t i, std::size_t j, const std::vector<Factor>& extra) {
  std::vector<Factor> fs;
  for (std::size_t k = 0; k < t.factors.size(); ++k)
    if (k != i && k != j) fs.push_back(t.factors[k]);
  fs.insert(fs.end(), extra.begin(), extra.end());
  return Term::make(t.nvars, t.integrated, std::move(fs));
}

Combination expand(const Term& t, std::size_t i, std::size_t j, const FactorProducts& prods, NormalizeMode mode) {
  Combination out;
  for (const auto& [prod, c] : prods) add_to(out, normalize(with_replaced(t, i, j, prod), mode), c);
  return out;
}

Combination compute_normalize(const Term& t, NormalizeMode mode) {
  const std::size_t none = static_cast<std::size_t>(-1);
  const auto& fs = t.factors;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].level() < 0) {
      Combination out;
      add_to(out, normalize(with_replaced(t, i, none, {}), mode), constant_value(fs[i]));
      return out;
    }
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].alpha[fs[i].level()] != 1) return expand(t, i, none, root_split(fs[i]), mode);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if (fs[i].root == fs[i + 1].root && fs[i].alpha == fs[i + 1].alpha)
      return expand(t, i, i + 1, merge_pair(fs[i], fs[i + 1]), mode);
  if (mode == NormalizeMode::Full) {
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const int li = fs[i].level();
      if (!t.is_integrated(li) || (best >= 0 && li >= best)) continue;
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[j].level() == li) {
          best = li;
          bi = i;
          bj = j;
          break;
        }
    }
    if (best >= 0) return expand(t, bi, bj, partial_fraction_pair(fs[bi], fs[bj]), mode);
  }
  return {{t, CycloNumber(1)}};
}

}  // namespace

Combination normalize(const Term& t, NormalizeMode mode) {
  std::pair<Term, int> key{t, static_cast<int>(mode)};
  {
    std::lock_guard<std::mutex> lock(norm_mutex);
    auto it = norm_cache.find(key);
    if (it != norm_cache.end()) return it->second;
  }
  Combination out = compute_normalize(t, mode);
  std::lock_guard<std::mutex> lock(norm_mutex);
  norm_cache.emplace(std::move(key), out);
  return out;
}

CoordinateChange change_coordinates(const Term& t, const DerivedSequence& rescaled) {
  const std::size_t n = t.nvars;
  const auto& gens = rescaled.cone.generators;
  if (gens.size() != n || rescaled.cone.ambient_dim != n) throw std::invalid_argument("change_coordinates: dimension mismatch");
  std::vector<Factor> fs;
  for (const auto& f : t.factors) {
    Factor g{f.root, Exponents(n, 0), f.mu};
    for (std::size_t k = 0; k < n; ++k) {
      Integer s = 0;
      for (std::size_t i = 0; i < n; ++i) s += gens[k][i] * f.alpha[i];
      if (s < 0) throw std::logic_error("change_coordinates: negative exponent on the flag");
      g.alpha[k] = s.get_si();
    }
    const int lv = g.level();
    if (lv < 0) throw std::logic_error("change_coordinates: factor vanishes on the flag");
    for (std::size_t k = lv; k < n; ++k)
      if (g.alpha[k] % g.alpha[lv] != 0)
        throw std::logic_error("change_coordinates: substituted exponent is not a multiple of a variable-part representative");
    fs.push_back(std::move(g));
  }
  Rational det = determinant(RationalMatrix::from_int_rows(gens, n));
  return {abs(det), Term::make(n, t.integrated, std::move(fs))};
}

}  // namespace conezeta
