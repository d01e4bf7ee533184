#include "conezeta/rewrite/reduce.hpp"

#include <stdexcept>

namespace conezeta {

namespace {

std::size_t top_var(std::uint64_t mask) { return 63 - static_cast<std::size_t>(__builtin_clzll(mask)); }

struct Split {
  std::vector<Factor> below, at, above;
};

Split split_at(const Term& t, std::size_t v) {
  Split s;
  for (const auto& f : t.factors) {
    const int l = f.level();
    if (l < static_cast<int>(v))
      s.below.push_back(f);
    else if (l == static_cast<int>(v))
      s.at.push_back(f);
    else
      s.above.push_back(f);
  }
  return s;
}

std::vector<Factor> concat(std::vector<Factor> a, const std::vector<Factor>& b, const std::vector<Factor>& c = {}) {
  a.insert(a.end(), b.begin(), b.end());
  a.insert(a.end(), c.begin(), c.end());
  return a;
}

struct DepthGuard {
  int& d;
  explicit DepthGuard(int& x) : d(x) {
    if (++d > 4000) throw std::logic_error("reduction does not terminate: weight failed to decrease");
  }
  ~DepthGuard() { --d; }
};

}  // namespace

bool is_reduced(const Term& t) {
  std::uint64_t seen = 0;
  for (const auto& f : t.factors) {
    const int l = f.level();
    if (l < 0) return false;
    if (!t.is_integrated(l)) continue;
    if (f.mu != 1 || f.alpha[l] != 1 || (seen & bit(l))) return false;
    seen |= bit(l);
  }
  return (zero_set(t) & t.integrated) == t.integrated;
}

bool is_simple(const Term& t) {
  for (const auto& f : t.factors)
    if (f.level() < 0 || !t.is_integrated(f.level())) return false;
  return is_reduced(t);
}

void Reducer::record(const char* rule, const char* anchor, const Term& in, std::size_t var, std::string out) {
  if (trace_) trace_->steps.push_back({rule, anchor, in, var, std::move(out)});
}

Combination Reducer::reduce_A(const Term& h) {
  if (auto it = a_memo_.find(h); it != a_memo_.end()) return it->second;
  DepthGuard guard(depth_);
  Combination out;
  if (h.integrated == 0) {
    out = normalize(h);
  } else {
    const std::size_t t = top_var(h.integrated);
    Split s = split_at(h, t);
    Term g = Term::make(h.nvars, h.integrated & ~bit(t), s.below);
    for (const auto& [gk, c] : reduce_A(g)) {
      Term hk = Term::make(h.nvars, gk.integrated | bit(t), concat(gk.factors, s.at, s.above));
      for (const auto& [u, d] : normalize(hk)) finish(u, t, c * d, out);
    }
  }
  record("reduce_A", "uni-factor weight descent (A)", h, 0, to_string(out));
  return a_memo_.emplace(h, std::move(out)).first->second;
}

void Reducer::finish(const Term& u, std::size_t t, const CycloNumber& c, Combination& out) {
  Split s = split_at(u, t);
  if (s.at.size() > 1) throw std::logic_error("reduce_A: level not uni-factor after normalization");
  if (s.at.empty() || s.at[0].mu == 1) {
    if ((zero_set(u) & u.integrated) != u.integrated)
      throw std::domain_error("reduce_A: integrand does not vanish on a coordinate hyperplane: " + to_string(u));
    add_to(out, u, c);
    return;
  }
  // integration by parts in y_t against G_m(x), using G_m = y_t d/dy_t (1-x)^{1-m} / (m-1)
  const Factor& x = s.at[0];
  const int m = x.mu;
  CycloNumber scale = c * CycloNumber(Rational(1, m - 1));
  Term f = Term::make(u.nvars, u.integrated & ~bit(t), s.below);
  Combination df = reduce_B(f, t);
  for (int j = 1; j < m; ++j) {
    Factor xj{x.root, x.alpha, j};
    Term boundary = restrict_to_one(Term::make(u.nvars, u.integrated, concat(s.below, {xj}, s.above)), t);
    for (const auto& [v, e] : normalize(boundary)) add_to(out, reduce_A(v), scale * e);
    for (const auto& [bk, e] : df) {
      Term inner = Term::make(u.nvars, bk.integrated | bit(t), concat(bk.factors, {xj}, s.above));
      for (const auto& [v, e2] : normalize(inner)) add_to(out, reduce_A(v), -(scale * e * e2));
    }
  }
}

Combination Reducer::reduce_B(const Term& f, std::size_t i) {
  auto key = std::make_pair(f, i);
  if (auto it = b_memo_.find(key); it != b_memo_.end()) return it->second;
  DepthGuard guard(depth_);
  if (!is_simple(f)) throw std::logic_error("reduce_B: input is not simple: " + to_string(f));
  if (f.is_integrated(i)) throw std::invalid_argument("reduce_B: differentiation in an integrated variable");
  Combination out;
  if (f.integrated != 0) {
    const std::size_t t = top_var(f.integrated);
    Split s = split_at(f, t);
    Term g = Term::make(f.nvars, f.integrated & ~bit(t), s.below);
    for (const auto& [bk, c] : reduce_B(g, i)) {
      Term term = Term::make(f.nvars, bk.integrated | bit(t), concat(bk.factors, s.at));
      add_to(out, normalize(term), c);
    }
    if (!s.at.empty() && s.at[0].alpha[i] != 0) {
      CycloNumber cc(s.at[0].alpha[i]);
      add_to(out, normalize(restrict_to_one(f, t)), cc);
      for (const auto& [bk, c] : reduce_B(g, t)) {
        Term term = Term::make(f.nvars, bk.integrated | bit(t), concat(bk.factors, s.at));
        add_to(out, normalize(term), -(cc * c));
      }
    }
  }
  record("reduce_B", "derivative of a simple uni-factor integral (B)", f, i, to_string(out));
  return b_memo_.emplace(std::move(key), std::move(out)).first->second;
}

PNormalForm Reducer::to_P(const Term& u) {
  if (auto it = p_memo_.find(u); it != p_memo_.end()) return it->second;
  DepthGuard guard(depth_);
  std::vector<Factor> rest;
  PoleCombination poles{{Pole::none(), CycloNumber(1)}};
  for (const auto& f : u.factors) {
    if (f.level() != static_cast<int>(param_)) {
      rest.push_back(f);
      continue;
    }
    if (f.alpha[param_] != 1) throw std::logic_error("to_P: parameter factor not split");
    PoleCombination next;
    for (const auto& [q, c] : poles) {
      for (const auto& [r, d] : pole_product(q, Pole::make(f.root, f.mu))) next[r] += c * d;
      for (const auto& [r, d] : pole_product(q, Pole::make(f.root, f.mu - 1))) next[r] -= c * d;
    }
    poles.clear();
    for (auto& [q, c] : next)
      if (!c.is_zero()) poles.emplace(q, c);
  }
  Term f = Term::make(u.nvars, u.integrated, rest);
  if (!is_simple(f)) throw std::logic_error("to_P: term is not reduced: " + to_string(u));
  PNormalForm F;
  if (f.integrated == 0) {
    if (!f.factors.empty()) throw std::logic_error("to_P: factor without integration");
    F = PNormalForm::constant(1);
  } else {
    for (const auto& f2 : f.factors)
      if (f2.alpha[param_] == 0) throw std::logic_error("to_P: factor independent of the parameter");
    PNormalForm G;
    for (const auto& [b, c] : reduce_B(f, param_))
      for (const auto& [a, d] : reduce_A(b)) G.add(to_P(a), c * d);
    F = integrate_P(G, Kernel::dt_over_t());
  }
  PNormalForm out;
  for (const auto& [q, c] : poles) out.add(F.times_pole(q), c);
  record("to_P", "functional recursion in the last variable", u, param_, to_string(out));
  return p_memo_.emplace(u, std::move(out)).first->second;
}

PNormalForm Reducer::reduce_to_univariate(const Combination& in) {
  PNormalForm out;
  for (const auto& [t, c] : in) {
    if (t.is_integrated(param_)) throw std::invalid_argument("reduce_to_univariate: parameter is integrated");
    for (const auto& [a, d] : reduce_A(t)) out.add(to_P(a), c * d);
  }
  return out;
}

long replay(const ReductionTrace& trace, std::size_t param) {
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const auto& s = trace.steps[k];
    Reducer fresh(param);
    std::string got;
    if (s.rule == "reduce_A")
      got = to_string(fresh.reduce_A(s.input));
    else if (s.rule == "reduce_B")
      got = to_string(fresh.reduce_B(s.input, s.var));
    else if (s.rule == "to_P")
      got = to_string(fresh.to_P(s.input));
    else
      continue;
    if (got != s.output) return static_cast<long>(k);
  }
  return -1;
}

}  // namespace conezeta
