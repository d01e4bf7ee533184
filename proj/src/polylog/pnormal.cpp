#include "conezeta/polylog/pnormal.hpp"

#include <stdexcept>

namespace conezeta {

namespace {

void accumulate(PoleCombination& out, const Pole& p, const CycloNumber& c) {
  auto it = out.find(p);
  if (it == out.end()) {
    if (!c.is_zero()) out.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

// 1 / ((1 - a t)^nu (1 - b t)^m), a != b
PoleCombination distinct_product(const RootOfUnity& a, int nu, const RootOfUnity& b, int m, const CycloNumber& inv) {
  if (m == 0) return {{Pole::make(a, nu), CycloNumber(1)}};
  if (nu == 0) return {{Pole::make(b, m), CycloNumber(1)}};
  PoleCombination out;
  for (const auto& [p, c] : distinct_product(a, nu, b, m - 1, inv)) accumulate(out, p, c * CycloNumber(a) * inv);
  for (const auto& [p, c] : distinct_product(a, nu - 1, b, m, inv)) accumulate(out, p, -(c * CycloNumber(b) * inv));
  return out;
}

}  // namespace

PoleCombination pole_product(const Pole& p, const Pole& q) {
  if (p.order == 0) return {{q, CycloNumber(1)}};
  if (q.order == 0) return {{p, CycloNumber(1)}};
  if (p.root == q.root) return {{Pole::make(p.root, p.order + q.order), CycloNumber(1)}};
  CycloNumber inv = (CycloNumber(p.root) - CycloNumber(q.root)).inverse();
  return distinct_product(p.root, p.order, q.root, q.order, inv);
}

PNormalForm PNormalForm::constant(const CycloNumber& c) { return single(Pole::none(), {}, c); }

PNormalForm PNormalForm::single(const Pole& p, const Word& w, const CycloNumber& c) {
  PNormalForm f;
  f.add(p, w, c);
  return f;
}

void PNormalForm::add(const Pole& p, const Word& w, const CycloNumber& c) {
  if (c.is_zero()) return;
  Key k{Pole::make(p.root, p.order), w};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(std::move(k), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PNormalForm::add(const PNormalForm& other, const CycloNumber& scale) {
  for (const auto& [k, c] : other.terms_) add(k.first, k.second, c * scale);
}

PNormalForm PNormalForm::times_pole(const Pole& p) const {
  PNormalForm out;
  for (const auto& [k, c] : terms_)
    for (const auto& [q, d] : pole_product(p, k.first)) out.add(q, k.second, c * d);
  return out;
}

std::size_t PNormalForm::level() const {
  std::size_t l = 0;
  for (const auto& [k, c] : terms_) l = std::max(l, k.second.size());
  return l;
}

std::string to_string(const PNormalForm& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (k.first.order) s += "*(1-" + to_string(k.first.root) + "*y)^-" + std::to_string(k.first.order);
    s += "*[" + to_string(k.second) + "]";
  }
  return s;
}

namespace {

Word prepend(const Letter& l, const Word& w) {
  Word out;
  out.reserve(w.size() + 1);
  out.push_back(l);
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

void integrate_term(const Pole& p, const Word& w, const CycloNumber& c, const Kernel& k, PNormalForm& out);

// int_0^y dt/(1 - c t)^j w(t), j >= 1
void pole_integral(const RootOfUnity& r, int j, const Word& w, const CycloNumber& c, PNormalForm& out) {
  if (j == 1) {
    out.add(Pole::none(), prepend(Letter::omega(r), w), c);
    return;
  }
  CycloNumber s = c * CycloNumber(r.inverse()) * CycloNumber(Rational(1, j - 1));
  out.add(Pole::make(r, j - 1), w, s);
  if (w.empty()) {
    out.add(Pole::none(), {}, -s);
    return;
  }
  Word rest(w.begin() + 1, w.end());
  Kernel k1 = w.front().zero ? Kernel::dt_over_t() : Kernel::pole(w.front().root, 1);
  integrate_term(Pole::make(r, j - 1), rest, -s, k1, out);
}

void integrate_term(const Pole& p, const Word& w, const CycloNumber& c, const Kernel& k, PNormalForm& out) {
  if (k.zero) {
    out.add(Pole::none(), prepend(Letter::omega0(), w), c);
    CycloNumber ce = c * CycloNumber(p.root);
    for (int j = 1; j <= p.order; ++j) pole_integral(p.root, j, w, ce, out);
    return;
  }
  for (const auto& [q, d] : pole_product(Pole::make(k.root, k.nu), p)) pole_integral(q.root, q.order, w, c * d, out);
}

}  // namespace

PNormalForm integrate_P(const PNormalForm& f, const Kernel& k) {
  if (!k.zero && k.nu < 1) throw std::invalid_argument("integrate_P: kernel exponent must be >= 1");
  PNormalForm out;
  for (const auto& [key, c] : f.terms()) {
    if (!key.second.empty() && key.second.back().zero) throw std::invalid_argument("integrate_P: word ending in dx/x");
    integrate_term(key.first, key.second, c, k, out);
  }
  if (k.zero) {
    auto it = out.terms().find({Pole::none(), Word{Letter::omega0()}});
    if (it != out.terms().end()) throw std::domain_error("integrate_P: dt/t applied to a function not vanishing at 0");
  }
  return out;
}

}  // namespace conezeta
