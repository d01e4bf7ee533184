#include "conezeta/exact/cyclo.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "conezeta/exact/linalg.hpp"

namespace conezeta {

namespace {

std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloNumber::CycloNumber(const RootOfUnity& r) : CycloNumber(r.order(), [&] {
  std::vector<Rational> poly(static_cast<std::size_t>(r.exponent()) + 1);
  poly.back() = 1;
  return poly;
}()) {}

CycloNumber::CycloNumber(std::int64_t modulus, std::vector<Rational> poly) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("CycloNumber: modulus must be >= 1");
  const auto n = static_cast<std::size_t>(modulus);
  std::vector<Rational> folded(n);
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] != 0) folded[i % n] += poly[i];
  const auto& phi = cyclotomic_polynomial(modulus);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = n; i-- > deg;) {
    if (folded[i] == 0) continue;
    Rational c = folded[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j] != 0) folded[i - deg + j] -= c * phi[j];
  }
  folded.resize(deg);
  coords_ = std::move(folded);
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycloNumber is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

CycloNumber CycloNumber::embed(std::int64_t m) const {
  if (m % modulus_ != 0) throw std::invalid_argument("embed: modulus does not divide target");
  if (m == modulus_) return *this;
  const std::int64_t step = m / modulus_;
  std::vector<Rational> poly(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coords_.size(); ++i) poly[i * static_cast<std::size_t>(step)] = coords_[i];
  return {m, std::move(poly)};
}

CycloNumber CycloNumber::galois(std::int64_t a) const {
  if (gcd64(a, modulus_) != 1) throw std::invalid_argument("galois: exponent not a unit");
  std::vector<Rational> poly(static_cast<std::size_t>(modulus_));
  for (std::size_t i = 0; i < coords_.size(); ++i)
    poly[static_cast<std::size_t>(mod64(static_cast<std::int64_t>(i) * a, modulus_))] += coords_[i];
  return {modulus_, std::move(poly)};
}

CycloNumber CycloNumber::reduced() const {
  if (is_rational()) return CycloNumber(rational_value());
  for (std::int64_t d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool fixed = true;
    for (std::int64_t a = 1 + d; a < modulus_ && fixed; a += d)
      if (gcd64(a, modulus_) == 1 && !(galois(a) == *this)) fixed = false;
    if (!fixed) continue;
    const auto phi_d = static_cast<std::size_t>(euler_phi(d));
    RationalMatrix basis(coords_.size(), phi_d);
    for (std::size_t i = 0; i < phi_d; ++i) {
      std::vector<Rational> mono(i + 1);
      mono.back() = 1;
      CycloNumber col = CycloNumber(d, mono).embed(modulus_);
      for (std::size_t r = 0; r < coords_.size(); ++r) basis(r, i) = col.coords_[r];
    }
    auto sol = solve(basis, coords_);
    if (!sol) continue;
    return {d, std::move(*sol)};
  }
  return *this;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t m = lcm64(a.modulus_, b.modulus_);
  CycloNumber x = a.embed(m);
  CycloNumber y = b.embed(m);
  for (std::size_t i = 0; i < x.coords_.size(); ++i) x.coords_[i] += y.coords_[i];
  return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.modulus_ == 1) {
    CycloNumber out = b;
    for (auto& c : out.coords_) c *= a.coords_[0];
    return out;
  }
  if (b.modulus_ == 1) return b * a;
  const std::int64_t m = lcm64(a.modulus_, b.modulus_);
  CycloNumber x = a.embed(m);
  CycloNumber y = b.embed(m);
  std::vector<Rational> prod(x.coords_.size() + y.coords_.size());
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords_.size(); ++j)
      if (y.coords_[j] != 0) prod[i + j] += x.coords_[i] * y.coords_[j];
  }
  return {m, std::move(prod)};
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
  if (modulus_ == 1) return CycloNumber(Rational(1) / coords_[0]);
  // Solve (this * x) = 1 through the multiplication matrix in the power basis.
  const std::size_t n = coords_.size();
  RationalMatrix mul(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> mono(j + 1);
    mono.back() = 1;
    CycloNumber col = *this * CycloNumber(modulus_, mono);
    for (std::size_t i = 0; i < n; ++i) mul(i, j) = col.coords_[i];
  }
  RationalVector rhs(n);
  rhs[0] = 1;
  auto sol = solve(mul, rhs);
  if (!sol) throw std::logic_error("CycloNumber: singular multiplication matrix");
  return {modulus_, std::move(*sol)};
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.modulus_ == b.modulus_) return a.coords_ == b.coords_;
  const std::int64_t m = lcm64(a.modulus_, b.modulus_);
  return a.embed(m).coords_ == b.embed(m).coords_;
}

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    acc += coords_[i].get_d() * RootOfUnity(modulus_, static_cast<std::int64_t>(i)).to_complex();
  }
  return acc;
}

CycloNumber cyclo_arith(CycloOp op, const CycloNumber& a, const CycloNumber& b) {
  switch (op) {
    case CycloOp::Add: return a + b;
    case CycloOp::Mul: return a * b;
    case CycloOp::Inv: return a.inverse();
    case CycloOp::Eq: return CycloNumber(a == b ? 1L : 0L);
  }
  throw std::invalid_argument("cyclo_arith: unknown op");
}

std::string to_string(const CycloNumber& c) {
  CycloNumber r = c.reduced();
  std::string out;
  for (std::size_t i = 0; i < r.coords().size(); ++i) {
    const Rational& q = r.coords()[i];
    if (q == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(q);
    if (i > 0) out += "*z" + std::to_string(r.modulus()) + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace conezeta
