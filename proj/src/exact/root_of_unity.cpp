#include "conezeta/exact/root_of_unity.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "conezeta/exact/rational.hpp"

namespace conezeta {

RootOfUnity::RootOfUnity(std::int64_t order, std::int64_t exponent) {
  if (order < 1) throw std::invalid_argument("root of unity order must be >= 1");
  std::int64_t k = mod64(exponent, order);
  if (k == 0) return;
  std::int64_t g = gcd64(k, order);
  order_ = order / g;
  exponent_ = k / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  std::int64_t m = lcm64(order_, other.order_);
  return {m, exponent_ * (m / order_) + other.exponent_ * (m / other.order_)};
}

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
  return {order_, static_cast<std::int64_t>((static_cast<__int128>(exponent_) * mod64(e, order_)) % order_)};
}

std::complex<double> RootOfUnity::to_complex() const {
  if (order_ == 1) return {1.0, 0.0};
  if (order_ == 2) return {-1.0, 0.0};
  if (order_ == 4) return exponent_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent_) / static_cast<double>(order_);
  return std::polar(1.0, angle);
}

std::int64_t RootOfUnity::exponent_in(std::int64_t modulus) const {
  if (modulus % order_ != 0) throw std::invalid_argument("root order does not divide modulus");
  return exponent_ * (modulus / order_);
}

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) { return a * b; }

std::vector<RootOfUnity> nth_roots(const RootOfUnity& e, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("nth_roots: n must be >= 1");
  // b = zeta_{nN}^{k + jN}, j = 0..n-1 where e = zeta_N^k.
  const std::int64_t big = n * e.order();
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) out.emplace_back(big, e.exponent() + j * e.order());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const RootOfUnity& r) {
  if (r.is_one()) return "1";
  return "z" + std::to_string(r.order()) + "^" + std::to_string(r.exponent());
}

}  // namespace conezeta
