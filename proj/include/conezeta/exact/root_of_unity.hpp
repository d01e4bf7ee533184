#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace conezeta {

/// exp(2 pi i k / N), stored in lowest terms: gcd(k, N) = 1 unless the root is
/// 1, which is always (N, k) = (1, 0).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(std::int64_t order, std::int64_t exponent);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {2, 1}; }
  /// zeta_N
  static RootOfUnity primitive(std::int64_t order) { return {order, 1}; }

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_one() const { return order_ == 1; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity inverse() const { return {order_, order_ - exponent_}; }
  RootOfUnity pow(std::int64_t e) const;
  std::complex<double> to_complex() const;
  /// Exponent of this root when written as a power of zeta_M. Requires order | M.
  std::int64_t exponent_in(std::int64_t modulus) const;

  auto operator<=>(const RootOfUnity&) const = default;

 private:
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 0;
};

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b);

/// All b with b^n = e. Exactly n distinct roots, each of order dividing
/// n * order(e), sorted.
std::vector<RootOfUnity> nth_roots(const RootOfUnity& e, std::int64_t n);

std::string to_string(const RootOfUnity& r);

}  // namespace conezeta
