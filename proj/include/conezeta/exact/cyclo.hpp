#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "conezeta/exact/rational.hpp"
#include "conezeta/exact/root_of_unity.hpp"

namespace conezeta {

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Exact element of Q(mu_N) in the power basis 1, z, ..., z^{phi(N)-1} of
/// z = exp(2 pi i / N), reduced modulo the N-th cyclotomic polynomial.
///
/// Binary operations embed both operands into Q(mu_lcm) first. Values are
/// immutable once built.
class CycloNumber {
 public:
  CycloNumber() : modulus_(1), coords_(1) {}
  CycloNumber(const Rational& q) : modulus_(1), coords_{q} {}  // NOLINT: implicit by intent
  CycloNumber(long q) : CycloNumber(Rational(q)) {}             // NOLINT
  CycloNumber(const RootOfUnity& r);                            // NOLINT
  /// Takes coefficients of an arbitrary-degree polynomial in z_N and reduces it.
  CycloNumber(std::int64_t modulus, std::vector<Rational> poly);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  /// True when the value lies in Q; the rational itself is then rational_value().
  bool is_rational() const;
  Rational rational_value() const;

  /// Same value, viewed in Q(mu_m). Requires modulus() | m.
  CycloNumber embed(std::int64_t m) const;
  /// Same value in the smallest Q(mu_d) containing it.
  CycloNumber reduced() const;
  /// Image under z -> z^a, gcd(a, N) = 1.
  CycloNumber galois(std::int64_t a) const;

  CycloNumber operator-() const;
  CycloNumber inverse() const;
  std::complex<double> to_complex() const;

  friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  CycloNumber& operator+=(const CycloNumber& b) { return *this = *this + b; }
  CycloNumber& operator-=(const CycloNumber& b) { return *this = *this - b; }
  CycloNumber& operator*=(const CycloNumber& b) { return *this = *this * b; }

 private:
  std::int64_t modulus_;
  std::vector<Rational> coords_;
};

enum class CycloOp { Add, Mul, Inv, Eq };

/// Dispatching form of the field operations. Eq returns 1 or 0 as a CycloNumber.
CycloNumber cyclo_arith(CycloOp op, const CycloNumber& a, const CycloNumber& b = CycloNumber());

/// Readable form such as "1/3 + 2/3*z3^1".
std::string to_string(const CycloNumber& c);

}  // namespace conezeta
