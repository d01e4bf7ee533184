#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conezeta {

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Floor modulo with a non-negative result for positive m.
std::int64_t mod64(std::int64_t a, std::int64_t m);
std::int64_t to_int64(const Integer& z);

/// Makes an integer vector primitive (gcd 1). The zero vector is returned as is.
IntVector primitive(const IntVector& v);
/// Clears denominators and divides by the content.
IntVector primitive(const RationalVector& v);
/// Primitive representative of the class v*Q^x: gcd 1 and first nonzero
/// entry positive.
IntVector primitive_class(const RationalVector& v);

RationalVector to_rational(const IntVector& v);
bool is_zero(const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace conezeta
