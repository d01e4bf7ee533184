#include "conezeta/exact/rational.hpp"

#include <stdexcept>

namespace conezeta {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.back() == ' ') s.pop_back();
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal: " + s);
  if (num[0] == '+') num.erase(num.begin());
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in: " + s);
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd64(a, b)) * (b < 0 ? -b : b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

IntVector primitive(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    Rational t = x * den;
    scaled.push_back(t.get_num());
  }
  return primitive(scaled);
}

IntVector primitive_class(const RationalVector& v) {
  IntVector p = primitive(v);
  for (const auto& x : p) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : p) y = -y;
    break;
  }
  return p;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace conezeta
