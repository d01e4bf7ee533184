#pragma once

#include <map>
#include <string>
#include <utility>

#include "conezeta/polylog/word.hpp"

namespace conezeta {

/// (1 - e y)^{-order}; order 0 is always stored with e = 1.
struct Pole {
  RootOfUnity root;
  int order = 0;

  static Pole none() { return {}; }
  static Pole make(const RootOfUnity& e, int m) { return m == 0 ? Pole{} : Pole{e, m}; }
  auto operator<=>(const Pole&) const = default;
};

using PoleCombination = std::map<Pole, CycloNumber>;

/// Partial fractions of a product of two poles.
PoleCombination pole_product(const Pole& p, const Pole& q);

/// Finite sum of c * (1 - e y)^{-m} * word(y).
class PNormalForm {
 public:
  using Key = std::pair<Pole, Word>;

  static PNormalForm constant(const CycloNumber& c);
  static PNormalForm single(const Pole& p, const Word& w, const CycloNumber& c = CycloNumber(1));

  void add(const Pole& p, const Word& w, const CycloNumber& c);
  void add(const PNormalForm& other, const CycloNumber& scale = CycloNumber(1));
  PNormalForm times_pole(const Pole& p) const;

  const std::map<Key, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest word length.
  std::size_t level() const;
  bool operator==(const PNormalForm& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, CycloNumber> terms_;
};

std::string to_string(const PNormalForm& f);

/// dt/t (zero) or dt/(1 - e t)^nu.
struct Kernel {
  bool zero = true;
  RootOfUnity root;
  int nu = 1;

  static Kernel dt_over_t() { return {}; }
  static Kernel pole(const RootOfUnity& e, int nu) { return {false, e, nu}; }
};

/// y -> int_0^y kernel(t) f(t). Throws std::domain_error when dt/t meets a
/// nonvanishing constant term.
PNormalForm integrate_P(const PNormalForm& f, const Kernel& k);

}  // namespace conezeta
