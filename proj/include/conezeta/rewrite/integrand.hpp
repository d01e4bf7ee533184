#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "conezeta/derivation/derived.hpp"
#include "conezeta/exact/cyclo.hpp"
#include "conezeta/exact/root_of_unity.hpp"

namespace conezeta {

using Exponents = std::vector<long>;

/// e y^alpha / (1 - e y^alpha)^mu
struct Factor {
  RootOfUnity root;
  Exponents alpha;
  int mu = 1;

  /// First variable with nonzero exponent, or -1.
  int level() const;
  auto operator<=>(const Factor&) const = default;
};

/// Product of factors integrated with dy/y over (0,1) in every variable of
/// `integrated`; the remaining variables are parameters.
struct Term {
  std::size_t nvars = 0;
  std::uint64_t integrated = 0;
  std::vector<Factor> factors;  // sorted

  static Term make(std::size_t nvars, std::uint64_t integrated, std::vector<Factor> factors);
  bool is_integrated(std::size_t v) const { return (integrated >> v) & 1u; }
  std::size_t weight() const;
  auto operator<=>(const Term&) const = default;
};

using Combination = std::map<Term, CycloNumber>;
using FactorProducts = std::map<std::vector<Factor>, CycloNumber>;

void add_to(Combination& c, const Term& t, const CycloNumber& v);
void add_to(Combination& c, const Combination& other, const CycloNumber& scale = CycloNumber(1));

std::string to_string(const Factor& f);
std::string to_string(const Term& t);
std::string to_string(const Combination& c);

inline std::uint64_t bit(std::size_t v) { return std::uint64_t(1) << v; }

/// Integrand of a simplicial piece: generator values l_i(u_j) (rows = forms,
/// columns = generators), character values on the generators.
Term integral_expression(const std::vector<std::vector<Rational>>& values, const std::vector<RootOfUnity>& chi);

/// Every nonempty set J of generators meets more than |J| forms.
bool convergence_check(const std::vector<std::vector<Rational>>& values);

/// Variables dividing the numerator.
std::uint64_t zero_set(const Term& t);
/// Numerator divisible by y_1 ... y_k.
bool check_convergence_box(const Term& t, std::size_t k);

/// e w^c / (1 - e w^c)^mu as products of factors in w = y^{alpha / c}, c = alpha[level].
FactorProducts root_split(const Factor& f);
/// G_a(x) G_b(x) = G_{a+b}(x) - G_{a+b-1}(x).
FactorProducts merge_pair(const Factor& a, const Factor& b);
/// Two factors of the same level with exponent 1 there, not proportional.
FactorProducts partial_fraction_pair(const Factor& a, const Factor& b);

/// Set y_v = 1.
Term restrict_to_one(const Term& t, std::size_t v);

enum class NormalizeMode { SplitOnly, Full };

/// Folds constant factors, root-splits, merges equal factors and (Full) applies
/// partial fractions until every integrated level carries at most one factor.
Combination normalize(const Term& t, NormalizeMode mode = NormalizeMode::Full);

struct CoordinateChange {
  Rational jacobian;
  Term term;
};

/// Substitution y_i = prod_k u_k^{g_k[i]} for the flag of a rescaled derived
/// sequence whose level-0 forms include the exponent classes of `t`.
CoordinateChange change_coordinates(const Term& t, const DerivedSequence& rescaled);

}  // namespace conezeta
