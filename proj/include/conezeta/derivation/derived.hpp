#pragma once

#include <string>
#include <vector>

#include "conezeta/exact/rational.hpp"
#include "conezeta/geometry/cone.hpp"

namespace conezeta {

/// Flagged simplicial cone with level form sets. Generators g_1..g_n in order
/// give the flag Δ^(i) = cone(g_{i+1}, ..., g_n). A level-i form is stored by its
/// values on g_{i+1}, ..., g_n (its standard coordinates), as the primitive
/// class representative (integer, gcd 1, first nonzero entry positive).
struct DerivedSequence {
  SimplicialCone cone;
  std::vector<std::vector<IntVector>> levels;

  std::size_t dim() const { return cone.dim(); }
};

/// D_F(S) for forms given by their values on the generators of a simplicial
/// cone; F is the facet opposite generator `apex`, v = that generator.
/// Result: classes on F as values on the remaining generators (order kept),
/// sorted and deduplicated. Throws std::invalid_argument if some form vanishes on F.
std::vector<IntVector> derived_set(const std::vector<RationalVector>& values, std::size_t apex);

struct ValidationResult {
  bool ok = true;
  std::string message;
};

/// Checks conditions (a), (b), (c) of a derived sequence.
ValidationResult validate(const DerivedSequence& d);
/// Sign pattern: zero on eta_1..eta_i (implicit), nonnegative afterwards and
/// strictly positive on eta_n.
bool has_standard_sign_pattern(const DerivedSequence& d);

/// Decomposes a full-dimensional cone into flagged pieces carrying derived
/// sequences whose level-0 sets are the classes of `forms`.
std::vector<DerivedSequence> build_derived_sequences(const Cone& c, const std::vector<RationalVector>& forms);

struct Rescaled {
  std::vector<Integer> scale;  // e_1..e_n
  DerivedSequence sequence;    // generators e_k g_k, levels re-expressed
};

/// Natural numbers e_k such that after g_k -> e_k g_k every class that does
/// not vanish at positions p < j has value ratio v_j / v_p in N. Pairs are
/// taken over every position, which keeps primitivity under restriction to
/// regular faces.
Rescaled primitive_rescale(const DerivedSequence& d);

/// Primitive representatives (leading entry 1, natural entries) of the level-i
/// forms not vanishing on g_{i+1}. Requires a rescaled sequence.
std::vector<IntVector> variable_part(const DerivedSequence& d, std::size_t level);

/// Restriction to the regular face spanned by the generators at `face`
/// (sorted 0-based positions, containing n-1).
DerivedSequence restrict_derived(const DerivedSequence& d, const FaceIndices& face);

/// Values of an ambient form on the generators.
RationalVector form_values(const RationalVector& form, const std::vector<IntVector>& gens);

}  // namespace conezeta
