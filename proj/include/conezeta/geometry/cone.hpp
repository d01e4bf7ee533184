#pragma once

#include <cstddef>
#include <vector>

#include "conezeta/exact/linalg.hpp"
#include "conezeta/exact/rational.hpp"
#include "conezeta/geometry/lattice.hpp"

namespace conezeta {

/// Cone R+ v_1 + ... + R+ v_b in R^m, generators primitive integer vectors.
struct Cone {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> generators;
};

/// Generators linearly independent.
struct SimplicialCone {
  std::size_t ambient_dim = 0;
  std::vector<IntVector> generators;
  std::size_t dim() const { return generators.size(); }
};

struct Facet {
  IntVector normal;                  // inward, primitive
  std::vector<std::size_t> members;  // generator indices with normal . g == 0
};

std::size_t cone_dimension(const Cone& c);
bool contains_line(const Cone& c);
/// Primitive generators, duplicates and redundant generators removed, order
/// of first appearance kept. Throws std::invalid_argument on zero generators
/// or a cone containing a line.
Cone clean_cone(const Cone& c);
/// Facets of a cone that is full dimensional in R^m.
std::vector<Facet> facets(const Cone& c);

/// Placing triangulation with the cone's own rays, processed in order, after
/// clean_cone. Works in the linear span when the cone is not full dimensional.
std::vector<SimplicialCone> triangulate(const Cone& c);

struct OpenPiece {
  SimplicialCone cone;  // relative interior is the piece
  Lattice lattice;      // span ∩ Z^m
};

/// C° as a disjoint union of relatively open simplicial cones.
std::vector<OpenPiece> open_simplicial_decomposition(const Cone& c);

/// x in relative interior of the simplicial cone (exact).
bool in_relative_interior(const SimplicialCone& s, const RationalVector& x);
/// x in C° (interior relative to the span of C).
bool in_cone_interior(const Cone& c, const RationalVector& x);
bool in_closed_cone(const Cone& c, const RationalVector& x);

struct RefinedPiece {
  SimplicialCone cone;
  std::size_t apex = 0;  // generator not on the chosen facet
};

/// Subdivides a full-dimensional cone into simplicial cones on which every
/// form is definite, each with a facet on which no form vanishes.
std::vector<RefinedPiece> refine_definite(const Cone& c, const std::vector<RationalVector>& forms);

/// Ordered generators g_1..g_n of a simplicial cone; Δ^(i) = cone(g_{i+1..n}).
struct Flag {
  SimplicialCone cone;
};

/// Rows are eta_1..eta_n as forms on the ambient space: eta_k(g_j) = delta_kj.
RationalMatrix standard_coordinates(const Flag& flag);

/// Faces of a simplicial cone are subsets of generator indices.
using FaceIndices = std::vector<std::size_t>;
FaceIndices dual_face(const SimplicialCone& s, const FaceIndices& face);
std::vector<IntVector> linear_join(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

struct RegularFaceInfo {
  FaceIndices irregular;                     // dual of the last ray
  std::vector<FaceIndices> regular;          // each contains the last index, sorted
};
RegularFaceInfo regular_faces(const Flag& flag);

struct FreeSuperlattice {
  Lattice lattice;
  std::vector<RationalVector> generators;  // g_j / c
  Integer scale;                           // c
};
FreeSuperlattice free_superlattice(const SimplicialCone& s, const Lattice& l);

}  // namespace conezeta
