#include "conezeta/geometry/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace conezeta {

namespace {

Rational eval(const IntVector& n, const IntVector& g) {
  Integer acc = 0;
  for (std::size_t i = 0; i < n.size(); ++i) acc += n[i] * g[i];
  return acc;
}

Rational eval(const RationalVector& a, const IntVector& g) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * g[i];
  return acc;
}

int sign(const Rational& q) { return sgn(q); }

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::size_t int_rank(const std::vector<IntVector>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(RationalMatrix::from_int_rows(rows, cols));
}

/// Primitive normal to the hyperplane spanned by d-1 independent vectors in R^d.
IntVector hyperplane_normal(const std::vector<IntVector>& rows, std::size_t d) {
  if (rows.empty()) {
    IntVector n(d, 0);
    n[0] = 1;
    return n;
  }
  auto ns = nullspace(RationalMatrix::from_int_rows(rows, d));
  if (ns.size() != 1) throw std::logic_error("hyperplane_normal: degenerate input");
  return primitive(ns[0]);
}

/// Coordinates of a cone in its own span, as a cone in Z^d.
struct SpanView {
  Lattice lattice;
  std::vector<IntVector> gens;  // in lattice coordinates
};

SpanView span_view(const Cone& c) {
  SpanView v{saturated_lattice(c.ambient_dim, c.generators), {}};
  for (const auto& g : c.generators) {
    auto co = v.lattice.coords(to_rational(g));
    if (!co) throw std::logic_error("span_view: generator outside its span");
    v.gens.push_back(*co);
  }
  return v;
}

std::vector<Facet> facets_full(const std::vector<IntVector>& gens, std::size_t d) {
  std::vector<Facet> out;
  std::set<IntVector> seen;
  if (d == 0) return out;
  for (const auto& sub : combinations(gens.size(), d - 1)) {
    std::vector<IntVector> rows;
    for (auto i : sub) rows.push_back(gens[i]);
    if (int_rank(rows, d) != d - 1) continue;
    IntVector n = hyperplane_normal(rows, d);
    if (d == 1) {
      // the single "facet" of a ray is {0}
      n[0] = gens.empty() ? 1 : (gens[0][0] > 0 ? 1 : -1);
    }
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sign(eval(n, g));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) continue;
    if (neg)
      for (auto& x : n) x = -x;
    if (!seen.insert(n).second) continue;
    Facet f{n, {}};
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (eval(n, gens[i]) == 0) f.members.push_back(i);
    out.push_back(std::move(f));
  }
  return out;
}

bool line_in_full(const std::vector<IntVector>& gens, std::size_t d) {
  if (d == 0) return true;
  auto fs = facets_full(gens, d);
  std::vector<IntVector> normals;
  for (const auto& f : fs) normals.push_back(f.normal);
  return int_rank(normals, d) < d;
}

std::vector<std::size_t> extreme_indices(const std::vector<IntVector>& gens, std::size_t d) {
  std::vector<std::size_t> out;
  if (d == 1) return {0};
  auto fs = facets_full(gens, d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<IntVector> normals;
    for (const auto& f : fs)
      if (std::find(f.members.begin(), f.members.end(), i) != f.members.end()) normals.push_back(f.normal);
    if (int_rank(normals, d) == d - 1) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVector>& gens, std::size_t d) {
  std::vector<std::size_t> initial;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < gens.size() && initial.size() < d; ++i) {
    rows.push_back(gens[i]);
    if (int_rank(rows, d) == rows.size())
      initial.push_back(i);
    else
      rows.pop_back();
  }
  if (initial.size() != d) throw std::logic_error("placing_triangulation: cone not full dimensional");
  std::vector<std::vector<std::size_t>> simplices{initial};
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (std::find(initial.begin(), initial.end(), r) != initial.end()) continue;
    std::map<std::vector<std::size_t>, int> count;
    for (const auto& s : simplices)
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
        ++count[f];
      }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& s : simplices)
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
        if (count[f] != 1) continue;
        std::vector<IntVector> frows;
        for (auto i : f) frows.push_back(gens[i]);
        IntVector n = hyperplane_normal(frows, d);
        if (eval(n, gens[s[j]]) < 0)
          for (auto& x : n) x = -x;
        if (eval(n, gens[r]) < 0) {
          f.push_back(r);
          std::sort(f.begin(), f.end());
          added.push_back(f);
        }
      }
    simplices.insert(simplices.end(), added.begin(), added.end());
  }
  return simplices;
}

}  // namespace

std::size_t cone_dimension(const Cone& c) { return int_rank(c.generators, c.ambient_dim); }

bool contains_line(const Cone& c) {
  SpanView v = span_view(c);
  return line_in_full(v.gens, v.lattice.rank());
}

Cone clean_cone(const Cone& c) {
  Cone out{c.ambient_dim, {}};
  std::set<IntVector> seen;
  for (const auto& g : c.generators) {
    if (g.size() != c.ambient_dim) throw std::invalid_argument("cone generator of wrong dimension");
    IntVector p = primitive(g);
    bool zero = std::all_of(p.begin(), p.end(), [](const Integer& x) { return x == 0; });
    if (zero) throw std::invalid_argument("cone generator is zero");
    if (seen.insert(p).second) out.generators.push_back(p);
  }
  if (out.generators.empty()) throw std::invalid_argument("cone has no generators");
  SpanView v = span_view(out);
  const std::size_t d = v.lattice.rank();
  if (line_in_full(v.gens, d)) throw std::invalid_argument("cone contains a line");
  Cone reduced{c.ambient_dim, {}};
  for (auto i : extreme_indices(v.gens, d)) reduced.generators.push_back(out.generators[i]);
  return reduced;
}

std::vector<Facet> facets(const Cone& c) {
  if (cone_dimension(c) != c.ambient_dim) throw std::invalid_argument("facets: cone not full dimensional");
  return facets_full(c.generators, c.ambient_dim);
}

std::vector<SimplicialCone> triangulate(const Cone& input) {
  Cone c = clean_cone(input);
  SpanView v = span_view(c);
  std::vector<SimplicialCone> out;
  for (const auto& s : placing_triangulation(v.gens, v.lattice.rank())) {
    SimplicialCone sc{c.ambient_dim, {}};
    for (auto i : s) sc.generators.push_back(c.generators[i]);
    out.push_back(std::move(sc));
  }
  return out;
}

std::vector<OpenPiece> open_simplicial_decomposition(const Cone& input) {
  Cone c = clean_cone(input);
  SpanView v = span_view(c);
  const std::size_t d = v.lattice.rank();
  auto simplices = placing_triangulation(v.gens, d);
  auto fs = facets_full(v.gens, d);
  std::set<std::vector<std::size_t>> faces;
  for (const auto& s : simplices)
    for (std::size_t k = 1; k <= s.size(); ++k)
      for (const auto& sub : combinations(s.size(), k)) {
        std::vector<std::size_t> f;
        for (auto i : sub) f.push_back(s[i]);
        faces.insert(f);
      }
  std::vector<std::vector<std::size_t>> interior;
  for (const auto& f : faces) {
    bool in_boundary = false;
    for (const auto& fa : fs)
      if (std::includes(fa.members.begin(), fa.members.end(), f.begin(), f.end())) {
        in_boundary = true;
        break;
      }
    if (!in_boundary) interior.push_back(f);
  }
  std::stable_sort(interior.begin(), interior.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<OpenPiece> out;
  for (const auto& f : interior) {
    SimplicialCone sc{c.ambient_dim, {}};
    for (auto i : f) sc.generators.push_back(c.generators[i]);
    Lattice l = saturated_lattice(c.ambient_dim, sc.generators);
    out.push_back({std::move(sc), std::move(l)});
  }
  return out;
}

bool in_relative_interior(const SimplicialCone& s, const RationalVector& x) {
  RationalMatrix g(s.ambient_dim, s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < s.ambient_dim; ++i) g(i, j) = s.generators[j][i];
  auto lam = solve(g, x);
  if (!lam) return false;
  return std::all_of(lam->begin(), lam->end(), [](const Rational& q) { return q > 0; });
}

namespace {

bool cone_test(const Cone& input, const RationalVector& x, bool strict) {
  Cone c = clean_cone(input);
  SpanView v = span_view(c);
  auto co = v.lattice.rational_coords(x);
  if (!co) return false;
  const std::size_t d = v.lattice.rank();
  for (const auto& f : facets_full(v.gens, d)) {
    Rational val = 0;
    for (std::size_t i = 0; i < d; ++i) val += f.normal[i] * (*co)[i];
    if (strict ? val <= 0 : val < 0) return false;
  }
  return true;
}

}  // namespace

bool in_cone_interior(const Cone& c, const RationalVector& x) { return cone_test(c, x, true); }
bool in_closed_cone(const Cone& c, const RationalVector& x) { return cone_test(c, x, false); }

std::vector<RefinedPiece> refine_definite(const Cone& c, const std::vector<RationalVector>& forms) {
  const std::size_t d = c.ambient_dim;
  if (cone_dimension(c) != d) throw std::invalid_argument("refine_definite: cone not full dimensional");
  for (const auto& a : forms)
    if (is_zero(a)) throw std::invalid_argument("refine_definite: zero form");
  std::vector<SimplicialCone> pieces = triangulate(c);
  if (d == 1) return {{pieces.front(), 0}};

  for (const auto& a : forms) {
    std::vector<SimplicialCone> next;
    for (auto& s : pieces) {
      std::vector<IntVector> pos, neg, zero;
      for (const auto& g : s.generators) {
        int sg = sign(eval(a, g));
        (sg > 0 ? pos : sg < 0 ? neg : zero).push_back(g);
      }
      if (pos.empty() || neg.empty()) {
        next.push_back(std::move(s));
        continue;
      }
      std::vector<IntVector> cross;
      for (const auto& p : pos)
        for (const auto& q : neg) {
          Rational ap = eval(a, p), aq = eval(a, q);
          RationalVector w(d);
          for (std::size_t i = 0; i < d; ++i) w[i] = ap * q[i] - aq * p[i];
          cross.push_back(primitive(w));
        }
      for (auto* side : {&pos, &neg}) {
        Cone half{d, *side};
        half.generators.insert(half.generators.end(), zero.begin(), zero.end());
        half.generators.insert(half.generators.end(), cross.begin(), cross.end());
        for (auto& t : triangulate(half)) next.push_back(std::move(t));
      }
    }
    pieces = std::move(next);
  }

  std::vector<RefinedPiece> out;
  for (const auto& s : pieces) {
    std::size_t chosen = s.dim();
    for (std::size_t j = 0; j < s.dim() && chosen == s.dim(); ++j) {
      bool ok = true;
      for (const auto& a : forms) {
        bool nonzero = false;
        for (std::size_t i = 0; i < s.dim(); ++i)
          if (i != j && eval(a, s.generators[i]) != 0) nonzero = true;
        if (!nonzero) {
          ok = false;
          break;
        }
      }
      if (ok) chosen = j;
    }
    if (chosen < s.dim()) {
      out.push_back({s, chosen});
      continue;
    }
    // stellar subdivision at the generator sum; every form is nonzero there
    RationalVector b(d);
    for (const auto& g : s.generators)
      for (std::size_t i = 0; i < d; ++i) b[i] += g[i];
    IntVector bary = primitive(b);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      SimplicialCone t = s;
      t.generators[j] = bary;
      out.push_back({std::move(t), j == 0 ? std::size_t{1} : std::size_t{0}});
    }
  }
  return out;
}

RationalMatrix standard_coordinates(const Flag& flag) {
  const auto& s = flag.cone;
  if (s.dim() != s.ambient_dim) throw std::invalid_argument("standard_coordinates: flag cone not full dimensional");
  RationalMatrix g(s.ambient_dim, s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j)
    for (std::size_t i = 0; i < s.ambient_dim; ++i) g(i, j) = s.generators[j][i];
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("standard_coordinates: generators dependent");
  return *inv;
}

FaceIndices dual_face(const SimplicialCone& s, const FaceIndices& face) {
  std::vector<bool> in(s.dim(), false);
  for (auto i : face) {
    if (i >= s.dim()) throw std::invalid_argument("dual_face: not a face");
    in[i] = true;
  }
  FaceIndices out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

std::vector<IntVector> linear_join(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<IntVector> out = a;
  for (const auto& g : b)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

RegularFaceInfo regular_faces(const Flag& flag) {
  const std::size_t n = flag.cone.dim();
  RegularFaceInfo info;
  for (std::size_t i = 0; i + 1 < n; ++i) info.irregular.push_back(i);
  for (std::size_t k = n; k >= 1; --k)
    for (const auto& sub : combinations(n - 1, k - 1)) {
      FaceIndices f = sub;
      f.push_back(n - 1);
      info.regular.push_back(f);
    }
  return info;
}

FreeSuperlattice free_superlattice(const SimplicialCone& s, const Lattice& l) {
  const std::size_t d = s.dim();
  if (l.rank() != d) throw std::invalid_argument("free_superlattice: lattice rank differs from cone dimension");
  RationalMatrix g(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto co = l.coords(to_rational(s.generators[j]));
    if (!co) throw std::invalid_argument("free_superlattice: generator not in lattice");
    for (std::size_t i = 0; i < d; ++i) g(j, i) = (*co)[i];
  }
  auto inv = inverse(g);
  if (!inv) throw std::invalid_argument("free_superlattice: generators dependent");
  Integer c = 1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c = lcm(c, (*inv)(i, j).get_den());
  std::vector<RationalVector> gens;
  for (const auto& v : s.generators) {
    RationalVector x = to_rational(v);
    for (auto& q : x) q /= c;
    gens.push_back(std::move(x));
  }
  return {Lattice(s.ambient_dim, gens), gens, c};
}

}  // namespace conezeta
