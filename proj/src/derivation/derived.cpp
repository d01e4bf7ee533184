#include "conezeta/derivation/derived.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace conezeta {

namespace {

bool all_zero(const RationalVector& v) { return is_zero(v); }

RationalVector drop(const RationalVector& v, std::size_t k) {
  RationalVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k) out.push_back(v[i]);
  return out;
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Integer content(const IntVector& x) {
  Integer g = 0;
  for (const auto& c : x) g = gcd(g, c);
  return g;
}

}  // namespace

RationalVector form_values(const RationalVector& form, const std::vector<IntVector>& gens) {
  RationalVector out;
  for (const auto& g : gens) {
    Rational s = 0;
    for (std::size_t i = 0; i < form.size(); ++i) s += form[i] * g[i];
    out.push_back(s);
  }
  return out;
}

std::vector<IntVector> derived_set(const std::vector<RationalVector>& values, std::size_t apex) {
  std::vector<IntVector> out;
  std::vector<IntVector> classes;
  for (const auto& a : values) {
    if (apex >= a.size()) throw std::invalid_argument("derived_set: apex out of range");
    RationalVector r = drop(a, apex);
    if (all_zero(r)) throw std::invalid_argument("derived_set: form vanishes on the facet");
    out.push_back(primitive_class(r));
    classes.push_back(primitive_class(a));
  }
  sort_unique(classes);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const Integer& v1 = classes[i][apex];
      const Integer& v2 = classes[j][apex];
      if (v1 == 0 || v2 == 0) continue;
      RationalVector w(classes[i].size() - 1);
      std::size_t k = 0;
      for (std::size_t c = 0; c < classes[i].size(); ++c) {
        if (c == apex) continue;
        w[k++] = Rational(v1 * classes[j][c] - v2 * classes[i][c]);
      }
      if (!all_zero(w)) out.push_back(primitive_class(w));
    }
  sort_unique(out);
  return out;
}

ValidationResult validate(const DerivedSequence& d) {
  const std::size_t n = d.dim();
  if (d.levels.size() != n) return {false, "wrong number of levels"};
  if (rank(RationalMatrix::from_int_rows(d.cone.generators, d.cone.ambient_dim)) != n)
    return {false, "flag generators dependent"};
  for (std::size_t i = 0; i < n; ++i) {
    if (d.levels[i].empty()) return {false, "empty level " + std::to_string(i)};
    for (const auto& f : d.levels[i]) {
      if (f.size() != n - i) return {false, "level " + std::to_string(i) + ": form of wrong length"};
      bool pos = false, neg = false, nonzero_tail = false;
      for (std::size_t k = 0; k < f.size(); ++k) {
        pos |= f[k] > 0;
        neg |= f[k] < 0;
        if (k > 0 && f[k] != 0) nonzero_tail = true;
      }
      if (pos && neg) return {false, "(b) form not definite at level " + std::to_string(i)};
      if (!pos && !neg) return {false, "zero form at level " + std::to_string(i)};
      if (i + 1 < n && !nonzero_tail) return {false, "(a) form degenerate at level " + std::to_string(i)};
    }
    if (i + 1 < n) {
      std::vector<RationalVector> vals;
      for (const auto& f : d.levels[i]) vals.push_back(to_rational(f));
      auto derived = derived_set(vals, 0);
      std::set<IntVector> next(d.levels[i + 1].begin(), d.levels[i + 1].end());
      for (const auto& f : derived)
        if (!next.count(f)) return {false, "(c) derived set not contained in level " + std::to_string(i + 1)};
    }
  }
  return {};
}

bool has_standard_sign_pattern(const DerivedSequence& d) {
  for (const auto& level : d.levels)
    for (const auto& f : level) {
      for (const auto& x : f)
        if (x < 0) return false;
      if (f.back() <= 0) return false;
    }
  return true;
}

namespace {

std::vector<DerivedSequence> build_rec(const Cone& c, const std::vector<RationalVector>& forms) {
  const std::size_t d = c.ambient_dim;
  std::vector<DerivedSequence> out;
  for (const auto& piece : refine_definite(c, forms)) {
    const auto& gens = piece.cone.generators;
    if (d == 1) {
      DerivedSequence ds{piece.cone, {{}}};
      for (const auto& a : forms) {
        RationalVector v = form_values(a, gens);
        if (all_zero(v)) throw std::invalid_argument("build_derived_sequences: zero form");
        ds.levels[0].push_back(primitive_class(v));
      }
      sort_unique(ds.levels[0]);
      out.push_back(std::move(ds));
      continue;
    }
    const IntVector& g = gens[piece.apex];
    std::vector<IntVector> facet;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != piece.apex) facet.push_back(gens[i]);

    std::vector<RationalVector> vals;
    for (const auto& a : forms) vals.push_back(form_values(a, gens));
    std::vector<RationalVector> sub_forms;
    for (const auto& f : derived_set(vals, piece.apex)) sub_forms.push_back(to_rational(f));

    Cone sub_cone{d - 1, {}};
    for (std::size_t i = 0; i + 1 < d; ++i) {
      IntVector e(d - 1, 0);
      e[i] = 1;
      sub_cone.generators.push_back(e);
    }
    for (const auto& sub : build_rec(sub_cone, sub_forms)) {
      DerivedSequence ds;
      ds.cone.ambient_dim = d;
      ds.cone.generators.push_back(g);
      std::vector<Integer> scale;
      for (const auto& h : sub.cone.generators) {
        IntVector x(d, 0);
        for (std::size_t i = 0; i < h.size(); ++i)
          for (std::size_t k = 0; k < d; ++k) x[k] += h[i] * facet[i][k];
        Integer s = content(x);
        for (auto& v : x) v /= s;
        scale.push_back(s);
        ds.cone.generators.push_back(x);
      }
      std::vector<IntVector> level0;
      for (const auto& a : forms) level0.push_back(primitive_class(form_values(a, ds.cone.generators)));
      sort_unique(level0);
      ds.levels.push_back(std::move(level0));
      for (std::size_t i = 0; i < sub.levels.size(); ++i) {
        std::vector<IntVector> level;
        for (const auto& f : sub.levels[i]) {
          RationalVector r(f.size());
          for (std::size_t k = 0; k < f.size(); ++k) r[k] = Rational(f[k]) / scale[i + k];
          level.push_back(primitive_class(r));
        }
        sort_unique(level);
        ds.levels.push_back(std::move(level));
      }
      out.push_back(std::move(ds));
    }
  }
  return out;
}

}  // namespace

std::vector<DerivedSequence> build_derived_sequences(const Cone& c, const std::vector<RationalVector>& forms) {
  if (cone_dimension(c) != c.ambient_dim) throw std::invalid_argument("build_derived_sequences: cone not full dimensional");
  std::vector<RationalVector> classes;
  std::set<IntVector> seen;
  for (const auto& a : forms) {
    if (a.size() != c.ambient_dim) throw std::invalid_argument("build_derived_sequences: form of wrong length");
    if (all_zero(a)) throw std::invalid_argument("build_derived_sequences: zero form");
    IntVector p = primitive_class(a);
    if (seen.insert(p).second) classes.push_back(to_rational(p));
  }
  std::sort(classes.begin(), classes.end());
  return build_rec(c, classes);
}

Rescaled primitive_rescale(const DerivedSequence& d) {
  const std::size_t n = d.dim();
  std::vector<Integer> e(n, 1);
  for (std::size_t j = 1; j < n; ++j) {
    Integer acc = 1;
    for (std::size_t i = 0; i < d.levels.size(); ++i)
      for (const auto& f : d.levels[i]) {
        if (j < i) continue;
        const Integer& vj = f[j - i];
        if (vj == 0) continue;
        for (std::size_t p = i; p < j; ++p) {
          const Integer& vp = f[p - i];
          if (vp == 0) continue;
          Rational ratio(vj, vp * e[p]);
          ratio.canonicalize();
          acc = lcm(acc, ratio.get_den());
        }
      }
    e[j] = acc;
  }
  Rescaled out;
  out.scale = e;
  out.sequence.cone.ambient_dim = d.cone.ambient_dim;
  for (std::size_t k = 0; k < n; ++k) {
    IntVector g = d.cone.generators[k];
    for (auto& x : g) x *= e[k];
    out.sequence.cone.generators.push_back(g);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<IntVector> level;
    for (const auto& f : d.levels[i]) {
      RationalVector r(f.size());
      for (std::size_t k = 0; k < f.size(); ++k) r[k] = Rational(f[k] * e[i + k]);
      level.push_back(primitive_class(r));
    }
    sort_unique(level);
    out.sequence.levels.push_back(std::move(level));
  }
  return out;
}

std::vector<IntVector> variable_part(const DerivedSequence& d, std::size_t level) {
  if (level >= d.levels.size()) throw std::invalid_argument("variable_part: level out of range");
  std::vector<IntVector> out;
  for (const auto& f : d.levels[level]) {
    if (f[0] == 0) continue;
    IntVector rep(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] % f[0] != 0) throw std::invalid_argument("variable_part: sequence is not primitively rescaled");
      rep[k] = f[k] / f[0];
    }
    out.push_back(std::move(rep));
  }
  sort_unique(out);
  return out;
}

DerivedSequence restrict_derived(const DerivedSequence& d, const FaceIndices& face) {
  const std::size_t n = d.dim();
  if (face.empty() || face.back() != n - 1) throw std::invalid_argument("restrict_derived: face is irregular");
  for (std::size_t j = 1; j < face.size(); ++j)
    if (face[j] <= face[j - 1]) throw std::invalid_argument("restrict_derived: face indices not sorted");
  DerivedSequence out;
  out.cone.ambient_dim = d.cone.ambient_dim;
  for (auto i : face) out.cone.generators.push_back(d.cone.generators[i]);
  for (std::size_t j = 0; j < face.size(); ++j) {
    const std::size_t lvl = face[j];
    std::vector<IntVector> level;
    for (const auto& f : d.levels[lvl]) {
      RationalVector r;
      for (std::size_t t = j; t < face.size(); ++t) r.push_back(Rational(f[face[t] - lvl]));
      if (all_zero(r)) throw std::logic_error("restrict_derived: form vanishes on a regular face");
      level.push_back(primitive_class(r));
    }
    sort_unique(level);
    out.levels.push_back(std::move(level));
  }
  return out;
}

}  // namespace conezeta
