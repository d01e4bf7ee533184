#include "conezeta/cli/pipeline.hpp"

#include "conezeta/derivation/derived.hpp"
#include "conezeta/exact/character.hpp"
#include "conezeta/geometry/cone.hpp"
#include "conezeta/polylog/regularize.hpp"

namespace conezeta {

namespace {

Rational evaluate_form(const RationalVector& form, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < form.size(); ++i) s += form[i] * x[i];
  return s;
}

}  // namespace

void validate_job(const JobSpec& job) {
  const std::size_t m = job.ambient_dim;
  if (m == 0) throw PipelineError("VALIDATION", "ambient dimension must be positive");
  if (job.generators.empty()) throw PipelineError("VALIDATION", "cone has no generators");
  if (job.forms.empty()) throw PipelineError("VALIDATION", "no forms");
  if (job.forms.size() > 63) throw PipelineError("VALIDATION", "too many forms");
  for (const auto& g : job.generators)
    if (g.size() != m) throw PipelineError("VALIDATION", "generator of wrong length");
  for (const auto& f : job.forms)
    if (f.size() != m) throw PipelineError("VALIDATION", "form of wrong length");
  if (job.modulus < 1) throw PipelineError("VALIDATION", "character modulus must be >= 1");
  if (job.character.size() != m) throw PipelineError("VALIDATION", "character vector length differs from ambient dimension");
  Cone c{m, job.generators};
  for (const auto& g : c.generators)
    if (is_zero(to_rational(g))) throw PipelineError("VALIDATION", "zero generator");
  if (contains_line(c)) throw PipelineError("VALIDATION", "cone contains a line");
  for (const auto& f : job.forms) {
    bool positive = false;
    for (const auto& g : c.generators) {
      Rational v = evaluate_form(f, to_rational(g));
      if (v < 0) throw PipelineError("POSITIVITY", "form negative on a generator");
      positive |= v > 0;
    }
    if (!positive) throw PipelineError("POSITIVITY", "form vanishes on the cone");
  }
}

std::vector<PieceIntegral> piece_integrals(const JobSpec& job) {
  validate_job(job);
  const std::size_t m = job.ambient_dim;
  Cone c = clean_cone({m, job.generators});
  LatticeCharacter chi(Lattice::standard(m), job.modulus, job.character);
  auto pieces = open_simplicial_decomposition(c);
  std::vector<PieceIntegral> out;
  for (const auto& p : pieces) {
    FreeSuperlattice fs = free_superlattice(p.cone, p.lattice);
    LatticeCharacter restricted = chi.restrict_to(p.lattice);
    auto psis = induced_character_decompose(fs.lattice, restricted);
    const std::size_t n = job.forms.size(), d = fs.generators.size();
    std::vector<std::vector<Rational>> values(n, std::vector<Rational>(d));
    Rational scale(1, static_cast<long>(psis.size()));
    for (std::size_t i = 0; i < n; ++i) {
      Integer den = 1;
      for (std::size_t j = 0; j < d; ++j) {
        values[i][j] = evaluate_form(job.forms[i], fs.generators[j]);
        den = lcm(den, values[i][j].get_den());
      }
      for (auto& v : values[i]) {
        v *= den;
        v.canonicalize();
      }
      scale *= den;
    }
    if (!convergence_check(values)) throw PipelineError("DIVERGENT", "the series diverges on a simplicial piece");
    for (const auto& psi : psis) {
      PieceIntegral pi{scale, values, {}};
      for (const auto& g : fs.generators) pi.chi.push_back(psi(g));
      out.push_back(std::move(pi));
    }
    if (out.size() > job.options.max_pieces) throw PipelineError("BUDGET", "piece budget exceeded");
  }
  return out;
}

ReductionResult reduce_job(const JobSpec& job, bool with_trace) {
  auto integrals = piece_integrals(job);
  ReductionResult res;
  res.pieces = integrals.size();
  const std::size_t n = job.forms.size();
  const std::size_t param = n - 1;
  Cone orthant{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    orthant.generators.push_back(e);
  }

  // flag decompositions depend only on the exponent classes
  std::map<std::vector<IntVector>, std::vector<DerivedSequence>> flag_cache;
  Combination total;
  for (const auto& pi : integrals) {
    Term t = integral_expression(pi.values, pi.chi);
    std::vector<IntVector> classes;
    for (const auto& f : t.factors) {
      RationalVector a;
      for (long x : f.alpha) a.emplace_back(x);
      classes.push_back(primitive_class(a));
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    auto it = flag_cache.find(classes);
    if (it == flag_cache.end()) {
      std::vector<RationalVector> forms;
      for (const auto& cl : classes) forms.push_back(to_rational(cl));
      std::vector<DerivedSequence> rescaled;
      for (const auto& ds : build_derived_sequences(orthant, forms)) rescaled.push_back(primitive_rescale(ds).sequence);
      if (with_trace) res.sequences.insert(res.sequences.end(), rescaled.begin(), rescaled.end());
      it = flag_cache.emplace(classes, std::move(rescaled)).first;
    }
    for (const auto& ds : it->second) {
      auto cc = change_coordinates(t, ds);
      Term u = Term::make(n, t.integrated & ~bit(param), cc.term.factors);
      add_to(total, u, CycloNumber(pi.scale * cc.jacobian));
      ++res.flagged_pieces;
    }
    if (res.flagged_pieces > job.options.max_pieces) throw PipelineError("BUDGET", "piece budget exceeded");
  }
  res.univariate_terms = total.size();

  Reducer reducer(param, with_trace ? &res.trace : nullptr);
  PNormalForm iy = reducer.reduce_to_univariate(total);
  PNormalForm f = integrate_P(iy, Kernel::dt_over_t());
  auto reg = regularize_limit(f);
  res.value = std::move(reg.finite);
  res.divergent = std::move(reg.divergent);
  return res;
}

}  // namespace conezeta
