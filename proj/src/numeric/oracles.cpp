#include "conezeta/numeric/oracles.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "conezeta/exact/linalg.hpp"
#include "conezeta/polylog/word_numeric.hpp"

namespace conezeta {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;

// int_N^inf (1 + ln t)^p t^{-k} dt for k > 1
double log_power_tail(int p, int k, double N) {
  if (p < 0) return 0;
  const double a = k - 1, u0 = 1 + std::log(N);
  double s = 0, fall = 1;
  for (int i = 0; i <= p; ++i) {
    s += fall * std::pow(u0, p - i) / std::pow(a, i + 1);
    fall *= p - i;
  }
  return s * std::pow(N, -a);
}

double mzv_tail(const MZVSymbol& s, double N) {
  const int m = static_cast<int>(s.k.size());
  const int k = s.k.back();
  if (k >= 2) return log_power_tail(m - 1, k, N);
  const double gap = std::abs(1.0 - s.roots.back().to_complex());
  return 2 / gap *
         (std::pow(1 + std::log(N + 1), m - 1) / (N + 1) + log_power_tail(m - 2, 2, N) + log_power_tail(m - 1, 2, N));
}

}  // namespace

EvalResult eval_mzv(const MZVSymbol& s, double eps, long long max_terms) {
  if (s.k.empty()) return {1.0, 0, "empty", 0};
  if (!s.convergent()) throw std::invalid_argument("eval_mzv: divergent symbol " + to_string(s));
  const std::size_t m = s.k.size();
  long long N = 16;
  while (mzv_tail(s, static_cast<double>(N)) > eps) {
    N *= 2;
    if (N > max_terms) throw std::runtime_error("eval_mzv: tolerance unreachable within the term budget");
  }
  // chains n_1 < ... < n_m with weights eps_j^{n_j} / n_j^{k_j}, eps_j = chi_j / chi_{j+1}
  std::vector<cd> step(m);
  for (std::size_t j = 0; j < m; ++j) {
    RootOfUnity e = j + 1 < m ? s.roots[j] * s.roots[j + 1].pow(-1) : s.roots[j];
    step[j] = e.to_complex();
  }
  std::vector<cld> partial(m + 1, 0);
  partial[0] = 1;
  std::vector<cd> power(m, 1.0);
  for (long long n = 1; n <= N; ++n) {
    for (std::size_t j = m; j-- > 0;) {
      power[j] *= step[j];
      if ((n & 1023) == 0) power[j] /= std::abs(power[j]);
      const long double w = std::pow(static_cast<long double>(n), -s.k[j]);
      partial[j + 1] += partial[j] * cld(power[j]) * w;
    }
  }
  EvalResult r;
  r.value = cd(partial[m]);
  r.error_bound = mzv_tail(s, static_cast<double>(N)) + 1e-17 * static_cast<double>(N);
  r.method = "nested sum with integral tail bound";
  r.terms_used = N;
  return r;
}

std::complex<double> symbol_value(const MZVSymbol& s, int digits) {
  if (s.k.empty()) return 1.0;
  Word w = word_from_blocks({s.k.rbegin(), s.k.rend()}, {s.roots.rbegin(), s.roots.rend()});
  cd prefactor = 1.0;
  for (const auto& r : s.roots) prefactor *= r.to_complex();
  if (digits <= 16) return prefactor * word_value<double>(w, 1.0);
  using big = boost::multiprecision::cpp_bin_float_50;
  auto v = word_value<big>(w, big(1));
  return prefactor * cd(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

EvalResult eval_zexpression(const ZExpression& z, int digits) {
  EvalResult r;
  double scale = 0;
  for (const auto& [s, c] : z) {
    const cd coeff = c.to_complex();
    r.value += coeff * symbol_value(s, digits);
    scale += std::abs(coeff);
  }
  r.error_bound = scale * (digits <= 16 ? 1e-11 : 1e-14);
  r.method = digits <= 16 ? "iterated integrals, double" : "iterated integrals, 50 digits";
  r.terms_used = static_cast<long long>(z.size());
  r.heuristic = true;
  return r;
}

namespace {

struct Facets {
  std::vector<std::vector<std::int64_t>> normals;
};

Facets facet_normals(const Cone& c) {
  const std::size_t m = c.ambient_dim;
  Facets f;
  if (m == 1) {
    bool pos = false, neg = false;
    for (const auto& g : c.generators) (g[0] > 0 ? pos : neg) = true;
    if (pos && neg) throw std::invalid_argument("eval_cone_zeta: cone contains a line");
    f.normals.push_back({pos ? 1 : -1});
    return f;
  }
  std::vector<RationalVector> gens;
  for (const auto& g : c.generators) gens.push_back(to_rational(g));
  if (rank(RationalMatrix::from_rows(gens, m)) != m) throw std::invalid_argument("eval_cone_zeta: cone is not full-dimensional");
  const std::size_t k = gens.size();
  std::vector<std::size_t> idx(m - 1);
  for (std::size_t i = 0; i < m - 1; ++i) idx[i] = i;
  while (true) {
    std::vector<RationalVector> rows;
    for (auto i : idx) rows.push_back(gens[i]);
    auto ker = nullspace(RationalMatrix::from_rows(rows, m));
    if (ker.size() == 1) {
      IntVector n = primitive(ker[0]);
      bool pos = false, neg = false;
      for (const auto& g : c.generators) {
        Integer v = 0;
        for (std::size_t i = 0; i < m; ++i) v += n[i] * g[i];
        pos |= v > 0;
        neg |= v < 0;
      }
      if (pos != neg) {
        std::vector<std::int64_t> out;
        for (const auto& x : n) out.push_back(neg ? -to_int64(x) : to_int64(x));
        if (std::find(f.normals.begin(), f.normals.end(), out) == f.normals.end()) f.normals.push_back(out);
      }
    }
    std::size_t p = m - 1;
    while (p-- > 0)
      if (idx[p] != p + k - (m - 1)) break;
    if (p == static_cast<std::size_t>(-1)) break;
    ++idx[p];
    for (std::size_t q = p + 1; q < m - 1; ++q) idx[q] = idx[q - 1] + 1;
  }
  return f;
}

// least squares for the coefficient of the constant basis function
cd fit_constant(const std::vector<double>& R, const std::vector<cd>& S, int m, bool extra) {
  std::vector<std::vector<double>> rows;
  for (double r : R) {
    std::vector<double> b{1};
    const double L = std::log(r);
    for (int j = 0; j < m; ++j) b.push_back(std::pow(L, j) / r);
    b.push_back(1 / (r * r));
    if (extra) b.push_back(L / (r * r));
    rows.push_back(b);
  }
  const std::size_t p = rows[0].size();
  // normal equations, solved separately for real and imaginary parts
  std::vector<std::vector<long double>> A(p, std::vector<long double>(p + 2, 0));
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) A[a][b] += static_cast<long double>(rows[i][a]) * rows[i][b];
      A[a][p] += static_cast<long double>(rows[i][a]) * S[i].real();
      A[a][p + 1] += static_cast<long double>(rows[i][a]) * S[i].imag();
    }
  for (std::size_t c = 0; c < p; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < p; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[piv][c])) piv = r;
    std::swap(A[c], A[piv]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == c) continue;
      const long double f = A[r][c] / A[c][c];
      for (std::size_t q = c; q < p + 2; ++q) A[r][q] -= f * A[c][q];
    }
  }
  return {static_cast<double>(A[0][p] / A[0][0]), static_cast<double>(A[0][p + 1] / A[0][0])};
}

}  // namespace

ConeZetaResult eval_cone_zeta(const Cone& c, const std::vector<RationalVector>& forms, const CharacterData& chi,
                              double eps, long long budget) {
  const std::size_t m = c.ambient_dim;
  const std::size_t n = forms.size();
  if (m == 0 || m > 4) throw std::invalid_argument("eval_cone_zeta: ambient dimension must be 1..4");
  if (chi.exponents.size() != m || chi.modulus < 1) throw std::invalid_argument("eval_cone_zeta: bad character");
  Facets facets = facet_normals(c);
  if (budget <= 0) budget = m == 1 ? 4'000'000 : 60'000'000;

  // integer forms with their scales
  std::vector<std::vector<std::int64_t>> iform(n);
  std::vector<double> iscale(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer den = 1;
    for (const auto& q : forms[i]) den = lcm(den, q.get_den());
    for (const auto& q : forms[i]) iform[i].push_back(to_int64(q.get_num() * (den / q.get_den())));
    iscale[i] = den.get_d();
  }
  std::vector<std::int64_t> lo(m, 0), hi(m, 0);
  for (const auto& g : c.generators)
    for (std::size_t i = 0; i < m; ++i) {
      if (g[i] < 0) lo[i] = -1;
      if (g[i] > 0) hi[i] = 1;
    }
  double sides = 1;
  for (std::size_t i = 0; i < m; ++i) sides *= static_cast<double>(hi[i] - lo[i]);

  const int K = m >= 3 ? 9 : 10;
  const double rho = std::sqrt(2.0);
  const std::int64_t N = chi.modulus;
  std::int64_t Rmax = static_cast<std::int64_t>(std::pow(static_cast<double>(budget) / sides, 1.0 / m));
  Rmax = std::max<std::int64_t>(N * (Rmax / N), N * 32);
  std::vector<std::int64_t> radii(K);
  for (int k = 0; k < K; ++k) {
    const double r = static_cast<double>(Rmax) * std::pow(rho, -(K - 1 - k));
    radii[k] = std::max<std::int64_t>(N, N * static_cast<std::int64_t>(std::llround(r / N)));
  }

  std::vector<cd> table(N);
  const double tau = 2 * boost::math::constants::pi<double>();
  for (std::int64_t a = 0; a < N; ++a) table[a] = std::polar(1.0, tau * a / N);

  std::vector<cld> shell(K, 0);
  long long count = 0;
  std::vector<std::int64_t> x(m);
  for (std::size_t i = 0; i < m; ++i) x[i] = lo[i] * Rmax;
  while (true) {
    bool inside = true;
    for (const auto& nv : facets.normals) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < m; ++i) v += nv[i] * x[i];
      if (v <= 0) {
        inside = false;
        break;
      }
    }
    if (inside) {
      double den = 1;
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < m; ++j) v += iform[i][j] * x[j];
        den *= static_cast<double>(v) / iscale[i];
      }
      std::int64_t ph = 0, r = 0;
      for (std::size_t j = 0; j < m; ++j) {
        ph += chi.exponents[j] * x[j];
        r = std::max<std::int64_t>(r, x[j] < 0 ? -x[j] : x[j]);
      }
      const int k = static_cast<int>(std::lower_bound(radii.begin(), radii.end(), r) - radii.begin());
      shell[k] += cld(table[mod64(ph, N)] / den);
      ++count;
    }
    std::size_t d = 0;
    for (; d < m; ++d) {
      if (x[d] < hi[d] * Rmax) {
        ++x[d];
        break;
      }
      x[d] = lo[d] * Rmax;
    }
    if (d == m) break;
  }

  std::vector<double> R;
  std::vector<cd> S;
  cld acc = 0;
  for (int k = 0; k < K; ++k) {
    acc += shell[k];
    R.push_back(static_cast<double>(radii[k]));
    S.push_back(cd(acc));
  }

  ConeZetaResult out;
  out.truncated.value = S.back();
  out.truncated.method = "truncated box sum";
  out.truncated.terms_used = count;
  // |l_i(x)| >= c_i |x|_inf on the closed cone when l_i > 0 on every generator
  double cprod = 1;
  bool rigorous = n > m;
  for (std::size_t i = 0; i < n && rigorous; ++i) {
    double ci = INFINITY;
    for (const auto& g : c.generators) {
      Rational v = dot(forms[i], to_rational(g));
      Integer gmax = 0;
      for (const auto& e : g) gmax = std::max<Integer>(gmax, abs(e));
      if (v <= 0) rigorous = false;
      ci = std::min(ci, v.get_d() / gmax.get_d());
    }
    cprod *= ci;
  }
  if (rigorous) {
    const double s = static_cast<double>(n - m);
    out.truncated.error_bound =
        2.0 * m * std::pow(3.0, static_cast<double>(m) - 1) / cprod * std::pow(static_cast<double>(Rmax), -s) / s;
  } else {
    out.truncated.error_bound = INFINITY;
    out.truncated.heuristic = true;
  }
  out.rigorous_tail = rigorous;
  out.truncated.within_eps = out.truncated.error_bound <= eps;

  const int mm = static_cast<int>(m);
  cd a = fit_constant(R, S, mm, false);
  cd b = fit_constant({R.begin() + 1, R.end()}, {S.begin() + 1, S.end()}, mm, false);
  cd e = fit_constant(R, S, mm, true);
  out.extrapolated.value = a;
  out.extrapolated.error_bound = std::max(std::abs(a - b), std::abs(a - e)) + 1e-13 * std::abs(a);
  out.extrapolated.method = "box sums extrapolated in R (heuristic)";
  out.extrapolated.terms_used = count;
  out.extrapolated.heuristic = true;
  out.extrapolated.within_eps = out.extrapolated.error_bound <= eps;
  return out;
}

std::complex<double> term_density(const Term& t, const std::vector<double>& y) {
  cd v = 1.0;
  for (const auto& f : t.factors) {
    double mono = 1;
    for (std::size_t k = 0; k < t.nvars; ++k)
      if (f.alpha[k] != 0) mono *= std::pow(y[k], static_cast<double>(f.alpha[k]));
    const cd x = f.root.to_complex() * mono;
    v *= x / std::pow(1.0 - x, f.mu);
  }
  for (std::size_t k = 0; k < t.nvars; ++k)
    if (t.is_integrated(k)) v /= y[k];
  return v;
}

QuadEstimate quad_estimate(const Combination& c, const std::vector<double>& params, std::uint64_t seed,
                           long samples) {
  std::size_t nv = 0;
  for (const auto& [t, _] : c) nv = std::max(nv, t.nvars);
  std::vector<std::pair<Term, cd>> terms;
  for (const auto& [t, coeff] : c) terms.emplace_back(t, coeff.to_complex());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(nv), y(nv), jac(nv);
  cld sum = 0;
  long double sq = 0;
  for (long s = 0; s < samples; ++s) {
    for (std::size_t k = 0; k < nv; ++k) {
      v[k] = unif(rng);
      const double u = 1 - v[k];
      y[k] = 1 - u * u * u;
      jac[k] = 3 * u * u;
    }
    cd f = 0;
    for (const auto& [t, coeff] : terms) {
      std::vector<double> pt(nv);
      double w = 1;
      for (std::size_t k = 0; k < t.nvars; ++k) {
        if (t.is_integrated(k)) {
          pt[k] = y[k];
          w *= jac[k];
        } else {
          pt[k] = k < params.size() ? params[k] : 0.5;
        }
      }
      f += coeff * w * term_density(t, pt);
    }
    sum += cld(f);
    sq += std::norm(cld(f));
  }
  QuadEstimate q;
  const long double ns = static_cast<long double>(samples);
  const cld mean = sum / ns;
  q.mean = cd(mean);
  const long double var = std::max<long double>(0, sq / ns - std::norm(mean));
  q.stderr_ = static_cast<double>(std::sqrt(var / ns));
  return q;
}

bool quad_check(const Combination& in, const Combination& out, const std::vector<double>& params, double eps,
                std::uint64_t seed, long samples) {
  Combination diff = in;
  add_to(diff, out, CycloNumber(-1));
  QuadEstimate d = quad_estimate(diff, params, seed, samples);
  return std::abs(d.mean) <= std::max(eps, 3 * d.stderr_);
}

Verification verify(const ZExpression& value, const Cone& c, const std::vector<RationalVector>& forms,
                    const CharacterData& chi, double tolerance, int digits) {
  Verification v;
  v.tolerance = tolerance;
  v.symbolic = eval_zexpression(value, digits);
  v.direct = eval_cone_zeta(c, forms, chi, tolerance);
  const double gap = std::abs(v.symbolic.value - v.direct.extrapolated.value);
  v.pass = gap <= tolerance;
  if (!v.direct.extrapolated.within_eps) {
    v.pass = false;
    v.note = "direct sum not accurate enough for the tolerance";
  }
  if (v.direct.rigorous_tail &&
      std::abs(v.symbolic.value - v.direct.truncated.value) > v.direct.truncated.error_bound + v.symbolic.error_bound) {
    v.pass = false;
    v.note = "symbolic value outside the rigorous truncation bound";
  }
  return v;
}

}  // namespace conezeta
