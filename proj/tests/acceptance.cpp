#include <boost/math/constants/constants.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "conezeta/cli/run.hpp"
#include "conezeta/numeric/oracles.hpp"
#include "properties.hpp"

using namespace conezeta;

namespace {

const double kPi = boost::math::constants::pi<double>();

struct Line {
  bool pass;
  std::string detail;
};

JobSpec load_job(const char* name) {
  std::ifstream in(std::filesystem::path(CONEZETA_JOBS_DIR) / name);
  return parse_job(Json::parse(in));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// reduce, evaluate the symbolic answer, compare with a reference
Line closed_form(const char* job, double expected, double tol, double max_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = reduce_job(load_job(job));
  const auto v = eval_zexpression(r.value);
  const double secs = seconds_since(t0);
  const double diff = std::abs(v.value - expected);
  return {diff <= tol && secs < max_seconds,
          fmt("|value - reference| = %.2e (tol %.0e), %.2f s", diff, tol, secs) + ", " + to_string(r.value)};
}

Line z2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = reduce_job(load_job("z2_zeta12.json"));
  const auto v = eval_zexpression(r.value);
  const double secs = seconds_since(t0);
  // reference by nested summation, independent of the reduction
  const auto ref = eval_mzv({{3}, {RootOfUnity::one()}}, 1e-8);
  const double diff = std::abs(v.value - ref.value);
  return {diff <= 1e-5 && secs < 60,
          fmt("|value - direct sum| = %.2e (tol 1e-05), %.2f s", diff, secs) + ", " + to_string(r.value)};
}

Line z5() {
  const JobSpec job = load_job("z5_nonunimodular.json");
  const auto r = reduce_job(job);
  const auto v = verify(r.value, Cone{job.ambient_dim, job.generators}, job.forms, {job.modulus, job.character}, 1e-4);
  const double diff = std::abs(v.symbolic.value - v.direct.extrapolated.value);
  return {v.pass && diff <= 1e-4, fmt("|symbolic - direct| = %.2e (tol 1e-04), %.0f pieces", diff, static_cast<double>(r.pieces)) +
                                      (v.note.empty() ? "" : ", " + v.note)};
}

Line property(const props::Outcome& o) { return {o.ok(), o.summary()}; }

Line p1() {
  props::Outcome all;
  const std::uint64_t seed = 20261016;
  for (auto run : {props::p1_integral_expression, props::p1_root_split, props::p1_merge_pair,
                   props::p1_partial_fraction_pair, props::p1_normalize, props::p1_change_coordinates}) {
    auto o = run(100, seed);
    if (o.instances != 100) o.fail("instance count");
    all.merge(o);
  }
  return {all.ok(), all.summary() + " over 6 rules"};
}

Line p4() {
  const auto a = props::p4_shuffle(1e-5), b = props::p4_regularize(1e-5);
  return {a.ok() && b.ok(), "shuffle: " + a.summary() + "; regularize: " + b.summary()};
}

Line p5() {
  std::string detail;
  bool ok = true;
  for (const char* name : {"divergent_harmonic.json", "divergent_zeta11.json"}) {
    const auto out = run_job(load_job(name), RunSettings{true, 1e-5, 1e-8});
    const bool rejected = out.exit_code == kExitDivergent && out.report["error"]["code"] == "DIVERGENT" &&
                          !out.report.contains("value") && !out.report.contains("counts");
    ok &= rejected;
    detail += std::string(detail.empty() ? "" : ", ") + name + (rejected ? " rejected" : " NOT rejected");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Line()>> criteria[] = {
      {"Z1", [] { return closed_form("z1_zeta2.json", kPi * kPi / 6, 1e-6, 10); }},
      {"Z2", z2},
      {"Z3", [] { return closed_form("z3_zeta2_squared.json", std::pow(kPi * kPi / 6, 2), 1e-5, 1e9); }},
      {"Z4", [] { return closed_form("z4_alternating.json", -kPi * kPi / 12, 1e-6, 1e9); }},
      {"Z5", z5},
      {"P1", p1},
      {"P2", [] { return property(props::p2_derived_sequences(50, 2024)); }},
      {"P3", [] {
         auto o = props::p3_convergence_family();
         if (o.instances != 14 + 494) o.fail("family size");
         return property(o);
       }},
      {"P4", p4},
      {"P5", p5},
  };
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Line l;
    try {
      l = run();
    } catch (const std::exception& e) {
      l = {false, std::string("exception: ") + e.what()};
    }
    failed += !l.pass;
    std::printf("%s %s  %s\n", id, l.pass ? "PASS" : "FAIL", l.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed ? 1 : 0;
}
