#include "conezeta/cli/io.hpp"

#include <set>

namespace conezeta {

namespace {

void only_keys(const Json& j, const std::set<std::string>& allowed, const char* where) {
  if (!j.is_object()) throw SchemaError(std::string(where) + ": expected an object");
  for (const auto& [k, _] : j.items())
    if (!allowed.count(k)) throw SchemaError(std::string(where) + ": unknown field '" + k + "'");
}

const Json& need(const Json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      throw SchemaError("bad rational '" + j.get<std::string>() + "'");
    }
  }
  throw SchemaError("rationals must be integers or \"p/q\" strings");
}

Integer integer_from_json(const Json& j) {
  Rational q = rational_from_json(j);
  if (q.get_den() != 1) throw SchemaError("generator entries must be integers");
  return q.get_num();
}

std::vector<Json> rows_of(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be a matrix");
  std::vector<Json> out;
  for (const auto& r : j) {
    if (!r.is_array()) throw SchemaError(std::string(what) + " rows must be arrays");
    out.push_back(r);
  }
  return out;
}

}  // namespace

JobSpec parse_job(const Json& j, std::vector<std::string>* warnings) {
  only_keys(j, {"ambientDim", "generators", "forms", "character", "options"}, "job");
  JobSpec job;
  const Json& dim = need(j, "ambientDim");
  if (!dim.is_number_unsigned()) throw SchemaError("ambientDim must be a nonnegative integer");
  job.ambient_dim = dim.get<std::size_t>();
  for (const auto& r : rows_of(need(j, "generators"), "generators")) {
    IntVector g;
    for (const auto& x : r) g.push_back(integer_from_json(x));
    job.generators.push_back(g);
  }
  for (const auto& r : rows_of(need(j, "forms"), "forms")) {
    RationalVector f;
    for (const auto& x : r) f.push_back(rational_from_json(x));
    job.forms.push_back(f);
  }
  if (j.contains("character")) {
    const Json& c = j.at("character");
    only_keys(c, {"modulus", "exponents"}, "character");
    const Json& mod = need(c, "modulus");
    if (!mod.is_number_integer()) throw SchemaError("character modulus must be an integer");
    job.modulus = mod.get<std::int64_t>();
    const Json& ex = need(c, "exponents");
    if (!ex.is_array()) throw SchemaError("character exponents must be an array");
    for (const auto& x : ex) {
      if (!x.is_number_integer()) throw SchemaError("character exponents must be integers");
      job.character.push_back(x.get<std::int64_t>());
    }
  } else {
    job.modulus = 1;
    job.character.assign(job.ambient_dim, 0);
    if (warnings) warnings->push_back("no character given; using the trivial character");
  }
  if (j.contains("options")) {
    const Json& o = j.at("options");
    only_keys(o, {"precision", "trace", "seed", "maxPieces"}, "options");
    try {
      if (o.contains("precision")) job.options.precision = o.at("precision").get<int>();
      if (o.contains("trace")) job.options.trace = o.at("trace").get<std::string>();
      if (o.contains("seed")) job.options.seed = o.at("seed").get<std::uint64_t>();
      if (o.contains("maxPieces")) job.options.max_pieces = o.at("maxPieces").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError(std::string("options: ") + e.what());
    }
    if (job.options.precision < 1) throw SchemaError("options: precision must be positive");
  }
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json j;
  j["ambientDim"] = job.ambient_dim;
  Json gens = Json::array();
  for (const auto& g : job.generators) {
    Json r = Json::array();
    for (const auto& x : g) r.push_back(to_int64(x));
    gens.push_back(r);
  }
  j["generators"] = gens;
  Json forms = Json::array();
  for (const auto& f : job.forms) {
    Json r = Json::array();
    for (const auto& x : f) r.push_back(to_json(x));
    forms.push_back(r);
  }
  j["forms"] = forms;
  j["character"] = {{"modulus", job.modulus}, {"exponents", job.character}};
  Json o;
  o["precision"] = job.options.precision;
  if (!job.options.trace.empty()) o["trace"] = job.options.trace;
  o["seed"] = job.options.seed;
  o["maxPieces"] = job.options.max_pieces;
  j["options"] = o;
  return j;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RootOfUnity& r) { return {{"order", r.order()}, {"exponent", r.exponent()}}; }

Json to_json(const CycloNumber& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coords()) coeffs.push_back(to_json(q));
  return {{"modulus", c.modulus()}, {"coefficients", coeffs}};
}

Json to_json(const MZVSymbol& s) {
  Json roots = Json::array();
  for (const auto& r : s.roots) roots.push_back(to_json(r));
  return {{"k", s.k}, {"roots", roots}};
}

Json to_json(const ZExpression& z) {
  Json out = Json::array();
  for (const auto& [s, c] : z) {
    Json e = to_json(s);
    e["coefficient"] = to_json(c);
    out.push_back(e);
  }
  return out;
}

Json to_json(const Term& t) {
  Json integ = Json::array();
  for (std::size_t v = 0; v < t.nvars; ++v)
    if (t.is_integrated(v)) integ.push_back(v);
  Json fs = Json::array();
  for (const auto& f : t.factors) fs.push_back({{"root", to_json(f.root)}, {"alpha", f.alpha}, {"mu", f.mu}});
  return {{"nvars", t.nvars}, {"integrated", integ}, {"factors", fs}, {"text", to_string(t)}};
}

Json to_json(const DerivedSequence& d) {
  Json flag = Json::array();
  for (const auto& g : d.cone.generators) {
    Json r = Json::array();
    for (const auto& x : g) r.push_back(to_int64(x));
    flag.push_back(r);
  }
  Json levels = Json::array();
  for (const auto& lv : d.levels) {
    Json l = Json::array();
    for (const auto& v : lv) {
      Json r = Json::array();
      for (const auto& x : v) r.push_back(to_int64(x));
      l.push_back(r);
    }
    levels.push_back(l);
  }
  return {{"flag", flag}, {"levels", levels}};
}

Json to_json(const ReductionTrace& t) {
  Json out = Json::array();
  for (const auto& s : t.steps) {
    Json e = {{"rule", s.rule}, {"anchor", s.anchor}, {"input", to_json(s.input)}};
    if (s.rule == "reduce_B" || s.rule == "to_P") e["variable"] = s.var;
    e["output"] = s.output;
    out.push_back(e);
  }
  return out;
}

Json to_json(const EvalResult& r) {
  Json bound = std::isfinite(r.error_bound) ? Json(r.error_bound) : Json(nullptr);
  return {{"value", {r.value.real(), r.value.imag()}},
          {"bound", bound},
          {"method", r.method},
          {"heuristic", r.heuristic},
          {"termsUsed", r.terms_used}};
}

RootOfUnity root_from_json(const Json& j) {
  only_keys(j, {"order", "exponent"}, "root");
  return RootOfUnity(need(j, "order").get<std::int64_t>(), need(j, "exponent").get<std::int64_t>());
}

CycloNumber cyclo_from_json(const Json& j) {
  only_keys(j, {"modulus", "coefficients"}, "cyclotomic number");
  std::vector<Rational> poly;
  for (const auto& x : need(j, "coefficients")) poly.push_back(rational_from_json(x));
  return CycloNumber(need(j, "modulus").get<std::int64_t>(), poly);
}

ZExpression zexpression_from_json(const Json& j) {
  ZExpression z;
  for (const auto& e : j) {
    only_keys(e, {"k", "roots", "coefficient"}, "symbol");
    MZVSymbol s;
    s.k = need(e, "k").get<std::vector<int>>();
    for (const auto& r : need(e, "roots")) s.roots.push_back(root_from_json(r));
    add_to(z, s, cyclo_from_json(need(e, "coefficient")));
  }
  return z;
}

}  // namespace conezeta
