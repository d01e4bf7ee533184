#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "conezeta/cli/pipeline.hpp"
#include "conezeta/numeric/oracles.hpp"

namespace conezeta {

using Json = nlohmann::ordered_json;

/// Schema errors; the CLI maps them to VALIDATION.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown fields are rejected. A missing character becomes the trivial one
/// and a warning is appended.
JobSpec parse_job(const Json& j, std::vector<std::string>* warnings = nullptr);
Json job_to_json(const JobSpec& job);

Json to_json(const Rational& q);
Json to_json(const RootOfUnity& r);
Json to_json(const CycloNumber& c);
Json to_json(const MZVSymbol& s);
Json to_json(const ZExpression& z);
Json to_json(const Term& t);
Json to_json(const DerivedSequence& d);
Json to_json(const ReductionTrace& t);
Json to_json(const EvalResult& r);

RootOfUnity root_from_json(const Json& j);
CycloNumber cyclo_from_json(const Json& j);
ZExpression zexpression_from_json(const Json& j);

inline constexpr const char* kReportSchema = "conezeta-report/1";

}  // namespace conezeta
