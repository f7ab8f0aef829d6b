#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cwe/closed_form.hpp"
#include "cwe/code.hpp"
#include "cwe/finite_field.hpp"

namespace cwe {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// One pass/fail result of a verification check.
struct Verdict {
  std::string check;
  bool passed = false;
  std::string detail;
  Json info = Json::object();
  Json counterexample = nullptr;
};

Json to_json(const Verdict& v);
Json params_json(const FieldContext& ctx);
Json params_json(std::uint32_t p, std::uint32_t m);
Json defining_set_json(const DefiningSet& d);
Json summary_json(const CodeSummary& s);
/// Terms in lexicographic composition order.
Json cwe_json(const CompleteWeightEnumerator& cwe);
Json wd_json(const WeightDistribution& wd);

/// "1+162x^48+240x^54+..." in ascending weight order.
std::string weight_enumerator_string(const WeightDistribution& wd);
/// "162 z0^33 z1^24 z2^24"; coefficient 1 and zero exponents are omitted.
std::string monomial_string(const Composition& c, std::uint64_t frequency);

/// The full `build` document.
Json build_document(const FieldContext& ctx, const DefiningSet& d, const EnumerationResult& result);
std::string build_text(const FieldContext& ctx, const DefiningSet& d, const EnumerationResult& result);

Json prediction_document(const ClosedFormPrediction& pred, const WeightDistribution& table,
                         const OptimalityClaim& claim);
std::string prediction_text(const ClosedFormPrediction& pred);

}  // namespace cwe
