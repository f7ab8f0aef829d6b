#include "cwe/report.hpp"

#include <sstream>

namespace cwe {

Json to_json(const Verdict& v) {
  Json j;
  j["check"] = v.check;
  j["passed"] = v.passed;
  j["status"] = v.passed ? "exact match" : "mismatch";
  j["detail"] = v.detail;
  if (!v.info.empty()) j["info"] = v.info;
  j["counterexample"] = v.counterexample;
  return j;
}

Json params_json(std::uint32_t p, std::uint32_t m) {
  Json j;
  j["p"] = p;
  j["m"] = m;
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) r *= p;
  j["r"] = r;
  j["m_p"] = m % p;
  return j;
}

Json params_json(const FieldContext& ctx) {
  Json j = params_json(ctx.p(), ctx.m());
  j["modulus"] = std::vector<std::uint32_t>(ctx.modulus().begin(), ctx.modulus().end());
  j["alpha"] = ctx.coefficients(ctx.alpha());
  return j;
}

Json defining_set_json(const DefiningSet& d) {
  Json j;
  j["trace"] = d.spec.trace ? Json(*d.spec.trace) : Json(nullptr);
  j["trace_square"] = d.spec.trace_square ? Json(*d.spec.trace_square) : Json(nullptr);
  j["exclude_zero"] = d.spec.exclude_zero;
  j["size"] = d.size();
  if (d.outside_closed_form_scope) j["note"] = "outside closed-form scope";
  return j;
}

Json summary_json(const CodeSummary& s) {
  Json j;
  j["n"] = s.n;
  j["k"] = s.k;
  j["d"] = s.d;
  j["griesmer_sum"] = s.griesmer_sum;
  j["griesmer_optimal"] = s.griesmer_optimal;
  j["mds"] = s.mds;
  j["classification"] = to_string(s.classification);
  return j;
}

Json cwe_json(const CompleteWeightEnumerator& cwe) {
  Json terms = Json::array();
  for (const auto& [c, f] : cwe.terms()) {
    Json t;
    t["composition"] = c.counts;
    t["frequency"] = f;
    terms.push_back(std::move(t));
  }
  return terms;
}

Json wd_json(const WeightDistribution& wd) {
  Json out = Json::array();
  for (const auto& [w, a] : wd.counts) out.push_back(Json{{"weight", w}, {"frequency", a}});
  return out;
}

std::string weight_enumerator_string(const WeightDistribution& wd) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : wd.counts) {
    if (a == 0) continue;
    if (!first) os << '+';
    first = false;
    if (w == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a;
    os << 'x';
    if (w != 1) os << '^' << w;
  }
  if (first) os << '0';
  return os.str();
}

std::string monomial_string(const Composition& c, std::uint64_t frequency) {
  std::ostringstream os;
  bool any = false;
  if (frequency != 1) {
    os << frequency;
    any = true;
  }
  for (std::size_t i = 0; i < c.counts.size(); ++i) {
    if (c.counts[i] == 0) continue;
    if (any) os << ' ';
    os << 'z' << i;
    if (c.counts[i] != 1) os << '^' << c.counts[i];
    any = true;
  }
  if (!any) os << frequency;
  return os.str();
}

Json build_document(const FieldContext& ctx, const DefiningSet& d, const EnumerationResult& result) {
  const auto wd = weight_distribution(result.cwe);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "build";
  j["params"] = params_json(ctx);
  j["defining_set"] = defining_set_json(d);
  j["summary"] = summary_json(summarize(result));
  j["distinct_codewords"] = result.distinct_codewords;
  j["cwe"] = cwe_json(result.cwe);
  j["weight_distribution"] = wd_json(wd);
  j["weight_enumerator"] = weight_enumerator_string(wd);
  return j;
}

std::string build_text(const FieldContext& ctx, const DefiningSet& d, const EnumerationResult& result) {
  const auto s = summarize(result);
  const auto wd = weight_distribution(result.cwe);
  std::ostringstream os;
  os << "[" << s.n << "," << s.k << "," << s.d << "] code over F_" << ctx.p() << " from F_" << ctx.size();
  if (d.spec.trace) os << ", Tr(x)=" << *d.spec.trace;
  if (d.spec.trace_square) os << ", Tr(x^2)=" << *d.spec.trace_square;
  os << "\n";
  if (d.outside_closed_form_scope) os << "note: outside closed-form scope\n";
  os << "classification: " << to_string(s.classification) << " (Griesmer sum " << s.griesmer_sum << ")\n";
  os << "weight enumerator:\n" << weight_enumerator_string(wd) << "\n";
  os << "complete weight enumerator (" << result.cwe.terms().size() << " terms):\n";
  for (const auto& [c, f] : result.cwe.terms()) os << monomial_string(c, f) << "\n";
  return os.str();
}

Json prediction_document(const ClosedFormPrediction& pred, const WeightDistribution& table,
                         const OptimalityClaim& claim) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "predict";
  j["params"] = params_json(pred.params.p, pred.params.m);
  j["case"] = pred.case_tag.number();
  j["pattern_families"] = pred.pattern_families;
  j["summary"] = summary_json(pred.summary);
  j["cwe"] = cwe_json(pred.cwe);
  j["weight_distribution"] = wd_json(pred.wd);
  j["weight_enumerator"] = weight_enumerator_string(pred.wd);
  j["table_weight_distribution"] = wd_json(table);
  Json c;
  c["griesmer_optimal"] = claim.griesmer_optimal;
  c["mds"] = claim.mds;
  if (claim.n) c["parameters"] = {*claim.n, *claim.k, *claim.d};
  j["optimality"] = c;
  return j;
}

std::string prediction_text(const ClosedFormPrediction& pred) {
  std::ostringstream os;
  os << "case " << pred.case_tag.number() << ": [" << pred.summary.n << "," << pred.summary.k << ","
     << pred.summary.d << "] over F_" << pred.params.p << "\n";
  os << "classification: " << to_string(pred.summary.classification) << " (Griesmer sum "
     << pred.summary.griesmer_sum << ")\n";
  os << "weight enumerator:\n" << weight_enumerator_string(pred.wd) << "\n";
  os << "complete weight enumerator (" << pred.cwe.terms().size() << " terms):\n";
  for (const auto& [c, f] : pred.cwe.terms()) os << monomial_string(c, f) << "\n";
  return os.str();
}

}  // namespace cwe
