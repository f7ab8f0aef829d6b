#include "cwe/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "cwe/closed_form.hpp"
#include "cwe/code.hpp"
#include "cwe/error.hpp"
#include "cwe/report.hpp"
#include "cwe/verify.hpp"

namespace cwe {

namespace {

struct RunConfig {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t b = 1;
  std::string format = "json";
  std::string scope = "all";
  std::uint64_t size_cap = 10'000'000;
  std::uint64_t budget = 100'000'000;
  unsigned workers = 0;
  std::string compare;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> p_list;
  std::vector<std::uint32_t> m_list;
  bool timing = false;
};

using Clock = std::chrono::steady_clock;

FieldContext field_for(const RunConfig& cfg) {
  FieldOptions fo;
  fo.size_cap = cfg.size_cap;
  if (cfg.modulus.empty()) return make_field(cfg.p, cfg.m, fo);
  if (cfg.modulus.size() != static_cast<std::size_t>(cfg.m) + 1)
    throw Error(ErrorCode::InvalidModulus, "--modulus needs m + 1 = " + std::to_string(cfg.m + 1) +
                                               " coefficients, low degree first");
  return make_field_with_modulus(cfg.p, cfg.modulus, fo);
}

EnumerationOptions enumeration_for(const RunConfig& cfg) { return {cfg.budget, cfg.workers}; }

DefiningSet comparison_set(const FieldContext& ctx, const std::string& which) {
  if (which == "d1") return build_defining_set_general(ctx, {1u, std::nullopt, false});
  return build_defining_set_general(ctx, {std::nullopt, 0u, true});
}

std::string bracket(const CodeSummary& s) {
  return "[" + std::to_string(s.n) + "," + std::to_string(s.k) + "," + std::to_string(s.d) + "]";
}

Json comparison_json(const std::string& which, const CodeSummary& main, const CodeSummary& other) {
  Json c;
  c["defining_set"] = which;
  c["summary"] = summary_json(other);
  c["rate"] = static_cast<double>(main.k) / static_cast<double>(main.n);
  c["comparison_rate"] = static_cast<double>(other.k) / static_cast<double>(other.n);
  c["parameters"] = bracket(main) + " vs " + bracket(other);
  return c;
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump() << "\n"; }

void add_timing(Json& doc, Clock::time_point start) {
  doc["timing"] = Json{{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const auto start = Clock::now();
  const auto ctx = field_for(cfg);
  const auto d = build_defining_set(ctx, cfg.b);
  const auto result = brute_cwe(ctx, d, enumeration_for(cfg));
  std::optional<CodeSummary> other;
  if (!cfg.compare.empty()) other = code_summary(ctx, comparison_set(ctx, cfg.compare), enumeration_for(cfg));

  if (cfg.format == "text") {
    out << build_text(ctx, d, result);
    if (other) out << cfg.compare << ": " << bracket(summarize(result)) << " vs " << bracket(*other) << "\n";
    return kExitOk;
  }
  Json doc = build_document(ctx, d, result);
  if (other) doc["comparison"] = comparison_json(cfg.compare, summarize(result), *other);
  if (cfg.timing) add_timing(doc, start);
  emit(out, doc);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto start = Clock::now();
  const auto scope = parse_scope(cfg.scope);
  if (!scope) throw Error(ErrorCode::InvalidArgument, "unknown scope " + cfg.scope);
  const auto ctx = field_for(cfg);
  VerifyOptions opt;
  opt.enumeration = enumeration_for(cfg);
  opt.direct_cap = cfg.size_cap;
  const auto verdicts = run_verification(ctx, *scope, opt);
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.passed; });

  if (cfg.format == "text") {
    for (const auto& v : verdicts) {
      out << (v.passed ? "PASS " : "FAIL ") << v.check << ": " << v.detail << "\n";
      if (!v.passed) out << "  counterexample: " << v.counterexample.dump() << "\n";
    }
  } else {
    Json doc = verify_document(ctx, *scope, verdicts);
    if (cfg.timing) add_timing(doc, start);
    emit(out, doc);
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_predict(const RunConfig& cfg, std::ostream& out) {
  const auto pred = theorem1_cwe(cfg.p, cfg.m);
  if (cfg.format == "text") {
    out << prediction_text(pred);
    return kExitOk;
  }
  emit(out, prediction_document(pred, corollary1_wd(cfg.p, cfg.m), corollary2_classify(cfg.p, cfg.m)));
  return kExitOk;
}

struct SweepResult {
  Json doc;
  bool failed = false;
  std::string line;
};

SweepResult sweep_one(const RunConfig& cfg, std::uint32_t p, std::uint32_t m) {
  SweepResult res;
  Json& doc = res.doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "sweep";
  doc["p"] = p;
  doc["m"] = m;
  std::ostringstream line;
  line << std::setw(4) << p << std::setw(4) << m << "  ";
  try {
    RunConfig one = cfg;
    one.p = p;
    one.m = m;
    one.workers = 1;
    const auto ctx = field_for(one);
    const auto d = build_defining_set(ctx, 1);
    const auto brute = brute_cwe(ctx, d, enumeration_for(one));
    const auto summary = summarize(brute);
    const auto pred = theorem1_cwe(p, m);
    const bool match = pred.cwe == brute.cwe && corollary1_wd(p, m) == weight_distribution(brute.cwe);
    doc["status"] = match ? "exact match" : "mismatch";
    doc["case"] = pred.case_tag.number();
    doc["summary"] = summary_json(summary);
    line << std::left << std::setw(16) << bracket(summary) << std::setw(18) << to_string(summary.classification)
         << (match ? "exact match" : "MISMATCH");
    if (!cfg.compare.empty()) {
      const auto other = code_summary(ctx, comparison_set(ctx, cfg.compare), enumeration_for(one));
      doc["comparison"] = comparison_json(cfg.compare, summary, other);
      line << "  " << cfg.compare << " " << bracket(summary) << " vs " << bracket(other);
    }
    res.failed = !match;
  } catch (const Error& e) {
    doc["status"] = "error";
    doc["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
    line << "error: " << e.what();
    res.failed = true;
  }
  res.line = line.str();
  return res;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (auto p : cfg.p_list)
    for (auto m : cfg.m_list) pairs.emplace_back(p, m);
  std::vector<SweepResult> results(pairs.size());

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(cfg.workers != 0 ? cfg.workers : hw, std::max<std::size_t>(pairs.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();)
          results[i] = sweep_one(cfg, pairs[i].first, pairs[i].second);
      });
  }

  std::size_t failed = 0;
  if (cfg.format == "text") out << "   p   m  [n,k,d]         classification    status\n";
  for (const auto& r : results) {
    failed += r.failed ? 1 : 0;
    if (cfg.format == "text") out << r.line << "\n";
    else emit(out, r.doc);
  }
  if (cfg.format == "text") out << pairs.size() << (pairs.size() == 1 ? " pair, " : " pairs, ") << failed << " failed\n";
  else emit(out, Json{{"schema_version", kSchemaVersion}, {"command", "sweep-summary"}, {"pairs", pairs.size()},
                      {"failed", failed}});
  return failed == 0 ? kExitOk : kExitMismatch;
}

void add_field_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "odd prime characteristic")->required();
  cmd->add_option("--m", cfg.m, "extension degree")->required();
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--size-cap", cfg.size_cap, "largest field size accepted");
  cmd->add_option("--budget", cfg.budget, "largest number of symbol evaluations");
  cmd->add_option("--workers", cfg.workers, "worker threads, 0 for all cores");
  cmd->add_flag("--timing", cfg.timing, "include wall-clock timing in JSON output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Trace codes over F_{p^m}: complete weight enumerators by enumeration and closed form", "cwecodes"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "enumerate the code and print n, k, d, CWE and weight distribution");
  add_field_options(build, cfg);
  add_common_options(build, cfg);
  build->add_option("--b", cfg.b, "trace value of the defining set");
  build->add_option("--modulus", cfg.modulus, "irreducible modulus, m + 1 coefficients low degree first")
      ->delimiter(',');
  build->add_option("--compare-defining-set", cfg.compare, "also build D1 = {Tr(x)=1} or D2 = {Tr(x^2)=0, x != 0}")
      ->check(CLI::IsMember({"d1", "d2"}));

  auto* verify = app.add_subcommand("verify", "compare enumeration with the closed forms");
  add_field_options(verify, cfg);
  add_common_options(verify, cfg);
  verify->add_option("--scope", cfg.scope, "cwe, sums, counts, griesmer, equivalence or all")
      ->check(CLI::IsMember({"cwe", "sums", "counts", "griesmer", "equivalence", "all"}));
  verify->add_option("--modulus", cfg.modulus, "irreducible modulus, m + 1 coefficients low degree first")
      ->delimiter(',');

  auto* predict = app.add_subcommand("predict", "closed-form prediction without enumeration");
  add_field_options(predict, cfg);
  predict->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  auto* sweep = app.add_subcommand("sweep", "verify every (p, m) pair of a grid, one JSON line each");
  sweep->add_option("--p-list", cfg.p_list, "comma-separated primes")->delimiter(',')->required();
  sweep->add_option("--m-list", cfg.m_list, "comma-separated degrees")->delimiter(',')->required();
  add_common_options(sweep, cfg);
  sweep->add_option("--compare-defining-set", cfg.compare, "compare with D1 or D2")
      ->check(CLI::IsMember({"d1", "d2"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*predict) return cmd_predict(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.is_input_error()) return kExitInput;
    if (e.is_resource_error()) return kExitResource;
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

}  // namespace cwe
