#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cwe/code.hpp"
#include "cwe/finite_field.hpp"
#include "cwe/report.hpp"

namespace cwe {

enum class Scope { Cwe, Sums, Counts, Griesmer, Equivalence, All };

std::optional<Scope> parse_scope(std::string_view name);
std::string_view to_string(Scope s) noexcept;

struct VerifyOptions {
  EnumerationOptions enumeration;
  std::uint64_t direct_cap = 10'000'000;  // largest field summed over directly
  std::uint64_t quadratic_samples = 100;
  std::uint64_t seed = 0x5eed;
};

/// Brute force against the closed forms for the code over ctx with b = 1.
std::vector<Verdict> verify_cwe(const FieldContext& ctx, const VerifyOptions& opt);
/// Gauss sums, the quadratic exponential sum identity, cyclotomic numbers.
/// Works for any m >= 1.
std::vector<Verdict> verify_sums(const FieldContext& ctx, const VerifyOptions& opt);
/// N(A,B), the N_rho decomposition, pair counts and the rho = 0 tables.
std::vector<Verdict> verify_counts(const FieldContext& ctx, const VerifyOptions& opt);
std::vector<Verdict> verify_griesmer(const FieldContext& ctx, const VerifyOptions& opt);
std::vector<Verdict> verify_equivalence(const FieldContext& ctx, const VerifyOptions& opt);

/// Runs one scope; every scope except Sums needs m > 2.
std::vector<Verdict> run_verification(const FieldContext& ctx, Scope scope, const VerifyOptions& opt);

Json verify_document(const FieldContext& ctx, Scope scope, const std::vector<Verdict>& verdicts);

}  // namespace cwe
