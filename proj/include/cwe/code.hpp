#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwe/finite_field.hpp"

namespace cwe {

/// Which elements of F_r index the coordinates of C_D.
struct DefiningSetSpec {
  std::optional<std::uint32_t> trace;         // Tr(x) = value
  std::optional<std::uint32_t> trace_square;  // Tr(x^2) = value
  bool exclude_zero = false;

  bool operator==(const DefiningSetSpec&) const = default;
};

struct DefiningSet {
  DefiningSetSpec spec;
  std::vector<FieldElement> elements;  // ascending index
  /// Set for D_0, which the closed-form results do not cover.
  bool outside_closed_form_scope = false;

  std::size_t size() const noexcept { return elements.size(); }
};

/// D_b = {x : Tr(x) = b, Tr(x^2) = 0}. Requires m > 2.
DefiningSet build_defining_set(const FieldContext& ctx, std::uint32_t b);

/// Conjunction of whichever constraints are present; EmptyConstraint if none.
DefiningSet build_defining_set_general(const FieldContext& ctx, const DefiningSetSpec& spec);

/// Symbol counts (k_0, ..., k_{p-1}) of a vector over F_p.
struct Composition {
  std::vector<std::uint64_t> counts;

  std::uint64_t length() const noexcept;
  auto operator<=>(const Composition&) const = default;
};

class CompleteWeightEnumerator {
 public:
  CompleteWeightEnumerator() = default;
  CompleteWeightEnumerator(std::uint32_t p, std::uint64_t n) : p_(p), n_(n) {}

  std::uint32_t p() const noexcept { return p_; }
  std::uint64_t n() const noexcept { return n_; }
  const std::map<Composition, std::uint64_t>& terms() const noexcept { return terms_; }

  /// Adds frequency to the term; throws InvalidArgument when the composition
  /// has the wrong alphabet size or does not sum to n.
  void add(const Composition& c, std::uint64_t frequency);
  void merge(const CompleteWeightEnumerator& other);
  std::uint64_t total() const noexcept;
  std::uint64_t frequency(const Composition& c) const noexcept;

  bool operator==(const CompleteWeightEnumerator&) const = default;

 private:
  std::uint32_t p_ = 0;
  std::uint64_t n_ = 0;
  std::map<Composition, std::uint64_t> terms_;
};

struct WeightDistribution {
  std::uint64_t n = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // weight -> A_w, zero entries omitted

  std::uint64_t total() const noexcept;
  /// Smallest nonzero weight with A_w > 0, or 0 for the zero code.
  std::uint64_t min_distance() const noexcept;
  bool operator==(const WeightDistribution&) const = default;
};

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe);

enum class Classification { MDS, GriesmerOptimal, Neither };
std::string_view to_string(Classification c) noexcept;

struct CodeSummary {
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t griesmer_sum = 0;  // sum_{i<k} ceil(d / p^i)
  bool griesmer_optimal = false;
  bool mds = false;
  Classification classification = Classification::Neither;

  bool operator==(const CodeSummary&) const = default;
};

std::uint64_t griesmer_sum(std::uint32_t q, std::uint32_t k, std::uint64_t d);
CodeSummary classify_code(std::uint32_t p, std::uint64_t n, std::uint32_t k, std::uint64_t d);

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // max symbol evaluations (p^m * n)
  unsigned workers = 0;                // 0 = hardware concurrency
};

struct EnumerationResult {
  CompleteWeightEnumerator cwe;
  std::uint64_t kernel_size = 0;         // #{a : c(a) = 0}
  std::uint64_t distinct_codewords = 0;  // p^m / kernel_size
  std::uint32_t dimension = 0;
};

/// c(a) = (Tr(a x))_{x in D}, in D's order.
std::vector<std::uint32_t> codeword(const FieldContext& ctx, const DefiningSet& d, FieldElement a);

/// Exhaustive CWE over all a in F_r, streamed and split across workers.
/// Each codeword is counted once even if a -> c(a) is not injective.
EnumerationResult brute_cwe(const FieldContext& ctx, const DefiningSet& d, const EnumerationOptions& options = {});

/// #{x in D : Tr(a x) = rho}.
std::uint64_t count_N_rho(const FieldContext& ctx, const DefiningSet& d, FieldElement a, std::uint32_t rho);

/// #{x in F_r : Tr(x^2) = A, Tr(x) = B}.
std::uint64_t count_NAB(const FieldContext& ctx, std::uint32_t A, std::uint32_t B,
                        std::uint64_t cap = 10'000'000);

CodeSummary summarize(const EnumerationResult& result);
CodeSummary code_summary(const FieldContext& ctx, const DefiningSet& d, const EnumerationOptions& options = {});

/// Whether C_{D_b} and C_{D_1} have the same codewords once D_b is ordered
/// by the bijection x -> b x from D_1.
bool check_db_equivalence(const FieldContext& ctx, std::uint32_t b, const EnumerationOptions& options = {});

}  // namespace cwe
