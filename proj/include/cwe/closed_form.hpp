#pragma once

#include <cstdint>
#include <optional>

#include "cwe/code.hpp"
#include "cwe/finite_field.hpp"

namespace cwe {

/// Which of the four (m parity, m mod p) regimes applies.
struct CaseTag {
  bool m_even = false;
  bool m_p_zero = false;

  /// 1: m even, m_p = 0; 2: m even, m_p != 0; 3: m odd, m_p = 0; 4: m odd, m_p != 0.
  int number() const noexcept { return m_even ? (m_p_zero ? 1 : 2) : (m_p_zero ? 3 : 4); }
  bool operator==(const CaseTag&) const = default;
};

CaseTag classify_case(std::uint32_t p, std::uint32_t m);

/// A = Tr(a^2), B = Tr(a), Delta = B^2 - m_p A and f(rho) = -m_p rho^2 + 2 B rho - A.
struct ABProfile {
  std::uint32_t p = 0;
  std::uint32_t m_p = 0;
  std::uint32_t A = 0;
  std::uint32_t B = 0;
  std::uint32_t Delta = 0;

  static ABProfile make(std::uint32_t p, std::uint32_t m_p, std::uint32_t A, std::uint32_t B);
  std::uint32_t f(std::uint32_t rho) const;
  /// Recomputes Delta from A, B, m_p.
  bool consistent() const;
  /// f has two distinct roots in F_p.
  bool has_two_roots() const;
};

ABProfile profile_of(const FieldContext& ctx, FieldElement a);

/// G_m for even m, G_m * G for odd m: the only forms in which Gauss sums
/// enter the counting formulas, both rational integers.
std::int64_t gauss_factor(std::uint32_t p, std::uint32_t m);

std::int64_t length_closed(std::uint32_t p, std::uint32_t m);

/// #{x : Tr(x^2) = A, Tr(x) = B} from the closed forms.
std::int64_t nab_closed(std::uint32_t p, std::uint32_t m, std::uint32_t A, std::uint32_t B);

struct OmegaValues {
  std::int64_t omega2 = 0;
  std::int64_t omega3 = 0;
  std::int64_t omega4 = 0;

  std::int64_t sum() const noexcept { return omega2 + omega3 + omega4; }
  bool operator==(const OmegaValues&) const = default;
};

/// Omega_2..Omega_4 for a != 0 and rho != 0 (RhoZero otherwise).
/// a_prime is the value of a when a lies in F_p*, nullopt otherwise.
OmegaValues omega_closed(std::uint32_t p, std::uint32_t m, const ABProfile& profile, std::uint32_t rho,
                         std::optional<std::uint32_t> a_prime);

/// The rho = 0 counterparts. For m odd with m_p != 0 these are the explicit
/// tables; otherwise they are -sum over rho != 0 of omega_closed, which holds
/// because each Omega summed over all rho in F_p vanishes.
OmegaValues omega_prime_closed(std::uint32_t p, std::uint32_t m, const ABProfile& profile,
                               std::optional<std::uint32_t> a_prime);

/// The explicit rho = 0 tables for m odd, m_p != 0.
OmegaValues omega_prime_table(std::uint32_t p, std::uint32_t m, const ABProfile& profile,
                              std::optional<std::uint32_t> a_prime);

/// N_rho(a) = n/p + p^-3 (Omega_2 + Omega_3 + Omega_4), a != 0, any rho.
std::int64_t n_rho_closed(std::uint32_t p, std::uint32_t m, const ABProfile& profile, std::uint32_t rho,
                          std::optional<std::uint32_t> a_prime);

struct PairCounts {
  std::uint64_t T1 = 0;          // (A,B), A != 0, eta(Delta) = 1
  std::uint64_t Tm1 = 0;         // eta(Delta) = -1
  std::uint64_t gamma1 = 0;      // Delta != 0, eta(A) = 1
  std::uint64_t gammam1 = 0;     // Delta != 0, eta(A) = -1
  std::uint64_t delta_zero = 0;  // A != 0, Delta = 0

  bool operator==(const PairCounts&) const = default;
};

/// Requires m_p != 0.
PairCounts pair_counts(std::uint32_t p, std::uint32_t m_p);

struct ClosedFormPrediction {
  FieldParams params;
  CaseTag case_tag;
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  CompleteWeightEnumerator cwe;
  WeightDistribution wd;
  CodeSummary summary;
  /// Value patterns listed for the case, not counting the zero codeword.
  std::uint32_t pattern_families = 0;
};

/// How the families indexed by two distinct values rho_0, rho_1 in F_p* are
/// expanded: once per unordered pair, or once per ordered pair.
enum class PairReading { Unordered, Ordered };

struct ExpansionOptions {
  PairReading reading = PairReading::Unordered;
  /// Throw FrequencyMismatch when the frequencies do not add up to p^m.
  bool check_total = true;
};

/// Expands the four-case value patterns into an enumerator. Throws
/// FrequencyMismatch if a count comes out negative or, unless disabled, the
/// frequencies do not add up to p^m.
ClosedFormPrediction theorem1_cwe(std::uint32_t p, std::uint32_t m, const ExpansionOptions& options = {});

/// The weight-distribution tables, accumulated by weight.
WeightDistribution corollary1_wd(std::uint32_t p, std::uint32_t m);

struct OptimalityClaim {
  bool griesmer_optimal = false;
  bool mds = false;
  /// [n, k, d] stated for m = 3.
  std::optional<std::uint64_t> n, k, d;
};

OptimalityClaim corollary2_classify(std::uint32_t p, std::uint32_t m);

}  // namespace cwe
