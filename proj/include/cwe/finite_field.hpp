#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cwe/prime_field.hpp"

namespace cwe {

struct FieldParams {
  std::uint32_t p = 0;    // odd prime characteristic
  std::uint32_t m = 0;    // extension degree
  std::uint64_t r = 0;    // p^m
  std::uint32_t m_p = 0;  // m mod p

  bool operator==(const FieldParams&) const = default;
};

/// An element of F_{p^m}, identified by the base-p integer whose digits are
/// the coefficients c_0..c_{m-1} of its polynomial-basis representative.
/// Index 0 is zero, index 1 is one, and indices below p are F_p itself.
struct FieldElement {
  std::uint32_t index = 0;

  auto operator<=>(const FieldElement&) const = default;
};

struct FieldOptions {
  std::uint64_t size_cap = 10'000'000;  // largest r accepted
  std::uint64_t table_cap = 1u << 22;   // largest r for which log/exp/trace tables are built
};

/// A fully constructed F_{p^m}: modulus, primitive element, trace data.
/// Immutable after construction and safe to share across threads.
class FieldContext {
 public:
  const FieldParams& params() const noexcept { return params_; }
  const PrimeField& prime_field() const noexcept { return fp_; }
  std::uint32_t p() const noexcept { return params_.p; }
  std::uint32_t m() const noexcept { return params_.m; }
  std::uint64_t size() const noexcept { return params_.r; }

  /// Monic modulus, m + 1 coefficients, low degree first.
  std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }
  FieldElement alpha() const noexcept { return alpha_; }
  bool has_tables() const noexcept { return !exp_.empty(); }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  /// Embeds c in F_p (c reduced mod p).
  FieldElement from_prime(std::uint32_t c) const noexcept { return {c % params_.p}; }
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement x) const;
  /// Throws MixedFieldContexts if the index is out of range.
  FieldElement element(std::uint64_t index) const;

  std::optional<std::uint32_t> prime_value(FieldElement x) const noexcept {
    if (x.index < params_.p) return x.index;
    return std::nullopt;
  }

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;

  /// Absolute trace to F_p.
  std::uint32_t trace(FieldElement x) const;
  /// Sum of the Frobenius orbit x + x^p + ... + x^(p^(m-1)) evaluated with
  /// field multiplication; slow, used to seed and cross-check trace().
  std::uint32_t trace_by_frobenius(FieldElement x) const;

  /// Quadratic character eta_m of F_r.
  int quadratic_character(FieldElement x) const;

  /// Discrete log base alpha; only available when has_tables(). x != 0.
  std::uint32_t log(FieldElement x) const;
  FieldElement exp(std::uint64_t k) const;

 private:
  friend FieldContext make_field_with_modulus(std::uint32_t, std::span<const std::uint32_t>,
                                              const FieldOptions&);
  FieldContext(PrimeField fp, FieldParams params, std::vector<std::uint32_t> modulus);

  void check(FieldElement x) const;
  FieldElement poly_mul(FieldElement x, FieldElement y) const;
  FieldElement poly_pow(FieldElement x, std::uint64_t e) const;
  void find_primitive();
  void build_tables();

  PrimeField fp_;
  FieldParams params_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> digit_weight_;  // p^i
  FieldElement alpha_{};
  std::vector<std::uint32_t> basis_trace_;   // Tr(t^i), t the class of x
  std::vector<std::uint32_t> exp_;           // alpha^k, k in [0, r-1)
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> trace_table_;
  std::uint64_t table_cap_ = 0;
};

/// Deterministic F_{p^m}: lexicographically smallest monic irreducible
/// modulus (coefficients c_0..c_{m-1} read as a base-p integer) and the
/// smallest primitive element index.
FieldContext make_field(std::uint32_t p, std::uint32_t m, const FieldOptions& options = {});

/// F_p[x]/(modulus). The modulus is monic of degree m >= 1, given low degree
/// first; throws InvalidModulus unless it is irreducible.
FieldContext make_field_with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus,
                                     const FieldOptions& options = {});

/// The first `count` monic irreducible polynomials of degree m in the
/// lexicographic order used by make_field.
std::vector<std::vector<std::uint32_t>> first_irreducibles(std::uint32_t p, std::uint32_t m,
                                                           std::size_t count);

/// p^m, throwing SizeCapExceeded when it exceeds cap.
std::uint64_t checked_field_size(std::uint32_t p, std::uint32_t m, std::uint64_t cap);

}  // namespace cwe
