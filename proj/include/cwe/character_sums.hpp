#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "cwe/cyclotomic.hpp"
#include "cwe/finite_field.hpp"

namespace cwe {

inline constexpr std::uint64_t kDefaultDirectSumCap = 10'000'000;

/// i^unit * p^(half_power / 2), the exact shape of every quadratic Gauss sum.
struct GaussSumExact {
  std::uint32_t p = 0;
  int unit = 0;  // quarter turns, 0..3
  std::uint32_t half_power = 0;

  bool operator==(const GaussSumExact&) const = default;

  friend GaussSumExact operator*(const GaussSumExact& a, const GaussSumExact& b);

  std::complex<double> to_complex() const;
  /// The rational integer value when half_power is even and the unit is real.
  std::optional<std::int64_t> as_integer() const;
  /// Exact image in Z[zeta_p]; throws NotRepresentable when the value lies
  /// outside Q(zeta_p) (i times a rational, for instance).
  CyclotomicInteger to_cyclotomic() const;
};

/// G_m = (-1)^(m-1) eps^m p^(m/2) with eps = 1 for p = 1 mod 4 and eps = i
/// for p = 3 mod 4. This is the value direct summation produces.
GaussSumExact gauss_sum_closed(std::uint32_t p, std::uint32_t m);

/// The printed form (-1)^(m-1) (-1)^((p-1)m/4) p^(m/2), reading (-1)^(1/2) as
/// i. Differs from gauss_sum_closed by (-1)^m when p = 5, 7 mod 8.
GaussSumExact gauss_sum_literal(std::uint32_t p, std::uint32_t m);

/// G_m as an integer; m must be even.
std::int64_t gauss_sum_integer(std::uint32_t p, std::uint32_t m);
/// G_m * G as an integer; m must be odd.
std::int64_t gauss_product_integer(std::uint32_t p, std::uint32_t m);

/// sum_{x in F_p*} eta(x) zeta^x, the image of sqrt(eta(-1) p) in Z[zeta_p].
CyclotomicInteger quadratic_residue_sum(std::uint32_t p);

/// sum_{x in F_r*} eta_m(x) zeta^Tr(x) by exhaustive summation.
CyclotomicInteger gauss_sum_direct(const FieldContext& ctx, std::uint64_t cap = kDefaultDirectSumCap);

/// sum_{x in F_r} zeta^Tr(a2 x^2 + a1 x + a0) by exhaustive summation.
CyclotomicInteger quad_exp_sum_direct(const FieldContext& ctx, FieldElement a2, FieldElement a1, FieldElement a0,
                                      std::uint64_t cap = kDefaultDirectSumCap);

/// zeta^Tr(a0 - a1^2 / (4 a2)) * eta_m(a2) * gm, where gm is the Gauss sum of
/// the same field.
CyclotomicInteger quad_exp_sum_closed(const FieldContext& ctx, FieldElement a2, FieldElement a1, FieldElement a0,
                                      const CyclotomicInteger& gm);

/// Order-2 cyclotomic numbers in the order (0,0), (0,1), (1,0), (1,1).
using CyclotomicNumbers = std::array<std::uint64_t, 4>;

/// Counts pairs x_i + 1 = x_j with x_i in class i and x_j in class j, where
/// class 0 is the nonzero squares and class 1 the nonsquares.
std::uint64_t cyclotomic_number_direct(const FieldContext& ctx, int i, int j,
                                       std::uint64_t cap = kDefaultDirectSumCap);
CyclotomicNumbers cyclotomic_numbers_direct(const FieldContext& ctx, std::uint64_t cap = kDefaultDirectSumCap);
CyclotomicNumbers cyclotomic_numbers_closed(std::uint64_t r);

}  // namespace cwe
