#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cwe {

/// Exact element of Z[zeta_p], stored in the basis 1, zeta, ..., zeta^(p-2).
/// zeta^(p-1) is folded back with zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)),
/// so equal values always have equal coefficient vectors.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;

  static CyclotomicInteger zero(std::uint32_t p);
  static CyclotomicInteger constant(std::uint32_t p, std::int64_t c);
  /// zeta_p^k for any integer k.
  static CyclotomicInteger zeta_power(std::uint32_t p, std::int64_t k);
  /// sum_k counts[k] zeta^k over k in [0, p): the natural shape of an
  /// accumulated character sum.
  static CyclotomicInteger from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts);

  std::uint32_t p() const noexcept { return p_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger& operator*=(std::int64_t s);

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(CyclotomicInteger a, std::int64_t s) { return a *= s; }
  friend CyclotomicInteger operator*(std::int64_t s, CyclotomicInteger a) { return a *= s; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  CyclotomicInteger operator-() const { return *this * -1; }

  /// Throws MixedRootOrder when the root orders differ.
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

  /// Multiply by zeta^k.
  CyclotomicInteger shifted(std::int64_t k) const;

  std::optional<std::int64_t> as_rational() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  CyclotomicInteger(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}
  void require_same(const CyclotomicInteger& o) const;

  std::uint32_t p_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace cwe
