#pragma once

#include <cstdint>
#include <vector>

namespace cwe {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime factors of n in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Arithmetic modulo an odd prime. Values are kept in [0, p).
class PrimeField {
 public:
  /// Throws NotPrime / EvenCharacteristic.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a == 0.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  int eta(std::uint32_t a) const noexcept;
  int eta_signed(std::int64_t v) const noexcept { return eta(reduce(v)); }

 private:
  std::uint32_t p_;
};

}  // namespace cwe
