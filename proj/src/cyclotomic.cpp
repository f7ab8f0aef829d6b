#include "cwe/cyclotomic.hpp"

#include <numbers>
#include <sstream>

#include "cwe/error.hpp"
#include "cwe/prime_field.hpp"

namespace cwe {

namespace {

std::uint32_t checked_root_order(std::uint32_t p) {
  if (p < 3 || !is_prime(p))
    throw Error(ErrorCode::NotPrime, "cyclotomic root order must be an odd prime, got " + std::to_string(p));
  return p;
}

}  // namespace

CyclotomicInteger CyclotomicInteger::zero(std::uint32_t p) {
  return CyclotomicInteger(checked_root_order(p), std::vector<std::int64_t>(p - 1, 0));
}

CyclotomicInteger CyclotomicInteger::constant(std::uint32_t p, std::int64_t c) {
  auto z = zero(p);
  z.coeffs_[0] = c;
  return z;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::int64_t k) {
  auto z = zero(p);
  const auto e = static_cast<std::uint32_t>(((k % p) + p) % p);
  if (e == p - 1) {
    for (auto& c : z.coeffs_) c = -1;
  } else {
    z.coeffs_[e] = 1;
  }
  return z;
}

CyclotomicInteger CyclotomicInteger::from_exponent_counts(std::uint32_t p, std::span<const std::int64_t> counts) {
  checked_root_order(p);
  if (counts.size() != p) throw Error(ErrorCode::InvalidArgument, "exponent counts must have length p");
  std::vector<std::int64_t> c(p - 1);
  const std::int64_t top = counts[p - 1];
  for (std::uint32_t i = 0; i + 1 < p; ++i) c[i] = counts[i] - top;
  return CyclotomicInteger(p, std::move(c));
}

void CyclotomicInteger::require_same(const CyclotomicInteger& o) const {
  if (p_ != o.p_)
    throw Error(ErrorCode::MixedRootOrder,
                "root orders differ: " + std::to_string(p_) + " vs " + std::to_string(o.p_));
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  require_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(std::int64_t s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_same(b);
  const std::uint32_t p = a.p_;
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t i = 0; i + 1 < p; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p; ++j) counts[(i + j) % p] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicInteger::from_exponent_counts(p, counts);
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

CyclotomicInteger CyclotomicInteger::shifted(std::int64_t k) const {
  std::vector<std::int64_t> counts(p_, 0);
  const auto s = static_cast<std::uint32_t>(((k % p_) + p_) % p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) counts[(i + s) % p_] += coeffs_[i];
  return from_exponent_counts(p_, counts);
}

std::optional<std::int64_t> CyclotomicInteger::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_.empty() ? 0 : coeffs_[0];
}

std::complex<double> CyclotomicInteger::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / p_;
    acc += static_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return acc;
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const auto mag = c < 0 ? -c : c;
    if (i == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cwe
