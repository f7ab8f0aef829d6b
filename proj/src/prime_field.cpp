#include "cwe/prime_field.hpp"

#include <string>

#include "cwe/error.hpp"

namespace cwe {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFieldContexts: return "MixedFieldContexts";
    case ErrorCode::MixedRootOrder: return "MixedRootOrder";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::EmptyConstraint: return "EmptyConstraint";
    case ErrorCode::RhoZero: return "RhoZero";
    case ErrorCode::NonPowerCodewordCount: return "NonPowerCodewordCount";
    case ErrorCode::FrequencyMismatch: return "FrequencyMismatch";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::NotPrime:
    case ErrorCode::EvenCharacteristic:
    case ErrorCode::DegreeTooSmall:
    case ErrorCode::InvalidModulus:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ZeroLeadingCoefficient:
    case ErrorCode::EmptyConstraint:
    case ErrorCode::RhoZero:
    case ErrorCode::MixedFieldContexts:
    case ErrorCode::MixedRootOrder:
    case ErrorCode::DivisionByZero:
      return true;
    default:
      return false;
  }
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic must be an odd prime, got p = 2");
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, "p must be an odd prime, got p = " + std::to_string(p));
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

int PrimeField::eta(std::uint32_t a) const noexcept {
  a %= p_;
  if (a == 0) return 0;
  return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

}  // namespace cwe
