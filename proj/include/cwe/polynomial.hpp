#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cwe/prime_field.hpp"

namespace cwe::poly {

// Dense polynomials over F_p, coefficients low degree first, no trailing
// zeros. The zero polynomial is the empty vector.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
int degree(const Poly& a) noexcept;  // -1 for zero

Poly add(const PrimeField& f, const Poly& a, const Poly& b);
Poly sub(const PrimeField& f, const Poly& a, const Poly& b);
Poly mul(const PrimeField& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly mod(const PrimeField& f, Poly a, const Poly& b);
Poly mulmod(const PrimeField& f, const Poly& a, const Poly& b, const Poly& modulus);
Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& modulus);
/// Monic gcd.
Poly gcd(const PrimeField& f, Poly a, Poly b);

/// Rabin's test: a monic f of degree m is irreducible over F_p iff
/// x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1 for every prime q | m.
bool is_irreducible(const PrimeField& f, std::span<const std::uint32_t> monic);

}  // namespace cwe::poly
