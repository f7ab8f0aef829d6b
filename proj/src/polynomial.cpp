#include "cwe/polynomial.hpp"

#include <algorithm>

#include "cwe/error.hpp"

namespace cwe::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) noexcept { return static_cast<int>(a.size()) - 1; }

Poly add(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = f.add(x, y);
  }
  trim(out);
  return out;
}

Poly sub(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = f.sub(x, y);
  }
  trim(out);
  return out;
}

Poly mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly mod(const PrimeField& f, Poly a, const Poly& b) {
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  trim(a);
  const int db = degree(b);
  const std::uint32_t lead_inv = f.inv(b.back());
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const std::uint32_t c = f.mul(a.back(), lead_inv);
    for (int i = 0; i <= db; ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    trim(a);
  }
  return a;
}

Poly mulmod(const PrimeField& f, const Poly& a, const Poly& b, const Poly& modulus) {
  return mod(f, mul(f, a, b), modulus);
}

Poly powmod(const PrimeField& f, Poly base, std::uint64_t e, const Poly& modulus) {
  Poly acc{1};
  acc = mod(f, acc, modulus);
  base = mod(f, std::move(base), modulus);
  while (e) {
    if (e & 1) acc = mulmod(f, acc, base, modulus);
    e >>= 1;
    if (e) base = mulmod(f, base, base, modulus);
  }
  return acc;
}

Poly gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

namespace {

// x^(p^k) mod modulus via k successive p-th powers.
Poly frobenius_power_of_x(const PrimeField& f, unsigned k, const Poly& modulus) {
  Poly x = mod(f, Poly{0, 1}, modulus);
  for (unsigned i = 0; i < k; ++i) x = powmod(f, x, f.p(), modulus);
  return x;
}

}  // namespace

bool is_irreducible(const PrimeField& f, std::span<const std::uint32_t> monic) {
  Poly g(monic.begin(), monic.end());
  trim(g);
  const int m = degree(g);
  if (m < 1 || g.back() != 1) return false;
  if (m == 1) return true;

  const Poly x = Poly{0, 1};
  if (sub(f, frobenius_power_of_x(f, static_cast<unsigned>(m), g), x) != Poly{}) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(m))) {
    Poly h = sub(f, frobenius_power_of_x(f, static_cast<unsigned>(m / q), g), x);
    if (degree(gcd(f, h, g)) != 0) return false;
  }
  return true;
}

}  // namespace cwe::poly
