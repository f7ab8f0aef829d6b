#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cwe/error.hpp"
#include "cwe/finite_field.hpp"
#include "cwe/polynomial.hpp"
#include "oracles.hpp"

using namespace cwe;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField f5(5);
  CHECK(f5.eta(1) == 1);
  CHECK(f5.eta(4) == 1);
  CHECK(f5.eta(2) == -1);
  CHECK(f5.eta(3) == -1);
  CHECK(f5.eta(0) == 0);
  PrimeField f7(7);
  CHECK(f7.eta_signed(-3) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(code_of([&] { f7.inv(0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { PrimeField(2); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { PrimeField(9); }) == ErrorCode::NotPrime);
  CHECK(prime_factors(24) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("make_field rejects bad parameters") {
  CHECK(code_of([] { make_field(2, 4); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { make_field(15, 2); }) == ErrorCode::NotPrime);
  CHECK(code_of([] { make_field(3, 0); }) == ErrorCode::DegreeTooSmall);
  CHECK(code_of([] { make_field(3, 20, {1'000'000, 1u << 22}); }) == ErrorCode::SizeCapExceeded);
  const std::vector<std::uint32_t> reducible{1, 0, 1};  // x^2 + 1 = (x+2)(x+3) mod 5
  CHECK(code_of([&] { make_field_with_modulus(5, reducible); }) == ErrorCode::InvalidModulus);
}

TEST_CASE("prime field as a degree-1 extension") {
  const auto f = make_field(3, 1);
  CHECK(f.size() == 3);
  CHECK(f.alpha().index == 2);
  CHECK(f.trace(f.element(2)) == 2);
}

TEST_CASE("constructed moduli are irreducible by trial division") {
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t m = 1; m <= 5; ++m) {
      if (p == 7 && m == 5) continue;
      const auto f = make_field(p, m);
      const std::vector<std::uint32_t> mod(f.modulus().begin(), f.modulus().end());
      CHECK(oracle::irreducible_by_trial_division(mod, p));
    }
  // Rabin's test must reject products whose factor degrees sum to m
  PrimeField f3(3);
  for (std::uint32_t m = 2; m <= 6; ++m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= 3;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(m + 1, 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i, c /= 3) g[i] = static_cast<std::uint32_t>(c % 3);
      REQUIRE(poly::is_irreducible(f3, g) == oracle::irreducible_by_trial_division(g, 3));
    }
  }
}

TEST_CASE("first irreducible is the lexicographically smallest") {
  const auto list = first_irreducibles(3, 3, 3);
  REQUIRE(list.size() == 3);
  const auto f = make_field(3, 3);
  CHECK(std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()) == list[0]);
  CHECK(list[0] != list[1]);
}

TEST_CASE("field axioms in F_27") {
  const auto f = make_field(3, 3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> nz(1, f.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = f.element(nz(rng));
    CHECK(f.mul(x, f.inv(x)) == f.one());
  }
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const auto x = f.element(i);
    CHECK(f.add(x, f.neg(x)) == f.zero());
  }
  CHECK(code_of([&] { f.inv(f.zero()); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { f.element(27); }) == ErrorCode::MixedFieldContexts);
}

TEST_CASE("primitive element") {
  for (auto [p, m] : {std::pair{5u, 2u}, {3u, 3u}, {7u, 2u}, {3u, 5u}}) {
    const auto f = make_field(p, m);
    const std::uint64_t n = f.size() - 1;
    CHECK(f.pow(f.alpha(), n) == f.one());
    for (auto q : prime_factors(n)) CHECK(f.pow(f.alpha(), n / q) != f.one());
    CHECK(f.quadratic_character(f.alpha()) == -1);
  }
}

TEST_CASE("trace") {
  const auto f = make_field(3, 3);
  CHECK(f.trace(f.zero()) == 0);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto g = make_field(p, 4);
    CHECK(g.trace(g.one()) == 4 % p);
  }
  std::uint64_t ones = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) ones += f.trace(f.element(i)) == 1;
  CHECK(ones == 9);
}

TEST_CASE("trace agrees with independent evaluations and is balanced") {
  for (auto [p, m] : {std::pair{3u, 4u}, {5u, 3u}, {7u, 3u}, {3u, 7u}, {11u, 2u}}) {
    const auto f = make_field(p, m);
    std::vector<std::uint64_t> hist(p, 0);
    for (std::uint64_t i = 0; i < f.size(); ++i) {
      const auto x = f.element(i);
      const auto t = f.trace(x);
      REQUIRE(t == oracle::trace_by_matrix(f, x));
      REQUIRE(t == f.trace_by_frobenius(x));
      REQUIRE(f.trace(f.pow(x, p)) == t);
      ++hist[t];
    }
    for (auto h : hist) CHECK(h == f.size() / p);
  }
}

TEST_CASE("trace without tables") {
  const auto with = make_field(5, 4);
  const auto without = make_field(5, 4, {10'000'000, 16});
  CHECK_FALSE(without.has_tables());
  for (std::uint64_t i = 0; i < with.size(); ++i) {
    const auto x = with.element(i);
    REQUIRE(with.trace(x) == without.trace(x));
    REQUIRE(with.quadratic_character(x) == without.quadratic_character(x));
    REQUIRE(with.mul(x, x) == without.mul(x, x));
  }
}

TEST_CASE("quadratic character") {
  const auto f = make_field(5, 3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> nz(1, f.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = f.element(nz(rng)), y = f.element(nz(rng));
    REQUIRE(f.quadratic_character(f.mul(x, y)) == f.quadratic_character(x) * f.quadratic_character(y));
  }
  for (auto [p, m] : {std::pair{5u, 3u}, {7u, 2u}, {3u, 5u}, {11u, 3u}}) {
    const auto g = make_field(p, m);
    for (std::uint32_t c = 1; c < p; ++c) {
      int expected = 1;
      for (std::uint32_t i = 0; i < m; ++i) expected *= oracle::eta(c, p);
      CHECK(g.quadratic_character(g.from_prime(c)) == expected);
    }
  }
  CHECK(f.quadratic_character(f.zero()) == 0);
}

TEST_CASE("determinism") {
  const auto a = make_field(7, 3);
  const auto b = make_field(7, 3);
  CHECK(std::equal(a.modulus().begin(), a.modulus().end(), b.modulus().begin(), b.modulus().end()));
  CHECK(a.alpha() == b.alpha());
  for (std::uint64_t i = 0; i < a.size(); i += 7) CHECK(a.coefficients(a.element(i)) == b.coefficients(b.element(i)));
}
