#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cwe/closed_form.hpp"
#include "cwe/error.hpp"
#include "oracles.hpp"

using namespace cwe;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmall = {
    {3, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 3}, {5, 4}, {7, 3}, {3, 7}, {11, 3}, {13, 3}, {5, 5}, {7, 4}};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("case classification") {
  CHECK(classify_case(3, 6).number() == 1);
  CHECK(classify_case(5, 4).number() == 2);
  CHECK(classify_case(3, 3).number() == 3);
  CHECK(classify_case(5, 3).number() == 4);
  CHECK(classify_case(5, 10).number() == 1);
  CHECK(classify_case(7, 7).number() == 3);
}

TEST_CASE("profiles") {
  const auto pr = ABProfile::make(5, 3, 2, 1);
  CHECK(pr.Delta == oracle::mod_p(1 - 3 * 2, 5));
  CHECK(pr.consistent());
  for (std::uint32_t rho = 0; rho < 5; ++rho)
    CHECK(pr.f(rho) == oracle::mod_p(-3 * static_cast<std::int64_t>(rho * rho) + 2 * rho - 2, 5));
  CHECK(code_of([] { ABProfile::make(5, 5, 0, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Gauss factors are the integers G_m or G_m G") {
  CHECK(gauss_factor(3, 6) == 27);
  CHECK(gauss_factor(5, 4) == -25);
  CHECK(gauss_factor(5, 3) == 25);
  CHECK(gauss_factor(3, 3) == 9);
  CHECK(gauss_factor(7, 3) == 49);
}

TEST_CASE("N(A,B) closed form against counting") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {3, 2}, {5, 2}, {3, 3}, {3, 4}, {5, 3}, {5, 4}, {7, 3}, {3, 6}, {11, 3}}) {
    const auto f = make_field(p, m);
    for (std::uint32_t A = 0; A < p; ++A)
      for (std::uint32_t B = 0; B < p; ++B) {
        CAPTURE(p);
        CAPTURE(m);
        REQUIRE(nab_closed(p, m, A, B) == static_cast<std::int64_t>(count_NAB(f, A, B)));
      }
  }
  CHECK(length_closed(3, 6) == 81);
  CHECK(length_closed(5, 4) == 20);
  CHECK(length_closed(5, 3) == 6);
}

TEST_CASE("Omega components match direct character sums") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 3}, {3, 4}, {5, 3}, {3, 5}, {5, 4}, {7, 3}, {3, 6}}) {
    const auto f = make_field(p, m);
    for (std::uint64_t i = 1; i < f.size(); ++i) {
      const auto a = f.element(i);
      const auto profile = profile_of(f, a);
      const auto ap = f.prime_value(a);
      for (std::uint32_t rho = 0; rho < p; ++rho) {
        const auto direct = oracle::omegas_direct(f, a, rho);
        const OmegaValues expected{direct.o2, direct.o3, direct.o4};
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(i);
        CAPTURE(rho);
        if (rho == 0)
          REQUIRE(omega_prime_closed(p, m, profile, ap) == expected);
        else
          REQUIRE(omega_closed(p, m, profile, rho, ap) == expected);
      }
    }
  }
}

TEST_CASE("rho = 0 tables agree with the vanishing-sum identity") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 3}, {7, 3}, {11, 3}, {3, 5}, {5, 7}}) {
    REQUIRE(classify_case(p, m).number() == 4);
    const std::uint32_t m_p = m % p;
    for (std::uint32_t A = 0; A < p; ++A)
      for (std::uint32_t B = 0; B < p; ++B) {
        const auto profile = ABProfile::make(p, m_p, A, B);
        std::vector<std::optional<std::uint32_t>> aps{std::nullopt};
        for (std::uint32_t c = 1; c < p; ++c)
          if (oracle::mod_p(static_cast<std::int64_t>(m_p) * c * c, p) == A && oracle::mod_p(m_p * c, p) == B)
            aps.push_back(c);
        for (auto ap : aps) {
          if (ap == std::nullopt && A == 0 && B == 0) continue;
          OmegaValues identity;
          for (std::uint32_t rho = 1; rho < p; ++rho) {
            const auto o = omega_closed(p, m, profile, rho, ap);
            identity.omega2 -= o.omega2;
            identity.omega3 -= o.omega3;
            identity.omega4 -= o.omega4;
          }
          CAPTURE(A);
          CAPTURE(B);
          CHECK(omega_prime_table(p, m, profile, ap) == identity);
        }
      }
  }
  CHECK(code_of([] { omega_prime_table(3, 6, ABProfile::make(3, 0, 1, 1), std::nullopt); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { omega_closed(5, 3, ABProfile::make(5, 3, 1, 1), 0, std::nullopt); }) == ErrorCode::RhoZero);
}

TEST_CASE("N_rho closed form against counting") {
  for (auto [p, m] : kSmall) {
    if (p > 7) continue;
    const auto f = make_field(p, m);
    const auto d = build_defining_set(f, 1);
    for (std::uint64_t i = 1; i < f.size(); ++i) {
      const auto a = f.element(i);
      const auto profile = profile_of(f, a);
      for (std::uint32_t rho = 0; rho < p; ++rho)
        REQUIRE(n_rho_closed(p, m, profile, rho, f.prime_value(a)) ==
                static_cast<std::int64_t>(count_N_rho(f, d, a, rho)));
    }
  }
}

TEST_CASE("pair counts") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u})
    for (std::uint32_t m_p = 1; m_p < p; ++m_p) {
      const auto ex = oracle::pair_counts_exhaustive(p, m_p);
      const auto pc = pair_counts(p, m_p);
      CAPTURE(p);
      CAPTURE(m_p);
      CHECK(pc.T1 == ex.T1);
      CHECK(pc.Tm1 == ex.Tm1);
      CHECK(pc.gamma1 == ex.g1);
      CHECK(pc.gammam1 == ex.gm1);
      CHECK(pc.delta_zero == ex.dz);
    }
  CHECK(code_of([] { pair_counts(5, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("value patterns reproduce the enumerated code") {
  for (auto [p, m] : kSmall) {
    const auto f = make_field(p, m);
    const auto brute = brute_cwe(f, build_defining_set(f, 1));
    const auto pred = theorem1_cwe(p, m);
    CAPTURE(p);
    CAPTURE(m);
    CHECK(pred.n == build_defining_set(f, 1).size());
    CHECK(pred.k == m);
    CHECK(pred.cwe == brute.cwe);
    CHECK(pred.wd == weight_distribution(brute.cwe));
    CHECK(corollary1_wd(p, m) == pred.wd);
    CHECK(pred.summary == summarize(brute));
  }
}

TEST_CASE("pattern family counts per case") {
  CHECK(theorem1_cwe(3, 6).pattern_families == 4);
  CHECK(theorem1_cwe(5, 4).pattern_families == 6);
  CHECK(theorem1_cwe(3, 3).pattern_families == 6);
  CHECK(theorem1_cwe(5, 3).pattern_families == 7);
  CHECK(theorem1_cwe(5, 4).cwe.terms().size() == 21);
  CHECK(theorem1_cwe(5, 3).cwe.terms().size() == 25);
  CHECK(theorem1_cwe(3, 6).cwe.terms().size() == 7);
}

TEST_CASE("optimality claims for m = 3") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    const auto claim = corollary2_classify(p, 3);
    const auto f = make_field(p, 3);
    const auto s = code_summary(f, build_defining_set(f, 1));
    CAPTURE(p);
    REQUIRE(claim.n.has_value());
    CHECK(*claim.n == s.n);
    CHECK(*claim.k == s.k);
    CHECK(*claim.d == s.d);
    CHECK(claim.mds == s.mds);
    CHECK(claim.griesmer_optimal == s.griesmer_optimal);
  }
  CHECK_FALSE(corollary2_classify(5, 4).n.has_value());
}

TEST_CASE("closed forms stay consistent for larger parameters") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
    for (std::uint32_t m = 3; m <= 9; ++m) {
      CAPTURE(p);
      CAPTURE(m);
      try {
        const auto pred = theorem1_cwe(p, m);
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < m; ++i) r *= p;
        CHECK(pred.cwe.total() == r);
        CHECK(pred.wd.total() == r);
        CHECK(corollary1_wd(p, m) == pred.wd);
        CHECK(static_cast<std::int64_t>(pred.n) == length_closed(p, m));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
      }
    }
}

TEST_CASE("only the unordered pair reading sums to p^m") {
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 4}, {7, 4}, {5, 3}, {7, 3}, {3, 4}}) {
    const auto f = make_field(p, m);
    const auto brute = brute_cwe(f, build_defining_set(f, 1));
    const auto ordered = theorem1_cwe(p, m, {PairReading::Ordered, false});
    const auto unordered = theorem1_cwe(p, m, {PairReading::Unordered, false});
    CAPTURE(p);
    CAPTURE(m);
    CHECK(unordered.cwe == brute.cwe);
    CHECK(ordered.cwe.total() > f.size());
    CHECK(code_of([&] { theorem1_cwe(p, m, {PairReading::Ordered, true}); }) == ErrorCode::FrequencyMismatch);
  }
}
