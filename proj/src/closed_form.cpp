#include "cwe/closed_form.hpp"

#include <functional>
#include <vector>

#include "cwe/character_sums.hpp"
#include "cwe/error.hpp"
#include "cwe/int_math.hpp"
#include "cwe/prime_field.hpp"

namespace cwe {

namespace {

void require_code_params(std::uint32_t p, std::uint32_t m) {
  PrimeField check(p);
  (void)check;
  if (m <= 2) throw Error(ErrorCode::DegreeTooSmall, "the code needs m > 2, got m = " + std::to_string(m));
}

// (-1)^((p-1)m/4) for even m
int sign_even(std::uint32_t p, std::uint32_t m) {
  return sign_quarter_power(static_cast<std::int64_t>(p - 1) * m);
}

// (-1)^((p-1)(m+1)/4) for odd m
int sign_odd(std::uint32_t p, std::uint32_t m) {
  return sign_quarter_power(static_cast<std::int64_t>(p - 1) * (m + 1));
}

}  // namespace

CaseTag classify_case(std::uint32_t p, std::uint32_t m) {
  PrimeField check(p);
  (void)check;
  return {m % 2 == 0, m % p == 0};
}

ABProfile ABProfile::make(std::uint32_t p, std::uint32_t m_p, std::uint32_t A, std::uint32_t B) {
  const PrimeField fp(p);
  if (m_p >= p || A >= p || B >= p) throw Error(ErrorCode::InvalidArgument, "profile values must lie in F_p");
  ABProfile out{p, m_p, A, B, 0};
  out.Delta = fp.sub(fp.mul(B, B), fp.mul(m_p, A));
  return out;
}

std::uint32_t ABProfile::f(std::uint32_t rho) const {
  const PrimeField fp(p);
  const std::uint32_t quad = fp.mul(m_p, fp.mul(rho, rho));
  return fp.sub(fp.sub(fp.mul(fp.mul(2, B), rho), quad), A);
}

bool ABProfile::consistent() const { return make(p, m_p, A, B).Delta == Delta; }

bool ABProfile::has_two_roots() const {
  const PrimeField fp(p);
  return m_p != 0 && fp.eta(Delta) == 1;
}

ABProfile profile_of(const FieldContext& ctx, FieldElement a) {
  return ABProfile::make(ctx.p(), ctx.params().m_p, ctx.trace(ctx.mul(a, a)), ctx.trace(a));
}

std::int64_t gauss_factor(std::uint32_t p, std::uint32_t m) {
  return m % 2 == 0 ? gauss_sum_integer(p, m) : gauss_product_integer(p, m);
}

std::int64_t length_closed(std::uint32_t p, std::uint32_t m) { return nab_closed(p, m, 0, 1 % p); }

std::int64_t nab_closed(std::uint32_t p, std::uint32_t m, std::uint32_t A, std::uint32_t B) {
  const PrimeField fp(p);
  if (A >= p || B >= p) throw Error(ErrorCode::InvalidArgument, "A and B must lie in F_p");
  const std::int64_t P = p;
  const std::int64_t r = ipow(p, m);
  const std::int64_t g = gauss_factor(p, m);
  const std::uint32_t m_p = m % p;
  const int e = fp.eta(fp.neg(m_p));
  const bool even = m % 2 == 0;

  // p^2 N, then one exact division
  std::int64_t scaled = r;
  if (A == 0) {
    if (B == 0) {
      if (even && m_p == 0) scaled += P * (P - 1) * g;
      if (!even && m_p != 0) scaled += e * (P - 1) * g;
    } else {
      if (even && m_p != 0) scaled += P * g;
      if (!even && m_p != 0) scaled -= e * g;
    }
  } else {
    const std::uint32_t delta = fp.sub(fp.mul(B, B), fp.mul(m_p, A));
    if (even && m_p == 0) {
      if (B == 0) scaled -= P * g;
    } else if (even) {
      if (delta != 0) scaled += fp.eta(delta) * P * g;
    } else if (m_p == 0) {
      if (B == 0) scaled += fp.eta(fp.neg(A)) * P * g;
    } else {
      scaled += delta == 0 ? e * (P - 1) * g : -e * g;
    }
  }
  return exact_div(scaled, P * P);
}

OmegaValues omega_closed(std::uint32_t p, std::uint32_t m, const ABProfile& pr, std::uint32_t rho,
                         std::optional<std::uint32_t> a_prime) {
  const PrimeField fp(p);
  if (rho == 0) throw Error(ErrorCode::RhoZero, "rho must be nonzero; use the rho = 0 tables");
  if (rho >= p) throw Error(ErrorCode::InvalidArgument, "rho must lie in F_p");
  const std::int64_t P = p;
  const std::int64_t r = ipow(p, m);
  const std::int64_t g = gauss_factor(p, m);
  const std::uint32_t A = pr.A, B = pr.B, m_p = pr.m_p;
  const bool even = m % 2 == 0;
  const int e = fp.eta(fp.neg(m_p));
  const int eA = fp.eta(fp.neg(A));

  OmegaValues out;
  if (a_prime) out.omega2 = *a_prime == rho ? (P - 1) * r : -r;

  if (even) out.omega3 = A == 0 ? -(P - 1) * g : g;
  else out.omega3 = A == 0 ? 0 : -eA * g;

  const std::uint32_t twoB = fp.mul(2, B);
  std::int64_t c = 0;  // omega4 = c * g
  switch (classify_case(p, m).number()) {
    case 1:
      if (A == 0) c = B == 0 ? P - 1 : -1;
      else if (B == 0) c = -1;
      else c = A == fp.mul(rho, twoB) ? P * P - P - 1 : -(P + 1);
      break;
    case 2:
      if (A == 0) {
        if (B == 0) c = -1;
        else c = fp.mul(rho, m_p) == twoB ? P * P - P - 1 : -(P + 1);
      } else if (pr.Delta == 0) {
        c = fp.mul(rho, B) == A ? P * P - P - 1 : -(P + 1);
      } else if (fp.eta(pr.Delta) == 1) {
        c = pr.f(rho) == 0 ? P * P - 2 * P - 1 : -(2 * P + 1);
      } else {
        c = -1;
      }
      break;
    case 3:
      if (A == 0) c = B == 0 ? 0 : fp.eta(fp.div(fp.mul(rho, B), 2)) * P;
      else if (B == 0) c = eA;
      else if (A == fp.mul(rho, twoB)) c = eA;
      else c = fp.eta(fp.sub(fp.mul(rho, twoB), A)) * P + eA;
      break;
    default:
      if (A == 0) {
        if (B == 0 || fp.mul(rho, m_p) == twoB) c = e;
        else c = fp.eta(fp.sub(fp.mul(twoB, rho), fp.mul(m_p, fp.mul(rho, rho)))) * P + e;
      } else if (pr.Delta == 0) {
        c = fp.mul(rho, B) == A ? -(P - 2) * e : 2 * e;
      } else {
        const std::uint32_t fr = pr.f(rho);
        c = fr == 0 ? eA + e : P * fp.eta(fr) + eA + e;
      }
      break;
  }
  out.omega4 = checked_mul(c, g);
  return out;
}

OmegaValues omega_prime_table(std::uint32_t p, std::uint32_t m, const ABProfile& pr,
                              std::optional<std::uint32_t> a_prime) {
  if (classify_case(p, m).number() != 4)
    throw Error(ErrorCode::InvalidArgument, "the explicit rho = 0 tables cover m odd with m mod p != 0");
  const PrimeField fp(p);
  const std::int64_t P = p;
  const std::int64_t g = gauss_factor(p, m);
  const int e = fp.eta(fp.neg(pr.m_p));
  const int eA = fp.eta(fp.neg(pr.A));

  OmegaValues out;
  out.omega2 = a_prime ? -ipow(p, m) : 0;
  out.omega3 = pr.A == 0 ? 0 : (P - 1) * eA * g;
  std::int64_t c;
  if (pr.A == 0) c = pr.B == 0 ? -(P - 1) * e : e;
  else c = pr.Delta == 0 ? -(P - 2) * e : eA + e;
  out.omega4 = c * g;
  return out;
}

OmegaValues omega_prime_closed(std::uint32_t p, std::uint32_t m, const ABProfile& pr,
                               std::optional<std::uint32_t> a_prime) {
  if (classify_case(p, m).number() == 4) return omega_prime_table(p, m, pr, a_prime);
  OmegaValues out;
  for (std::uint32_t rho = 1; rho < p; ++rho) {
    const auto o = omega_closed(p, m, pr, rho, a_prime);
    out.omega2 -= o.omega2;
    out.omega3 -= o.omega3;
    out.omega4 -= o.omega4;
  }
  return out;
}

std::int64_t n_rho_closed(std::uint32_t p, std::uint32_t m, const ABProfile& pr, std::uint32_t rho,
                          std::optional<std::uint32_t> a_prime) {
  const std::int64_t n = length_closed(p, m);
  const auto o = rho == 0 ? omega_prime_closed(p, m, pr, a_prime) : omega_closed(p, m, pr, rho, a_prime);
  const std::int64_t P = p;
  return exact_div(checked_add(checked_mul(P * P, n), o.sum()), P * P * P);
}

PairCounts pair_counts(std::uint32_t p, std::uint32_t m_p) {
  const PrimeField fp(p);
  if (m_p == 0 || m_p >= p) throw Error(ErrorCode::InvalidArgument, "pair counts need m_p in F_p*");
  const std::uint64_t small = static_cast<std::uint64_t>(p - 1) * (p - 2) / 2;
  const std::uint64_t large = static_cast<std::uint64_t>(p - 1) * p / 2;
  PairCounts out;
  out.T1 = small;
  out.Tm1 = large;
  out.gamma1 = fp.eta(m_p) == 1 ? small : large;
  out.gammam1 = fp.eta(m_p) == 1 ? large : small;
  out.delta_zero = p - 1;
  return out;
}

ClosedFormPrediction theorem1_cwe(std::uint32_t p, std::uint32_t m, const ExpansionOptions& options) {
  require_code_params(p, m);
  const PrimeField fp(p);
  const std::int64_t P = p;
  const std::int64_t r = ipow(p, m);
  const std::int64_t n = length_closed(p, m);
  const std::int64_t base = ipow(p, m - 3);  // p^(m-3)
  const CaseTag tag = classify_case(p, m);
  const std::uint32_t m_p = m % p;

  ClosedFormPrediction out;
  out.params = {p, m, static_cast<std::uint64_t>(r), m_p};
  out.case_tag = tag;
  out.n = static_cast<std::uint64_t>(n);
  out.k = m;
  out.cwe = CompleteWeightEnumerator(p, out.n);

  std::int64_t total = 0;
  auto emit = [&](const std::function<std::int64_t(std::uint32_t)>& N, std::int64_t freq) {
    if (freq < 0) throw Error(ErrorCode::FrequencyMismatch, "negative pattern frequency " + std::to_string(freq));
    Composition c;
    c.counts.assign(p, 0);
    std::int64_t rest = n;
    for (std::uint32_t rho = 1; rho < p; ++rho) {
      const std::int64_t v = N(rho);
      if (v < 0) throw Error(ErrorCode::FrequencyMismatch, "negative symbol count in a value pattern");
      c.counts[rho] = static_cast<std::uint64_t>(v);
      rest -= v;
    }
    if (rest < 0) throw Error(ErrorCode::FrequencyMismatch, "symbol counts exceed the length");
    c.counts[0] = static_cast<std::uint64_t>(rest);
    total += freq;
    out.cwe.add(c, static_cast<std::uint64_t>(freq));
  };
  auto constant = [](std::int64_t v) { return [v](std::uint32_t) { return v; }; };
  auto at = [](std::uint32_t rho0, std::int64_t hit, std::int64_t miss) {
    return [=](std::uint32_t rho) { return rho == rho0 ? hit : miss; };
  };
  const bool ordered = options.reading == PairReading::Ordered;
  auto second = [&](std::uint32_t a) { return ordered ? 1u : a + 1; };

  emit(constant(0), 1);

  if (tag.m_even) {
    const int s = sign_even(p, m);
    const std::int64_t se = s * ipow(p, (m - 4) / 2);
    if (tag.m_p_zero) {
      out.pattern_families = 4;
      emit(constant(base), r / P - P);
      emit(constant(base + se), (P - 1) * (r / (P * P)));
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, r / (P * P), 0), 1);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, base - (P - 1) * se, base + se), (P - 1) * (r / (P * P)));
    } else {
      out.pattern_families = 6;
      const std::int64_t half = s * ipow(p, (m - 2) / 2);
      emit(constant(base), r / (P * P) - 1);
      emit(constant(base - se), (P - 1) / 2 * (r / P + s * ipow(p, m / 2)));
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, n, 0), 1);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, base - half, base), r / (P * P) - 1);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, base - (P - 1) * se, base + se), n);
      for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = second(a); b < p; ++b)
          if (b != a) emit([=](std::uint32_t rho) { return rho == a || rho == b ? base - (P - 1) * se : base + se; }, n);
    }
  } else {
    const int t = sign_odd(p, m);
    const std::int64_t tq = t * ipow(p, (m - 3) / 2);
    if (tag.m_p_zero) {
      out.pattern_families = 6;
      const std::int64_t half_freq = (P - 1) * (r / (P * P)) / 2;
      emit(constant(base), r / P - P);
      emit([&](std::uint32_t rho) { return base + fp.eta(rho) * tq; }, half_freq);
      emit([&](std::uint32_t rho) { return base - fp.eta(rho) * tq; }, half_freq);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, r / (P * P), 0), 1);
      for (std::uint32_t a = 1; a < p; ++a)
        emit([&, a](std::uint32_t rho) { return rho == a ? base : base + fp.eta(fp.sub(rho, a)) * tq; }, half_freq);
      for (std::uint32_t a = 1; a < p; ++a)
        emit([&, a](std::uint32_t rho) { return rho == a ? base : base - fp.eta(fp.sub(rho, a)) * tq; }, half_freq);
    } else {
      out.pattern_families = 7;
      const int em = fp.eta(fp.neg(m_p));
      const std::int64_t flat = n + em * t * ipow(p, (m - 1) / 2) - 1;
      emit(constant(base), flat);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, n, 0), 1);
      for (std::uint32_t a = 1; a < p; ++a)
        emit([&, a](std::uint32_t rho) {
          return rho == a ? base : base + em * fp.eta(fp.mul(rho, fp.sub(rho, a))) * tq;
        }, n);
      for (std::uint32_t a = 1; a < p; ++a) emit(at(a, base - em * tq, base), flat);
      for (std::uint32_t a = 1; a < p; ++a)
        for (std::uint32_t b = second(a); b < p; ++b) {
          if (b == a) continue;
          emit([&, a, b](std::uint32_t rho) {
            if (rho == a || rho == b) return base;
            const std::uint32_t prod = fp.mul(fp.neg(m_p), fp.mul(fp.sub(rho, a), fp.sub(rho, b)));
            return base + fp.eta(prod) * tq;
          }, n);
        }
      const std::uint32_t mp2 = fp.mul(m_p, m_p);
      for (std::uint32_t delta = 1; delta < p; ++delta) {
        if (fp.eta(delta) != -1) continue;
        emit([&, delta](std::uint32_t rho) {
          return base + em * fp.eta(fp.sub(fp.mul(mp2, fp.mul(rho, rho)), delta)) * tq;
        }, n);
        for (std::uint32_t a = 1; a < p; ++a)
          emit([&, a, delta](std::uint32_t rho) {
            if (rho == a) return base - fp.eta(m_p) * tq;
            const std::uint32_t d = fp.sub(rho, a);
            return base + em * fp.eta(fp.sub(fp.mul(mp2, fp.mul(d, d)), delta)) * tq;
          }, n);
      }
    }
  }

  if (options.check_total && total != r)
    throw Error(ErrorCode::FrequencyMismatch,
                "pattern frequencies add up to " + std::to_string(total) + ", expected " + std::to_string(r));
  out.wd = weight_distribution(out.cwe);
  out.summary = classify_code(p, out.n, m, out.wd.min_distance());
  return out;
}

WeightDistribution corollary1_wd(std::uint32_t p, std::uint32_t m) {
  require_code_params(p, m);
  const PrimeField fp(p);
  const std::int64_t P = p;
  const std::int64_t r = ipow(p, m);
  const std::int64_t n = length_closed(p, m);
  const std::int64_t base = ipow(p, m - 3);
  const std::int64_t pm2 = r / (P * P);
  const std::uint32_t m_p = m % p;

  std::vector<std::pair<std::int64_t, std::int64_t>> rows{{0, 1}};
  switch (classify_case(p, m).number()) {
    case 1: {
      const std::int64_t se = sign_even(p, m) * ipow(p, (m - 4) / 2);
      rows.push_back({pm2, P - 1});
      rows.push_back({(P - 1) * base, r / P - P});
      rows.push_back({(P - 1) * (base + se), (P - 1) * pm2});
      rows.push_back({(P - 1) * base - se, (P - 1) * (P - 1) * pm2});
      break;
    }
    case 2: {
      const int s = sign_even(p, m);
      const std::int64_t se = s * ipow(p, (m - 4) / 2);
      rows.push_back({(P - 1) * base, pm2 - 1});
      rows.push_back({(P - 1) * (base - se), (P - 1) / 2 * (r / P + s * ipow(p, m / 2))});
      rows.push_back({n, P - 1});
      rows.push_back({n - base, (P - 1) * (pm2 - 1)});
      rows.push_back({(P - 1) * base - se, (P - 1) * n});
      rows.push_back({(P - 1) * base - (P + 1) * se, (P - 1) * (P - 2) / 2 * n});
      break;
    }
    case 3: {
      const std::int64_t q = ipow(p, (m - 3) / 2);
      rows.push_back({pm2, P - 1});
      rows.push_back({(P - 1) * base, 2 * (r / P) - pm2 - P});
      rows.push_back({(P - 1) * base - q, (P - 1) * (P - 1) * pm2 / 2});
      rows.push_back({(P - 1) * base + q, (P - 1) * (P - 1) * pm2 / 2});
      break;
    }
    default: {
      const std::int64_t u = fp.eta(fp.neg(m_p)) * sign_odd(p, m) * ipow(p, (m - 1) / 2);
      const std::int64_t vq = sign_quarter_power(static_cast<std::int64_t>(P - 1) * (m - 1)) * ipow(p, (m - 3) / 2);
      const std::int64_t small = (P - 1) * (P - 2) / 2 * n;
      const std::int64_t large = (P - 1) * P / 2 * n;
      const bool residue = fp.eta(m_p) == 1;
      rows.push_back({(P - 1) * base, n + u - 1});
      rows.push_back({n, P - 1});
      rows.push_back({n - base, (P - 1) * (2 * n + u - 1)});
      rows.push_back({n - base - vq, residue ? small : large});
      rows.push_back({n - base + vq, residue ? large : small});
      break;
    }
  }

  WeightDistribution wd;
  wd.n = static_cast<std::uint64_t>(n);
  for (const auto& [w, f] : rows) {
    if (w < 0 || f < 0) throw Error(ErrorCode::FrequencyMismatch, "negative weight or frequency in the table");
    if (f > 0) wd.counts[static_cast<std::uint64_t>(w)] += static_cast<std::uint64_t>(f);
  }
  if (static_cast<std::int64_t>(wd.total()) != r)
    throw Error(ErrorCode::FrequencyMismatch, "table frequencies do not add up to p^m");
  return wd;
}

OptimalityClaim corollary2_classify(std::uint32_t p, std::uint32_t m) {
  require_code_params(p, m);
  OptimalityClaim out;
  if (m != 3) return out;
  out.griesmer_optimal = true;
  out.mds = true;
  out.k = 3;
  if (p == 3) {
    out.n = 3;
    out.d = 1;
  } else if (PrimeField(p).eta_signed(-3) == -1) {
    out.n = p + 1;
    out.d = p - 1;
  } else {
    out.n = p - 1;
    out.d = p - 3;
  }
  return out;
}

}  // namespace cwe
