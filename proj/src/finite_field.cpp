#include "cwe/finite_field.hpp"

#include <limits>
#include <string>

#include "cwe/error.hpp"
#include "cwe/polynomial.hpp"

namespace cwe {

std::uint64_t checked_field_size(std::uint32_t p, std::uint32_t m, std::uint64_t cap) {
  const std::uint64_t hard_cap = std::min<std::uint64_t>(cap, std::numeric_limits<std::uint32_t>::max());
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (r > hard_cap / p)
      throw Error(ErrorCode::SizeCapExceeded, std::to_string(p) + "^" + std::to_string(m) +
                                                  " exceeds the field size cap of " + std::to_string(cap));
    r *= p;
  }
  return r;
}

FieldContext::FieldContext(PrimeField fp, FieldParams params, std::vector<std::uint32_t> modulus)
    : fp_(fp), params_(params), modulus_(std::move(modulus)) {
  digit_weight_.resize(params_.m);
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < params_.m; ++i) {
    digit_weight_[i] = w;
    w *= params_.p;
  }
}

void FieldContext::check(FieldElement x) const {
  if (x.index >= params_.r)
    throw Error(ErrorCode::MixedFieldContexts,
                "element index " + std::to_string(x.index) + " does not belong to F_" + std::to_string(params_.r));
}

FieldElement FieldContext::element(std::uint64_t index) const {
  if (index >= params_.r)
    throw Error(ErrorCode::MixedFieldContexts,
                "element index " + std::to_string(index) + " does not belong to F_" + std::to_string(params_.r));
  return {static_cast<std::uint32_t>(index)};
}

FieldElement FieldContext::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > params_.m)
    throw Error(ErrorCode::InvalidArgument, "too many coefficients for a field element");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) idx += (coeffs[i] % params_.p) * digit_weight_[i];
  return {static_cast<std::uint32_t>(idx)};
}

std::vector<std::uint32_t> FieldContext::coefficients(FieldElement x) const {
  check(x);
  std::vector<std::uint32_t> out(params_.m);
  std::uint32_t v = x.index;
  for (auto& c : out) {
    c = v % params_.p;
    v /= params_.p;
  }
  return out;
}

FieldElement FieldContext::add(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  std::uint32_t a = x.index, b = y.index;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < params_.m && (a | b); ++i) {
    out += fp_.add(a % params_.p, b % params_.p) * digit_weight_[i];
    a /= params_.p;
    b /= params_.p;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement FieldContext::neg(FieldElement x) const {
  check(x);
  std::uint32_t a = x.index;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < params_.m && a; ++i) {
    out += fp_.neg(a % params_.p) * digit_weight_[i];
    a /= params_.p;
  }
  return {static_cast<std::uint32_t>(out)};
}

FieldElement FieldContext::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement FieldContext::poly_mul(FieldElement x, FieldElement y) const {
  poly::Poly a = coefficients(x), b = coefficients(y);
  poly::trim(a);
  poly::trim(b);
  poly::Poly c = poly::mulmod(fp_, a, b, modulus_);
  return from_coefficients(c);
}

FieldElement FieldContext::poly_pow(FieldElement x, std::uint64_t e) const {
  FieldElement acc = one(), base = x;
  while (e) {
    if (e & 1) acc = poly_mul(acc, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return acc;
}

FieldElement FieldContext::mul(FieldElement x, FieldElement y) const {
  check(x);
  check(y);
  if (x.index == 0 || y.index == 0) return zero();
  if (!has_tables()) return poly_mul(x, y);
  std::uint64_t k = static_cast<std::uint64_t>(log_[x.index]) + log_[y.index];
  if (k >= params_.r - 1) k -= params_.r - 1;
  return {exp_[k]};
}

FieldElement FieldContext::pow(FieldElement x, std::uint64_t e) const {
  check(x);
  if (e == 0) return one();
  if (x.index == 0) return zero();
  if (!has_tables()) return poly_pow(x, e);
  const std::uint64_t order = params_.r - 1;
  const auto k = static_cast<unsigned __int128>(log_[x.index]) * (e % order) % order;
  return {exp_[static_cast<std::uint64_t>(k)]};
}

FieldElement FieldContext::inv(FieldElement x) const {
  check(x);
  if (x.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + std::to_string(params_.r));
  if (!has_tables()) return poly_pow(x, params_.r - 2);
  const std::uint64_t order = params_.r - 1;
  return {exp_[(order - log_[x.index]) % order]};
}

std::uint32_t FieldContext::log(FieldElement x) const {
  check(x);
  if (!has_tables()) throw Error(ErrorCode::InvalidArgument, "discrete log tables were not built for this field");
  if (x.index == 0) throw Error(ErrorCode::DivisionByZero, "log of zero");
  return log_[x.index];
}

FieldElement FieldContext::exp(std::uint64_t k) const {
  if (!has_tables()) return poly_pow(alpha_, k);
  return {exp_[k % (params_.r - 1)]};
}

std::uint32_t FieldContext::trace_by_frobenius(FieldElement x) const {
  check(x);
  FieldElement acc = x, s = x;
  for (std::uint32_t i = 1; i < params_.m; ++i) {
    s = poly_pow(s, params_.p);
    acc = add(acc, s);
  }
  if (acc.index >= params_.p)
    throw Error(ErrorCode::Internal, "Frobenius orbit sum left the prime field; modulus is not irreducible");
  return acc.index;
}

std::uint32_t FieldContext::trace(FieldElement x) const {
  check(x);
  if (!trace_table_.empty()) return trace_table_[x.index];
  std::uint32_t a = x.index;
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < params_.m && a; ++i) {
    acc += static_cast<std::uint64_t>(a % params_.p) * basis_trace_[i];
    a /= params_.p;
  }
  return static_cast<std::uint32_t>(acc % params_.p);
}

int FieldContext::quadratic_character(FieldElement x) const {
  check(x);
  if (x.index == 0) return 0;
  if (has_tables()) return (log_[x.index] & 1u) == 0 ? 1 : -1;
  return poly_pow(x, (params_.r - 1) / 2).index == 1 ? 1 : -1;
}

void FieldContext::find_primitive() {
  const std::uint64_t order = params_.r - 1;
  const auto factors = prime_factors(order);
  for (std::uint64_t idx = 1; idx < params_.r; ++idx) {
    const FieldElement c{static_cast<std::uint32_t>(idx)};
    bool primitive = true;
    for (auto q : factors) {
      if (poly_pow(c, order / q).index == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      alpha_ = c;
      return;
    }
  }
  throw Error(ErrorCode::Internal, "no primitive element found");
}

void FieldContext::build_tables() {
  basis_trace_.resize(params_.m);
  for (std::uint32_t i = 0; i < params_.m; ++i)
    basis_trace_[i] = trace_by_frobenius({static_cast<std::uint32_t>(digit_weight_[i])});

  if (params_.r > table_cap_) return;
  const std::uint64_t order = params_.r - 1;
  exp_.resize(order);
  log_.assign(params_.r, 0);
  FieldElement cur = one();
  for (std::uint64_t k = 0; k < order; ++k) {
    exp_[k] = cur.index;
    log_[cur.index] = static_cast<std::uint32_t>(k);
    cur = poly_mul(cur, alpha_);
  }
  if (cur.index != 1) throw Error(ErrorCode::Internal, "alpha^(r-1) != 1");

  trace_table_.resize(params_.r);
  for (std::uint64_t x = 0; x < params_.r; ++x) {
    std::uint64_t a = x, acc = 0;
    for (std::uint32_t i = 0; i < params_.m && a; ++i) {
      acc += (a % params_.p) * basis_trace_[i];
      a /= params_.p;
    }
    trace_table_[x] = static_cast<std::uint32_t>(acc % params_.p);
  }
}

FieldContext make_field_with_modulus(std::uint32_t p, std::span<const std::uint32_t> modulus,
                                     const FieldOptions& options) {
  PrimeField fp(p);
  poly::Poly g(modulus.begin(), modulus.end());
  poly::trim(g);
  if (g.size() < 2 || g.back() != 1)
    throw Error(ErrorCode::InvalidModulus, "modulus must be monic of degree >= 1");
  for (auto c : g)
    if (c >= p) throw Error(ErrorCode::InvalidModulus, "modulus coefficient out of range [0, p)");
  if (!poly::is_irreducible(fp, g)) throw Error(ErrorCode::InvalidModulus, "modulus is not irreducible over F_p");

  const auto m = static_cast<std::uint32_t>(g.size() - 1);
  FieldParams params{p, m, checked_field_size(p, m, options.size_cap), m % p};
  FieldContext ctx(fp, params, std::move(g));
  ctx.table_cap_ = options.table_cap;
  ctx.find_primitive();
  ctx.build_tables();
  return ctx;
}

std::vector<std::vector<std::uint32_t>> first_irreducibles(std::uint32_t p, std::uint32_t m,
                                                           std::size_t count) {
  PrimeField fp(p);
  if (m < 1) throw Error(ErrorCode::DegreeTooSmall, "extension degree must be at least 1");
  const std::uint64_t limit = checked_field_size(p, m, std::numeric_limits<std::uint32_t>::max());
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint64_t c = 0; c < limit && out.size() < count; ++c) {
    std::vector<std::uint32_t> g(m + 1);
    std::uint64_t v = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      g[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    g[m] = 1;
    if (poly::is_irreducible(fp, g)) out.push_back(std::move(g));
  }
  return out;
}

FieldContext make_field(std::uint32_t p, std::uint32_t m, const FieldOptions& options) {
  PrimeField fp(p);
  if (m < 1) throw Error(ErrorCode::DegreeTooSmall, "extension degree must be at least 1");
  checked_field_size(p, m, options.size_cap);
  auto moduli = first_irreducibles(p, m, 1);
  if (moduli.empty()) throw Error(ErrorCode::Internal, "no irreducible polynomial found");
  return make_field_with_modulus(p, moduli.front(), options);
}

}  // namespace cwe
