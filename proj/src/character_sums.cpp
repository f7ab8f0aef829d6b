#include "cwe/character_sums.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "cwe/error.hpp"
#include "cwe/int_math.hpp"

namespace cwe {

namespace {

void require_direct_size(const FieldContext& ctx, std::uint64_t cap) {
  if (ctx.size() > cap)
    throw Error(ErrorCode::SizeCapExceeded, "direct summation over F_" + std::to_string(ctx.size()) +
                                                " exceeds the cap of " + std::to_string(cap));
}

}  // namespace

GaussSumExact operator*(const GaussSumExact& a, const GaussSumExact& b) {
  if (a.p != b.p) throw Error(ErrorCode::MixedRootOrder, "Gauss sums over different characteristics");
  return {a.p, (a.unit + b.unit) % 4, a.half_power + b.half_power};
}

std::complex<double> GaussSumExact::to_complex() const {
  const double mag = std::pow(static_cast<double>(p), half_power / 2.0);
  return std::polar(mag, unit * std::numbers::pi / 2.0);
}

std::optional<std::int64_t> GaussSumExact::as_integer() const {
  if (half_power % 2 != 0 || unit % 2 != 0) return std::nullopt;
  const std::int64_t mag = ipow(p, half_power / 2);
  return unit == 0 ? mag : -mag;
}

CyclotomicInteger GaussSumExact::to_cyclotomic() const {
  if (half_power % 2 == 0) {
    if (auto v = as_integer()) return CyclotomicInteger::constant(p, *v);
    throw Error(ErrorCode::NotRepresentable, "i times a rational integer is not in Q(zeta_p)");
  }
  // quadratic_residue_sum is i^delta sqrt(p), delta = 1 iff p = 3 mod 4
  const int delta = p % 4 == 3 ? 1 : 0;
  const int rest = ((unit - delta) % 4 + 4) % 4;
  if (rest % 2 != 0) throw Error(ErrorCode::NotRepresentable, "Gauss sum phase is not in Q(zeta_p)");
  const std::int64_t scale = ipow(p, (half_power - 1) / 2) * (rest == 0 ? 1 : -1);
  return quadratic_residue_sum(p) * scale;
}

GaussSumExact gauss_sum_closed(std::uint32_t p, std::uint32_t m) {
  PrimeField fp(p);
  (void)fp;
  const int eps_turns = p % 4 == 3 ? 1 : 0;
  const int unit = static_cast<int>((2 * (m - 1) + static_cast<std::uint64_t>(eps_turns) * m) % 4);
  return {p, unit, m};
}

GaussSumExact gauss_sum_literal(std::uint32_t p, std::uint32_t m) {
  PrimeField fp(p);
  (void)fp;
  // (-1)^((p-1)m/4) = i^((p-1)m/2)
  const std::uint64_t turns = 2 * (static_cast<std::uint64_t>(m) - 1) + static_cast<std::uint64_t>(p - 1) / 2 * m;
  return {p, static_cast<int>(turns % 4), m};
}

std::int64_t gauss_sum_integer(std::uint32_t p, std::uint32_t m) {
  if (m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "G_m is an integer only for even m");
  return *gauss_sum_closed(p, m).as_integer();
}

std::int64_t gauss_product_integer(std::uint32_t p, std::uint32_t m) {
  if (m % 2 == 0) throw Error(ErrorCode::InvalidArgument, "G_m * G is an integer only for odd m");
  return *(gauss_sum_closed(p, m) * gauss_sum_closed(p, 1)).as_integer();
}

CyclotomicInteger quadratic_residue_sum(std::uint32_t p) {
  PrimeField fp(p);
  (void)fp;
  std::vector<std::int64_t> counts(p, 0);
  for (std::uint32_t x = 1; x < p; ++x) counts[x] += fp.eta(x);
  return CyclotomicInteger::from_exponent_counts(p, counts);
}

CyclotomicInteger gauss_sum_direct(const FieldContext& ctx, std::uint64_t cap) {
  require_direct_size(ctx, cap);
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint64_t i = 1; i < ctx.size(); ++i) {
    const FieldElement x{static_cast<std::uint32_t>(i)};
    counts[ctx.trace(x)] += ctx.quadratic_character(x);
  }
  return CyclotomicInteger::from_exponent_counts(ctx.p(), counts);
}

CyclotomicInteger quad_exp_sum_direct(const FieldContext& ctx, FieldElement a2, FieldElement a1, FieldElement a0,
                                      std::uint64_t cap) {
  if (a2.index == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "quadratic coefficient must be nonzero");
  require_direct_size(ctx, cap);
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    const FieldElement x{static_cast<std::uint32_t>(i)};
    const FieldElement fx = ctx.add(ctx.mul(ctx.add(ctx.mul(a2, x), a1), x), a0);
    ++counts[ctx.trace(fx)];
  }
  return CyclotomicInteger::from_exponent_counts(ctx.p(), counts);
}

CyclotomicInteger quad_exp_sum_closed(const FieldContext& ctx, FieldElement a2, FieldElement a1, FieldElement a0,
                                      const CyclotomicInteger& gm) {
  if (a2.index == 0) throw Error(ErrorCode::ZeroLeadingCoefficient, "quadratic coefficient must be nonzero");
  const FieldElement four_a2 = ctx.mul(ctx.from_prime(4), a2);
  const FieldElement c = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(four_a2)));
  return gm.shifted(ctx.trace(c)) * ctx.quadratic_character(a2);
}

CyclotomicNumbers cyclotomic_numbers_direct(const FieldContext& ctx, std::uint64_t cap) {
  require_direct_size(ctx, cap);
  CyclotomicNumbers out{};
  for (std::uint64_t i = 1; i < ctx.size(); ++i) {
    const FieldElement x{static_cast<std::uint32_t>(i)};
    const FieldElement y = ctx.add(x, ctx.one());
    if (y.index == 0) continue;
    const int ci = ctx.quadratic_character(x) == 1 ? 0 : 1;
    const int cj = ctx.quadratic_character(y) == 1 ? 0 : 1;
    ++out[2 * ci + cj];
  }
  return out;
}

std::uint64_t cyclotomic_number_direct(const FieldContext& ctx, int i, int j, std::uint64_t cap) {
  if (i < 0 || i > 1 || j < 0 || j > 1)
    throw Error(ErrorCode::InvalidArgument, "order-2 cyclotomic class indices must be 0 or 1");
  return cyclotomic_numbers_direct(ctx, cap)[2 * i + j];
}

CyclotomicNumbers cyclotomic_numbers_closed(std::uint64_t r) {
  if (r < 3 || r % 2 == 0) throw Error(ErrorCode::InvalidArgument, "field size must be an odd prime power");
  const std::uint64_t h = (r - 1) / 2;
  if (h % 2 == 0) return {(h - 2) / 2, h / 2, h / 2, h / 2};
  return {(h - 1) / 2, (h + 1) / 2, (h - 1) / 2, (h - 1) / 2};
}

}  // namespace cwe
