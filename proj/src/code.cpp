#include "cwe/code.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "cwe/error.hpp"

namespace cwe {

namespace {

void require_prime_value(const FieldContext& ctx, std::uint32_t v, const char* what) {
  if (v >= ctx.p())
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " = " + std::to_string(v) + " is not an element of F_" + std::to_string(ctx.p()));
}

void require_budget(std::uint64_t r, std::uint64_t n, std::uint64_t budget) {
  const std::uint64_t work = n == 0 ? r : r * n;
  if (n != 0 && work / n != r) throw Error(ErrorCode::BudgetExceeded, "enumeration size overflows");
  if (work > budget)
    throw Error(ErrorCode::BudgetExceeded, "enumeration needs " + std::to_string(work) +
                                               " symbol evaluations, budget is " + std::to_string(budget));
}

unsigned worker_count(unsigned requested, std::uint64_t jobs) {
  unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (jobs < 4096) w = 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(w, jobs));
}

// Codeword of a, stepped through consecutive a by adding the carry vectors.
// With v_i = (Tr(t^i x))_{x in D}, moving a -> a+1 in index order where the
// lowest j digits wrap from p-1 to 0 adds v_j + v_{j-1} + ... + v_0.
class CodewordStepper {
 public:
  CodewordStepper(const FieldContext& ctx, const DefiningSet& d) : p_(ctx.p()), m_(ctx.m()), n_(d.size()) {
    carry_.assign(static_cast<std::size_t>(m_) * n_, 0);
    std::uint64_t weight = 1;
    for (std::uint32_t i = 0; i < m_; ++i, weight *= p_) {
      const FieldElement ti = ctx.element(weight);
      for (std::size_t k = 0; k < n_; ++k) {
        std::uint32_t v = ctx.trace(ctx.mul(ti, d.elements[k]));
        if (i > 0) v = (v + carry_[(i - 1) * n_ + k]) % p_;
        carry_[i * n_ + k] = v;
      }
    }
  }

  void seek(std::uint64_t a, std::vector<std::uint32_t>& word, std::vector<std::uint32_t>& digits) const {
    digits.assign(m_, 0);
    word.assign(n_, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
      digits[i] = static_cast<std::uint32_t>(a % p_);
      a /= p_;
    }
    // plain basis vector i is carry_i - carry_{i-1}
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (digits[i] == 0) continue;
      for (std::size_t k = 0; k < n_; ++k) {
        const std::uint32_t prev = i > 0 ? carry_[(i - 1) * n_ + k] : 0;
        const std::uint32_t basis = (carry_[i * n_ + k] + p_ - prev) % p_;
        word[k] = static_cast<std::uint32_t>((word[k] + static_cast<std::uint64_t>(basis) * digits[i]) % p_);
      }
    }
  }

  void step(std::vector<std::uint32_t>& word, std::vector<std::uint32_t>& digits) const {
    std::uint32_t j = 0;
    while (j < m_ && digits[j] == p_ - 1) digits[j++] = 0;
    if (j == m_) {
      std::fill(word.begin(), word.end(), 0);
      return;
    }
    ++digits[j];
    const std::uint32_t* c = &carry_[static_cast<std::size_t>(j) * n_];
    for (std::size_t k = 0; k < n_; ++k) {
      std::uint32_t v = word[k] + c[k];
      word[k] = v >= p_ ? v - p_ : v;
    }
  }

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::size_t n_;
  std::vector<std::uint32_t> carry_;
};

struct Partial {
  std::map<Composition, std::uint64_t> terms;
  std::uint64_t kernel = 0;
};

}  // namespace

DefiningSet build_defining_set(const FieldContext& ctx, std::uint32_t b) {
  if (ctx.m() <= 2)
    throw Error(ErrorCode::DegreeTooSmall, "the code needs m > 2, got m = " + std::to_string(ctx.m()));
  require_prime_value(ctx, b, "b");
  auto d = build_defining_set_general(ctx, {b, 0u, false});
  d.outside_closed_form_scope = b == 0;
  return d;
}

DefiningSet build_defining_set_general(const FieldContext& ctx, const DefiningSetSpec& spec) {
  if (!spec.trace && !spec.trace_square)
    throw Error(ErrorCode::EmptyConstraint, "defining set needs a trace or trace-square constraint");
  if (spec.trace) require_prime_value(ctx, *spec.trace, "trace value");
  if (spec.trace_square) require_prime_value(ctx, *spec.trace_square, "trace-square value");

  DefiningSet d;
  d.spec = spec;
  for (std::uint64_t i = spec.exclude_zero ? 1 : 0; i < ctx.size(); ++i) {
    const FieldElement x{static_cast<std::uint32_t>(i)};
    if (spec.trace && ctx.trace(x) != *spec.trace) continue;
    if (spec.trace_square && ctx.trace(ctx.mul(x, x)) != *spec.trace_square) continue;
    d.elements.push_back(x);
  }
  return d;
}

std::uint64_t Composition::length() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0ull); }

void CompleteWeightEnumerator::add(const Composition& c, std::uint64_t frequency) {
  if (c.counts.size() != p_ || c.length() != n_)
    throw Error(ErrorCode::InvalidArgument, "composition does not match the enumerator's alphabet or length");
  if (frequency == 0) return;
  terms_[c] += frequency;
}

void CompleteWeightEnumerator::merge(const CompleteWeightEnumerator& other) {
  if (other.p_ != p_ || other.n_ != n_)
    throw Error(ErrorCode::InvalidArgument, "cannot merge enumerators of different codes");
  for (const auto& [c, f] : other.terms_) terms_[c] += f;
}

std::uint64_t CompleteWeightEnumerator::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& [c, f] : terms_) t += f;
  return t;
}

std::uint64_t CompleteWeightEnumerator::frequency(const Composition& c) const noexcept {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& [w, a] : counts) t += a;
  return t;
}

std::uint64_t WeightDistribution::min_distance() const noexcept {
  for (const auto& [w, a] : counts)
    if (w > 0 && a > 0) return w;
  return 0;
}

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe) {
  WeightDistribution wd;
  wd.n = cwe.n();
  for (const auto& [c, f] : cwe.terms()) wd.counts[cwe.n() - c.counts[0]] += f;
  return wd;
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::MDS: return "MDS";
    case Classification::GriesmerOptimal: return "Griesmer-optimal";
    case Classification::Neither: return "neither";
  }
  return "neither";
}

std::uint64_t griesmer_sum(std::uint32_t q, std::uint32_t k, std::uint64_t d) {
  std::uint64_t sum = 0;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    sum += (d + qi - 1) / qi;
    if (qi > d) {
      // every later term is 1 (d > 0) or 0
      sum += d > 0 ? k - i - 1 : 0;
      break;
    }
    qi *= q;
  }
  return sum;
}

CodeSummary classify_code(std::uint32_t p, std::uint64_t n, std::uint32_t k, std::uint64_t d) {
  CodeSummary s;
  s.n = n;
  s.k = k;
  s.d = d;
  s.griesmer_sum = griesmer_sum(p, k, d);
  s.griesmer_optimal = d > 0 && s.griesmer_sum == n;
  s.mds = d > 0 && d + k == n + 1;
  s.classification = s.mds ? Classification::MDS
                     : s.griesmer_optimal ? Classification::GriesmerOptimal
                                          : Classification::Neither;
  return s;
}

std::vector<std::uint32_t> codeword(const FieldContext& ctx, const DefiningSet& d, FieldElement a) {
  std::vector<std::uint32_t> out;
  out.reserve(d.size());
  for (auto x : d.elements) out.push_back(ctx.trace(ctx.mul(a, x)));
  return out;
}

EnumerationResult brute_cwe(const FieldContext& ctx, const DefiningSet& d, const EnumerationOptions& options) {
  const std::uint64_t r = ctx.size();
  const std::uint32_t p = ctx.p();
  require_budget(r, d.size(), options.budget);

  const CodewordStepper stepper(ctx, d);
  const unsigned workers = worker_count(options.workers, r);
  std::vector<Partial> partials(workers);

  auto run = [&](unsigned w) {
    const std::uint64_t begin = r * w / workers;
    const std::uint64_t end = r * (w + 1) / workers;
    if (begin == end) return;
    Partial& out = partials[w];
    std::vector<std::uint32_t> word, digits;
    Composition comp;
    comp.counts.assign(p, 0);
    stepper.seek(begin, word, digits);
    for (std::uint64_t a = begin;;) {
      std::fill(comp.counts.begin(), comp.counts.end(), 0);
      for (auto s : word) ++comp.counts[s];
      if (comp.counts[0] == word.size()) ++out.kernel;
      ++out.terms[comp];
      if (++a == end) break;
      stepper.step(word, digits);
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::uint64_t kernel = 0;
  std::map<Composition, std::uint64_t> merged;
  for (auto& part : partials) {
    kernel += part.kernel;
    for (auto& [c, f] : part.terms) merged[c] += f;
  }

  EnumerationResult res;
  res.kernel_size = kernel;
  res.distinct_codewords = r / kernel;
  if (r % kernel != 0) throw Error(ErrorCode::Internal, "kernel size does not divide the field size");
  std::uint64_t power = 1;
  std::uint32_t k = 0;
  while (power < res.distinct_codewords) {
    power *= p;
    ++k;
  }
  if (power != res.distinct_codewords)
    throw Error(ErrorCode::NonPowerCodewordCount,
                std::to_string(res.distinct_codewords) + " distinct codewords is not a power of " + std::to_string(p));
  res.dimension = k;

  res.cwe = CompleteWeightEnumerator(p, d.size());
  for (const auto& [c, f] : merged) {
    if (f % kernel != 0) throw Error(ErrorCode::Internal, "composition frequency not divisible by the kernel size");
    res.cwe.add(c, f / kernel);
  }
  return res;
}

std::uint64_t count_N_rho(const FieldContext& ctx, const DefiningSet& d, FieldElement a, std::uint32_t rho) {
  require_prime_value(ctx, rho, "rho");
  std::uint64_t count = 0;
  for (auto x : d.elements)
    if (ctx.trace(ctx.mul(a, x)) == rho) ++count;
  return count;
}

std::uint64_t count_NAB(const FieldContext& ctx, std::uint32_t A, std::uint32_t B, std::uint64_t cap) {
  require_prime_value(ctx, A, "A");
  require_prime_value(ctx, B, "B");
  if (ctx.size() > cap)
    throw Error(ErrorCode::SizeCapExceeded, "counting over F_" + std::to_string(ctx.size()) + " exceeds the cap");
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    const FieldElement x{static_cast<std::uint32_t>(i)};
    if (ctx.trace(x) == B && ctx.trace(ctx.mul(x, x)) == A) ++count;
  }
  return count;
}

CodeSummary summarize(const EnumerationResult& result) {
  const auto wd = weight_distribution(result.cwe);
  return classify_code(result.cwe.p(), result.cwe.n(), result.dimension, wd.min_distance());
}

CodeSummary code_summary(const FieldContext& ctx, const DefiningSet& d, const EnumerationOptions& options) {
  return summarize(brute_cwe(ctx, d, options));
}

bool check_db_equivalence(const FieldContext& ctx, std::uint32_t b, const EnumerationOptions& options) {
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "b must be nonzero");
  const auto d1 = build_defining_set(ctx, 1);
  const auto db = build_defining_set(ctx, b);
  if (d1.size() != db.size()) return false;
  require_budget(ctx.size(), 2 * d1.size(), options.budget);

  // D_b ordered by x -> b x over D_1
  DefiningSet mapped = db;
  const FieldElement bb = ctx.from_prime(b);
  for (std::size_t i = 0; i < d1.size(); ++i) mapped.elements[i] = ctx.mul(bb, d1.elements[i]);
  auto check = mapped.elements;
  std::sort(check.begin(), check.end());
  if (check != db.elements) return false;

  std::vector<std::vector<std::uint32_t>> words1, wordsb;
  words1.reserve(ctx.size());
  wordsb.reserve(ctx.size());
  for (std::uint64_t i = 0; i < ctx.size(); ++i) {
    const FieldElement a{static_cast<std::uint32_t>(i)};
    words1.push_back(codeword(ctx, d1, a));
    wordsb.push_back(codeword(ctx, mapped, a));
  }
  std::sort(words1.begin(), words1.end());
  std::sort(wordsb.begin(), wordsb.end());
  words1.erase(std::unique(words1.begin(), words1.end()), words1.end());
  wordsb.erase(std::unique(wordsb.begin(), wordsb.end()), wordsb.end());
  return words1 == wordsb;
}

}  // namespace cwe
