#pragma once

#include <cstdint>
#include <vector>

#include "schurlat/building.hpp"

namespace schurlat {

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness-of-fit against the uniform distribution on the bins.
ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts);

/// Sum of independent per-coordinate uniformity tests (one bin row per
/// coordinate), pooled into a single statistic.
ChiSquare chi_square_uniform_pooled(const std::vector<std::vector<std::uint64_t>>& counts);

/// Haar measure on a lattice realized at finite digit precision: a sample
/// is Σ ξ_j v_j over the lattice basis with ξ_j uniform on R/ϖ^precision,
/// lifted to canonical digits.
template <class F>
class LatticeGaussian {
 public:
  using E = typename F::Elem;
  using Vec = std::vector<E>;

  LatticeGaussian(Lattice<F> support, int precision, std::uint64_t seed)
      : support_(std::move(support)), precision_(precision), seed_(seed) {
    if (precision < 1) fail(ErrorCode::kInvalidInput, "precision must be >= 1");
  }

  const Lattice<F>& support() const { return support_; }
  int precision() const { return precision_; }
  std::uint64_t seed() const { return seed_; }

  /// Samples with their coordinates in the lattice basis.
  std::vector<Vec> sample_coordinates(std::size_t count, std::uint64_t stream = 0) const {
    Rng rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    const F& field = support_.field();
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
      Vec xi(support_.dim());
      for (auto& x : xi) x = field.random_digits(rng, precision_);
      out.push_back(std::move(xi));
    }
    return out;
  }

  std::vector<Vec> sample(std::size_t count, std::uint64_t stream = 0) const {
    const auto b = support_.basis();
    std::vector<Vec> out;
    for (const auto& xi : sample_coordinates(count, stream)) out.push_back(mat_vec<F>(b, xi));
    return out;
  }

 private:
  Lattice<F> support_;
  int precision_;
  std::uint64_t seed_;
};

struct WordTest {
  std::vector<std::size_t> word;  // indices into the generator list
  ChiSquare chi;
  std::size_t escaped = 0;        // pushed samples that left the lattice
  bool retried = false;
  bool pass = false;
};

struct InvarianceReport {
  bool exact_invariant = false;
  ChiSquare sample_digits;  // uniformity of the samples themselves
  bool sample_digits_pass = false;
  bool sample_digits_retried = false;
  std::vector<WordTest> words;
  double alpha = 1e-3;
  std::size_t count = 0;
  int precision = 1;
  std::uint64_t seed = 0;
  bool statistics_pass() const {
    if (!sample_digits_pass) return false;
    for (const auto& w : words) {
      if (!w.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline constexpr std::uint64_t kRetryStream = 0xfffffffffULL;

template <class F>
std::vector<std::vector<std::uint64_t>> residue_digit_counts(const F& field,
                                                             const std::vector<std::vector<typename F::Elem>>& coords,
                                                             std::size_t* escaped) {
  const std::size_t q = field.residue_field().order();
  const std::size_t n = coords.empty() ? 0 : coords[0].size();
  std::vector<std::vector<std::uint64_t>> counts(n, std::vector<std::uint64_t>(q, 0));
  for (const auto& c : coords) {
    bool integral = std::all_of(c.begin(), c.end(), [&](const auto& x) { return field.val(x) >= 0; });
    if (!integral) {
      if (escaped) ++*escaped;
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) ++counts[j][field.reduce(c[j])];
  }
  return counts;
}

}  // namespace detail

/// Exact part: is_invariant(H, L). Statistical part: for `trials` random
/// words in the generators, push the samples through the word and test the
/// residue digits of their lattice coordinates for uniformity at level
/// alpha. A failing test is retried once with fresh samples.
template <class F>
InvarianceReport invariance_report(const LatticeGaussian<F>& gauss, const MatrixModule<F>& h,
                                   const std::vector<Matrix<typename F::Elem>>& generators, int trials,
                                   std::size_t count, double alpha = 1e-3) {
  const F& field = gauss.support().field();
  InvarianceReport rep;
  rep.alpha = alpha;
  rep.count = count;
  rep.precision = gauss.precision();
  rep.seed = gauss.seed();
  rep.exact_invariant = is_invariant(h, gauss.support());

  const auto b = gauss.support().basis();
  const auto b_inv = inverse(field, b);
  for (std::uint64_t attempt = 0; attempt < 2 && !rep.sample_digits_pass; ++attempt) {
    const auto coords = gauss.sample_coordinates(count, attempt == 0 ? 0 : detail::kRetryStream);
    rep.sample_digits = chi_square_uniform_pooled(detail::residue_digit_counts(field, coords, nullptr));
    rep.sample_digits_pass = rep.sample_digits.p_value >= alpha;
    rep.sample_digits_retried = attempt > 0;
  }

  Rng rng(gauss.seed() + 0x51ed2701ULL);
  std::uniform_int_distribution<std::size_t> length(1, 4);
  for (int t = 0; t < trials && !generators.empty(); ++t) {
    WordTest wt;
    std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
    const std::size_t len = length(rng);
    auto x = identity_matrix(field, b.rows());
    for (std::size_t i = 0; i < len; ++i) {
      wt.word.push_back(pick(rng));
      x = x * generators[wt.word.back()];
    }
    const auto coords_map = b_inv * x * b;
    for (int attempt = 0; attempt < 2; ++attempt) {
      std::vector<std::vector<typename F::Elem>> pushed;
      for (const auto& xi : gauss.sample_coordinates(count, static_cast<std::uint64_t>(2 * t + attempt + 1))) {
        pushed.push_back(mat_vec<F>(coords_map, xi));
      }
      wt.escaped = 0;
      wt.chi = chi_square_uniform_pooled(detail::residue_digit_counts(field, pushed, &wt.escaped));
      wt.pass = wt.escaped == 0 && wt.chi.p_value >= alpha;
      if (wt.pass || wt.escaped > 0) break;
      wt.retried = true;
    }
    rep.words.push_back(std::move(wt));
  }
  return rep;
}

}  // namespace schurlat
