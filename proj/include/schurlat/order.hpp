#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "schurlat/dvr_linalg.hpp"
#include "schurlat/schur_module.hpp"

namespace schurlat {

struct OrderCertificate {
  int level = 1;
  int trials_requested = 0;
  int trials_passed = 0;  // consecutive trials without enlargement
  int absorbed = 0;       // random elements that enlarged the module
  std::uint64_t seed = 0;
  /// True when the generator set topologically generates GL(n, R) (the
  /// mixed-characteristic backend); otherwise the order is certified only
  /// at the given level and trial count.
  bool proven = false;

  std::string label() const {
    if (proven) return "proven";
    return "certified at level " + std::to_string(level) + " / " + std::to_string(trials_passed) + " trials";
  }
};

template <class F>
struct OrderResult {
  MatrixModule<F> order;
  /// rho of the standard generators plus every absorbed random element.
  std::vector<Matrix<typename F::Elem>> rep_generators;
  OrderCertificate certificate;
};

/// Transpositions, elementary transvections I + E_ij and the diagonal
/// matrices diag(1,..,u,..,1) for u in the unit sample set.
template <class F>
std::vector<Matrix<typename F::Elem>> standard_generators(const F& field, int n, int level) {
  using Mat = Matrix<typename F::Elem>;
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Mat> out;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = i + 1; j < nn; ++j) {
      Mat p = identity_matrix(field, nn);
      p(i, i) = field.zero();
      p(j, j) = field.zero();
      p(i, j) = field.one();
      p(j, i) = field.one();
      out.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      if (i == j) continue;
      Mat t = identity_matrix(field, nn);
      t(i, j) = field.one();
      out.push_back(std::move(t));
    }
  }
  for (const auto& u : field.unit_sample_set(level)) {
    for (std::size_t k = 0; k < nn; ++k) {
      Mat d = identity_matrix(field, nn);
      d(k, k) = u;
      out.push_back(std::move(d));
    }
  }
  return out;
}

/// A random element of GL(n, R): a short word in the standard generators,
/// random transvections I + r·E_ij with r ∈ R and random unit diagonals.
template <class F>
Matrix<typename F::Elem> random_group_element(const F& field, int n, const std::vector<Matrix<typename F::Elem>>& gens,
                                              Rng& rng, int digits = 3) {
  using Mat = Matrix<typename F::Elem>;
  const auto nn = static_cast<std::size_t>(n);
  Mat g = identity_matrix(field, nn);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<std::size_t> index(0, nn - 1);
  const int steps = length(rng);
  for (int s = 0; s < steps; ++s) {
    Mat factor = identity_matrix(field, nn);
    switch (kind(rng)) {
      case 0:
        factor = gens[pick(rng)];
        break;
      case 1: {
        if (nn < 2) break;
        std::size_t i = index(rng), j = index(rng);
        while (j == i) j = index(rng);
        factor(i, j) = field.random_digits(rng, digits);
        break;
      }
      default:
        for (std::size_t k = 0; k < nn; ++k) factor(k, k) = field.random_unit(rng, digits);
        break;
    }
    g = g * factor;
  }
  return g;
}

/// H_{n,λ} = span_R(rho(GL(n, R))) by saturation over the standard
/// generators followed by `trials` randomized enlargement tests; any
/// enlargement is absorbed and the trial count restarts.
template <class F>
OrderResult<F> compute_order(const SchurModule& module, const F& field, int level, int trials, std::uint64_t seed) {
  using Mat = Matrix<typename F::Elem>;
  if (level < 1) fail(ErrorCode::kInvalidInput, "level must be >= 1");
  if (trials < 0) fail(ErrorCode::kInvalidInput, "trials must be >= 0");
  const std::size_t big_n = module.dim();
  const auto group_gens = standard_generators(field, module.n(), level);
  std::vector<Mat> rep_gens;
  for (const auto& g : group_gens) rep_gens.push_back(rho(module, field, g));

  MatrixModule<F> start(field, big_n);
  start.add(identity_matrix(field, big_n));
  MatrixModule<F> order = module_add_and_saturate(std::move(start), rep_gens);

  OrderCertificate cert;
  cert.level = level;
  cert.trials_requested = trials;
  cert.seed = seed;
  cert.proven = !std::is_same_v<F, LaurentField>;

  Rng rng(seed);
  const int max_absorb = 64;
  while (cert.trials_passed < trials) {
    Mat g = random_group_element(field, module.n(), group_gens, rng, level + 2);
    Mat x = rho(module, field, g);
    if (order.contains(x)) {
      ++cert.trials_passed;
      continue;
    }
    if (++cert.absorbed > max_absorb) fail(ErrorCode::kCapExceeded, "too many enlargements during order certification");
    rep_gens.push_back(x);
    order = module_add_and_saturate(std::move(order), rep_gens);
    cert.trials_passed = 0;
  }
  order.canonicalize();
  return OrderResult<F>{std::move(order), std::move(rep_gens), cert};
}

}  // namespace schurlat
