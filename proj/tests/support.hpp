#pragma once

// Independent oracles and random generators shared by the unit tests and
// the acceptance runner.

#include <cstdint>
#include <random>
#include <vector>

#include "schurlat/building.hpp"
#include "schurlat/order.hpp"
#include "schurlat/schur_module.hpp"

namespace schurlat::testing {

/// Random invertible n×n matrix with entries drawn by `entry`.
template <class F, class Gen>
Matrix<typename F::Elem> random_invertible(const F& field, std::size_t n, Gen&& entry) {
  while (true) {
    Matrix<typename F::Elem> g(n, n, field.zero());
    for (auto& x : g.data()) x = entry();
    if (!field.is_zero(determinant(field, g))) return g;
  }
}

/// Random element of GL(n, Q) with small integer entries.
inline Matrix<mpq_class> random_rational_gl(const PadicField& field, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> pick(-4, 4);
  return random_invertible(field, n, [&] { return mpq_class(pick(rng)); });
}

/// Weyl's dimension formula ∏_{i<j} (λ_i - λ_j + j - i) / (j - i) over n
/// rows (λ padded with zeros).
inline std::uint64_t weyl_dimension(const Partition& lambda, int n) {
  if (lambda.rows() > n) return 0;
  std::vector<long> l(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lambda.rows(); ++i) l[static_cast<std::size_t>(i)] = lambda.row_length(i);
  mpq_class dim = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mpq_class factor(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i, j - i);
      factor.canonicalize();
      dim *= factor;
    }
  }
  return dim.get_num().get_ui();
}

/// Schur polynomial by the bialternant formula det(z_i^{λ_j+n-j}) /
/// det(z_i^{n-j}); the z_i must be distinct.
inline mpq_class schur_bialternant(const PadicField& field, const Partition& lambda, const std::vector<mpq_class>& z) {
  const std::size_t n = z.size();
  Matrix<mpq_class> num(n, n), den(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long part = static_cast<int>(j) < lambda.rows() ? lambda.row_length(static_cast<int>(j)) : 0;
      mpq_class a = 1, b = 1;
      for (long e = 0; e < part + static_cast<long>(n - 1 - j); ++e) a *= z[i];
      for (long e = 0; e < static_cast<long>(n - 1 - j); ++e) b *= z[i];
      num(i, j) = a;
      den(i, j) = b;
    }
  }
  return determinant(field, num) / determinant(field, den);
}

/// Bideterminant of a filling evaluated at the matrix x (n × ℓ(λ)): the
/// product over columns of the minors with rows = column letters and
/// columns 1..length.
inline mpq_class bideterminant(const PadicField& field, const Tableau& t, const Matrix<mpq_class>& x) {
  mpq_class out = 1;
  const std::size_t width = t.entries.empty() ? 0 : t.entries[0].size();
  for (std::size_t c = 0; c < width; ++c) {
    std::vector<int> column;
    for (const auto& row : t.entries) {
      if (c < row.size()) column.push_back(row[c]);
    }
    Matrix<mpq_class> minor(column.size(), column.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
      for (std::size_t j = 0; j < column.size(); ++j) minor(i, j) = x(static_cast<std::size_t>(column[i] - 1), j);
    }
    out *= determinant(field, minor);
  }
  return out;
}

/// Every integral matrix of size n with entries of valuation >= m_ij, as a
/// module (the expected graduated order).
template <class F>
MatrixModule<F> expected_graduated(const F& field, const std::vector<std::vector<Val>>& m) {
  return graduated_module(field, ExponentMatrix::from_rows(m));
}

/// Mutual containment of two matrix modules.
template <class F>
bool same_module(const MatrixModule<F>& a, const MatrixModule<F>& b) {
  for (const auto& x : a.basis()) {
    if (!b.contains(x)) return false;
  }
  for (const auto& x : b.basis()) {
    if (!a.contains(x)) return false;
  }
  return true;
}

/// Generators of GL_n(F_q): permutations, transvections and diag(c, 1, ..).
inline std::vector<KMat> residue_group_generators(const FiniteField& k, std::size_t n) {
  std::vector<KMat> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    KMat s(n, n, 0);
    for (std::size_t j = 0; j < n; ++j) s(j, j) = 1;
    s(i, i) = s(i + 1, i + 1) = 0;
    s(i, i + 1) = s(i + 1, i) = 1;
    out.push_back(s);
  }
  if (n > 1) {
    KMat t(n, n, 0);
    for (std::size_t j = 0; j < n; ++j) t(j, j) = 1;
    t(0, 1) = 1;
    out.push_back(t);
  }
  KMat d(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) d(j, j) = 1;
  d(0, 0) = k.generator();
  out.push_back(d);
  return out;
}

}  // namespace schurlat::testing
