#include "schurlat/residue_linalg.hpp"

#include <algorithm>
#include <set>

#include "schurlat/error.hpp"

namespace schurlat {

std::size_t KSubspace::eliminate(KVec& v) const {
  const FiniteField& k = *k_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if (v[c] == 0) continue;
    const FiniteField::Elem factor = v[c];
    const KVec& row = rows_[r];
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] != 0) v[j] = k.sub(v[j], k.mul(factor, row[j]));
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j] != 0) return j;
  }
  return n_;
}

bool KSubspace::insert(KVec v) {
  if (v.size() != n_) fail(ErrorCode::kShapeMismatch, "subspace vector has the wrong length");
  const std::size_t c = eliminate(v);
  if (c == n_) return false;
  const FiniteField& k = *k_;
  const FiniteField::Elem inv = k.inv(v[c]);
  for (auto& x : v) x = k.mul(x, inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(c);
  reduced_ = false;
  return true;
}

bool KSubspace::contains(KVec v) const {
  if (v.size() != n_) fail(ErrorCode::kShapeMismatch, "subspace vector has the wrong length");
  return eliminate(v) == n_;
}

void KSubspace::reduce() {
  if (reduced_) return;
  const FiniteField& k = *k_;
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<KVec> rows;
  std::vector<std::size_t> pivots;
  for (auto i : order) {
    rows.push_back(std::move(rows_[i]));
    pivots.push_back(pivots_[i]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t s = 0; s < rows.size(); ++s) {
      if (s == r) continue;
      const FiniteField::Elem factor = rows[s][pivots[r]];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows[r][j] != 0) rows[s][j] = k.sub(rows[s][j], k.mul(factor, rows[r][j]));
      }
    }
  }
  rows_ = std::move(rows);
  pivots_ = std::move(pivots);
  reduced_ = true;
}

KVec k_mat_vec(const FiniteField& k, const KMat& a, const KVec& v) {
  KVec out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FiniteField::Elem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && v[j] != 0) acc = k.add(acc, k.mul(a(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

KMat k_mat_mul(const FiniteField& k, const KMat& a, const KMat& b) {
  KMat out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(l, j) != 0) out(i, j) = k.add(out(i, j), k.mul(a(i, l), b(l, j)));
      }
    }
  }
  return out;
}

std::size_t k_rank(const FiniteField& k, const std::vector<KVec>& vectors) {
  if (vectors.empty()) return 0;
  KSubspace s(k, vectors[0].size());
  for (const auto& v : vectors) s.insert(v);
  return s.dim();
}

std::size_t algebra_dimension(const ResidueRep& rep) {
  const FiniteField& k = *rep.field;
  const std::size_t n = rep.dim;
  KSubspace span(k, n * n);
  std::vector<KMat> pending;
  KMat id(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  if (span.insert(id.data())) pending.push_back(id);
  while (!pending.empty() && span.dim() < n * n) {
    KMat x = std::move(pending.back());
    pending.pop_back();
    for (const auto& g : rep.generators) {
      KMat y = k_mat_mul(k, g, x);
      if (span.insert(y.data())) pending.push_back(std::move(y));
    }
  }
  return span.dim();
}

KSubspace spin(const ResidueRep& rep, const KVec& v) {
  const FiniteField& k = *rep.field;
  KSubspace out(k, rep.dim);
  std::vector<KVec> pending;
  if (out.insert(v)) pending.push_back(v);
  while (!pending.empty() && out.dim() < rep.dim) {
    KVec x = std::move(pending.back());
    pending.pop_back();
    for (const auto& g : rep.generators) {
      KVec y = k_mat_vec(k, g, x);
      if (out.insert(y)) pending.push_back(std::move(y));
    }
  }
  out.reduce();
  return out;
}

std::vector<KSubspace> invariant_subspaces(const ResidueRep& rep, std::uint64_t max_vectors) {
  if (!rep.field) fail(ErrorCode::kInvalidInput, "residue representation without a field");
  const FiniteField& k = *rep.field;
  const std::size_t n = rep.dim;
  for (const auto& g : rep.generators) {
    if (g.rows() != n || g.cols() != n) fail(ErrorCode::kShapeMismatch, "generator size does not match dimension");
  }
  if (n <= 1) return {};
  if (algebra_dimension(rep) == n * n) return {};

  const std::uint64_t q = k.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > max_vectors) {
      fail(ErrorCode::kCapExceeded, "invariant subspace enumeration needs q^N > " + std::to_string(max_vectors));
    }
  }

  std::set<KSubspace> found;
  KVec v(n, 0);
  // Walk every vector whose last nonzero coordinate is 1: one per line.
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    std::size_t last = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<FiniteField::Elem>(c % q);
      c /= q;
      if (v[i] != 0) last = i;
    }
    if (v[last] != 1) continue;
    KSubspace w = spin(rep, v);
    if (w.dim() < n) found.insert(std::move(w));
  }

  // Every invariant subspace is a sum of cyclic ones.
  std::vector<KSubspace> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      KSubspace sum = all[i];
      for (const auto& row : all[j].rows()) sum.insert(row);
      if (sum.dim() >= n) continue;
      sum.reduce();
      if (found.insert(sum).second) all.push_back(std::move(sum));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace schurlat
