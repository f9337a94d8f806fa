#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schurlat/finite_field.hpp"
#include "schurlat/matrix.hpp"

namespace schurlat {

using KVec = std::vector<FiniteField::Elem>;
using KMat = Matrix<FiniteField::Elem>;

/// Subspace of k^N held in reduced row echelon form; two subspaces are equal
/// iff their rows() are equal.
class KSubspace {
 public:
  KSubspace(const FiniteField& k, std::size_t n) : k_(&k), n_(n) {}

  const FiniteField& field() const { return *k_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<KVec>& rows() const { return rows_; }

  /// Returns true iff v was not already contained.
  bool insert(KVec v);
  bool contains(KVec v) const;
  /// Reduced-echelon form (rows sorted by pivot, pivots 1, pivot columns
  /// cleared elsewhere).
  void reduce();

  friend bool operator==(const KSubspace& a, const KSubspace& b) { return a.rows_ == b.rows_; }
  friend bool operator<(const KSubspace& a, const KSubspace& b) {
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    return a.rows_ < b.rows_;
  }

 private:
  // Eliminates existing pivots from v; returns the first nonzero index or n_.
  std::size_t eliminate(KVec& v) const;

  const FiniteField* k_;
  std::size_t n_;
  std::vector<KVec> rows_;
  std::vector<std::size_t> pivots_;
  bool reduced_ = true;
};

KVec k_mat_vec(const FiniteField& k, const KMat& a, const KVec& v);
KMat k_mat_mul(const FiniteField& k, const KMat& a, const KMat& b);
std::size_t k_rank(const FiniteField& k, const std::vector<KVec>& vectors);

/// The residue representation on L/ϖL: images of a generating set of the
/// acting algebra as N×N matrices over k.
struct ResidueRep {
  const FiniteField* field = nullptr;
  std::size_t dim = 0;
  std::vector<KMat> generators;
};

/// Dimension of the unital k-algebra generated by the representation.
std::size_t algebra_dimension(const ResidueRep& rep);

/// Smallest invariant subspace containing v.
KSubspace spin(const ResidueRep& rep, const KVec& v);

/// All proper nonzero invariant subspaces, sorted by dimension and then by
/// echelon rows. Returns nothing without enumeration when the generated
/// algebra is all of M_N(k). Throws CapExceeded when q^N > max_vectors.
std::vector<KSubspace> invariant_subspaces(const ResidueRep& rep, std::uint64_t max_vectors = std::uint64_t{1} << 16);

}  // namespace schurlat
