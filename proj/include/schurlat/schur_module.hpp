#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlat/finite_field.hpp"
#include "schurlat/matrix.hpp"
#include "schurlat/partition.hpp"

namespace schurlat {

/// Which coordinate model of S_λ(V) the matrices are written in.
///
/// kQuotient is the tableau quotient presentation: the basis vector of a
/// semistandard T is the class of the filling T, and column T of rho(g) is
/// the straightened image of T under x_i -> Σ_j g_ij x_j. kWeyl is the
/// symmetric-tensor model c_λ·V^{⊗d}; its matrices are rho_W(g) =
/// rho_Q(g^T)^T (for λ = (2): basis x1⊗x1, x1⊗x2 + x2⊗x1, x2⊗x2). Both are
/// right actions: rho(gh) = rho(h)·rho(g).
enum class Model { kWeyl, kQuotient };

const char* model_name(Model m);
Model parse_model(const std::string& text);

struct SchurCaps {
  int max_d = 12;
  int max_n = 8;
  std::size_t max_dim = 64;
  std::uint64_t max_fillings = std::uint64_t{1} << 22;  // n^d
};

/// Sparse integer combination of basis tableaux: (basis index, coefficient).
using IntExpansion = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// S_λ(K^n) with its semistandard basis and a precomputed straightening
/// table covering every filling of the diagram. Immutable after
/// construction.
class SchurModule {
 public:
  /// Throws InvalidInput when λ has more than n rows (the module is zero)
  /// and CapExceeded when a cap is violated. When the environment variable
  /// SCHUR_LATTICE_CACHE names a directory the straightening table is
  /// loaded from / stored to it.
  SchurModule(int n, Partition lambda, Model model = Model::kWeyl, const SchurCaps& caps = {});

  int n() const { return n_; }
  int degree() const { return lambda_.size(); }
  const Partition& shape() const { return lambda_; }
  Model model() const { return model_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Tableau>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(const Tableau& t) const;

  /// Boxes (row, column) in column-major order; fillings are encoded in
  /// this order.
  const std::vector<std::pair<int, int>>& boxes() const { return boxes_; }
  /// Letters (0-based) of each basis tableau in box order.
  const std::vector<std::vector<int>>& basis_letters() const { return basis_letters_; }

  /// Expansion of an arbitrary filling in the semistandard basis: zero on a
  /// repeated column entry, sign change under column transpositions,
  /// Garnir exchange relations otherwise. Throws ShapeMismatch.
  IntExpansion straighten(const Tableau& filling) const;
  /// Same, for a filling given by its base-n code in box order.
  const IntExpansion& straighten_code(std::uint64_t code) const { return table_[code]; }

  /// Whether the straightening table was read from the cache directory.
  bool loaded_from_cache() const { return from_cache_; }

 private:
  void build_table();
  bool load_cache(const std::string& path);
  void store_cache(const std::string& path) const;

  int n_;
  Partition lambda_;
  Model model_;
  std::vector<Tableau> basis_;
  std::vector<std::pair<int, int>> boxes_;
  std::vector<std::vector<int>> basis_letters_;
  std::vector<IntExpansion> table_;
  bool from_cache_ = false;
};

namespace detail {

/// Arithmetic adaptor for the valued fields (operator based).
template <class F>
struct FieldOps {
  using Elem = typename F::Elem;
  const F& field;
  Elem zero() const { return field.zero(); }
  Elem one() const { return field.one(); }
  Elem from_int(long long v) const { return field.from_int(v); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  void add_to(Elem& acc, const Elem& x) const { acc += x; }
  bool is_zero(const Elem& a) const { return field.is_zero(a); }
};

/// Arithmetic adaptor for a residue field.
struct ResidueOps {
  using Elem = FiniteField::Elem;
  const FiniteField& field;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return field.from_int(v); }
  Elem mul(Elem a, Elem b) const { return field.mul(a, b); }
  void add_to(Elem& acc, Elem x) const { acc = field.add(acc, x); }
  bool is_zero(Elem a) const { return a == 0; }
};

/// Column T = straightened image of basis tableau T under the substitution
/// x_i -> Σ_j h(i, j) x_j (multilinear over boxes).
template <class Ops>
Matrix<typename Ops::Elem> substitution_matrix(const SchurModule& module, const Ops& ops,
                                               const Matrix<typename Ops::Elem>& h) {
  using E = typename Ops::Elem;
  const std::size_t big_n = module.dim();
  const auto n = static_cast<std::uint64_t>(module.n());
  const std::size_t d = module.boxes().size();
  Matrix<E> out(big_n, big_n, ops.zero());
  std::vector<E> partial(d + 1, ops.one());
  std::vector<std::uint64_t> weight(d, 1);
  for (std::size_t b = 1; b < d; ++b) weight[b] = weight[b - 1] * n;

  for (std::size_t t = 0; t < big_n; ++t) {
    const auto& letters = module.basis_letters()[t];
    // Depth-first walk over target letters, pruning zero partial products.
    std::vector<std::uint64_t> choice(d, 0);
    std::vector<std::uint64_t> code(d + 1, 0);
    std::size_t depth = 0;
    choice[0] = 0;
    while (true) {
      if (choice[depth] == n) {
        if (depth == 0) break;
        --depth;
        ++choice[depth];
        continue;
      }
      const E& entry = h(static_cast<std::size_t>(letters[depth]), choice[depth]);
      if (ops.is_zero(entry)) {
        ++choice[depth];
        continue;
      }
      partial[depth + 1] = ops.mul(partial[depth], entry);
      code[depth + 1] = code[depth] + choice[depth] * weight[depth];
      if (depth + 1 == d) {
        for (const auto& [idx, c] : module.straighten_code(code[d])) {
          ops.add_to(out(idx, t), ops.mul(partial[d], ops.from_int(c)));
        }
        ++choice[depth];
        continue;
      }
      ++depth;
      choice[depth] = 0;
    }
  }
  return out;
}

}  // namespace detail

/// Coordinate vector of coeff·(filling) in the semistandard basis.
template <class F>
std::vector<typename F::Elem> straighten(const SchurModule& module, const F& field, const Tableau& filling,
                                         const typename F::Elem& coeff) {
  std::vector<typename F::Elem> out(module.dim(), field.zero());
  for (const auto& [idx, c] : module.straighten(filling)) out[idx] = coeff * field.from_int(c);
  return out;
}

/// Matrix of the right action of g on S_λ(K^n) in the module's model.
/// Throws Singular when g is not invertible, ShapeMismatch when g is not
/// n×n.
template <class F>
Matrix<typename F::Elem> rho(const SchurModule& module, const F& field, const Matrix<typename F::Elem>& g) {
  if (g.rows() != static_cast<std::size_t>(module.n()) || !g.square()) {
    fail(ErrorCode::kShapeMismatch, "rho: g must be n×n");
  }
  if (field.is_zero(determinant(field, g))) fail(ErrorCode::kSingular, "rho: g is singular");
  detail::FieldOps<F> ops{field};
  if (module.model() == Model::kQuotient) return detail::substitution_matrix(module, ops, g);
  return transpose(detail::substitution_matrix(module, ops, transpose(g)));
}

/// rho over the residue field, computed directly from the integral
/// straightening table reduced mod p.
Matrix<FiniteField::Elem> residue_rep(const SchurModule& module, const FiniteField& k,
                                      const Matrix<FiniteField::Elem>& g);

/// Schur polynomial s_λ(z_1..z_n) as the weight sum over semistandard
/// tableaux.
template <class F>
typename F::Elem character(const SchurModule& module, const F& field, const std::vector<typename F::Elem>& z) {
  using E = typename F::Elem;
  if (z.size() != static_cast<std::size_t>(module.n())) fail(ErrorCode::kShapeMismatch, "character: need n values");
  E total = field.zero();
  for (const auto& letters : module.basis_letters()) {
    E term = field.one();
    for (int l : letters) term = term * z[static_cast<std::size_t>(l)];
    total += term;
  }
  return total;
}

}  // namespace schurlat
