#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schurlat/dvr_linalg.hpp"
#include "schurlat/exponent.hpp"
#include "schurlat/residue_linalg.hpp"

namespace schurlat {

/// Entrywise minimum valuation over an R-basis of H; +inf where every basis
/// element vanishes.
template <class F>
ExponentMatrix exponent_profile(const MatrixModule<F>& h) {
  const F& field = h.field();
  const std::size_t n = h.n();
  ExponentMatrix m(n, kInfiniteVal);
  for (const auto& x : h.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = std::min(m(i, j), field.val(x(i, j)));
    }
  }
  return m;
}

/// Λ_M = {X : val(X_ij) >= m_ij} as a matrix module (finite entries only).
template <class F>
MatrixModule<F> graduated_module(const F& field, const ExponentMatrix& m) {
  const std::size_t n = m.n();
  MatrixModule<F> out(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) == kInfiniteVal) continue;
      Matrix<typename F::Elem> unit(n, n, field.zero());
      unit(i, j) = field.pow_uniformizer(m(i, j));
      out.add(unit);
    }
  }
  out.canonicalize();
  return out;
}

/// M when H = Λ_M exactly, otherwise nothing. Throws NotFullRank.
template <class F>
std::optional<ExponentMatrix> detect_graduated(const MatrixModule<F>& h) {
  if (!h.full_rank()) fail(ErrorCode::kNotFullRank, "graduated detection needs a full-rank module");
  ExponentMatrix m = exponent_profile(h);
  for (std::size_t i = 0; i < m.n(); ++i) {
    if (m(i, i) != 0) return std::nullopt;
  }
  if (min_plus_closure(m) != m) return std::nullopt;
  const F& field = h.field();
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      Matrix<typename F::Elem> unit(m.n(), m.n(), field.zero());
      unit(i, j) = field.pow_uniformizer(m(i, j));
      if (!h.contains(unit)) return std::nullopt;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Lattices and their homothety classes.

/// Full-rank R-lattice in K^N, stored as the Hermite normal form of its
/// generators. Basis vectors are the columns of basis().
template <class F>
class Lattice {
 public:
  using E = typename F::Elem;
  using Vec = std::vector<E>;

  /// Throws NotFullRank when the generators do not span K^N.
  static Lattice from_generators(const F& field, std::size_t n, const std::vector<Vec>& gens) {
    Echelon<F> ech(field, n);
    for (const auto& v : gens) ech.insert(v);
    if (ech.rank() != n) fail(ErrorCode::kNotFullRank, "lattice generators do not span K^N");
    ech.canonicalize();
    return Lattice(std::move(ech));
  }

  static Lattice standard(const F& field, std::size_t n) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, field.zero());
      e[i] = field.one();
      gens.push_back(std::move(e));
    }
    return from_generators(field, n, gens);
  }

  /// ⊕ ϖ^{u_i} R e_i.
  static Lattice diagonal(const F& field, const std::vector<int>& u) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < u.size(); ++i) {
      Vec e(u.size(), field.zero());
      e[i] = field.pow_uniformizer(u[i]);
      gens.push_back(std::move(e));
    }
    return from_generators(field, u.size(), gens);
  }

  /// Lattice spanned by the columns of b.
  static Lattice from_columns(const F& field, const Matrix<E>& b) {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < b.cols(); ++j) gens.push_back(b.column(j));
    return from_generators(field, b.rows(), gens);
  }

  const F& field() const { return ech_.field(); }
  std::size_t dim() const { return ech_.dim(); }
  const std::vector<Vec>& vectors() const { return ech_.rows(); }

  Matrix<E> basis() const {
    const std::size_t n = dim();
    Matrix<E> b(n, n, field().zero());
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) b(i, j) = ech_.rows()[j][i];
    }
    return b;
  }

  bool contains(const Vec& v) const { return ech_.contains(v); }
  bool contains(const Lattice& other) const {
    return std::all_of(other.vectors().begin(), other.vectors().end(), [&](const Vec& v) { return contains(v); });
  }

  Lattice scaled(int k) const {
    const E s = field().pow_uniformizer(k);
    std::vector<Vec> gens = vectors();
    for (auto& v : gens) {
      for (auto& x : v) x = s * x;
    }
    return from_generators(field(), dim(), gens);
  }

  /// Representative of the homothety class: the scaling whose Hermite
  /// normal form has minimum pivot valuation 0.
  Lattice class_representative() const {
    const auto& vals = ech_.pivot_valuations();
    const Val low = *std::min_element(vals.begin(), vals.end());
    return low == 0 ? *this : scaled(-low);
  }

  /// Serialization of the Hermite normal form; equal keys iff equal
  /// lattices.
  std::string key() const {
    std::string out;
    for (const auto& v : vectors()) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += field().to_string(v[i]);
      }
      out += "]";
    }
    return out;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.key() == b.key(); }

 private:
  explicit Lattice(Echelon<F> ech) : ech_(std::move(ech)) {}
  Echelon<F> ech_;
};

template <class F>
Lattice<F> lattice_sum(const Lattice<F>& a, const Lattice<F>& b) {
  auto gens = a.vectors();
  gens.insert(gens.end(), b.vectors().begin(), b.vectors().end());
  return Lattice<F>::from_generators(a.field(), a.dim(), gens);
}

/// {x : x·v ∈ R for all v ∈ L}, spanned by the columns of (B^{-1})^T.
template <class F>
Lattice<F> lattice_dual(const Lattice<F>& l) {
  return Lattice<F>::from_columns(l.field(), transpose(inverse(l.field(), l.basis())));
}

template <class F>
Lattice<F> lattice_intersection(const Lattice<F>& a, const Lattice<F>& b) {
  return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}

/// Valuations of the elementary divisors of b relative to a, increasing.
template <class F>
std::vector<Val> relative_divisors(const Lattice<F>& a, const Lattice<F>& b) {
  const F& field = a.field();
  Matrix<typename F::Elem> c = inverse(field, a.basis()) * b.basis();
  std::vector<std::vector<typename F::Elem>> rows;
  for (std::size_t i = 0; i < c.rows(); ++i) rows.emplace_back(c.data().begin() + static_cast<long>(i * c.cols()), c.data().begin() + static_cast<long>((i + 1) * c.cols()));
  return smith_valuations(field, rows);
}

/// Distance of the classes in the building: max - min of the relative
/// elementary-divisor valuations.
template <class F>
int class_distance(const Lattice<F>& a, const Lattice<F>& b) {
  const auto e = relative_divisors(a, b);
  return e.back() - e.front();
}

/// True iff x·v ∈ L for every operator x and basis vector v of L.
template <class F>
bool is_invariant(const std::vector<Matrix<typename F::Elem>>& ops, const Lattice<F>& l) {
  for (const auto& x : ops) {
    for (const auto& v : l.vectors()) {
      if (!l.contains(mat_vec<F>(x, v))) return false;
    }
  }
  return true;
}

template <class F>
bool is_invariant(const MatrixModule<F>& h, const Lattice<F>& l) {
  return is_invariant(h.basis(), l);
}

/// Residue representation on L/ϖL of operators preserving L. Throws
/// InvariantViolation when an operator does not preserve L.
template <class F>
ResidueRep residue_rep_on(const std::vector<Matrix<typename F::Elem>>& ops, const Lattice<F>& l) {
  const F& field = l.field();
  const auto b = l.basis();
  const auto b_inv = inverse(field, b);
  ResidueRep rep;
  rep.field = &field.residue_field();
  rep.dim = l.dim();
  for (const auto& x : ops) {
    const auto c = b_inv * x * b;
    KMat r(c.rows(), c.cols(), 0);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (field.val(c(i, j)) < 0) fail(ErrorCode::kInvariantViolation, "operator does not preserve the lattice");
        r(i, j) = field.reduce(c(i, j));
      }
    }
    rep.generators.push_back(std::move(r));
  }
  return rep;
}

/// True iff the reductions of an R-basis of H span M_N(k). Throws
/// NotFullRank.
template <class F>
bool spans_end_residue(const MatrixModule<F>& h) {
  if (!h.full_rank()) fail(ErrorCode::kNotFullRank, "residue span test needs a full-rank module");
  const F& field = h.field();
  std::vector<KVec> reduced;
  for (const auto& x : h.basis()) {
    KVec v;
    v.reserve(x.data().size());
    for (const auto& e : x.data()) v.push_back(field.reduce(e));
    reduced.push_back(std::move(v));
  }
  return k_rank(field.residue_field(), reduced) == h.n() * h.n();
}

// ---------------------------------------------------------------------------
// Fixed-point sets.

enum class FixMethod { kPolytrope, kBfs };

inline const char* fix_method_name(FixMethod m) { return m == FixMethod::kPolytrope ? "polytrope" : "bfs"; }

template <class F>
struct FixSet {
  FixMethod method = FixMethod::kBfs;
  /// Class representatives sorted by key.
  std::vector<Lattice<F>> classes;
  /// Normalized exponent vectors (polytrope method).
  std::vector<std::vector<int>> points;
  bool bounded = true;

  std::vector<std::string> keys() const {
    std::vector<std::string> out;
    for (const auto& l : classes) out.push_back(l.key());
    return out;
  }
  bool contains_class(const Lattice<F>& l) const {
    const auto k = l.class_representative().key();
    return std::any_of(classes.begin(), classes.end(), [&](const Lattice<F>& c) { return c.key() == k; });
  }
};

namespace detail {

template <class F>
void sort_classes(std::vector<Lattice<F>>& classes) {
  std::sort(classes.begin(), classes.end(), [](const Lattice<F>& a, const Lattice<F>& b) { return a.key() < b.key(); });
}

}  // namespace detail

/// Diagonal lattice classes ⊕ ϖ^{u_i}R e_i with u in the polytrope of m.
template <class F>
FixSet<F> fix_polytrope(const F& field, const ExponentMatrix& m, int radius_cap) {
  FixSet<F> out;
  out.method = FixMethod::kPolytrope;
  auto pts = polytrope_points(m, radius_cap);
  out.bounded = pts.bounded;
  out.points = std::move(pts.points);
  for (const auto& u : out.points) out.classes.push_back(Lattice<F>::diagonal(field, u));
  detail::sort_classes(out.classes);
  return out;
}

struct BfsLimits {
  int radius_cap = 64;
  std::uint64_t max_vectors = std::uint64_t{1} << 16;
  std::size_t max_classes = 10000;
};

/// Breadth-first search over H-invariant lattice classes starting at the
/// standard lattice. Neighbours of [L] are the lattices between ϖL and L
/// lifted from invariant subspaces of the residue representation on L/ϖL;
/// `ops` must generate H as an R-algebra. Throws NotFullRank (unbounded
/// search) and CapExceeded.
template <class F>
FixSet<F> fix_bfs(const MatrixModule<F>& h, const std::vector<Matrix<typename F::Elem>>& ops,
                  const BfsLimits& limits = {}) {
  if (!h.full_rank()) fail(ErrorCode::kNotFullRank, "fixed-point search needs a full-rank order");
  const F& field = h.field();
  const std::size_t n = h.n();
  const Lattice<F> origin = Lattice<F>::standard(field, n);
  const auto pi = field.uniformizer();

  std::map<std::string, Lattice<F>> seen;
  std::vector<Lattice<F>> queue{origin};
  seen.emplace(origin.key(), origin);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Lattice<F> l = queue[head];
    const ResidueRep rep = residue_rep_on(ops, l);
    const auto b = l.basis();
    for (const auto& w : invariant_subspaces(rep, limits.max_vectors)) {
      std::vector<std::vector<typename F::Elem>> gens;
      for (const auto& row : w.rows()) {
        std::vector<typename F::Elem> lifted(n, field.zero());
        for (std::size_t i = 0; i < n; ++i) lifted[i] = field.lift(row[i]);
        gens.push_back(mat_vec<F>(b, lifted));
      }
      for (const auto& v : l.vectors()) {
        auto s = v;
        for (auto& x : s) x = pi * x;
        gens.push_back(std::move(s));
      }
      Lattice<F> next = Lattice<F>::from_generators(field, n, gens).class_representative();
      auto key = next.key();
      if (seen.count(key)) continue;
      if (class_distance(origin, next) > limits.radius_cap) {
        fail(ErrorCode::kCapExceeded, "fixed-point search left the configured radius");
      }
      if (seen.size() >= limits.max_classes) fail(ErrorCode::kCapExceeded, "too many fixed classes");
      seen.emplace(std::move(key), next);
      queue.push_back(std::move(next));
    }
  }
  FixSet<F> out;
  out.method = FixMethod::kBfs;
  for (auto& [key, l] : seen) out.classes.push_back(l);
  return out;
}

/// Min/max convexity: for every pair of classes and every relative scaling
/// in the elementary-divisor range, the sum and intersection classes are
/// members of the set.
template <class F>
bool convexity_check(const FixSet<F>& s) {
  std::set<std::string> keys;
  for (const auto& l : s.classes) keys.insert(l.class_representative().key());
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < s.classes.size(); ++j) {
      const auto& a = s.classes[i];
      const auto& b = s.classes[j];
      const auto e = relative_divisors(a, b);
      for (int k = -e.back(); k <= -e.front(); ++k) {
        const Lattice<F> bk = b.scaled(k);
        if (!keys.count(lattice_sum(a, bk).class_representative().key())) return false;
        if (!keys.count(lattice_intersection(a, bk).class_representative().key())) return false;
      }
    }
  }
  return true;
}

}  // namespace schurlat
