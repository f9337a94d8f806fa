#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "schurlat/error.hpp"
#include "schurlat/matrix.hpp"
#include "schurlat/valued_field.hpp"

namespace schurlat {

/// Finitely generated R-submodule of K^m, kept in echelon form over the
/// valuation ring: each row has a pivot column, pivot entries are exact
/// powers of ϖ, and rows are zero left of their pivot. After canonicalize()
/// the entries of every row in another row's pivot column are the canonical
/// representatives modulo that pivot, which makes the basis unique.
template <class F>
class Echelon {
 public:
  using E = typename F::Elem;
  using Vec = std::vector<E>;

  Echelon(const F& field, std::size_t dim) : field_(&field), dim_(dim), row_of_col_(dim, -1) {}

  const F& field() const { return *field_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds v to the generating set. Returns true iff the module grew.
  bool insert(Vec v) {
    check_size(v);
    const F& f = *field_;
    reduce(v, dim_);
    bool grew = false;
    std::size_t c = 0;
    E coef, tmp;
    while (true) {
      c = leading(v, c);
      if (c == dim_) return grew;
      long r = row_of_col_[c];
      Val vv = f.val(v[c]);
      if (r < 0) {
        normalize(v, c, vv);
        reduce(v, c);
        row_of_col_[c] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
        pivot_col_.push_back(c);
        pivot_val_.push_back(vv);
        touched();
        return true;
      }
      auto& row = rows_[static_cast<std::size_t>(r)];
      if (vv < pivot_val_[static_cast<std::size_t>(r)]) {
        normalize(v, c, vv);
        reduce(v, c);
        std::swap(v, row);
        pivot_val_[static_cast<std::size_t>(r)] = vv;
        touched();
        grew = true;
      }
      coef = v[c] / row[c];
      for (std::size_t j = c; j < dim_; ++j) {
        if (f.is_zero(row[j])) continue;
        tmp = coef * row[j];
        v[j] -= tmp;
      }
    }
  }

  /// Declares that the module contains ϖ^k·R^m. Entries are then kept as
  /// canonical representatives modulo ϖ^k, which bounds their size.
  void assume_contains_scaled_standard(Val k) {
    if (k < 0) fail(ErrorCode::kInvalidInput, "modulus must be >= 0");
    if (!known_modulus_ || k < *known_modulus_) known_modulus_ = k;
    update_modulus();
  }

  bool contains(const Vec& x) const {
    check_size(x);
    if (is_standard()) {
      for (const auto& e : x) {
        if (field_->val(e) < 0) return false;
      }
      return true;
    }
    return coefficients(x).has_value();
  }

  /// Coefficients (in R) of x with respect to rows(), or nullopt when x is
  /// not in the module.
  std::optional<Vec> coefficients(const Vec& x) const {
    check_size(x);
    const F& f = *field_;
    Vec v = x;
    Vec coeffs(rows_.size(), f.zero());
    std::size_t c = 0;
    E coef, tmp;
    while (true) {
      c = leading(v, c);
      if (c == dim_) return coeffs;
      long r = row_of_col_[c];
      if (r < 0) return std::nullopt;
      const auto& row = rows_[static_cast<std::size_t>(r)];
      if (f.val(v[c]) < pivot_val_[static_cast<std::size_t>(r)]) return std::nullopt;
      coef = v[c] / row[c];
      coeffs[static_cast<std::size_t>(r)] += coef;
      for (std::size_t j = c; j < dim_; ++j) {
        if (f.is_zero(row[j])) continue;
        tmp = coef * row[j];
        v[j] -= tmp;
      }
    }
  }

  /// Hermite normal form: rows ordered by pivot column, entries in pivot
  /// columns reduced to canonical representatives mod the pivot.
  void canonicalize() {
    if (canonical_) return;
    const F& f = *field_;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_col_[a] < pivot_col_[b]; });
    std::vector<Vec> rows;
    std::vector<std::size_t> cols;
    std::vector<Val> vals;
    for (auto i : order) {
      rows.push_back(std::move(rows_[i]));
      cols.push_back(pivot_col_[i]);
      vals.push_back(pivot_val_[i]);
    }
    rows_ = std::move(rows);
    pivot_col_ = std::move(cols);
    pivot_val_ = std::move(vals);
    std::fill(row_of_col_.begin(), row_of_col_.end(), -1);
    for (std::size_t i = 0; i < rows_.size(); ++i) row_of_col_[pivot_col_[i]] = static_cast<long>(i);

    E quot, tmp;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivot_col_[r];
      const Val a = pivot_val_[r];
      for (std::size_t s = 0; s < r; ++s) {
        const E& x = rows_[s][c];
        if (f.is_zero(x)) continue;
        E rep = f.truncate(x, a);
        quot = (x - rep) / rows_[r][c];
        if (f.is_zero(quot)) continue;
        for (std::size_t j = c; j < dim_; ++j) {
          if (f.is_zero(rows_[r][j])) continue;
          tmp = quot * rows_[r][j];
          rows_[s][j] -= tmp;
        }
      }
    }
    canonical_ = true;
  }

  /// Rows in storage order (pivot-column order after canonicalize()).
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_col_; }
  const std::vector<Val>& pivot_valuations() const { return pivot_val_; }
  bool is_canonical() const { return canonical_; }

  /// True iff the module is exactly R^m.
  bool is_standard() const {
    if (standard_) return *standard_;
    bool standard = rows_.size() == dim_;
    for (std::size_t r = 0; standard && r < rows_.size(); ++r) {
      if (pivot_val_[r] != 0) standard = false;
      for (const auto& e : rows_[r]) {
        if (standard && field_->val(e) < 0) standard = false;
      }
    }
    standard_ = standard;
    return standard;
  }

 private:
  void check_size(const Vec& v) const {
    if (v.size() != dim_) fail(ErrorCode::kShapeMismatch, "vector length does not match module dimension");
  }

  std::size_t leading(const Vec& v, std::size_t from) const {
    for (std::size_t j = from; j < dim_; ++j) {
      if (!field_->is_zero(v[j])) return j;
    }
    return dim_;
  }

  // Scale v so that v[c] = ϖ^vv exactly.
  void normalize(Vec& v, std::size_t c, Val vv) const {
    const F& f = *field_;
    E unit_inv = f.pow_uniformizer(vv) / v[c];
    if (unit_inv == f.one()) return;
    for (std::size_t j = c; j < dim_; ++j) {
      if (!f.is_zero(v[j])) v[j] = v[j] * unit_inv;
    }
  }

  void touched() {
    canonical_ = false;
    standard_.reset();
    update_modulus();
  }

  // A full-rank integral module with pivot valuations v_i contains
  // ϖ^D·R^m for D = Σ v_i, so entries may be taken modulo ϖ^D.
  void update_modulus() {
    std::optional<Val> m = known_modulus_;
    if (!m && rows_.size() == dim_) {
      const F& f = *field_;
      Val d = 0;
      bool integral = true;
      for (std::size_t r = 0; r < rows_.size() && integral; ++r) {
        d += pivot_val_[r];
        for (const auto& e : rows_[r]) {
          if (f.val(e) < 0) {
            integral = false;
            break;
          }
        }
      }
      if (integral) m = d;
    }
    if (!m || (modulus_ && *modulus_ <= *m)) return;
    modulus_ = m;
    for (std::size_t r = 0; r < rows_.size(); ++r) reduce(rows_[r], pivot_col_[r]);
  }

  void reduce(Vec& v, std::size_t keep) const {
    if (!modulus_) return;
    const F& f = *field_;
    for (const auto& e : v) {
      if (f.val(e) < 0) return;
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j != keep && !f.is_zero(v[j])) v[j] = f.truncate(v[j], *modulus_);
    }
  }

  const F* field_;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<Val> pivot_val_;
  std::vector<long> row_of_col_;
  bool canonical_ = true;
  mutable std::optional<bool> standard_;
  std::optional<Val> modulus_;
  std::optional<Val> known_modulus_;
};

/// Elementary-divisor valuations (relative to R^m) of the R-module spanned by
/// the given vectors, in increasing order; one per unit of rank.
template <class F>
std::vector<Val> smith_valuations(const F& field, std::vector<std::vector<typename F::Elem>> rows) {
  using E = typename F::Elem;
  std::vector<Val> out;
  if (rows.empty()) return out;
  const std::size_t m = rows[0].size();
  std::vector<bool> row_done(rows.size(), false), col_done(m, false);
  E factor, tmp;
  while (true) {
    Val best = kInfiniteVal;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_done[r]) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (col_done[c] || field.is_zero(rows[r][c])) continue;
        Val v = field.val(rows[r][c]);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (best == kInfiniteVal) break;
    out.push_back(best);
    row_done[br] = true;
    col_done[bc] = true;
    // Clear column bc in the other rows (row operations over R).
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (row_done[r] || field.is_zero(rows[r][bc])) continue;
      factor = rows[r][bc] / rows[br][bc];
      for (std::size_t c = 0; c < m; ++c) {
        if (col_done[c] && c != bc) continue;
        if (field.is_zero(rows[br][c])) continue;
        tmp = factor * rows[br][c];
        rows[r][c] -= tmp;
      }
    }
    // Column operations clear the rest of row br without touching the
    // divisors of the remaining block, so the row is simply retired.
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class F>
struct HnfResult {
  std::vector<std::vector<typename F::Elem>> basis;  // canonical rows
  std::vector<std::size_t> pivot_columns;
  std::vector<Val> pivot_valuations;
  std::vector<Val> divisors;  // Smith-form valuations, increasing
};

/// Canonical echelon basis of the R-span of the vectors, plus elementary
/// divisors.
template <class F>
HnfResult<F> hnf_dvr(const F& field, const std::vector<std::vector<typename F::Elem>>& vectors, std::size_t dim) {
  Echelon<F> ech(field, dim);
  for (const auto& v : vectors) ech.insert(v);
  ech.canonicalize();
  HnfResult<F> out;
  out.basis = ech.rows();
  out.pivot_columns = ech.pivot_columns();
  out.pivot_valuations = ech.pivot_valuations();
  out.divisors = smith_valuations(field, out.basis);
  return out;
}

// ---------------------------------------------------------------------------
// Modules of N×N matrices, vectorized row-major into K^{N^2}.

template <class F>
class MatrixModule {
 public:
  using E = typename F::Elem;
  using Mat = Matrix<E>;

  MatrixModule(const F& field, std::size_t n) : n_(n), echelon_(field, n * n) {}

  /// End_R(R^n): all matrix units.
  static MatrixModule full(const F& field, std::size_t n) {
    MatrixModule m(field, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Mat unit(n, n, field.zero());
        unit(i, j) = field.one();
        m.add(unit);
      }
    }
    m.canonicalize();
    return m;
  }

  const F& field() const { return echelon_.field(); }
  std::size_t n() const { return n_; }
  std::size_t rank() const { return echelon_.rank(); }
  bool full_rank() const { return rank() == n_ * n_; }

  bool add(const Mat& x) {
    check(x);
    return echelon_.insert(x.data());
  }
  /// See Echelon::assume_contains_scaled_standard.
  void assume_contains_scaled_standard(Val k) { echelon_.assume_contains_scaled_standard(k); }
  bool contains(const Mat& x) const {
    check(x);
    return echelon_.contains(x.data());
  }
  void canonicalize() { echelon_.canonicalize(); }

  std::vector<Mat> basis() const {
    std::vector<Mat> out;
    for (const auto& row : echelon_.rows()) out.push_back(Mat::from_data(n_, n_, row));
    return out;
  }

  std::vector<Val> divisors() const { return smith_valuations(field(), echelon_.rows()); }
  const Echelon<F>& echelon() const { return echelon_; }
  bool is_standard() const { return echelon_.is_standard(); }

 private:
  void check(const Mat& x) const {
    if (x.rows() != n_ || x.cols() != n_) fail(ErrorCode::kShapeMismatch, "matrix size does not match module");
  }

  std::size_t n_;
  Echelon<F> echelon_;
};

template <class F>
bool is_integral(const F& field, const Matrix<typename F::Elem>& x) {
  for (const auto& e : x.data()) {
    if (field.val(e) < 0) return false;
  }
  return true;
}

namespace detail {

template <class F>
MatrixModule<F> saturate_left(MatrixModule<F> module, const std::vector<Matrix<typename F::Elem>>& gens,
                              std::size_t max_steps) {
  using Mat = Matrix<typename F::Elem>;
  std::deque<Mat> pending;
  for (const auto& b : module.basis()) pending.push_back(b);
  for (const auto& g : gens) {
    if (module.add(g)) pending.push_back(g);
  }
  std::size_t steps = 0;
  // Once the module is all of End_R(R^N) every integral product lies in it.
  while (!pending.empty() && !module.is_standard()) {
    Mat x = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : gens) {
      if (++steps > max_steps) fail(ErrorCode::kCapExceeded, "saturation step cap exceeded");
      Mat y = g * x;
      if (module.add(y)) pending.push_back(std::move(y));
    }
  }
  module.canonicalize();
  return module;
}

}  // namespace detail

/// Smallest module containing M and the generators that is closed under
/// left multiplication by every generator. When M contains the identity
/// this is the R-algebra generated by M and the generators. Throws
/// NonIntegralInput on a generator with an entry of negative valuation.
///
/// For integral M the closure is first computed modulo ϖ^k·End for
/// k = 4, 8, 16, 32: the result has elementary divisors min(d_i, k), so
/// once they all lie below k it is the exact answer. Modules that are not
/// full rank fall through to exact arithmetic.
template <class F>
MatrixModule<F> module_add_and_saturate(MatrixModule<F> module, const std::vector<Matrix<typename F::Elem>>& gens,
                                        std::size_t max_steps = 2'000'000) {
  using Mat = Matrix<typename F::Elem>;
  const F& field = module.field();
  for (const auto& g : gens) {
    if (!is_integral(field, g)) fail(ErrorCode::kNonIntegralInput, "generator has an entry of negative valuation");
  }
  const auto basis = module.basis();
  const bool integral = std::all_of(basis.begin(), basis.end(), [&](const Mat& b) { return is_integral(field, b); });
  const std::size_t n = module.n();
  for (Val k = 4; integral && n > 0 && k <= 32; k *= 2) {
    MatrixModule<F> trial(field, n);
    const auto scale = field.pow_uniformizer(k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Mat unit(n, n, field.zero());
        unit(i, j) = scale;
        trial.add(unit);
      }
    }
    trial.assume_contains_scaled_standard(k);
    for (const auto& b : basis) trial.add(b);
    trial = detail::saturate_left(std::move(trial), gens, max_steps);
    const auto divs = trial.divisors();
    if (divs.empty() || divs.back() < k) return trial;
  }
  return detail::saturate_left(std::move(module), gens, max_steps);
}

/// Minimal r >= 0 with ϖ^r·End_R(R^N) ⊆ M. Throws NotFullRank.
template <class F>
int congruence_level(const MatrixModule<F>& module) {
  if (!module.full_rank()) fail(ErrorCode::kNotFullRank, "congruence level needs a full-rank module");
  auto divs = module.divisors();
  Val r = divs.empty() ? 0 : divs.back();
  return std::max(r, 0);
}

template <class F>
bool membership(const MatrixModule<F>& module, const Matrix<typename F::Elem>& x) {
  return module.contains(x);
}

template <class F>
bool full_rank(const MatrixModule<F>& module) {
  return module.full_rank();
}

}  // namespace schurlat
