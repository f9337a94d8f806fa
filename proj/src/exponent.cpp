#include "schurlat/exponent.hpp"

#include <algorithm>

#include "schurlat/error.hpp"

namespace schurlat {

ExponentMatrix ExponentMatrix::from_rows(const std::vector<std::vector<Val>>& rows) {
  ExponentMatrix out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) fail(ErrorCode::kShapeMismatch, "exponent matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) out(i, j) = rows[i][j];
  }
  return out;
}

bool ExponentMatrix::all_finite() const {
  return std::none_of(m_.begin(), m_.end(), [](Val v) { return v == kInfiniteVal; });
}

std::vector<std::vector<Val>> ExponentMatrix::rows() const {
  std::vector<std::vector<Val>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i].assign(m_.begin() + static_cast<long>(i * n_), m_.begin() + static_cast<long>((i + 1) * n_));
  return out;
}

std::string ExponentMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ",";
      Val v = (*this)(i, j);
      out += v == kInfiniteVal ? "inf" : std::to_string(v);
    }
    out += "]";
  }
  return out + "]";
}

ExponentMatrix min_plus_closure(ExponentMatrix m) {
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != 0) fail(ErrorCode::kInvalidInput, "exponent matrix needs a zero diagonal");
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, k) == kInfiniteVal) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m(k, j) == kInfiniteVal) continue;
        const long long via = static_cast<long long>(m(i, k)) + m(k, j);
        if (via < m(i, j)) m(i, j) = static_cast<Val>(via);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, i) < 0) fail(ErrorCode::kNegativeCycle, "negative cycle through index " + std::to_string(i));
    }
  }
  return m;
}

bool polytrope_bounded(const ExponentMatrix& m) {
  // Closure leaves an infinite entry exactly when some index is unreachable.
  return min_plus_closure(m).all_finite();
}

PolytropePoints polytrope_points(const ExponentMatrix& input, int radius_cap, std::size_t max_points) {
  const ExponentMatrix m = min_plus_closure(input);
  const std::size_t n = m.n();
  PolytropePoints out;
  out.bounded = m.all_finite();
  if (n == 0) return out;
  if (out.bounded) {
    Val span = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) span = std::max(span, m(i, j));
    }
    out.radius = span;
  } else {
    out.radius = std::max(radius_cap, 0);
  }

  std::vector<int> u(n, 0);
  // Depth-first over coordinates with pairwise pruning.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (*std::min_element(u.begin(), u.end()) != 0) return;
      if (out.points.size() >= max_points) fail(ErrorCode::kCapExceeded, "polytrope has too many points");
      out.points.push_back(u);
      return;
    }
    for (int x = 0; x <= out.radius; ++x) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (m(i, j) != kInfiniteVal && x - u[j] > m(i, j)) ok = false;
        if (m(j, i) != kInfiniteVal && u[j] - x > m(j, i)) ok = false;
      }
      if (!ok) continue;
      u[i] = x;
      self(self, i + 1);
    }
    u[i] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace schurlat
