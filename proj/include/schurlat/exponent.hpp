#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schurlat/valued_field.hpp"

namespace schurlat {

/// Square integer matrix whose entries may be +inf (kInfiniteVal), used for
/// valuation profiles of orders and their min-plus closures.
class ExponentMatrix {
 public:
  explicit ExponentMatrix(std::size_t n = 0, Val fill = 0) : n_(n), m_(n * n, fill) {}
  static ExponentMatrix from_rows(const std::vector<std::vector<Val>>& rows);

  std::size_t n() const { return n_; }
  Val& operator()(std::size_t i, std::size_t j) { return m_[i * n_ + j]; }
  Val operator()(std::size_t i, std::size_t j) const { return m_[i * n_ + j]; }
  bool all_finite() const;
  std::vector<std::vector<Val>> rows() const;
  std::string to_string() const;

  friend bool operator==(const ExponentMatrix& a, const ExponentMatrix& b) { return a.n_ == b.n_ && a.m_ == b.m_; }
  friend bool operator!=(const ExponentMatrix& a, const ExponentMatrix& b) { return !(a == b); }

 private:
  std::size_t n_;
  std::vector<Val> m_;
};

/// All-pairs (min, +) closure (Floyd-Warshall) with +inf entries. Throws
/// InvalidInput when a diagonal entry is nonzero and NegativeCycle when the
/// closure would drive a diagonal entry below zero.
ExponentMatrix min_plus_closure(ExponentMatrix m);

/// True when every difference u_i - u_j is bounded on the polytrope
/// {u : u_i - u_j <= m_ij}, i.e. the digraph of finite entries is strongly
/// connected.
bool polytrope_bounded(const ExponentMatrix& m);

struct PolytropePoints {
  /// Integer points with minimum coordinate 0, lexicographically sorted.
  std::vector<std::vector<int>> points;
  bool bounded = true;
  /// Largest coordinate allowed during enumeration.
  int radius = 0;
};

/// Integer points of the polytrope of m modulo the all-ones vector. For an
/// unbounded polytrope only points with coordinates <= radius_cap are
/// listed. Throws CapExceeded beyond max_points.
PolytropePoints polytrope_points(const ExponentMatrix& m, int radius_cap, std::size_t max_points = 100000);

}  // namespace schurlat
