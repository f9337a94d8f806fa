#include "schurlat/gaussian.hpp"

#include <boost/math/distributions/chi_squared.hpp>

namespace schurlat {

namespace {

double upper_tail(double statistic, int dof) {
  if (dof <= 0) return 1.0;
  boost::math::chi_squared dist(dof);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

double pearson(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0 || counts.empty()) return 0.0;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace

ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  ChiSquare out;
  out.statistic = pearson(counts);
  out.dof = counts.empty() ? 0 : static_cast<int>(counts.size()) - 1;
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

ChiSquare chi_square_uniform_pooled(const std::vector<std::vector<std::uint64_t>>& counts) {
  ChiSquare out;
  for (const auto& row : counts) {
    if (row.size() < 2) continue;
    out.statistic += pearson(row);
    out.dof += static_cast<int>(row.size()) - 1;
  }
  out.p_value = upper_tail(out.statistic, out.dof);
  return out;
}

}  // namespace schurlat
