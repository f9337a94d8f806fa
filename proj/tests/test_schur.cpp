#include <gtest/gtest.h>

#include "schurlat/error.hpp"
#include "schurlat/schur_module.hpp"
#include "support.hpp"

using namespace schurlat;
namespace st = schurlat::testing;

namespace {

Matrix<mpq_class> mat(std::vector<std::vector<long>> rows) {
  Matrix<mpq_class> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Every filling of the diagram with letters 1..n, encoded in base n.
std::vector<Tableau> all_fillings(const Partition& lambda, int n) {
  std::vector<Tableau> out;
  const int d = lambda.size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    Tableau t;
    std::uint64_t c = code;
    for (int r = 0; r < lambda.rows(); ++r) {
      std::vector<int> row;
      for (int j = 0; j < lambda.row_length(r); ++j) {
        row.push_back(static_cast<int>(c % static_cast<std::uint64_t>(n)) + 1);
        c /= static_cast<std::uint64_t>(n);
      }
      t.entries.push_back(std::move(row));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

TEST(Straighten, SemistandardIsIdentity) {
  SchurModule m(3, Partition({2, 1}), Model::kQuotient);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto e = m.straighten(m.basis()[i]);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e[0].first, i);
    EXPECT_EQ(e[0].second, 1);
  }
}

TEST(Straighten, ColumnRelations) {
  SchurModule m(2, Partition({1, 1}), Model::kQuotient);
  EXPECT_TRUE(m.straighten(Tableau{{{1}, {1}}}).empty());
  const auto swapped = m.straighten(Tableau{{{2}, {1}}});
  ASSERT_EQ(swapped.size(), 1u);
  EXPECT_EQ(swapped[0].second, -1);
  EXPECT_THROW(m.straighten(Tableau{{{1, 2}}}), Error);
}

// Straightening agrees with the bideterminant model: the column-minor
// product of a filling equals the same combination of basis bideterminants,
// tested at random integer points.
TEST(Straighten, BideterminantOracle) {
  PadicField q(3);
  Rng rng(5);
  std::uniform_int_distribution<int> pick(-5, 5);
  for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {2, 1}}, {3, {2, 1}}, {3, {2, 2}}, {3, {3, 1}}, {2, {3, 2}}, {3, {2, 1, 1}}}) {
    const Partition lambda(parts);
    SchurModule m(n, lambda, Model::kQuotient);
    for (int trial = 0; trial < 3; ++trial) {
      Matrix<mpq_class> x(static_cast<std::size_t>(n), static_cast<std::size_t>(lambda.rows()));
      for (auto& e : x.data()) e = pick(rng);
      std::vector<mpq_class> basis_values;
      for (const auto& t : m.basis()) basis_values.push_back(st::bideterminant(q, t, x));
      for (const auto& f : all_fillings(lambda, n)) {
        mpq_class combo = 0;
        for (const auto& [idx, c] : m.straighten(f)) combo += basis_values[idx] * c;
        ASSERT_EQ(combo, st::bideterminant(q, f, x)) << lambda.to_string() << " n=" << n;
      }
    }
  }
}

TEST(Rho, SymmetricSquareQuotient) {
  PadicField f(5);
  SchurModule m(2, Partition({2}), Model::kQuotient);
  // Basis x1², x1x2, x2²; column T is the expansion of the substituted
  // monomial under x1 -> 2x1 + 5x2, x2 -> 3x1 + 7x2.
  const auto r = rho(m, f, mat({{2, 5}, {3, 7}}));
  EXPECT_EQ(r, mat({{4, 6, 9}, {20, 29, 42}, {25, 35, 49}}));
}

TEST(Rho, WeylIsTransposeConjugate) {
  PadicField f(3);
  Rng rng(9);
  for (const auto& parts : std::vector<std::vector<int>>{{2}, {2, 1}, {3}, {1, 1}}) {
    SchurModule q(3, Partition(parts), Model::kQuotient);
    SchurModule w(3, Partition(parts), Model::kWeyl);
    for (int i = 0; i < 5; ++i) {
      const auto g = st::random_rational_gl(f, 3, rng);
      EXPECT_EQ(rho(w, f, g), transpose(rho(q, f, transpose(g))));
    }
  }
}

TEST(Rho, ExteriorPowerIsMinors) {
  PadicField f(7);
  SchurModule m(3, Partition({1, 1}), Model::kQuotient);
  const auto g = mat({{1, 2, 0}, {3, -1, 4}, {0, 5, 2}});
  const auto r = rho(m, f, g);
  // Column {i<j}: coefficient of e_k ∧ e_l is the minor g[{i,j},{k,l}].
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t col = 0; col < 3; ++col) {
    for (std::size_t row = 0; row < 3; ++row) {
      const auto [i, j] = pairs[col];
      const auto [k, l] = pairs[row];
      EXPECT_EQ(r(row, col), g(i, k) * g(j, l) - g(i, l) * g(j, k));
    }
  }
}

TEST(Rho, Errors) {
  PadicField f(2);
  SchurModule m(2, Partition({2}));
  EXPECT_THROW(rho(m, f, mat({{1, 2}, {2, 4}})), Error);
  EXPECT_THROW(rho(m, f, mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Error);
  EXPECT_THROW(SchurModule(2, Partition({1, 1, 1})), Error);
  SchurCaps caps;
  caps.max_dim = 4;
  EXPECT_THROW(SchurModule(3, Partition({2}), Model::kWeyl, caps), Error);
}

// rho(gh) = rho(h)·rho(g) on 50 random pairs per case, both models.
TEST(RhoProperty, Homomorphism) {
  PadicField f(2);
  Rng rng(2024);
  for (auto model : {Model::kWeyl, Model::kQuotient}) {
    for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2}}, {2, {2, 1}}, {3, {2}}, {3, {2, 1}}, {2, {3}}, {3, {1, 1}}}) {
      SchurModule m(n, Partition(parts), model);
      for (int i = 0; i < 50; ++i) {
        const auto g = st::random_rational_gl(f, static_cast<std::size_t>(n), rng);
        const auto h = st::random_rational_gl(f, static_cast<std::size_t>(n), rng);
        ASSERT_EQ(rho(m, f, g * h), rho(m, f, h) * rho(m, f, g)) << model_name(model) << " " << m.shape().to_string();
      }
    }
  }
}

TEST(RhoProperty, HomomorphismOverLaurent) {
  LaurentField f(3);
  Rng rng(11);
  SchurModule m(2, Partition({2, 1}), Model::kWeyl);
  SchurModule s(2, Partition({3}), Model::kQuotient);
  for (int i = 0; i < 50; ++i) {
    const auto g = st::random_invertible(f, 2, [&] { return f.random_digits(rng, 2); });
    const auto h = st::random_invertible(f, 2, [&] { return f.random_digits(rng, 2); });
    ASSERT_EQ(rho(m, f, g * h), rho(m, f, h) * rho(m, f, g));
    ASSERT_EQ(rho(s, f, g * h), rho(s, f, h) * rho(s, f, g));
  }
}

// trace rho(diag z) = s_λ(z), compared with the bialternant formula on 50
// random diagonals per case.
TEST(RhoProperty, TraceIsSchurPolynomial) {
  PadicField f(5);
  Rng rng(77);
  std::uniform_int_distribution<int> pick(-9, 9);
  for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {2}}, {2, {3, 1}}, {3, {2, 1}}, {3, {2, 2}}, {3, {3}}, {4, {2, 1, 1}}}) {
    const Partition lambda(parts);
    for (auto model : {Model::kWeyl, Model::kQuotient}) {
      SchurModule m(n, lambda, model);
      for (int i = 0; i < 50; ++i) {
        std::vector<mpq_class> z;
        while (z.size() < static_cast<std::size_t>(n)) {
          mpq_class v = pick(rng);
          if (v != 0 && std::find(z.begin(), z.end(), v) == z.end()) z.push_back(v);
        }
        Matrix<mpq_class> g(z.size(), z.size());
        for (std::size_t k = 0; k < z.size(); ++k) g(k, k) = z[k];
        const auto r = rho(m, f, g);
        mpq_class trace = 0;
        for (std::size_t k = 0; k < r.rows(); ++k) trace += r(k, k);
        const mpq_class expected = st::schur_bialternant(f, lambda, z);
        ASSERT_EQ(trace, expected);
        ASSERT_EQ(character(m, f, z), expected);
      }
    }
  }
}

TEST(ResidueRep, MatchesReductionOfRho) {
  PadicField f(3);
  const auto& k = f.residue_field();
  Rng rng(3);
  std::uniform_int_distribution<int> pick(0, 8);
  for (auto model : {Model::kWeyl, Model::kQuotient}) {
    SchurModule m(3, Partition({2, 1}), model);
    for (int i = 0; i < 10; ++i) {
      const auto g = st::random_invertible(f, 3, [&] { return mpq_class(pick(rng)); });
      if (f.val(determinant(f, g)) != 0) continue;
      Matrix<FiniteField::Elem> gk(3, 3, 0);
      for (std::size_t a = 0; a < 9; ++a) gk.data()[a] = f.reduce(g.data()[a]);
      const auto r = rho(m, f, g);
      const auto rk = residue_rep(m, k, gk);
      for (std::size_t a = 0; a < r.data().size(); ++a) ASSERT_EQ(rk.data()[a], f.reduce(r.data()[a]));
    }
  }
}
