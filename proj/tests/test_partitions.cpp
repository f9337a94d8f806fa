#include <gtest/gtest.h>

#include "schurlat/error.hpp"
#include "schurlat/partition.hpp"
#include "support.hpp"

using namespace schurlat;

TEST(Partition, Construction) {
  Partition p = Partition::parse("3,1,1");
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.rows(), 3);
  EXPECT_EQ(p.conjugate().parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(Partition::parse("4,2").conjugate().parts(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(p.to_string(), "3,1,1");
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({0}), Error);
  EXPECT_THROW(Partition::parse("2,,1"), Error);
  EXPECT_THROW(Partition::parse(""), Error);
}

TEST(Partition, Enumeration) {
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15};
  for (int d = 1; d <= 7; ++d) EXPECT_EQ(Partition::all_of(d).size(), counts[static_cast<std::size_t>(d - 1)]);
  EXPECT_EQ(Partition::all_of(3).front().parts(), (std::vector<int>{3}));
}

TEST(Hooks, KnownProfiles) {
  EXPECT_EQ(hook_lengths(Partition({2})), (HookProfile{{2, 1}}));
  EXPECT_EQ(hook_lengths(Partition({2, 1})), (HookProfile{{3, 1}, {1}}));
  EXPECT_EQ(hook_lengths(Partition({3, 2})), (HookProfile{{4, 3, 1}, {2, 1}}));
}

TEST(Hooks, Cores) {
  EXPECT_FALSE(is_core(Partition({2}), 2));
  EXPECT_TRUE(is_core(Partition({2, 1}), 2));
  EXPECT_TRUE(is_core(Partition({3, 2, 1}), 2));
  EXPECT_TRUE(is_core(Partition({2}), 3));
  EXPECT_FALSE(is_core(Partition({3}), 3));
  EXPECT_TRUE(is_core(Partition({4}), 0));
  EXPECT_TRUE(is_core(Partition({4}), 5));
  // Any hook divisible by m, not only equal to m, disqualifies.
  EXPECT_FALSE(is_core(Partition({4}), 2));
}

TEST(HookContent, KnownDimensions) {
  EXPECT_EQ(hook_content_dimension(Partition({2}), 2), 3u);
  EXPECT_EQ(hook_content_dimension(Partition({2, 1}), 3), 8u);
  EXPECT_EQ(hook_content_dimension(Partition({1, 1, 1}), 2), 0u);
  EXPECT_EQ(hook_content_dimension(Partition({4}), 3), 15u);
}

// Hook-content dimension against Weyl's formula, the tableau count and the
// module dimension for every λ ⊢ d ≤ 5 and n ≤ 4.
TEST(HookContent, AgreesWithTableauxAndWeyl) {
  SchurCaps big;
  big.max_dim = 1024;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& lambda : Partition::all_of(d)) {
      for (int n = 1; n <= 4; ++n) {
        const auto dim = hook_content_dimension(lambda, n);
        EXPECT_EQ(dim, schurlat::testing::weyl_dimension(lambda, n)) << lambda.to_string() << " n=" << n;
        EXPECT_EQ(dim, ssyt_enumerate(lambda, n).size()) << lambda.to_string() << " n=" << n;
        if (dim > 0) EXPECT_EQ(dim, SchurModule(n, lambda, Model::kWeyl, big).dim());
      }
    }
  }
}

TEST(Tableaux, EnumerationOrderAndValidity) {
  const auto ts = ssyt_enumerate(Partition({2, 1}), 2);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[0].entries, (std::vector<std::vector<int>>{{1, 1}, {2}}));
  EXPECT_EQ(ts[1].entries, (std::vector<std::vector<int>>{{1, 2}, {2}}));
  for (const auto& t : ssyt_enumerate(Partition({3, 2}), 3)) {
    EXPECT_TRUE(t.is_semistandard());
  }
  Tableau bad{{{2, 1}}};
  EXPECT_FALSE(bad.is_semistandard());
  Tableau column{{{1}, {1}}};
  EXPECT_FALSE(column.is_semistandard());
}
