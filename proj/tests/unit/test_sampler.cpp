#include <gtest/gtest.h>

#include <map>
#include <string>

#include "angulate/error.hpp"
#include "angulate/sampler.hpp"
#include "angulate/stats.hpp"

using namespace angulate;

namespace {

// Chi-square p-value of `draws` samples against the uniform law on `support`.
template <class Key, class Draw>
double uniformity_pvalue(const std::vector<Key>& support, int draws, Draw draw) {
  std::map<Key, std::size_t> index;
  for (const auto& k : support) index.emplace(k, index.size());
  EXPECT_EQ(index.size(), support.size());
  std::vector<std::int64_t> counts(support.size(), 0);
  for (int i = 0; i < draws; ++i) {
    const auto it = index.find(draw());
    if (it == index.end()) {
      ADD_FAILURE() << "draw outside the enumerated support";
      return 0;
    }
    ++counts[it->second];
  }
  return chi_square_pvalue(counts);
}

std::vector<std::string> canonical_keys(const std::vector<Mobile>& all) {
  std::vector<std::string> out;
  for (const auto& m : all) out.push_back(contour(m).canonical());
  return out;
}

}  // namespace

TEST(SamplePTree, ForcedSmallTrees) {
  RngStream rng(1, 0);
  const PTree t2 = sample_ptree(2, 1, rng);
  EXPECT_EQ(std::vector<int>(t2.heights().begin(), t2.heights().end()), (std::vector<int>{0, 2, 0}));
  const PTree t3 = sample_ptree(3, 1, rng);
  EXPECT_EQ(std::vector<int>(t3.heights().begin(), t3.heights().end()), (std::vector<int>{0, 2, 2, 0}));
}

TEST(SamplePTree, UniformOverFiveTrees) {
  std::vector<std::vector<int>> support;
  for (const PTree& t : enumerate_ptrees(2, 3)) support.emplace_back(t.heights().begin(), t.heights().end());
  ASSERT_EQ(support.size(), 5u);
  RngStream rng(2, 0);
  const double pv = uniformity_pvalue(support, 100000, [&] {
    const PTree t = sample_ptree(2, 3, rng);
    return std::vector<int>(t.heights().begin(), t.heights().end());
  });
  EXPECT_GT(pv, 0.01);
}

TEST(SamplePTree, SizesForLargeN) {
  RngStream rng(3, 0);
  for (int p : {2, 3, 5}) {
    const PTree t = sample_ptree(p, 1000, rng);
    EXPECT_EQ(t.black_count(), 1000);
    EXPECT_EQ(t.white_count(), (p - 1) * 1000 + 1);
    EXPECT_EQ(t.heights().front(), 0);
    EXPECT_EQ(t.heights().back(), 0);
  }
}

TEST(SampleFreeMobile, RootLabelZeroAndValid) {
  RngStream rng(4, 0);
  for (int i = 0; i < 200; ++i) {
    const Mobile m = sample_free_mobile(3, 50, rng);
    ASSERT_EQ(m.label(0), 0);
    ASSERT_TRUE(validate_mobile(m).ok());
  }
}

TEST(SampleFreeMobile, UniformSingleFace) {
  RngStream rng(5, 0);
  const auto support = canonical_keys(enumerate_mobiles(2, 1, Variant::free));
  EXPECT_GT(uniformity_pvalue(support, 30000, [&] { return contour(sample_free_mobile(2, 1, rng)).canonical(); }),
            0.01);
}

TEST(SampleFreeMobile, UniformP3N2) {
  RngStream rng(6, 0);
  const auto support = canonical_keys(enumerate_mobiles(3, 2, Variant::free));
  EXPECT_EQ(support.size(), 300u);
  EXPECT_GT(uniformity_pvalue(support, 100000, [&] { return contour(sample_free_mobile(3, 2, rng)).canonical(); }),
            0.01);
}

TEST(SampleRootedMobile, UniformSingleFace) {
  RngStream rng(7, 0);
  const auto support = canonical_keys(enumerate_mobiles(2, 1, Variant::rooted));
  EXPECT_GT(uniformity_pvalue(support, 20000, [&] { return contour(sample_rooted_mobile(2, 1, rng)).canonical(); }),
            0.01);
}

TEST(SampleRootedMobile, UniformP2N3) {
  RngStream rng(8, 0);
  const auto support = canonical_keys(enumerate_mobiles(2, 3, Variant::rooted));
  EXPECT_EQ(support.size(), 54u);
  EXPECT_GT(uniformity_pvalue(support, 100000, [&] { return contour(sample_rooted_mobile(2, 3, rng)).canonical(); }),
            0.01);
}

TEST(SampleRootedMobile, ValidAndPositive) {
  RngStream rng(9, 0);
  for (int i = 0; i < 100; ++i) {
    const Mobile m = sample_rooted_mobile(2, 100, rng);
    ASSERT_EQ(m.label(0), 1);
    ASSERT_TRUE(validate_mobile(m).ok());
  }
}

TEST(SampleRootedMobile, AttemptBudget) {
  RngStream rng(10, 0);
  EXPECT_THROW(sample_rooted_mobile(2, 100000, rng, 1), BudgetError);
}

TEST(Sampler, Deterministic) {
  RngStream a(12, 3), b(12, 3);
  EXPECT_EQ(sample_mobile(4, 300, Variant::rooted, a), sample_mobile(4, 300, Variant::rooted, b));
}

TEST(Sampler, RejectsBadParameters) {
  RngStream rng(1, 0);
  EXPECT_THROW(sample_ptree(1, 3, rng), ParameterError);
  EXPECT_THROW(sample_ptree(2, 0, rng), ParameterError);
}
