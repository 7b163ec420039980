#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cfr/combinatorics.hpp"
#include "cfr/constructions.hpp"
#include "cfr/errors.hpp"
#include "support.hpp"

namespace cfr {
namespace {

std::multiset<Block> sorted_columns(const CfrArray& a) {
  std::multiset<Block> out;
  for (const auto& c : a.data()) {
    Block b = c;
    std::sort(b.begin(), b.end());
    out.insert(b);
  }
  return out;
}

std::set<Block> golden_blocks(const std::string& name, const DesignParams& p) {
  const auto d = load_design(test::data_dir() / "golden" / name, p);
  return {d.blocks().begin(), d.blocks().end()};
}

TEST(RecursiveParams, Shapes) {
  const auto a = recursive_params(3, 4);
  EXPECT_EQ(a.q, 2);
  EXPECT_EQ(a.r, 2);
  EXPECT_EQ(a.tag, RemainderCase::kFull);
  const auto b = recursive_params(5, 6);
  EXPECT_EQ(b.q, 2);
  EXPECT_EQ(b.r, 2);
  EXPECT_EQ(b.tag, RemainderCase::kMid);
  const auto c = recursive_params(6, 11);
  EXPECT_EQ(c.q, 3);
  EXPECT_EQ(c.r, 1);
  EXPECT_EQ(c.tag, RemainderCase::kLow);
  EXPECT_THROW(recursive_params(1, 3), DomainError);
}

TEST(PredictRecursiveSize, Values) {
  const auto a = predict_recursive_size({3, 4, 5}, 4);
  EXPECT_EQ(a.coefficient, 8);
  EXPECT_EQ(a.predicted_blocks, 42);
  const auto b = predict_recursive_size({5, 6, 6}, 1);
  EXPECT_EQ(b.coefficient, 32);
  EXPECT_EQ(b.predicted_blocks, 212);
  EXPECT_EQ(predict_recursive_size({5, 6, 12}, 132).predicted_blocks, 10164);
  EXPECT_EQ(predict_recursive_size({3, 4, 5}, 0).predicted_blocks, binomial(5, 2));
  EXPECT_EQ(predict_recursive_size({5, 6, 6}, 0).predicted_blocks, 2 * 6 * binomial(6, 4));
}

TEST(AsymptoticExpansion, TableValues) {
  EXPECT_EQ(asymptotic_expansion(3, 4), Rational(1));
  EXPECT_EQ(asymptotic_expansion(4, 5), Rational(11, 8));
  EXPECT_EQ(asymptotic_expansion(4, 6), Rational(11, 8));
  EXPECT_EQ(asymptotic_expansion(5, 6), Rational(1));
  EXPECT_EQ(asymptotic_expansion(5, 7), Rational(9, 4));
  EXPECT_EQ(asymptotic_expansion(6, 9), Rational(127, 32));
}

TEST(AsymptoticExpansion, EqualTAndK) {
  // q = 2, r = 1 throughout; the three values land in the three cases.
  EXPECT_EQ(asymptotic_expansion(2, 2), Rational(4, 4));
  EXPECT_EQ(asymptotic_expansion(3, 3), Rational(8, 8));
  EXPECT_EQ(asymptotic_expansion(4, 4), Rational(22, 16));
}

TEST(ConstructDuplicate, DoublesTheDesign) {
  const auto d = test::corpus_design(5, 6, 12);
  const auto a = construct_duplicate(d);
  EXPECT_EQ(a.columns(), 264);
  EXPECT_EQ(expansion_factor(a.columns(), d.params()), Rational(2));

  const auto single = parse_design(std::string("1 2 3 4\n"), {3, 4, 4});
  const auto twin = construct_duplicate(single);
  ASSERT_EQ(twin.columns(), 2);
  EXPECT_EQ(twin.data()[0], twin.data()[1]);
  EXPECT_TRUE(is_zero_skip(twin, 1).zero_skip);

  const auto small = test::corpus_design(3, 4, 5);
  const auto doubled = construct_duplicate(small);
  EXPECT_EQ(doubled.columns(), 8);
  const auto base = replication_profile(array_from_design(small));
  const auto prof = replication_profile(doubled);
  for (std::size_t i = 0; i < base.counts.size(); ++i) {
    EXPECT_EQ(prof.counts[i], 2 * base.counts[i]);
  }
}

TEST(ConstructCombination, ColumnCount) {
  EXPECT_EQ(combination_columns(5, 6, 132, 41), 1362);
  EXPECT_EQ(combination_columns(3, 4, 7, 3), 7 + 6 * 3);
  EXPECT_EQ(combination_columns(5, 6, 132, 0), 132);
  const auto a = construct_combination(test::corpus_design(5, 6, 12), test::corpus_design(4, 6, 12));
  EXPECT_EQ(a.columns(), 1362);
  EXPECT_EQ(replication_profile(a).rho, 666);
}

TEST(ConstructCombination, EmptyLowerDesignGivesThePlainArray) {
  const auto d = test::corpus_design(3, 4, 8);
  const CoveringDesign empty({2, 4, 8}, {});
  EXPECT_EQ(construct_combination(d, empty), array_from_design(d));
}

TEST(ConstructCombination, RejectsMismatchedDesigns) {
  EXPECT_THROW(construct_combination(test::corpus_design(3, 4, 8), test::corpus_design(2, 3, 7)),
               ParameterError);
}

TEST(ConstructRecursive, ExampleFamilies) {
  const auto build = construct_recursive(test::corpus_design(3, 4, 5));
  ASSERT_EQ(build.array.columns(), 42);
  std::map<BlockFamily, std::set<Block>> by_family;
  for (int j = 0; j < build.array.columns(); ++j) {
    Block b(build.array.column(j).begin(), build.array.column(j).end());
    by_family[build.family[j]].insert(b);
  }
  const DesignParams p{3, 4, 10};
  EXPECT_EQ(by_family[BlockFamily::kB1], golden_blocks("rec_3_4_5_b1.txt", p));
  EXPECT_EQ(by_family[BlockFamily::kB3FromI1], golden_blocks("rec_3_4_5_b3_i1.txt", p));
  EXPECT_EQ(by_family[BlockFamily::kB3FromI2], golden_blocks("rec_3_4_5_b3_i2.txt", p));
  EXPECT_TRUE(by_family[BlockFamily::kB2].empty());
  EXPECT_TRUE(by_family[BlockFamily::kB4].empty());

  const auto printed = load_array(test::data_dir() / "golden" / "rec_3_4_10_array.txt");
  EXPECT_EQ(sorted_columns(build.array), sorted_columns(printed));
  EXPECT_TRUE(verify_covering(build.design).empty());
  EXPECT_TRUE(is_zero_skip(build.array, 2).zero_skip);
  EXPECT_FALSE(build.warnings.empty());
}

TEST(ConstructRecursive, ColumnsAscendingAndGroupedByFamily) {
  const auto build = construct_recursive(test::corpus_design(5, 6, 6));
  EXPECT_EQ(build.array.columns(), 212);
  // B3 from I1 and from I2 form one group.
  auto group = [](BlockFamily f) { return f == BlockFamily::kB3FromI2 ? BlockFamily::kB3FromI1 : f; };
  for (std::size_t j = 1; j < build.family.size(); ++j) {
    EXPECT_LE(group(build.family[j - 1]), group(build.family[j]));
  }
  for (const auto& c : build.array.data()) EXPECT_TRUE(std::is_sorted(c.begin(), c.end()));
}

TEST(ConstructRecursive, StrictModeRejectsWeakBase) {
  EXPECT_THROW(construct_recursive(test::corpus_design(5, 6, 6), true), ConstructionError);
  EXPECT_NO_THROW(construct_recursive(test::corpus_design(5, 6, 12), true));
}

TEST(ConstructRecursive, LowRemainderCaseMatchesPrediction) {
  std::vector<Block> one{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  const CoveringDesign base({6, 11, 11}, one);
  const auto build = construct_recursive(base);
  EXPECT_EQ(build.prediction.shape.tag, RemainderCase::kLow);
  EXPECT_EQ(static_cast<std::int64_t>(build.array.columns()), build.prediction.predicted_blocks);
  std::set<BlockFamily> families(build.family.begin(), build.family.end());
  EXPECT_TRUE(families.count(BlockFamily::kB2));
  EXPECT_TRUE(families.count(BlockFamily::kB4));
}

TEST(ConstructRecursive, OvercountedClosedFormIsAHardFailure) {
  // With q = 2 the B2 count in the closed form counts some blocks more than once.
  const CoveringDesign base({4, 4, 4}, {{1, 2, 3, 4}});
  EXPECT_THROW(construct_recursive(base), ConsistencyError);
}

TEST(ConstructRecursive, RejectsRepeatedBlocks) {
  const CoveringDesign base({3, 4, 5}, {{1, 2, 3, 4}, {1, 2, 3, 4}});
  EXPECT_THROW(construct_recursive(base), ParameterError);
}

TEST(ConstructionLocality, PerMethod) {
  EXPECT_EQ(construction_locality("dup", 5, 6), 1);
  EXPECT_EQ(construction_locality("comb", 5, 6), 2);
  EXPECT_EQ(construction_locality("rec", 3, 4), 2);
  EXPECT_EQ(construction_locality("rec", 6, 11), 3);
}

}  // namespace
}  // namespace cfr
