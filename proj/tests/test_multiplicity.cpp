#include <gtest/gtest.h>

#include <map>
#include <tuple>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/frobenius.hpp"
#include "blockfunctor/group_algorithms.hpp"
#include "blockfunctor/multiplicity.hpp"
#include "oracle.hpp"

using namespace blockfunctor;

namespace {

Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

PermGroup s3() { return PermGroup::from_generators(3, {cyc(3, "(1,2,3)"), cyc(3, "(1,2)")}); }
PermGroup a4() { return PermGroup::from_generators(4, {cyc(4, "(1,2)(3,4)"), cyc(4, "(1,2,3)")}); }
PermGroup c3() { return PermGroup::from_generators(3, {cyc(3, "(1,2,3)")}); }
PermGroup s4() { return PermGroup::from_generators(4, {cyc(4, "(1,2,3,4)"), cyc(4, "(1,2)")}); }

using ShapeKey = std::tuple<std::size_t, std::size_t, std::size_t>;

std::map<ShapeKey, long> by_shape(const MultiplicityTable& table, const DDeltaRegistry& registry) {
  std::map<ShapeKey, long> out;
  for (const auto& [key, value] : table.rows) {
    const auto& r = registry.at(key.first).realization;
    out[{r.l_order(), r.u_order(), key.second}] += static_cast<long>(value);
  }
  return out;
}

std::vector<std::pair<PermGroup, unsigned>> frobenius_fixtures() {
  return {{s3(), 3},
          {a4(), 2},
          {frobenius_group(MatrixModP{5, 1, {2}}).group, 5},
          {frobenius_group(MatrixModP{7, 1, {2}}).group, 7},
          {frobenius_group(MatrixModP{3, 2, {0, 1, 1, 2}}).group, 3},
          {frobenius_group(MatrixModP{2, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0}}).group, 2}};
}

// Conjugate every generator by a fixed permutation of the points.
PermGroup relabel(const PermGroup& g, const Permutation& by) {
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(by.inverse() * x * by);
  return PermGroup::from_generators(g.degree(), gens);
}

}  // namespace

TEST(Invariants, Examples) {
  const auto s = invariants_kl(s3(), 3);
  EXPECT_EQ(s.k, 3u);
  EXPECT_EQ(s.l, 2u);
  EXPECT_EQ(s.difference(), 1u);
  const auto a = invariants_kl(a4(), 2);
  EXPECT_EQ(a.k, 4u);
  EXPECT_EQ(a.l, 3u);
  const auto coprime = invariants_kl(a4(), 5);
  EXPECT_EQ(coprime.k, coprime.l);
}

TEST(LMultiplicativity, Examples) {
  EXPECT_TRUE(l_multiplicativity_check(s3(), s3(), 3));
  EXPECT_TRUE(l_multiplicativity_check(s3(), PermGroup::trivial(1), 3));
  EXPECT_TRUE(l_multiplicativity_check(a4(), c3(), 2));
  EXPECT_EQ(invariants_kl(direct_product(s3(), s3()), 3).l, 4u);
  EXPECT_EQ(invariants_kl(direct_product(a4(), c3()), 2).l, 9u);
}

TEST(SingleBlock, Detection) {
  EXPECT_TRUE(is_single_block(s3(), 3));
  EXPECT_TRUE(is_single_block(a4(), 2));
  EXPECT_TRUE(is_single_block(s4(), 2));
  EXPECT_FALSE(is_single_block(s3(), 2));
  EXPECT_FALSE(is_single_block(PermGroup::from_generators(5, {cyc(5, "(1,2,3)(4,5)")}), 3));
}

TEST(MultPairs, GoldenTablesMatchBruteForceOracle) {
  for (const auto& [g, p] : {std::pair{s3(), 3u}, std::pair{a4(), 2u}, std::pair{c3(), 3u}}) {
    DDeltaRegistry registry;
    const auto table = mult_table_pairs(g, p, registry);
    const auto oracle_table = oracle::small_pair_table(oracle::closure(g.generators(), g.degree()), p);
    EXPECT_EQ(by_shape(table, registry), oracle_table);
  }
}

TEST(MultPairs, GoldenValues) {
  DDeltaRegistry registry;
  const auto s = by_shape(mult_table_pairs(s3(), 3, registry), registry);
  EXPECT_EQ(s, (std::map<ShapeKey, long>{{{1, 1, 0}, 2}, {{3, 1, 0}, 1}, {{3, 1, 1}, 0}, {{3, 2, 0}, 1}}));
  const auto a = by_shape(mult_table_pairs(a4(), 2, registry), registry);
  EXPECT_EQ(a, (std::map<ShapeKey, long>{{{1, 1, 0}, 3},
                                         {{2, 1, 0}, 1},
                                         {{4, 1, 0}, 1},
                                         {{4, 1, 1}, 1},
                                         {{4, 1, 2}, 0},
                                         {{4, 3, 0}, 2}}));
  const auto c = by_shape(mult_table_pairs(c3(), 3, registry), registry);
  EXPECT_EQ(c, (std::map<ShapeKey, long>{{{1, 1, 0}, 1}, {{3, 1, 0}, 1}, {{3, 1, 1}, 1}}));
}

TEST(MultPairs, CoprimeCharacteristic) {
  DDeltaRegistry registry;
  const auto t = mult_table_pairs(a4(), 5, registry);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.at({registry.identity(), 0}), 4u);
}

TEST(MultFusion, MatchesPairFormula) {
  for (const auto& [g, p] : frobenius_fixtures()) {
    DDeltaRegistry registry;
    const auto pairs = mult_table_pairs(g, p, registry);
    const auto fusion = mult_table_fusion(build_fusion(g, p), registry);
    EXPECT_EQ(nontrivial_rows(pairs, registry), fusion.rows);
    EXPECT_EQ(pairs.at({registry.identity(), 0}), pairs.invariants.l);
  }
}

TEST(MultFusion, IndependentOfPairEnumeration) {
  DDeltaRegistry registry;
  const auto fusion = mult_table_fusion(build_fusion(a4(), 2), registry);
  const auto shapes = by_shape(fusion, registry);
  EXPECT_EQ((shapes.at({4, 3, 0})), 2);
  EXPECT_EQ((shapes.at({4, 1, 1})), 1);
}

TEST(MultPairs, InvariantUnderRelabeling) {
  for (const auto& [g, p] : frobenius_fixtures()) {
    std::vector<Point> images(g.degree());
    for (Point i = 0; i < images.size(); ++i) images[i] = static_cast<Point>((i * 2 + 1) % images.size());
    if (std::set<Point>(images.begin(), images.end()).size() != images.size()) continue;
    const auto h = relabel(g, Permutation::from_images(images));
    DDeltaRegistry registry;
    const auto a = mult_table_pairs(g, p, registry);
    const auto b = mult_table_pairs(h, p, registry);
    EXPECT_EQ(a.rows, b.rows);
  }
}

TEST(Compare, Examples) {
  DDeltaRegistry registry;
  const auto s = mult_table_pairs(s3(), 3, registry, "S3");
  const auto s_relabeled = mult_table_pairs(relabel(s3(), cyc(3, "(1,3)")), 3, registry, "S3b");
  const auto same = compare(s, s_relabeled, registry);
  EXPECT_TRUE(same.stable);
  EXPECT_TRUE(same.functorial);
  EXPECT_TRUE(same.defect_isomorphic);
  EXPECT_TRUE(same.diff.empty());

  const auto c = mult_table_pairs(c3(), 3, registry, "C3");
  const auto differ = compare(s, c, registry);
  EXPECT_FALSE(differ.stable);
  EXPECT_FALSE(differ.functorial);
  EXPECT_FALSE(differ.diff.empty());

  const auto f1 = mult_table_pairs(frobenius_group(MatrixModP{5, 1, {2}}).group, 5, registry);
  const auto f2 = mult_table_pairs(
      PermGroup::from_generators(5, {cyc(5, "(1,2,3,4,5)"), cyc(5, "(2,3,5,4)")}), 5, registry);
  const auto iso = compare(f1, f2, registry);
  EXPECT_TRUE(iso.stable);
  EXPECT_TRUE(iso.functorial);
  EXPECT_TRUE(iso.diff.empty());
  EXPECT_TRUE(iso.kl_difference_equal);
}

TEST(Compare, RejectsForeignRegistry) {
  DDeltaRegistry one, two;
  const auto a = mult_table_pairs(s3(), 3, one);
  const auto b = mult_table_pairs(s3(), 3, two);
  EXPECT_THROW(compare(a, b, one), DomainError);
}
