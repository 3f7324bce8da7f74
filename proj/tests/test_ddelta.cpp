#include <gtest/gtest.h>

#include <map>

#include "blockfunctor/ddelta.hpp"
#include "blockfunctor/errors.hpp"
#include "blockfunctor/frobenius.hpp"
#include "blockfunctor/group_algorithms.hpp"
#include "oracle.hpp"

using namespace blockfunctor;

namespace {

Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

PermGroup s3() { return PermGroup::from_generators(3, {cyc(3, "(1,2,3)"), cyc(3, "(1,2)")}); }
PermGroup a4() { return PermGroup::from_generators(4, {cyc(4, "(1,2)(3,4)"), cyc(4, "(1,2,3)")}); }
PermGroup c3() { return PermGroup::from_generators(3, {cyc(3, "(1,2,3)")}); }

std::vector<std::pair<PermGroup, unsigned>> fixtures() {
  return {{s3(), 3},
          {a4(), 2},
          {c3(), 3},
          {frobenius_group(MatrixModP{5, 1, {2}}).group, 5},
          {frobenius_group(MatrixModP{7, 1, {2}}).group, 7},
          {PermGroup::from_generators(4, {cyc(4, "(1,2,3,4)"), cyc(4, "(1,2)")}), 2},
          {frobenius_group(MatrixModP{3, 2, {0, 1, 1, 2}}).group, 3},
          {frobenius_group(MatrixModP{2, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0}}).group, 2}};
}

// (|L|, order(u)) -> member count.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_shape(const DDeltaRegistry& registry,
                                                                       const PairClassification& pc) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (const auto& a : pc.assignments) {
    const auto& r = registry.at(a.class_id).realization;
    ++out[{r.l_order(), r.u_order()}];
  }
  return out;
}

std::size_t class_count(const PairClassification& pc) {
  std::set<std::size_t> ids;
  for (const auto& a : pc.assignments) ids.insert(a.class_id);
  return ids.size();
}

}  // namespace

TEST(PairOrbits, Examples) {
  EXPECT_EQ(enumerate_pair_orbits(s3(), 3).pairs.size(), 4u);
  EXPECT_EQ(enumerate_pair_orbits(a4(), 2).pairs.size(), 7u);
  EXPECT_EQ(enumerate_pair_orbits(c3(), 3).pairs.size(), 2u);
  EXPECT_THROW(enumerate_pair_orbits(s3(), 4), DomainError);
}

TEST(PairOrbits, MatchExhaustiveOrbitOracle) {
  for (const auto& [g, p] : fixtures()) {
    const auto orbits = enumerate_pair_orbits(g, p);
    const auto brute = oracle::pair_orbits(oracle::closure(g.generators(), g.degree()), p);
    EXPECT_EQ(orbits.pairs.size(), brute.size());
    std::vector<bool> hit(brute.size(), false);
    for (const auto& pair : orbits.pairs) {
      oracle::Pair q;
      for (Index i : pair.subgroup) q.subgroup.insert(g.element(i));
      q.element = g.element(pair.element);
      for (std::size_t k = 0; k < brute.size(); ++k)
        if (std::binary_search(brute[k].begin(), brute[k].end(), q)) {
          EXPECT_FALSE(hit[k]);
          hit[k] = true;
        }
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(brute.size()));
  }
}

TEST(FaithfulQuotient, Examples) {
  const auto g = s3();
  const auto orbits = enumerate_pair_orbits(g, 3);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ambient_orders;
  for (const auto& pair : orbits.pairs) {
    const auto fq = faithful_quotient(g, pair, 3);
    ambient_orders[{pair.subgroup.size(), g.element_order(pair.element)}] = fq.realization.ambient.size();
    if (pair.subgroup.size() == 1) {
      EXPECT_EQ(fq.realization.u_order(), 1u);
      EXPECT_EQ(fq.realization.ambient.size(), 1u);
    }
  }
  EXPECT_EQ((ambient_orders[{3, 1}]), 3u);
  EXPECT_EQ((ambient_orders[{3, 2}]), 6u);
  EXPECT_EQ((ambient_orders[{1, 2}]), 1u);
}

TEST(FaithfulQuotient, IsFaithfulForEveryPair) {
  for (const auto& [g, p] : fixtures())
    for (const auto& pair : enumerate_pair_orbits(g, p).pairs) {
      const auto fq = faithful_quotient(g, pair, p);
      const auto& r = fq.realization;
      EXPECT_EQ(r.ambient.size(), r.l_order() * r.u_order());
      for (std::size_t j = 1; j < r.u_order(); ++j) {
        const Index uj = r.ambient.power(r.u, static_cast<long long>(j));
        bool central = true;
        for (Index l : r.l_elements) central = central && r.ambient.multiply(uj, l) == r.ambient.multiply(l, uj);
        EXPECT_FALSE(central);
      }
    }
}

TEST(Classify, Examples) {
  DDeltaRegistry registry;
  const auto s = classify_into_registry(enumerate_pair_orbits(s3(), 3), registry);
  EXPECT_EQ(class_count(s), 3u);
  const auto shape_s3 = class_shape(registry, s);
  EXPECT_EQ((shape_s3.at({1, 1})), 2u);
  EXPECT_EQ((shape_s3.at({3, 1})), 1u);
  EXPECT_EQ((shape_s3.at({3, 2})), 1u);

  const auto a = classify_into_registry(enumerate_pair_orbits(a4(), 2), registry);
  EXPECT_EQ(class_count(a), 4u);
  const auto shape_a4 = class_shape(registry, a);
  EXPECT_EQ((shape_a4.at({1, 1})), 3u);
  EXPECT_EQ((shape_a4.at({2, 1})), 1u);
  EXPECT_EQ((shape_a4.at({4, 1})), 1u);
  EXPECT_EQ((shape_a4.at({4, 3})), 2u);

  // p does not divide |S_3| at p = 5: every pair is (1, s).
  const auto none = classify_into_registry(enumerate_pair_orbits(s3(), 5), registry);
  EXPECT_EQ(class_count(none), 1u);
  EXPECT_EQ(none.assignments.size(), 3u);
  EXPECT_EQ(none.assignments.front().class_id, registry.identity());
}

TEST(Classify, IdentityClassCountsPRegularClasses) {
  DDeltaRegistry registry;
  for (const auto& [g, p] : fixtures()) {
    const auto pc = classify_into_registry(enumerate_pair_orbits(g, p), registry);
    std::size_t identity_members = 0;
    for (const auto& a : pc.assignments) identity_members += a.class_id == registry.identity();
    EXPECT_EQ(identity_members, oracle::p_regular_class_count(oracle::closure(g.generators(), g.degree()), p));
  }
}

TEST(Classify, IsAnEquivalenceRelation) {
  for (const auto& [g, p] : fixtures()) {
    DDeltaRegistry registry;
    const auto orbits = enumerate_pair_orbits(g, p);
    const auto pc = classify_into_registry(orbits, registry);
    std::vector<MarkedPair> marked;
    for (const auto& pair : orbits.pairs) marked.push_back(faithful_quotient(g, pair, p).realization.marked());
    for (std::size_t i = 0; i < marked.size(); ++i)
      for (std::size_t j = 0; j < marked.size(); ++j) {
        const bool same = pc.assignments[i].class_id == pc.assignments[j].class_id;
        const bool trivial = marked[i].p_subgroup.is_trivial() && marked[j].p_subgroup.is_trivial();
        if (trivial) {
          EXPECT_TRUE(same);
          continue;
        }
        if (marked[i].p_subgroup.is_trivial() != marked[j].p_subgroup.is_trivial()) {
          EXPECT_FALSE(same);
          continue;
        }
        EXPECT_EQ(find_pair_isomorphism(marked[i], marked[j]).has_value(), same);
      }
  }
}

TEST(AutOut, Examples) {
  DDeltaRegistry registry;
  const auto& identity = registry.at(registry.identity());
  EXPECT_EQ(identity.out_pair.size(), 1u);
  EXPECT_EQ(identity.out_table.size(), 1u);

  const auto s = classify_into_registry(enumerate_pair_orbits(s3(), 3), registry);
  const auto a = classify_into_registry(enumerate_pair_orbits(a4(), 2), registry);
  std::map<std::pair<std::size_t, std::size_t>, const DDeltaClass*> by_shape;
  for (std::size_t id = 0; id < registry.size(); ++id) {
    const auto& cls = registry.at(id);
    by_shape[{cls.realization.l_order(), cls.realization.u_order()}] = &cls;
  }
  EXPECT_EQ((by_shape.at({3, 1})->out_pair.size()), 2u);
  EXPECT_EQ((by_shape.at({3, 1})->out_table.degrees), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ((by_shape.at({3, 2})->out_pair.size()), 1u);
  EXPECT_EQ((by_shape.at({4, 3})->aut_pair.size()), 12u);
  EXPECT_EQ((by_shape.at({4, 3})->out_pair.size()), 1u);
  EXPECT_EQ((by_shape.at({4, 1})->out_pair.size()), 6u);
  EXPECT_EQ((by_shape.at({4, 1})->out_table.degrees), (std::vector<std::size_t>{1, 1, 2}));
}

TEST(NImage, Examples) {
  DDeltaRegistry registry;
  for (const auto& [g, p] : {std::pair{s3(), 3u}, std::pair{a4(), 2u}}) {
    const auto pc = classify_into_registry(enumerate_pair_orbits(g, p), registry);
    for (std::size_t i = 0; i < pc.orbits.pairs.size(); ++i) {
      const auto& cls = registry.at(pc.assignments[i].class_id);
      const auto image = n_image_in_out(cls, g, pc.orbits.pairs[i], pc.assignments[i].witness);
      const auto shape = std::pair{cls.realization.l_order(), cls.realization.u_order()};
      if (shape == std::pair<std::size_t, std::size_t>{3, 1}) EXPECT_EQ(image.size(), 2u);
      if (shape == std::pair<std::size_t, std::size_t>{3, 2}) EXPECT_EQ(image.size(), 1u);
      if (shape == std::pair<std::size_t, std::size_t>{4, 1}) EXPECT_EQ(image.size(), 3u);
      if (shape == std::pair<std::size_t, std::size_t>{1, 1}) EXPECT_EQ(image.size(), 1u);
    }
  }
}

TEST(NImage, WitnessIndependentFixedDimensions) {
  // A second witness is phi composed with a pair automorphism of L<u>.
  for (const auto& [g, p] : fixtures()) {
    DDeltaRegistry registry;
    const auto pc = classify_into_registry(enumerate_pair_orbits(g, p), registry);
    for (std::size_t i = 0; i < pc.orbits.pairs.size(); ++i) {
      const auto& cls = registry.at(pc.assignments[i].class_id);
      const auto& r = cls.realization;
      const auto& phi = pc.assignments[i].witness;
      const auto base = n_image_in_out(cls, g, pc.orbits.pairs[i], phi);
      for (const auto& f : cls.aut_pair.elements()) {
        if (f(r.u) != r.u) continue;
        LMap other(phi.size());
        for (std::size_t k = 0; k < phi.size(); ++k) other[k] = phi[cls.l_position[f(r.l_elements[k])]];
        const auto image = n_image_in_out(cls, g, pc.orbits.pairs[i], other);
        for (std::size_t chi = 0; chi < cls.out_table.size(); ++chi)
          EXPECT_EQ(fixed_point_dim(cls.out_table, chi, image), fixed_point_dim(cls.out_table, chi, base));
      }
    }
  }
}
