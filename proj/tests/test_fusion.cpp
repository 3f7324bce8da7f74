#include <gtest/gtest.h>

#include <map>

#include "blockfunctor/errors.hpp"
#include "blockfunctor/frobenius.hpp"
#include "blockfunctor/fusion.hpp"
#include "blockfunctor/group_algorithms.hpp"

using namespace blockfunctor;

namespace {

Permutation cyc(std::size_t n, const char* text) { return Permutation::from_cycles(n, text); }

PermGroup s3() { return PermGroup::from_generators(3, {cyc(3, "(1,2,3)"), cyc(3, "(1,2)")}); }
PermGroup a4() { return PermGroup::from_generators(4, {cyc(4, "(1,2)(3,4)"), cyc(4, "(1,2,3)")}); }
PermGroup s4() { return PermGroup::from_generators(4, {cyc(4, "(1,2,3,4)"), cyc(4, "(1,2)")}); }

std::vector<std::pair<PermGroup, unsigned>> frobenius_fixtures() {
  return {{s3(), 3},
          {a4(), 2},
          {frobenius_group(MatrixModP{5, 1, {2}}).group, 5},
          {frobenius_group(MatrixModP{7, 1, {2}}).group, 7},
          {frobenius_group(MatrixModP{3, 2, {0, 1, 1, 2}}).group, 3},
          {frobenius_group(MatrixModP{2, 3, {0, 0, 1, 1, 0, 1, 0, 1, 0}}).group, 2},
          {PermGroup::from_generators(3, {cyc(3, "(1,2,3)")}), 3}};
}

const DDeltaClass& by_shape(const DDeltaRegistry& registry, std::size_t l, std::size_t u) {
  for (std::size_t id = 0; id < registry.size(); ++id) {
    const auto& r = registry.at(id).realization;
    if (r.l_order() == l && r.u_order() == u) return registry.at(id);
  }
  throw std::runtime_error("no such class");
}

}  // namespace

TEST(BuildFusion, Examples) {
  const auto s = build_fusion(s3(), 3);
  ASSERT_EQ(s.objects.size(), 2u);
  EXPECT_EQ(s.aut_f[1].size(), 2u);
  const auto a = build_fusion(a4(), 2);
  ASSERT_EQ(a.objects.size(), 3u);
  EXPECT_EQ(a.aut_f[2].size(), 3u);
  EXPECT_EQ(a.aut_f[1].size(), 1u);
  const auto f = build_fusion(frobenius_group(MatrixModP{5, 1, {2}}).group, 5);
  ASSERT_EQ(f.objects.size(), 2u);
  EXPECT_EQ(f.aut_f[1].size(), 4u);
  EXPECT_EQ(f.complement.size(), 4u);
}

TEST(BuildFusion, ExplicitSubgroups) {
  const auto fg = frobenius_group(MatrixModP{3, 2, {0, 1, 1, 2}});
  const auto data = build_fusion(fg.group, indices_in(fg.group, fg.kernel), indices_in(fg.group, fg.complement), 3);
  EXPECT_EQ(data.complement.size(), 8u);
}

TEST(BuildFusion, RejectsViolatedHypotheses) {
  try {
    build_fusion(s4(), 2);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("not normal"), std::string::npos);
  }
  // C_6 at p = 3: E = C_2 centralizes D.
  const auto c6 = PermGroup::from_generators(5, {cyc(5, "(1,2,3)(4,5)")});
  try {
    build_fusion(c6, 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("freely"), std::string::npos);
  }
  // Q_8 x| C_3 = SL(2,3) at p = 2: D is not abelian.
  const auto sl23 = PermGroup::from_generators(
      8, {cyc(8, "(1,2,4,7)(3,6,8,5)"), cyc(8, "(1,3,4,8)(2,5,7,6)"), cyc(8, "(2,3,5)(6,7,8)")});
  ASSERT_EQ(sl23.order(), 24);
  EXPECT_THROW(build_fusion(sl23, 2), DomainError);
}

TEST(TripleOrbits, Examples) {
  DDeltaRegistry registry;
  const auto s3_pairs = classify_into_registry(enumerate_pair_orbits(s3(), 3), registry);
  const auto s3_fusion = build_fusion(s3(), 3);
  const auto trivial_u = triple_orbits(s3_fusion, by_shape(registry, 3, 1));
  ASSERT_EQ(trivial_u.size(), 1u);
  EXPECT_EQ(trivial_u[0].stabilizer.size(), 2u);
  EXPECT_EQ(trivial_u[0].size, 2u);

  const auto a4_pairs = classify_into_registry(enumerate_pair_orbits(a4(), 2), registry);
  const auto a4_fusion = build_fusion(a4(), 2);
  const auto order3 = triple_orbits(a4_fusion, by_shape(registry, 4, 3));
  ASSERT_EQ(order3.size(), 2u);
  EXPECT_EQ(order3[0].stabilizer.size(), 1u);
  EXPECT_EQ(order3[1].stabilizer.size(), 1u);
  EXPECT_EQ(order3[0].size + order3[1].size, 6u);
  const auto v4 = triple_orbits(a4_fusion, by_shape(registry, 4, 1));
  ASSERT_EQ(v4.size(), 1u);
  EXPECT_EQ(v4[0].stabilizer.size(), 3u);
  EXPECT_TRUE(triple_orbits(a4_fusion, registry.at(registry.identity())).empty());
}

TEST(Psi, Examples) {
  DDeltaRegistry registry;
  classify_into_registry(enumerate_pair_orbits(s3(), 3), registry);
  const auto fusion = build_fusion(s3(), 3);
  const auto& inv = by_shape(registry, 3, 2);
  const auto orbit = triple_orbits(fusion, inv).at(0);
  const auto pair = psi(fusion, inv, orbit.representative);
  EXPECT_EQ(fusion.group.element_order(pair.element), 2u);

  const auto& triv = by_shape(registry, 3, 1);
  EXPECT_EQ(psi(fusion, triv, triple_orbits(fusion, triv).at(0).representative).element,
            PermGroup::identity_index());

  classify_into_registry(enumerate_pair_orbits(a4(), 2), registry);
  const auto a4_fusion = build_fusion(a4(), 2);
  const auto& order3 = by_shape(registry, 4, 3);
  for (const auto& o : triple_orbits(a4_fusion, order3)) {
    const auto pr = psi(a4_fusion, order3, o.representative);
    EXPECT_EQ(a4_fusion.group.element_order(pr.element), 3u);
  }
}

TEST(VerifyBijection, AllFrobeniusFixtures) {
  for (const auto& [g, p] : frobenius_fixtures()) {
    DDeltaRegistry registry;
    const auto pairs = classify_into_registry(enumerate_pair_orbits(g, p), registry);
    const auto fusion = build_fusion(g, p);
    std::set<std::size_t> ids;
    for (const auto& a : pairs.assignments) ids.insert(a.class_id);
    for (auto id : ids) {
      if (id == registry.identity()) continue;
      const auto report = verify_bijection(fusion, registry.at(id), pairs);
      EXPECT_EQ(report.triple_orbits, report.pair_orbits);
      EXPECT_GT(report.pair_orbits, 0u);
    }
  }
}

TEST(VerifyBijection, StabilizerExamples) {
  DDeltaRegistry registry;
  const auto pairs = classify_into_registry(enumerate_pair_orbits(a4(), 2), registry);
  const auto fusion = build_fusion(a4(), 2);
  const auto order3 = verify_bijection(fusion, by_shape(registry, 4, 3), pairs);
  EXPECT_EQ(order3.pair_orbits, 2u);
  EXPECT_EQ(order3.stabilizer_orders, (std::vector<std::size_t>{1, 1}));
  const auto v4 = verify_bijection(fusion, by_shape(registry, 4, 1), pairs);
  EXPECT_EQ(v4.stabilizer_orders, (std::vector<std::size_t>{3}));
}

TEST(TripleOrbits, OrbitSizesPartitionTheTripleSet) {
  for (const auto& [g, p] : frobenius_fixtures()) {
    DDeltaRegistry registry;
    classify_into_registry(enumerate_pair_orbits(g, p), registry);
    const auto fusion = build_fusion(g, p);
    for (std::size_t id = 1; id < registry.size(); ++id) {
      const auto& cls = registry.at(id);
      std::size_t total = 0;
      for (const auto& o : triple_orbits(fusion, cls)) total += o.size;
      // Brute count: all bijections L -> P that are homomorphisms and satisfy the Aut_F condition.
      std::size_t brute = 0;
      const auto& r = cls.realization;
      for (std::size_t k = 0; k < fusion.objects.size(); ++k) {
        const auto& obj = fusion.objects[k];
        if (obj.size() != r.l_order()) continue;
        std::vector<Index> perm(obj.begin(), obj.end());
        do {
          if (perm[0] != PermGroup::identity_index()) continue;
          bool hom = true;
          for (std::size_t i = 0; i < perm.size() && hom; ++i)
            for (std::size_t j = 0; j < perm.size() && hom; ++j)
              hom = perm[cls.l_position[r.ambient.multiply(r.l_elements[i], r.l_elements[j])]] ==
                    g.multiply(perm[i], perm[j]);
          if (!hom) continue;
          std::vector<Index> a(obj.size());
          for (std::size_t i = 0; i < perm.size(); ++i) {
            const auto img = perm[cls.l_position[r.ambient.conjugate(r.u, r.l_elements[i])]];
            a[std::lower_bound(obj.begin(), obj.end(), perm[i]) - obj.begin()] = img;
          }
          brute += std::binary_search(fusion.aut_f[k].begin(), fusion.aut_f[k].end(), a);
        } while (obj.size() <= 9 && std::next_permutation(perm.begin() + 1, perm.end()));
      }
      if (r.l_order() <= 9) EXPECT_EQ(total, brute);
    }
  }
}
