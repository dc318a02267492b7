#include "support.hpp"

#include <gtest/gtest.h>

using namespace torhyp;
using namespace torhyp::testing;

TEST(FamilySpec, ParsesLabels) {
  EXPECT_EQ(parse_case_id("2.0.1"), CaseId::C201);
  EXPECT_EQ(parse_case_id("314"), CaseId::C314);
  EXPECT_THROW(parse_case_id("4.0.1"), ParameterError);
  EXPECT_EQ(to_string(CaseId::C315), "3.1.5");
}

TEST(FamilySpec, ValidationNamesTheConstraint) {
  EXPECT_THROW(make_spec(CaseId::C201, {-1}).validate(), ParameterError);
  EXPECT_THROW(make_spec(CaseId::C202, {2, 1}).validate(), ParameterError);
  EXPECT_THROW(make_spec(CaseId::C302, {0, 0, 0}).validate(), ParameterError);
  EXPECT_THROW(make_spec(CaseId::C301, {0, 0, -1}).validate(), ParameterError);
  EXPECT_THROW(make_spec(CaseId::C313, {-1, 0}).validate(), ParameterError);
  FamilySpec missing;
  missing.id = CaseId::C201;
  EXPECT_THROW(missing.validate(), ParameterError);
  FamilySpec extra = make_spec(CaseId::C201, {1});
  extra.params["b1"] = 0;
  EXPECT_THROW(extra.validate(), ParameterError);
}

TEST(CatalogFans, SmoothCompleteWithExpectedConeCount) {
  for (const auto& s : all_grid_specs()) {
    const Fan fan = build_family_fan(s);
    const auto rep = verify_smooth_complete(fan);
    EXPECT_TRUE(rep.passed()) << s.describe();
    EXPECT_EQ(rep.generic_cover, 1) << s.describe();
    // A complete simplicial fan in R^3 with n rays has 2n - 4 maximal cones.
    EXPECT_EQ(fan.max_cones().size(), 2 * fan.num_rays() - 4) << s.describe();
    EXPECT_EQ(fan.num_rays() - 3, static_cast<std::size_t>(picard_rank(s.id)));
  }
}

TEST(CatalogFans, SplittingExactlyForTheSplitFamilies) {
  for (const auto& s : all_grid_specs()) {
    const bool expected = s.id == CaseId::C201 || s.id == CaseId::C202 || s.id == CaseId::C301 || s.id == CaseId::C302;
    EXPECT_EQ(is_splitting(build_family_fan(s)), expected) << s.describe();
  }
}

TEST(CatalogFans, StoredCollectionsAreTheMinimalNonFaces) {
  for (const auto& s : all_grid_specs()) {
    const Fan fan = build_family_fan(s);
    std::vector<std::vector<std::size_t>> stored;
    for (const auto& pc : fan.collections()) stored.push_back(pc.rays);
    std::sort(stored.begin(), stored.end());
    EXPECT_EQ(stored, minimal_non_faces(fan)) << s.describe();
  }
}

TEST(PrimitiveRelations, FirstCase) {
  const Fan fan = build_family_fan(make_spec(CaseId::C201, {2}));
  const auto r1 = primitive_relation(fan, {0, 1});
  EXPECT_TRUE(r1.relation_cone.empty());
  const auto r2 = primitive_relation(fan, {2, 3, 4});
  ASSERT_EQ(r2.relation_cone, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r2.relation_coeffs, (IntVec{2}));
}

TEST(PrimitiveRelations, RelationsReSubstitute) {
  for (const auto& s : all_grid_specs()) {
    const Fan fan = build_family_fan(s);
    for (const auto& pc : fan.collections()) {
      IntVec lhs(3);
      for (auto r : pc.rays) lhs = add(lhs, fan.ray(r));
      IntVec rhs(3);
      for (std::size_t i = 0; i < pc.relation_cone.size(); ++i)
        rhs = add(rhs, scale(pc.relation_coeffs[i], fan.ray(pc.relation_cone[i])));
      EXPECT_EQ(lhs, rhs) << s.describe();
      EXPECT_TRUE(pc.relation_cone.empty() || fan.is_face(pc.relation_cone));
    }
  }
}

TEST(PrimitiveRelations, NonSplittingTrivialRelation) {
  const Fan fan = build_family_fan(make_spec(CaseId::C311, {1}));
  const auto t1 = fan.ray_index("t_1");
  const auto z1 = fan.ray_index("z_1");
  std::vector<std::size_t> c{t1, z1};
  std::sort(c.begin(), c.end());
  EXPECT_TRUE(primitive_relation(fan, c).relation_cone.empty());
}

TEST(RayLabels, Aliases) {
  const Fan fan = build_family_fan(make_spec(CaseId::C311, {0}));
  const auto u1 = fan.ray_index("D_{u_1}");
  EXPECT_EQ(fan.ray_index("D_u1"), u1);
  EXPECT_EQ(fan.ray_index("u_1"), u1);
  EXPECT_EQ(fan.ray_index("u1"), u1);
  EXPECT_EQ(fan.ray_index(std::to_string(u1 + 1)), u1);
  EXPECT_THROW((void)fan.ray_index("w_9"), ParameterError);
}

TEST(GenericFans, ProjectiveSpace) {
  const Fan fan = make_generic_fan({IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}, IntVec{-1, -1, -1}},
                                   {Cone{0, 1, 2}, Cone{0, 1, 3}, Cone{0, 2, 3}, Cone{1, 2, 3}});
  ASSERT_EQ(fan.collections().size(), 1u);
  EXPECT_EQ(fan.collections()[0].rays, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(fan.labels()[3], "D_4");
}

TEST(GenericFans, IncompleteFanIsRejected) {
  EXPECT_THROW(make_generic_fan({IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}, IntVec{-1, -1, -1}},
                                {Cone{0, 1, 2}, Cone{0, 1, 3}}),
               ParameterError);
  EXPECT_THROW(make_generic_fan({IntVec{2, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}, IntVec{-1, -1, -1}},
                                {Cone{0, 1, 2}, Cone{0, 1, 3}, Cone{0, 2, 3}, Cone{1, 2, 3}}),
               ParameterError);
}

TEST(Fan, ContainingConeCoordinatesAreIntegral) {
  const Fan fan = build_family_fan(make_spec(CaseId::C301, {1, 2, 1}));
  for (int t = 0; t < 50; ++t) {
    const IntVec u{uniform(-6, 6), uniform(-6, 6), uniform(-6, 6)};
    const auto c = fan.containing_cone(u);
    ASSERT_TRUE(c.has_value());
    const RatVec x = fan.cone_coordinates(*c, u);
    for (const auto& q : x) {
      EXPECT_GE(q, 0);
      EXPECT_EQ(q.get_den(), 1);
    }
  }
}
