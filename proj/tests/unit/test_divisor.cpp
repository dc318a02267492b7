#include "support.hpp"

#include <gtest/gtest.h>

using namespace torhyp;
using namespace torhyp::testing;

namespace {

std::shared_ptr<const Fan> fan_for(const FamilySpec& s) { return std::make_shared<const Fan>(build_family_fan(s)); }

}  // namespace

TEST(Divisor, ParseAndPrint) {
  const auto fan = fan_for(make_spec(CaseId::C201, {1}));
  const TDivisor d = parse_divisor(fan, "2D_2+3D_3");
  EXPECT_EQ(d.coeffs(), (IntVec{0, 2, 3, 0, 0}));
  EXPECT_EQ(d.to_string(), "2D_2+3D_3");
  EXPECT_EQ(parse_divisor(fan, "-D_1").coeffs(), (IntVec{-1, 0, 0, 0, 0}));
  EXPECT_EQ(parse_divisor(fan, d.to_string()), d);
  EXPECT_THROW(parse_divisor(fan, "2D_9"), ParameterError);
  const auto fan3 = fan_for(make_spec(CaseId::C311, {0}));
  const TDivisor e = parse_divisor(fan3, "D_{u_1}-D_{z_1}");
  EXPECT_EQ(e.coeff(fan3->ray_index("u_1")), 1);
  EXPECT_EQ(e.coeff(fan3->ray_index("z_1")), -1);
}

TEST(Divisor, PrincipalDivisorsHaveZeroClass) {
  for (const auto& s : all_grid_specs()) {
    const auto fan = fan_for(s);
    const PicBasis pb = picard_basis(*fan);
    for (const IntVec& m : {IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}}) {
      const TDivisor p(fan, embed(*fan, m));
      EXPECT_TRUE(is_zero(class_of(pb, p))) << s.describe();
    }
  }
}

TEST(Divisor, PicardBasisOfFirstCase) {
  const auto fan = fan_for(make_spec(CaseId::C201, {2}));
  EXPECT_EQ(picard_basis_labels(CaseId::C201), (std::vector<std::string>{"D_2", "D_3"}));
  const PicBasis pb = picard_basis(*fan);
  // D_1 ~ D_2 - l D_3 and D_4 ~ D_5 ~ D_3
  EXPECT_EQ(class_of(pb, parse_divisor(fan, "D_1")), (IntVec{1, -2}));
  EXPECT_EQ(class_of(pb, parse_divisor(fan, "D_4")), (IntVec{0, 1}));
  EXPECT_EQ(class_of(pb, parse_divisor(fan, "D_5")), (IntVec{0, 1}));
}

TEST(Divisor, NefAndAmpleAgreeWithConeOracle) {
  for (int t = 0; t < 300; ++t) {
    const FamilySpec s = random_spec();
    const auto fan = fan_for(s);
    IntVec c(fan->num_rays());
    for (auto& x : c) x = uniform(-3, 4);
    const TDivisor d(fan, c);
    EXPECT_EQ(is_nef(d), oracle_nef(d)) << s.describe() << " " << d.to_string();
    EXPECT_EQ(is_ample(d), oracle_nef(d, true)) << s.describe() << " " << d.to_string();
  }
}

TEST(Divisor, TableTwoGeneratorsAndCanonicalClass) {
  for (const auto& s : all_grid_specs()) {
    const auto fan = fan_for(s);
    const PicBasis pb = picard_basis(*fan);
    for (const auto& g : nef_cone_generators(*fan)) EXPECT_TRUE(is_nef(TDivisor(fan, g.coeffs))) << g.name;
    EXPECT_TRUE(is_ample(default_ample(fan)));
    EXPECT_EQ(class_of(pb, canonical_divisor(fan)), printed_canonical(s).coords) << s.describe();
    IntVec minus_sum(fan->num_rays(), Int(-1));
    EXPECT_EQ(canonical_divisor(fan).coeffs(), minus_sum);
  }
}

TEST(Divisor, NefCoordinatesRoundTrip) {
  for (int t = 0; t < 100; ++t) {
    const FamilySpec s = random_spec();
    const auto fan = fan_for(s);
    IntVec c(nef_cone_generators(*fan).size());
    for (auto& x : c) x = uniform(0, 6);
    const TDivisor d = divisor_from_nef_coords(fan, c);
    const RatVec back = nef_coordinates(*fan, d);
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(back[i], Rational(c[i]));
    EXPECT_TRUE(is_nef(d));
  }
}

TEST(Divisor, BigMeansFullDimensionalPolytope) {
  const auto fan = fan_for(make_spec(CaseId::C201, {0}));
  EXPECT_FALSE(is_big(divisor_from_nef_coords(fan, IntVec{0, 5})));
  EXPECT_TRUE(is_big(divisor_from_nef_coords(fan, IntVec{1, 1})));
  EXPECT_THROW(is_big(parse_divisor(fan, "-D_1")), ParameterError);
}

TEST(Divisor, SupportFunctionOnRays) {
  for (int t = 0; t < 50; ++t) {
    const FamilySpec s = random_spec();
    const auto fan = fan_for(s);
    IntVec c(fan->num_rays());
    for (auto& x : c) x = uniform(-3, 3);
    const TDivisor d(fan, c);
    for (std::size_t r = 0; r < fan->num_rays(); ++r) EXPECT_EQ(support_function(d, fan->ray(r)), Rational(-c[r]));
  }
}

TEST(Divisor, NefConeExtremeRaysMatchTable) {
  for (const auto& s : all_grid_specs()) {
    const auto fan = fan_for(s);
    const PicBasis pb = picard_basis(*fan);
    std::vector<IntVec> printed;
    for (const auto& g : nef_cone_generators(*fan)) printed.push_back(pb.coords(g.coeffs));
    for (const auto& r : nef_cone_extreme_rays(*fan, pb)) EXPECT_TRUE(in_cone(r, printed)) << s.describe();
    for (const auto& g : printed) EXPECT_TRUE(is_nef_class(*fan, pb, g));
  }
}
