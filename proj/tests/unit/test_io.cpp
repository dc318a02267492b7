#include "support.hpp"
#include "torhyp/io.hpp"

#include <gtest/gtest.h>

using namespace torhyp;
using namespace torhyp::testing;

TEST(Json, IntegersFitOrBecomeStrings) {
  EXPECT_TRUE(int_json(Int(42)).is_number_integer());
  const Int huge("-98765432109876543210987654321");
  const Json j = int_json(huge);
  ASSERT_TRUE(j.is_string());
  EXPECT_EQ(int_from_json(j), huge);
  EXPECT_EQ(int_from_json(Json(7)), 7);
  EXPECT_EQ(rational_json(Rational(9, 13)), "9/13");
  EXPECT_THROW(int_from_json(Json("x1")), ParameterError);
}

TEST(Json, FamilySpecRoundTrip) {
  for (const auto& s : all_grid_specs({0, 2})) {
    const FamilySpec back = family_spec_from_json(to_json(s));
    EXPECT_EQ(back.id, s.id);
    EXPECT_EQ(back.params, s.params);
  }
  EXPECT_THROW(family_spec_from_json(Json{{"case", "2.0.2"}, {"params", {{"l1", 3}, {"l2", 1}}}}), ParameterError);
}

TEST(Json, CatalogFanRoundTrip) {
  for (const auto& s : all_grid_specs({0, 2})) {
    const Fan fan = build_family_fan(s);
    const Json j = to_json(fan);
    const Fan back = fan_from_json(j);
    EXPECT_EQ(back.rays(), fan.rays());
    EXPECT_EQ(back.labels(), fan.labels());
    EXPECT_EQ(to_json(back), j);
  }
}

TEST(Json, GenericFanFromRaysAndCones) {
  const Json j = Json::parse(R"({"rays":[[1,0,0],[0,1,0],[0,0,1],[-1,-1,-1]],
                                 "max_cones":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
  const Fan fan = fan_from_json(j);
  EXPECT_EQ(fan.num_rays(), 4u);
  EXPECT_FALSE(fan.spec().has_value());
  EXPECT_THROW(fan_from_json(Json::parse(R"({"rays":[[1,0,0]],"max_cones":[[0]]})")), ParameterError);
}

TEST(Json, DivisorForms) {
  const auto fan = std::make_shared<const Fan>(build_family_fan(make_spec(CaseId::C201, {1})));
  const TDivisor d = parse_divisor(fan, "2D_2+3D_3");
  EXPECT_EQ(divisor_from_json(fan, Json("2D_2+3D_3")), d);
  EXPECT_EQ(divisor_from_json(fan, to_json(d)), d);
  EXPECT_EQ(divisor_from_json(fan, Json{{"coeffs", {{"D_2", 2}, {"D_3", 3}}}}), d);
  const PicBasis pb = picard_basis(*fan);
  const TDivisor from_class = divisor_from_json(fan, Json{{"class", {2, 3}}});
  EXPECT_EQ(class_of(pb, from_class), class_of(pb, d));
}

TEST(Json, VerdictCarriesSchemaFields) {
  const Verdict v = derive_verdict(make_spec(CaseId::C201, {2}), IntVec{3, 4});
  const Json j = with_schema(to_json(v));
  EXPECT_EQ(j["schema"], kSchema);
  EXPECT_EQ(j["derived"]["outcome"], "Hyperbolic");
  EXPECT_EQ(j["table"], "Hyperbolic");
  EXPECT_EQ(j["agree"], true);
  EXPECT_EQ(j["derived"]["evidence"]["epsilon"], "1/30");
  // Deterministic serialization.
  EXPECT_EQ(j.dump(), with_schema(to_json(derive_verdict(make_spec(CaseId::C201, {2}), IntVec{3, 4}))).dump());
}

TEST(Csv, HeaderAndRow) {
  EXPECT_EQ(sweep_csv_header(CaseId::C201), "case,l,a,b,derived,table,agree,ambiguous");
  EXPECT_EQ(sweep_csv_header(CaseId::C311), "case,b1,d,e,f,derived,table,agree,ambiguous");
  const Verdict v = derive_verdict(make_spec(CaseId::C201, {2}), IntVec{3, 4});
  EXPECT_EQ(sweep_csv_row(v), "2.0.1,2,3,4,Hyperbolic,Hyperbolic,true,false");
}
