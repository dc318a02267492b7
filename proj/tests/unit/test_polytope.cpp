#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace torhyp;
using namespace torhyp::testing;

namespace {

std::shared_ptr<const Fan> fan_for(const FamilySpec& s) { return std::make_shared<const Fan>(build_family_fan(s)); }

RatVec rv(long x, long y, long z) { return RatVec{Rational(x), Rational(y), Rational(z)}; }

TDivisor random_nef(const std::shared_ptr<const Fan>& fan, long hi) {
  IntVec c(nef_cone_generators(*fan).size());
  for (auto& x : c) x = uniform(0, hi);
  return divisor_from_nef_coords(fan, c);
}

}  // namespace

TEST(Polytope, FirstCaseVertices) {
  for (long l = 0; l <= 2; ++l) {
    const auto fan = fan_for(make_spec(CaseId::C201, {l}));
    for (long a = 1; a <= 3; ++a) {
      for (long b = 1; b <= 3; ++b) {
        const TDivisor d = divisor_from_nef_coords(fan, IntVec{a, b});
        std::vector<RatVec> expected{rv(0, -b, 0), rv(0, 0, 0), rv(0, -b, b),
                                     rv(a, -b, 0), rv(a, l * a, 0), rv(a, -b, l * a + b)};
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(vertices(polytope_of(d)), expected) << "l=" << l << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(Polytope, LatticePointsMatchBruteForce) {
  for (int t = 0; t < 60; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const TDivisor d = random_nef(fan, 3);
    auto expected = brute_force_points(d, 20);
    const auto got = lattice_points(polytope_of(d));
    EXPECT_EQ(got, expected) << s.describe() << " " << d.to_string();
    EXPECT_EQ(count_lattice_points(polytope_of(d)), expected.size());
  }
}

TEST(Polytope, FirstCaseFacetInteriorCounts) {
  for (long l = 0; l <= 2; ++l) {
    const auto fan = fan_for(make_spec(CaseId::C201, {l}));
    for (long a = 1; a <= 4; ++a) {
      for (long b = 1; b <= 4; ++b) {
        const TDivisor d = divisor_from_nef_coords(fan, IntVec{a, b});
        const long side = (a - 1) * (b - 1) + l * a * (a - 1) / 2;
        const std::vector<long> expected{(b - 1) * (b - 2) / 2, (l * a + b - 2) * (l * a + b - 1) / 2, side, side,
                                         side};
        for (std::size_t r = 0; r < 5; ++r) {
          const Face2 f = min_face(d, r);
          EXPECT_EQ(f.dimension, 2);
          EXPECT_EQ(interior_lattice_count(f), expected[r]) << "l=" << l << " a=" << a << " b=" << b << " r=" << r;
          EXPECT_EQ(interior_lattice_count(f), brute_force_face_interior(d, r, 20));
        }
      }
    }
  }
}

TEST(Polytope, FaceInteriorCountsMatchBruteForce) {
  for (int t = 0; t < 40; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const TDivisor d = random_nef(fan, 3);
    if (d.is_zero()) continue;
    for (std::size_t r = 0; r < fan->num_rays(); ++r) {
      const Face2 f = min_face(d, r);
      if (f.dimension != 2) continue;
      EXPECT_EQ(interior_lattice_count(f), brute_force_face_interior(d, r, 20)) << s.describe() << " " << d.to_string();
    }
  }
}

TEST(Polytope, EdgeFacesHaveNoInterior) {
  const auto fan = fan_for(make_spec(CaseId::C201, {0}));
  const TDivisor d = divisor_from_nef_coords(fan, IntVec{0, 3});
  EXPECT_EQ(dimension(polytope_of(d)), 2);
  bool saw_low = false;
  for (std::size_t r = 0; r < 5; ++r) {
    const Face2 f = min_face(d, r);
    if (f.dimension <= 1) {
      saw_low = true;
      EXPECT_EQ(interior_lattice_count(f), 0);
    }
  }
  EXPECT_TRUE(saw_low);
}

TEST(Polytope, UnboundedPolytopeIsRejected) {
  HPolytope p;
  p.normals = {IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1}};
  p.offsets = {0, 0, 0};
  EXPECT_FALSE(is_bounded(p));
  EXPECT_THROW(vertices(p), EnumerationError);
}

TEST(Volume, UnitCubeAndSimplex) {
  std::vector<RatVec> cube;
  for_each_box(3, 0, 1, [&](const IntVec& v) { cube.push_back(RatVec{v[0], v[1], v[2]}); });
  EXPECT_EQ(hull_volume(cube), 1);
  EXPECT_EQ(hull_volume({rv(0, 0, 0), rv(1, 0, 0), rv(0, 1, 0), rv(0, 0, 1)}), Rational(1, 6));
  EXPECT_EQ(hull_volume({rv(0, 0, 0), rv(1, 0, 0), rv(0, 1, 0)}), 0);
}

TEST(Volume, HPolytopeAgreesWithHull) {
  for (int t = 0; t < 40; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const TDivisor d = random_nef(fan, 4);
    const HPolytope p = polytope_of(d);
    EXPECT_EQ(volume(p), hull_volume(vertices(p))) << s.describe() << " " << d.to_string();
  }
}

TEST(Intersection, SelfCubeIsSixTimesVolume) {
  for (int t = 0; t < 40; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const TDivisor d = random_nef(fan, 3);
    EXPECT_EQ(Rational(triple_intersection(d, d, d)), 6 * volume(polytope_of(d))) << s.describe();
  }
}

TEST(Intersection, AgreesWithConeRuleOracle) {
  for (int t = 0; t < 60; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const IntersectionForm form(fan);
    auto rand_div = [&] {
      IntVec c(fan->num_rays());
      for (auto& x : c) x = uniform(-2, 2);
      return TDivisor(fan, c);
    };
    const TDivisor a = rand_div(), b = rand_div(), c = rand_div();
    EXPECT_EQ(form.triple(a, b, c), oracle_triple(a, b, c)) << s.describe();
  }
}

TEST(Intersection, PolarizationMatchesForm) {
  for (int t = 0; t < 30; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const TDivisor a = random_nef(fan, 2), b = random_nef(fan, 2), c = random_nef(fan, 2);
    EXPECT_EQ(triple_by_polarization(a, b, c), Rational(triple_intersection(a, b, c))) << s.describe();
  }
}

TEST(Intersection, FirstCasePairings) {
  const auto fan = fan_for(make_spec(CaseId::C201, {0}));
  // P^1 x P^2: D_2^2 = 0, D_2 D_3^2 = 1, D_3^3 = 0.
  const TDivisor d2 = TDivisor::ray(fan, 1), d3 = TDivisor::ray(fan, 2);
  EXPECT_EQ(triple_intersection(d2, d2, d3), 0);
  EXPECT_EQ(triple_intersection(d2, d3, d3), 1);
  EXPECT_EQ(triple_intersection(d3, d3, d3), 0);
}

TEST(Idp, NefPairsAreIdp) {
  for (int t = 0; t < 20; ++t) {
    const FamilySpec s = random_spec(2);
    const auto fan = fan_for(s);
    const auto r = idp_check(random_nef(fan, 2), random_nef(fan, 2));
    EXPECT_TRUE(r.holds) << s.describe();
  }
  const auto fan = fan_for(make_spec(CaseId::C201, {1}));
  EXPECT_THROW(idp_check(parse_divisor(fan, "D_1"), parse_divisor(fan, "-D_1")), ParameterError);
}
