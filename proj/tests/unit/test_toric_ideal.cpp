#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

using namespace torhyp;
using namespace torhyp::testing;

namespace {

std::shared_ptr<const Fan> fan_for(const FamilySpec& s) { return std::make_shared<const Fan>(build_family_fan(s)); }

IntMat first_case_b(long l) {
  const Fan fan = build_family_fan(make_spec(CaseId::C201, {l}));
  return gale_matrix(fan, picard_basis(fan)).B;
}

std::vector<IntVec> first_case_moves(long l) {
  return {IntVec{1, -1, 0, 0, l}, IntVec{0, 0, 1, -1, 0}, IntVec{0, 0, 0, 1, -1}};
}

}  // namespace

TEST(Gale, FirstCaseMatrix) {
  // Columns D_1..D_5 in the basis (D_2, D_3).
  EXPECT_EQ(first_case_b(2), (IntMat{{1, 1, 0, 0, 0}, {-2, 0, 1, 1, 1}}));
}

TEST(Gale, AnnihilatesRaysAndMatchesPrintedTable) {
  for (const auto& s : all_grid_specs()) {
    const Fan fan = build_family_fan(s);
    const GaleMatrix g = gale_matrix(fan, picard_basis(fan));
    EXPECT_TRUE((g.B * fan.ray_matrix()).is_zero()) << s.describe();
    EXPECT_EQ(g.B, printed_gale_matrix(s).matrix) << s.describe();
    for (const auto& m : printed_markov_candidate(s)) EXPECT_TRUE(is_zero(g.B * m)) << s.describe();
  }
}

TEST(Fiber, MatchesBruteForce) {
  for (long l = 0; l <= 2; ++l) {
    const IntMat b = first_case_b(l);
    for (int t = 0; t < 10; ++t) {
      const IntVec image{uniform(0, 3), uniform(0, 3)};
      auto got = fiber(b, image);
      std::sort(got.begin(), got.end());
      std::vector<IntVec> expected;
      for_each_box(5, 0, 9, [&](const IntVec& v) {
        if (b * v == image) expected.push_back(v);
      });
      EXPECT_EQ(got, expected) << "l=" << l;
    }
  }
}

TEST(Fiber, InfiniteFiberIsReported) {
  EXPECT_THROW(fiber(IntMat{{1, -1}}, IntVec{0}), EnumerationError);
}

TEST(Markov, PrintedMovesConnectAndDroppingOneFails) {
  for (long l = 0; l <= 3; ++l) {
    const IntMat b = first_case_b(l);
    auto moves = first_case_moves(l);
    const auto ok = markov_verify(b, moves, 6);
    EXPECT_TRUE(ok.connected);
    EXPECT_GT(ok.fibers_checked, 0u);
    moves.pop_back();
    const auto bad = markov_verify(b, moves, 6);
    EXPECT_FALSE(bad.connected);
    ASSERT_TRUE(bad.failing_fiber.has_value());
    ASSERT_TRUE(bad.failing_element.has_value());
    EXPECT_EQ(b * *bad.failing_element, *bad.failing_fiber);
  }
}

TEST(Markov, NonKernelMoveIsRejected) {
  EXPECT_THROW(markov_verify(first_case_b(1), {IntVec{1, 0, 0, 0, 0}}, 3), ParameterError);
  EXPECT_THROW(fiber_graph_connected(first_case_b(1), {IntVec{1, 0, 0, 0, 0}}, IntVec{1, 1}), ParameterError);
}

TEST(Markov, TableOneCandidatesOnAllGrids) {
  for (const auto& s : all_grid_specs({0, 1, 2})) {
    const auto c = table1_check(s, 5);
    EXPECT_TRUE(c.passed()) << s.describe();
  }
}

TEST(Markov, BoundFromEnvironment) {
  ::unsetenv("TORHYP_MARKOV_BOUND");
  EXPECT_EQ(default_markov_bound(), 6);
  ::setenv("TORHYP_MARKOV_BOUND", "9", 1);
  EXPECT_EQ(default_markov_bound(), 9);
  ::unsetenv("TORHYP_MARKOV_BOUND");
}

TEST(Sections, EmbedIsTheRayPairing) {
  const Fan fan = build_family_fan(make_spec(CaseId::C201, {3}));
  EXPECT_EQ(embed(fan, IntVec{1, 0, 0}), (IntVec{1, -1, 0, 0, 3}));
  EXPECT_EQ(embed(fan, IntVec{0, 1, 0}), (IntVec{0, 0, 1, 0, -1}));
}

TEST(Sections, MovesOfTheFirstConfiguration) {
  for (long l = 1; l <= 3; ++l) {
    const auto fan = fan_for(make_spec(CaseId::C201, {l}));
    const auto moves = section_moves(parse_divisor(fan, "D_2"));
    for (const auto& v : first_case_moves(l)) {
      EXPECT_NE(std::find(moves.begin(), moves.end(), v), moves.end()) << "l=" << l;
      EXPECT_NE(std::find(moves.begin(), moves.end(), scale(-1, v)), moves.end()) << "l=" << l;
    }
  }
}

TEST(Sections, TableSixConfigurationsConnect) {
  for (const auto& s : all_grid_specs({0, 1, 2})) {
    const auto fan = fan_for(s);
    for (const auto& entry : config_entries(s)) {
      if (s.id == CaseId::C202 && entry.eprime == "D_4") continue;
      const TDivisor eprime = divisor_from_nef_coords(fan, entry.eprime_nef);
      IntVec e_nef(entry.eprime_nef.size(), Int(1));
      const TDivisor e = divisor_from_nef_coords(fan, e_nef);
      const auto report = connected_sections_check(e, eprime, 5);
      EXPECT_TRUE(report.certificate.connected) << s.describe() << " E'=" << entry.eprime;
      ASSERT_TRUE(report.idp.has_value());
      EXPECT_TRUE(report.idp->holds);
      EXPECT_TRUE(report.passes);
    }
  }
}

TEST(Sections, PrintedSecondCaseEntryIsNotBig) {
  // Table 6 lists E' = D_4 for l2 >= 1; P(D_4) is a segment, so G has rank 1.
  for (long l2 = 1; l2 <= 3; ++l2) {
    const auto fan = fan_for(make_spec(CaseId::C202, {0, l2}));
    const TDivisor d4 = parse_divisor(fan, "D_4");
    EXPECT_FALSE(is_big(d4));
    EXPECT_EQ(section_moves(d4).size(), 2u);
    const auto report = connected_sections_check(default_ample(fan), d4, 6);
    EXPECT_FALSE(report.passes);
    EXPECT_TRUE(connected_sections_check(default_ample(fan), parse_divisor(fan, "D_3"), 6).passes);
  }
}
