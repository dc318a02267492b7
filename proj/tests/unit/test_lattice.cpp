#include "support.hpp"

#include <gtest/gtest.h>

using namespace torhyp;
using namespace torhyp::testing;

namespace {

void expect_valid_snf(const IntMat& m) {
  const auto d = smith_normal_form(m);
  EXPECT_EQ(d.U * m * d.V, d.S);
  EXPECT_EQ(abs(determinant(d.U)), 1);
  EXPECT_EQ(abs(determinant(d.V)), 1);
  for (std::size_t i = 0; i < d.S.rows(); ++i)
    for (std::size_t j = 0; j < d.S.cols(); ++j)
      if (i != j) EXPECT_EQ(d.S(i, j), 0);
  const IntVec f = d.invariant_factors();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) EXPECT_EQ(f[i + 1] % f[i], 0);
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  const auto d = smith_normal_form(IntMat::identity(3));
  EXPECT_EQ(d.S, IntMat::identity(3));
  EXPECT_EQ(d.U, IntMat::identity(3));
  EXPECT_EQ(d.V, IntMat::identity(3));
}

TEST(SmithNormalForm, DiagonalTwoFour) {
  const IntMat m{{2, 0}, {0, 4}};
  const auto d = smith_normal_form(m);
  EXPECT_EQ(d.S, m);
  expect_valid_snf(m);
}

TEST(SmithNormalForm, DivisibilityIsRestored) {
  const IntMat m{{2, 0}, {0, 3}};
  const auto d = smith_normal_form(m);
  EXPECT_EQ(d.invariant_factors(), (IntVec{1, 6}));
  expect_valid_snf(m);
}

TEST(SmithNormalForm, RayMatrixOfFirstCaseHasFreeCokernelOfRankTwo) {
  const Fan fan = build_family_fan(make_spec(CaseId::C201, {2}));
  const auto d = smith_normal_form(fan.ray_matrix());
  EXPECT_EQ(d.cokernel_free_rank(), 2u);
  EXPECT_TRUE(d.cokernel_torsion().empty());
}

TEST(SmithNormalForm, TorsionIsReported) {
  const IntMat m{{2, 4}, {6, 8}};
  const auto d = smith_normal_form(m);
  EXPECT_EQ(d.invariant_factors(), (IntVec{2, 4}));
  EXPECT_EQ(d.cokernel_torsion(), (IntVec{2, 4}));
  expect_valid_snf(m);
}

TEST(SmithNormalForm, DenseEightByEightStaysSmall) {
  IntMat m(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) m(i, j) = uniform(-20, 20);
  expect_valid_snf(m);
  const auto d = smith_normal_form(m);
  Int prod = 1;
  for (const auto& f : d.invariant_factors()) prod *= f;
  EXPECT_EQ(d.rank == 8 ? prod : Int(0), abs(determinant(m)));
}

TEST(IntegerKernel, IdentityHasTrivialKernel) { EXPECT_TRUE(integer_kernel(IntMat::identity(4)).empty()); }

TEST(IntegerKernel, GaleMatrixOfFirstCaseContainsPrintedMoves) {
  for (long l = 0; l <= 3; ++l) {
    const Fan fan = build_family_fan(make_spec(CaseId::C201, {l}));
    const IntMat b = gale_matrix(fan, picard_basis(fan)).B;
    const auto ker = integer_kernel(b);
    ASSERT_EQ(ker.size(), 3u);
    const IntMat k = IntMat::from_columns(ker, 5);
    for (const IntVec& v : {IntVec{1, -1, 0, 0, l}, IntVec{0, 0, 1, 0, -1}, IntVec{0, 0, 0, 1, -1}}) {
      EXPECT_TRUE(is_zero(b * v));
      EXPECT_TRUE(solve_integer(k, v).has_value());
    }
  }
}

TEST(IntegerKernel, RandomMatricesAgainstRank) {
  for (int t = 0; t < 50; ++t) {
    IntMat m(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = uniform(-5, 5);
    const auto ker = integer_kernel(m);
    EXPECT_EQ(ker.size() + rank(m), 4u);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m * v));
    if (!ker.empty()) {
      // Saturated: the kernel basis has unit invariant factors.
      for (const auto& f : smith_normal_form(IntMat::from_columns(ker, 4)).invariant_factors()) EXPECT_EQ(f, 1);
    }
  }
}

TEST(SolveExact, IdentityReturnsRightHandSide) {
  const auto s = solve_exact(IntMat::identity(3), IntVec{4, -2, 7});
  ASSERT_EQ(s.status, ExactSolution::Status::Unique);
  EXPECT_EQ(s.x, (RatVec{4, -2, 7}));
}

TEST(SolveExact, SmoothConeGivesIntegersByCramer) {
  const IntMat a{{1, 0, 0}, {-1, 2, 1}, {0, 1, 1}};
  ASSERT_EQ(abs(determinant(a)), 1);
  for (int t = 0; t < 20; ++t) {
    const IntVec b{uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
    const auto s = solve_exact(a, b);
    ASSERT_EQ(s.status, ExactSolution::Status::Unique);
    const Int det = determinant(a);
    for (std::size_t c = 0; c < 3; ++c) {
      IntMat ac = a;
      for (std::size_t r = 0; r < 3; ++r) ac(r, c) = b[r];
      Rational q(determinant(ac), det);
      q.canonicalize();
      EXPECT_EQ(s.x[c], q);
      EXPECT_EQ(s.x[c].get_den(), 1);
    }
  }
}

TEST(SolveExact, InconsistentAndUnderdetermined) {
  const IntMat a{{1, 1}, {2, 2}};
  EXPECT_EQ(solve_exact(a, IntVec{1, 3}).status, ExactSolution::Status::Inconsistent);
  EXPECT_EQ(solve_exact(a, IntVec{1, 2}).status, ExactSolution::Status::Underdetermined);
  EXPECT_FALSE(solve_integer(IntMat{{2}}, IntVec{1}).has_value());
}

TEST(Vectors, CrossAndFormat) {
  EXPECT_EQ(cross(IntVec{1, 0, 0}, IntVec{0, 1, 0}), (IntVec{0, 0, 1}));
  EXPECT_THROW(cross(IntVec{1, 0}, IntVec{0, 1}), ParameterError);
  EXPECT_EQ(format(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(format(Rational(2)), "2");
  EXPECT_EQ(gcd_of(IntVec{4, -6, 8}), 2);
}
