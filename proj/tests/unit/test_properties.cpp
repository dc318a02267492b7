#include "properties.hpp"

#include <gtest/gtest.h>

using namespace torhyp;
using namespace torhyp::testing;

TEST(Properties, SnfReMultiplies) { EXPECT_EQ(snf_remultiplies(), ""); }

TEST(Properties, KernelMembership) { EXPECT_EQ(kernel_membership(), ""); }

TEST(Properties, VolumeIsMinkowskiAdditive) { EXPECT_EQ(volume_minkowski(), ""); }

TEST(Properties, TripleIsSymmetricAndMultilinear) { EXPECT_EQ(triple_symmetric_multilinear(), ""); }

TEST(Properties, LatticeCountInvariantUnderPrincipalTranslation) { EXPECT_EQ(lattice_translation(), ""); }

TEST(Properties, NefMatchesOracle) {
  for (int t = 0; t < kPropertyInstances; ++t) {
    const FamilySpec s = random_spec(3);
    const TDivisor d = random_divisor(shared_fan(s), -2, 4);
    ASSERT_EQ(is_nef(d), oracle_nef(d)) << s.describe() << " " << d.to_string();
  }
}
