#include <gtest/gtest.h>

#include "overpart/audit.hpp"

using namespace overpart;

TEST(VerifyBijection, T1AtSix) {
  const auto r = verify_bijection(Theorem::t1, 6);
  EXPECT_EQ(r.domain_size, 16u);
  EXPECT_EQ(r.codomain_size, 16u);
  EXPECT_TRUE(r.injective);
  EXPECT_TRUE(r.surjective);
  EXPECT_TRUE(r.inverse_ok);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.branch_counts.at("f1"), 3u);
  EXPECT_EQ(r.branch_counts.at("f2"), 6u);
  EXPECT_EQ(r.branch_counts.at("f3"), 3u);
  EXPECT_EQ(r.branch_counts.at("f4"), 4u);
}

TEST(VerifyBijection, T2AtSeven) {
  const auto r = verify_bijection(Theorem::t2, 7);
  EXPECT_EQ(r.domain_size, 20u);
  EXPECT_EQ(r.codomain_size, 20u);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyBijection, T4eAtNine) {
  const auto r = verify_bijection(Theorem::t4e, 9);
  EXPECT_EQ(r.domain_size, 14u);
  EXPECT_EQ(r.codomain_size, 14u);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyBijection, RejectsInvalidRange) {
  EXPECT_THROW(verify_bijection(Theorem::t1, 1), std::invalid_argument);
  EXPECT_THROW(verify_bijection(Theorem::t2, 2), std::invalid_argument);
  EXPECT_THROW(verify_bijection(Theorem::t3, 5), std::invalid_argument);
}

// Both copies of Pe(n-1) in the T2 codomain are exhausted separately: branch
// A alone, and branches C and E together.
TEST(VerifyBijection, T2CopiesExhaustedSeparately) {
  for (int n = 3; n <= 20; ++n) {
    const auto r = verify_bijection(Theorem::t2, n);
    ASSERT_TRUE(r.passed()) << n;
    const std::size_t pe = family_members({FamilyId::pe}, n - 1).size();
    const auto get = [&](const char* b) { return r.branch_counts.contains(b) ? r.branch_counts.at(b) : 0u; };
    EXPECT_EQ(get("A"), pe) << n;
    EXPECT_EQ(get("C") + get("E"), pe) << n;
  }
}

TEST(VerifyT3, BlockSizesAtNine) {
  const auto r = verify_t3(9);
  ASSERT_TRUE(r.t3);
  EXPECT_EQ(r.t3->paired_domain, 14u);
  EXPECT_EQ(r.t3->odd_images, 14u);
  EXPECT_EQ(r.t3->even_sources, 6u);
  EXPECT_EQ(r.t3->even_images, 6u);
  EXPECT_EQ(r.t3->signed_lhs, -6);
  EXPECT_EQ(r.t3->signed_rhs, -6);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyT3, SmallestCase) {
  const auto r = verify_t3(3);
  EXPECT_TRUE(r.passed());
  // Spt1_o(3) = {3, 2,1, 2o,1}, Spt1_o(1) = {1}, Poex(2) is empty.
  EXPECT_EQ(r.t3->paired_domain, 2u);
  EXPECT_EQ(r.t3->odd_images, 2u);
  EXPECT_EQ(r.t3->even_sources, 0u);
  EXPECT_EQ(r.t3->even_images, 0u);
}

TEST(VerifyT3, UpToTwenty) {
  for (int n = 4; n <= 20; ++n) EXPECT_TRUE(verify_t3(n).passed()) << n;
}

TEST(Contracts, DetectTamperedTrace) {
  MapTrace tr = map_t2(parse("5,2"), SourceTag::n, 7);
  EXPECT_TRUE(contract_failures(tr, 7).empty());
  tr.output = parse("5,2o");
  const auto failures = contract_failures(tr, 7);
  EXPECT_GE(failures.size(), 1u);
  tr = map_t3_odd(parse("8,1"), 9);
  tr.sign_flip = false;
  EXPECT_FALSE(contract_failures(tr, 9).empty());
  tr = map_t1(parse("5"), SourceTag::n_minus_1, 6);
  tr.branch = "f4";
  EXPECT_FALSE(contract_failures(tr, 6).empty());
}

TEST(Identities, SmallValues) {
  CountCache cache;
  auto c = check_identity(Identity::t1, 6, cache);
  EXPECT_EQ(c.lhs, 16);
  EXPECT_TRUE(c.passed());
  c = check_identity(Identity::t2, 7, cache);
  EXPECT_EQ(c.lhs, 20);
  c = check_identity(Identity::t3, 9, cache);
  EXPECT_EQ(c.lhs, -6);
  EXPECT_EQ(c.rhs, -6);
  c = check_identity(Identity::t4e, 9, cache);
  EXPECT_EQ(c.lhs, 14);
  EXPECT_THROW(check_identity(Identity::t2, 2, cache), std::invalid_argument);
}

TEST(Identities, DerivationReproducesUnrefined) {
  CountCache cache;
  for (int n = 3; n <= 20; ++n) {
    const auto sum = check_identity(Identity::derivation_sum, n, cache);
    const auto diff = check_identity(Identity::derivation_difference, n, cache);
    EXPECT_TRUE(sum.passed()) << n;
    EXPECT_TRUE(diff.passed()) << n;
    EXPECT_EQ(sum.lhs, check_identity(Identity::t2, n, cache).lhs);
    EXPECT_EQ(diff.rhs, check_identity(Identity::t3, n, cache).rhs);
  }
}

TEST(Golden, ListingGroupsByBranch) {
  const std::string g = golden_listing(Theorem::t1, 6);
  EXPECT_NE(g.find("[N f1 -> PEX] 3\n  6 -> 6\n  4,2 -> 4,2\n  4o,2 -> 4o,2\n"), std::string::npos) << g;
  EXPECT_NE(g.find("[N-1 f3 -> PEX] 3\n  5 -> 6o\n"), std::string::npos) << g;
  const std::string t3 = golden_listing(Theorem::t3, 9);
  EXPECT_NE(t3.find("[paired images] 14\n"), std::string::npos) << t3;
}
