#include <gtest/gtest.h>

#include "corpus.hpp"
#include "hkas/checkers.hpp"
#include "hkas/error.hpp"
#include "hkas/generators.hpp"
#include "hkas/io.hpp"
#include "hkas/theorem_harness.hpp"
#include "oracles.hpp"

namespace hkas {
namespace {

AccessGraph diamond() { return AccessGraph(oracle::diamond()); }

const IdentityCheck& find_check(const IdentityReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return c;
  throw std::runtime_error("no check named " + prefix);
}

TEST(IndependenceSum, TrivialDiamond) {
  Scheme s = gen_trivial(diamond(), 2);
  IdentityReport r = verify_independence_sum(s, {"c", "b", "a", "r"});
  EXPECT_TRUE(r.holds());
  ASSERT_FALSE(r.checks.empty());
  EXPECT_NEAR(r.checks[0].lhs, 4.0, 1e-12);
  EXPECT_NEAR(r.checks[0].rhs, 4.0, 1e-12);
}

TEST(IndependenceSum, ChainOfThree) {
  Scheme s = gen_trivial(AccessGraph(oracle::chain({"c1", "c2", "c3"})), 2);
  IdentityReport r = verify_independence_sum(s, {"c3", "c2", "c1"});
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(r.checks[0].lhs, 3.0, 1e-12);
}

TEST(IndependenceSum, Preconditions) {
  Scheme trivial = gen_trivial(diamond(), 2);
  EXPECT_THROW(verify_independence_sum(trivial, {"r", "a", "b", "c"}), Error);
  Scheme leaky = gen_leaky(diamond(), 2, "a", "b");
  try {
    verify_independence_sum(leaky, {"c", "b", "a", "r"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionFailed);
  }
}

TEST(ConditionalIdentities, DiamondTargetA) {
  Scheme s = gen_trivial(diamond(), 2);
  const ClassSequence seq{"c", "b", "a", "r"};
  IdentityReport r = verify_conditional_identities(s, seq, 3, 1);
  EXPECT_TRUE(r.holds());
  const auto& unaffected = find_check(r, "target-key-unaffected");
  EXPECT_NEAR(unaffected.lhs, 1.0, 1e-12);  // H(K_a | K_r, S_c, S_b)
  EXPECT_NEAR(unaffected.rhs, 1.0, 1e-12);
  EXPECT_EQ(unaffected.exact, std::optional<bool>(true));
  EXPECT_NEAR(find_check(r, "suffix-keys-given-target").lhs, 1.0, 1e-12);
}

TEST(ConditionalIdentities, EmptySuffix) {
  Scheme s = gen_trivial(diamond(), 2);
  IdentityReport r = verify_conditional_identities(s, {"c", "b", "a", "r"}, 4, 0);
  EXPECT_TRUE(r.holds());
  for (const auto& c : r.checks) EXPECT_NE(c.name.rfind("suffix-keys", 0), 0u) << c.name;
}

TEST(ConditionalIdentities, FirstElementTarget) {
  Scheme s = gen_trivial(diamond(), 2);
  IdentityReport r = verify_conditional_identities(s, {"c", "b", "a", "r"}, 1, 3);
  EXPECT_TRUE(r.holds());
  EXPECT_NEAR(find_check(r, "suffix-keys-given-prefix").lhs, 3.0, 1e-12);
}

TEST(ConditionalIdentities, BadArguments) {
  Scheme s = gen_trivial(diamond(), 2);
  EXPECT_THROW(verify_conditional_identities(s, {"c", "b", "a", "r"}, 0, 1), Error);
  EXPECT_THROW(verify_conditional_identities(s, {"c", "b", "a", "r"}, 3, 2), Error);
}

TEST(MainTheoremSequence, EveryClassOfTrivialDiamond) {
  Scheme s = gen_trivial(diamond(), 3);
  for (const auto& u : s.graph().classes()) {
    IdentityReport r = verify_main_theorem_sequence(s, u);
    EXPECT_TRUE(r.holds()) << u.label;
    EXPECT_LT(r.max_abs_err(), kEntropyTolerance);
  }
}

TEST(Summary, Counts) {
  std::vector<Scheme> one{gen_trivial(diamond(), 2)};
  HarnessSummary a = validate_corpus(one);
  EXPECT_EQ(a.schemes, 1u);
  EXPECT_EQ(a.ki_pass, 1u);
  EXPECT_EQ(a.ki_fail, 0u);
  EXPECT_TRUE(a.clean());
  EXPECT_GT(a.identity_checks, 0u);

  std::vector<Scheme> leaky{gen_leaky(diamond(), 2, "a", "b")};
  HarnessSummary b = verify_equivalence(leaky);
  EXPECT_EQ(b.ki_pass, 0u);
  EXPECT_EQ(b.ki_fail, 1u);
  EXPECT_EQ(b.discrepancies, 0u);
}

TEST(EquivalenceProperty, RandomSchemesOverShapes) {
  std::size_t total = 0, passing = 0;
  for (const auto& shape : oracle::acceptance_shapes(17)) {
    std::vector<Scheme> corpus;
    for (auto& e : oracle::random_corpus(shape, 2, 40, 1000 + total)) corpus.push_back(std::move(e.scheme));
    for (auto& e : oracle::fixture_corpus(shape, 2)) corpus.push_back(std::move(e.scheme));
    HarnessSummary sum = validate_corpus(corpus);
    EXPECT_TRUE(sum.clean()) << shape.name;
    EXPECT_EQ(sum.discrepancies, 0u);
    EXPECT_LT(sum.max_abs_err, kEntropyTolerance);
    total += sum.schemes;
    passing += sum.ki_pass;
  }
  EXPECT_GE(total, 200u);
  EXPECT_GT(passing, 0u);
}

}  // namespace
}  // namespace hkas
