#include <gtest/gtest.h>

#include <random>

#include "hkas/error.hpp"
#include "hkas/generators.hpp"
#include "hkas/io.hpp"
#include "oracles.hpp"

namespace hkas {
namespace {

const std::string kFixtures = HKAS_FIXTURE_DIR;

ErrorCode load_error(const std::string& file) {
  try {
    load_scheme_file(kFixtures + "/" + file);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << file << " loaded without error";
  return ErrorCode::ParseError;
}

ErrorCode load_error_text(const std::string& text) {
  try {
    load_scheme(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "loaded without error: " << text;
  return ErrorCode::ParseError;
}

TEST(LoadScheme, TrivialDiamondHasEightVariables) {
  Scheme s = load_scheme_file(kFixtures + "/trivial_diamond.json");
  EXPECT_EQ(s.dist().variables().size(), 8u);
  EXPECT_EQ(s.dist().support_size(), 16u);
  EXPECT_EQ(s.graph().size(), 4u);
}

TEST(LoadScheme, ErrorKinds) {
  EXPECT_EQ(load_error("missing_secret.json"), ErrorCode::VariableMismatch);
  EXPECT_EQ(load_error("sum_seven_eighths.json"), ErrorCode::ProbabilityError);
  EXPECT_EQ(load_error("cyclic_scheme.json"), ErrorCode::GraphError);
  EXPECT_EQ(load_error("no_such_file.json"), ErrorCode::ParseError);
}

TEST(LoadScheme, ProbabilityAndShapeErrors) {
  const std::string graph = R"("graph": {"classes": ["v"], "edges": []})";
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0, "S:v": 0}, "p": "0"},
      {"assignment": {"K:v": 1, "S:v": 1}, "p": 1}]})"),
            ErrorCode::ProbabilityError);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0, "S:v": 0}, "p": "1/2"},
      {"assignment": {"K:v": 0, "S:v": 0}, "p": "1/2"}]})"),
            ErrorCode::ProbabilityError);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0, "S:v": 0}, "p": 0.5},
      {"assignment": {"K:v": 1, "S:v": 1}, "p": "1/2"}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0, "S:v": 0}, "p": "1/2"},
      {"assignment": {"K:v": 1}, "p": "1/2"}]})"),
            ErrorCode::VariableMismatch);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0, "S:v": 0, "X:v": 1}, "p": 1}]})"),
            ErrorCode::VariableMismatch);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": [{"assignment": {"K:v": 0.5, "S:v": 0}, "p": 1}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(load_error_text(R"({"support": [{"assignment": {"K:v": 0, "S:v": 0}, "p": 1}]})"),
            ErrorCode::ParseError);
  EXPECT_EQ(load_error_text("{" + graph + R"(, "support": []})"), ErrorCode::ParseError);
}

TEST(LoadScheme, SupportLimit) {
  Json doc = read_json_file(kFixtures + "/trivial_diamond.json");
  try {
    load_scheme(doc, nullptr, nullptr, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SupportTooLarge);
  }
}

TEST(LoadScheme, GraphFileReference) {
  Scheme by_ref = load_scheme_file(kFixtures + "/graph_file_scheme.json");
  Scheme embedded = load_scheme_file(kFixtures + "/trivial_diamond.json");
  EXPECT_EQ(by_ref, embedded);
}

TEST(LoadScheme, EmbeddedGraphWinsWithWarning) {
  std::vector<std::string> warnings;
  Scheme s = load_scheme_file(kFixtures + "/graph_conflict_scheme.json", &warnings);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(s.graph().edges().size(), 5u);
}

TEST(SchemeSerialization, RoundTripPreservesExactLaw) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    AccessGraph g(oracle::random_dag(rng, 1 + rng() % 4, 0.4));
    Scheme s = gen_random_correct(g, 2 + rng() % 2, rng());
    const std::string text = serialize_scheme(s);
    Scheme back = load_scheme(Json::parse(text));
    EXPECT_EQ(back, s);
    EXPECT_EQ(serialize_scheme(back), text);
  }
}

TEST(SchemeConstruction, RejectsMismatchedVariables) {
  AccessGraph g({{"v"}, {}});
  JointDistribution d({VarId::key("v")}, {{{0}, Rational(1)}});
  EXPECT_THROW(Scheme(g, d), Error);
}

class QueryEntropy : public ::testing::Test {
 protected:
  Scheme trivial = load_scheme_file(kFixtures + "/trivial_diamond.json");
  Scheme leaky = load_scheme_file(kFixtures + "/leaky_diamond.json");
};

TEST_F(QueryEntropy, Examples) {
  EXPECT_NEAR(scheme_query_entropy(trivial, {"a", {}, {}}), 1.0, 1e-12);
  EXPECT_NEAR(scheme_query_entropy(trivial, {"a", {"b", "c"}, {"r"}}), 1.0, 1e-12);
  EXPECT_NEAR(scheme_query_entropy(leaky, {"a", {"b"}, {}}), 0.0, 1e-12);
}

TEST_F(QueryEntropy, AgreesWithExhaustiveOracle) {
  auto table = oracle::to_table(trivial.dist());
  EXPECT_NEAR(scheme_query_entropy(trivial, {"a", {"b", "c"}, {"r"}}),
              static_cast<double>(oracle::entropy(table, {"K:a"}, {"S:b", "S:c", "K:r"})), 1e-12);
  auto leaky_table = oracle::to_table(leaky.dist());
  EXPECT_NEAR(scheme_query_entropy(leaky, {"a", {"b"}, {}}),
              static_cast<double>(oracle::entropy(leaky_table, {"K:a"}, {"S:b"})), 1e-12);
}

TEST_F(QueryEntropy, InvalidCoalitions) {
  auto code = [&](CoalitionQuery q) {
    try {
      scheme_query_entropy(trivial, q);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code({"a", {"r"}, {}}), ErrorCode::InvalidCoalition);  // r can access a
  EXPECT_EQ(code({"a", {}, {"b"}}), ErrorCode::InvalidCoalition);  // b is not above a
  EXPECT_EQ(code({"a", {"a"}, {}}), ErrorCode::InvalidCoalition);
  EXPECT_EQ(code({"zz", {}, {}}), ErrorCode::UnknownClass);
  EXPECT_EQ(code({"a", {"zz"}, {}}), ErrorCode::UnknownClass);
}

// Range and monotonicity over every valid coalition of random schemes.
TEST(QueryEntropyProperties, BoundedAndMonotone) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    AccessGraph g(oracle::random_dag(rng, 2 + rng() % 3, 0.4));
    Scheme s = gen_random_correct(g, 2, rng());
    for (const auto& u : g.classes()) {
      const std::vector<ClassId> f_pool = [&] { auto f = forbidden_set(g, u); return std::vector<ClassId>(f.begin(), f.end()); }();
      const std::vector<ClassId> c_pool = [&] { auto c = ancestor_set(g, u); return std::vector<ClassId>(c.begin(), c.end()); }();
      const std::size_t bits = f_pool.size() + c_pool.size();
      const double h_key = scheme_query_entropy(s, {u, {}, {}});
      for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        CoalitionQuery q{u, {}, {}};
        for (std::size_t i = 0; i < bits; ++i) {
          if (!(mask >> i & 1u)) continue;
          if (i < f_pool.size()) q.secrets_held.insert(f_pool[i]);
          else q.keys_held.insert(c_pool[i - f_pool.size()]);
        }
        const double h = scheme_query_entropy(s, q);
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, h_key + 1e-9);
        // Adding any one more member never increases the entropy.
        for (std::size_t i = 0; i < bits; ++i) {
          if (mask >> i & 1u) continue;
          CoalitionQuery larger = q;
          if (i < f_pool.size()) larger.secrets_held.insert(f_pool[i]);
          else larger.keys_held.insert(c_pool[i - f_pool.size()]);
          EXPECT_LE(scheme_query_entropy(s, larger), h + 1e-9);
        }
      }
    }
  }
}

}  // namespace
}  // namespace hkas
