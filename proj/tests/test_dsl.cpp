#include <gtest/gtest.h>

#include <random>

#include "aspic/dsl.hpp"
#include "aspic/fixtures.hpp"
#include "aspic/search.hpp"
#include "helpers.hpp"

using namespace aspic;
using namespace aspic::test;

namespace {

std::vector<dsl::ParseError> errors_of(const char* text) {
  auto r = dsl::parse(text);
  auto* e = std::get_if<std::vector<dsl::ParseError>>(&r);
  return e ? *e : std::vector<dsl::ParseError>{};
}

}  // namespace

TEST(Parse, SingleAxiom) {
  const auto at = T("axiom ~a.");
  EXPECT_EQ(at.kb().axioms, Set({"~a"}));
  EXPECT_TRUE(at.kb().premises.empty());
  EXPECT_TRUE(at.rules().empty());
}

TEST(Parse, FixtureT) {
  const auto at = load_fixture("fx_t_j");
  EXPECT_EQ(at.defeasible_rule_count(), 3U);
  EXPECT_EQ(at.strict_rule_count(), 1U);
  EXPECT_TRUE(at.kb().empty());
}

TEST(Parse, RuleLabels) {
  const auto at = T("strict s1: a -> b. strict [s2]: b -> c. defeasible [n1]: c => d. defeasible n2: d => e.");
  ASSERT_EQ(at.rules().size(), 4U);
  EXPECT_EQ(at.rules()[0].id, "s1");
  EXPECT_EQ(at.rules()[1].id, "s2");
  EXPECT_EQ(*at.rules()[2].name, L("n1"));
  EXPECT_EQ(*at.rules()[3].name, L("n2"));
}

TEST(Parse, CommentsAndPreferences) {
  const auto at = T("# header\naxiom a. # trailing\n\ndefeasible [r1]: a => b.\ndefeasible [r2]: a => ~b.\nprefer r1 < r2.\n");
  EXPECT_EQ(at.rules().size(), 2U);
}

TEST(ParseErrors, ArrowMismatchIsSyntaxErrorAtArrow) {
  const auto errs = errors_of("strict s1: a => b.");
  ASSERT_EQ(errs.size(), 1U);
  EXPECT_EQ(errs[0].kind, dsl::ParseError::Kind::syntax);
  EXPECT_EQ(errs[0].span.line, 1);
  EXPECT_EQ(errs[0].span.column, 14);
  EXPECT_EQ(errs[0].span.length, 2);
  EXPECT_FALSE(errs[0].message.empty());
}

TEST(ParseErrors, AllReportedInOnePass) {
  const auto errs = errors_of("axiom a\npremise $.\nstrict a -> .\naxiom ok.\n");
  ASSERT_GE(errs.size(), 3U);
  for (std::size_t i = 1; i < errs.size(); ++i) EXPECT_LE(errs[i - 1].span.line, errs[i].span.line);
  bool lex = false;
  for (const auto& e : errs) lex = lex || e.kind == dsl::ParseError::Kind::lex;
  EXPECT_TRUE(lex);
}

TEST(ParseErrors, Semantic) {
  auto errs = errors_of("axiom a.\npremise a.\n");
  ASSERT_EQ(errs.size(), 1U);
  EXPECT_EQ(errs[0].kind, dsl::ParseError::Kind::semantic);
  EXPECT_EQ(errs[0].span.line, 2);

  errs = errors_of("defeasible [n]: a => b.\ndefeasible [n]: b => c.\n");
  ASSERT_EQ(errs.size(), 1U);
  EXPECT_EQ(errs[0].kind, dsl::ParseError::Kind::semantic);
}

TEST(ParseErrors, EmptyBodyRejected) {
  EXPECT_FALSE(errors_of("strict -> a.").empty());
}

TEST(ParseErrors, ColumnsCountCodePoints) {
  const auto errs = errors_of("# \xCE\xB1\xCE\xB2\naxiom \xCE\xB1.");
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs[0].kind, dsl::ParseError::Kind::lex);
  EXPECT_EQ(errs[0].span.line, 2);
  EXPECT_EQ(errs[0].span.column, 7);
  EXPECT_EQ(dsl::format(errs[0]).substr(0, 4), "2:7:");
}

TEST(Serialize, Examples) {
  EXPECT_EQ(dsl::serialize(T("axiom ~a.")), "axiom ~a.\n");
  EXPECT_EQ(dsl::serialize(ArgumentationTheory{}), "");
  EXPECT_EQ(dsl::serialize(T("defeasible [n1]: b, a => c. premise z. strict q -> p. axiom y.")),
            "axiom y.\npremise z.\nstrict q -> p.\ndefeasible [n1]: a, b => c.\n");
}

TEST(Serialize, CorpusRoundTrips) {
  for (const auto& f : fixtures()) {
    const auto at = load_fixture(f.name);
    const auto text = dsl::serialize(at);
    const auto again = dsl::parse_or_throw(text);
    EXPECT_EQ(again, at) << f.name;
    EXPECT_EQ(dsl::serialize(again), text) << f.name;
  }
}

TEST(Serialize, OrderInsensitive) {
  const auto a = T("strict a, b -> c. defeasible [n1]: c => d. axiom a. axiom b.");
  const auto b = T("axiom b. defeasible [n1]: c => d. strict [x]: b, a -> c. axiom a.");
  EXPECT_EQ(a, b);
  EXPECT_EQ(dsl::serialize(a), dsl::serialize(b));
}

TEST(Serialize, GeneratedTheoriesRoundTrip) {
  SearchBounds b;
  b.limit = 300;
  b.seed = 9;
  for (const auto& at : generate_theories(b)) {
    const auto text = dsl::serialize(at);
    EXPECT_EQ(dsl::parse_or_throw(text), at) << text;
  }
}
