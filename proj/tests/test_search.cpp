#include <gtest/gtest.h>

#include <set>

#include "aspic/dsl.hpp"
#include "aspic/search.hpp"
#include "helpers.hpp"

using namespace aspic;
using namespace aspic::test;

namespace {

SearchBounds tiny(int atoms, int rules) {
  SearchBounds b;
  b.max_atoms = atoms;
  b.max_rules = rules;
  b.max_body_len = 1;
  return b;
}

// Every failing instance, by brute force over all bindings.
bool has_failure(const ArgumentationTheory& at, const SearchQuery& q, const SearchBounds& b) {
  ConsequenceOptions o;
  o.placement = placement_for(b);
  ConsequenceOracle oracle(at, o);
  const auto u = binding_universe(at);
  const auto& vars = schema(q.axiom).variables;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Bindings bs;
    for (std::size_t i = 0; i < vars.size(); ++i) bs.set(vars[i], u[idx[i]]);
    if (evaluate_axiom(oracle, q.axiom, q.interp, bs, q.relation).status == VerdictStatus::fails) return true;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == u.size()) idx[i++] = 0;
    if (i == idx.size()) return false;
  }
}

}  // namespace

TEST(Generator, SingleAtomNoRules) {
  // two literals, each absent, an axiom or a premise
  auto all = generate_theories(tiny(1, 0));
  EXPECT_EQ(all.size(), 9U);
  std::set<std::string> distinct;
  for (const auto& at : all) {
    EXPECT_TRUE(at.rules().empty());
    distinct.insert(dsl::serialize(at));
  }
  EXPECT_EQ(distinct.size(), 9U);

  auto b = tiny(1, 0);
  b.strict_only = true;
  EXPECT_EQ(generate_theories(b).size(), 4U);
}

TEST(Generator, SingleAtomOneRule) {
  // rules over {a, ~a}: bodies {a}, {~a}; heads the other literal or ~n1; two kinds
  TheoryStream s(tiny(1, 1));
  EXPECT_TRUE(s.exhaustive());
  EXPECT_EQ(s.canonical_size(), 9U + 8U * 9U);
  EXPECT_EQ(generate_theories(tiny(1, 1)).size(), 81U);
}

TEST(Generator, StrictOnlyTheoriesAreStrict) {
  SearchBounds b;
  b.strict_only = true;
  b.limit = 2000;
  TheoryStream s(b);
  EXPECT_FALSE(s.exhaustive());
  std::size_t n = 0;
  while (auto at = s.next()) {
    ++n;
    EXPECT_TRUE(is_strict(*at));
    EXPECT_LE(static_cast<int>(at->rules().size()), b.max_rules);
    EXPECT_LE(static_cast<int>(at->atoms().size()), b.max_atoms);
  }
  EXPECT_EQ(n, b.limit);
}

TEST(Generator, SeedDeterminesStream) {
  SearchBounds b;
  b.limit = 3000;
  const auto x = generate_theories(b);
  const auto y = generate_theories(b);
  ASSERT_EQ(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(dsl::serialize(x[i]), dsl::serialize(y[i]));
  b.seed = 7;
  const auto z = generate_theories(b);
  std::size_t differ = 0;
  for (std::size_t i = 0; i < x.size(); ++i) differ += dsl::serialize(x[i]) != dsl::serialize(z[i]);
  EXPECT_GT(differ, 0U);
}

TEST(Generator, RespectsBodyLength) {
  SearchBounds b;
  b.max_body_len = 3;
  b.limit = 1000;
  for (const auto& at : generate_theories(b)) {
    for (const auto& r : at.rules()) {
      EXPECT_LE(r.body.size(), 3U);
      EXPECT_FALSE(r.body.empty());
    }
  }
}

TEST(Generator, InvalidBounds) {
  SearchBounds b;
  b.max_atoms = 0;
  EXPECT_THROW(TheoryStream{b}, std::invalid_argument);
  b.max_atoms = 21;
  EXPECT_THROW(TheoryStream{b}, std::invalid_argument);
  b = {};
  b.limit = 0;
  EXPECT_THROW(TheoryStream{b}, std::invalid_argument);
}

TEST(BindingUniverse, BothSignsPlusFresh) {
  const auto u = binding_universe(T("premise a. defeasible [n1]: ~b => c."));
  const std::set<Literal> got(u.begin(), u.end());
  EXPECT_EQ(got.size(), 8U);
  EXPECT_TRUE(got.contains(L("~c")));
  EXPECT_TRUE(got.contains(L("z")));
  EXPECT_FALSE(got.contains(L("n1")));
  // the fresh atom never collides with one already used
  const auto v = binding_universe(T("premise z."));
  EXPECT_EQ(v.size(), 4U);
  EXPECT_EQ(v.back().atom.name(), "z1");
}

TEST(Search, RefConstructionNeverFails) {
  SearchBounds b;
  b.limit = 2000;
  const auto r = search_counterexample({AxiomId::Ref, Interpretation::strict, Relation::construction()}, b);
  EXPECT_FALSE(r.witness);
  EXPECT_EQ(r.examined, b.limit);
}

TEST(Search, TransitivityWitnessReevaluates) {
  SearchQuery q{AxiomId::T, Interpretation::strict, Relation::justified()};
  SearchBounds b;
  b.close_transposition = true;
  const auto r = search_counterexample(q, b);
  ASSERT_TRUE(r.witness);
  const auto& w = *r.witness;
  EXPECT_EQ(w.verdict.status, VerdictStatus::fails);
  EXPECT_EQ(evaluate_axiom(w.theory, q.axiom, q.interp, w.bindings, q.relation).status, VerdictStatus::fails);
  EXPECT_TRUE(is_transposition_closed(w.theory.rules()));
}

TEST(Search, CautiousMonotonyHolds) {
  SearchBounds b;
  b.close_transposition = true;
  const auto r = search_counterexample({AxiomId::CM, Interpretation::strict, Relation::justified()}, b);
  EXPECT_FALSE(r.witness);
}

TEST(Search, StrictTheoriesKeepRefMonotonyTransitivity) {
  SearchBounds b;
  b.strict_only = true;
  b.close_transposition = true;
  b.limit = 3000;
  std::vector<SearchQuery> qs;
  for (auto ax : {AxiomId::Ref, AxiomId::M, AxiomId::T}) qs.push_back({ax, Interpretation::strict, Relation::justified()});
  for (const auto& r : search_counterexamples(qs, b, false)) EXPECT_FALSE(r.witness) << to_string(r.query);
  // contraposition fails even here
  EXPECT_TRUE(search_counterexample({AxiomId::CP, Interpretation::strict, Relation::construction()}, b).witness);
}

TEST(Search, MultiQueryMatchesSingle) {
  SearchBounds b;
  b.limit = 1500;
  b.close_transposition = true;
  const std::vector<SearchQuery> qs = {{AxiomId::T, Interpretation::strict, Relation::justified()},
                                       {AxiomId::Ref, Interpretation::strict, Relation::justified()},
                                       {AxiomId::Cut, Interpretation::strict, Relation::construction()}};
  const auto many = search_counterexamples(qs, b, false);
  ASSERT_EQ(many.size(), qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const auto one = search_counterexample(qs[i], b, false);
    EXPECT_EQ(one.witness.has_value(), many[i].witness.has_value()) << to_string(qs[i]);
    EXPECT_EQ(one.examined, many[i].examined) << to_string(qs[i]);
    if (one.witness) EXPECT_EQ(one.witness->bindings, many[i].witness->bindings);
  }
}

TEST(Search, ExhaustiveAgreesWithBruteForce) {
  for (bool strict_only : {false, true}) {
    auto b = tiny(1, 2);
    b.strict_only = strict_only;
    b.close_transposition = true;
    ASSERT_TRUE(TheoryStream(b).exhaustive());
    const auto theories = generate_theories(b);
    for (auto ax : kAllAxioms) {
      for (auto in : {Interpretation::strict, Interpretation::defeasible}) {
        if (in == Interpretation::defeasible && !has_interpretation(ax)) continue;
        for (auto rel : {Relation::construction(), Relation::justified()}) {
          const SearchQuery q{ax, in, rel};
          bool brute = false;
          for (const auto& at : theories) {
            if (has_failure(prepare(at, b), q, b)) {
              brute = true;
              break;
            }
          }
          EXPECT_EQ(search_counterexample(q, b, false).witness.has_value(), brute)
              << to_string(q) << (strict_only ? " strict-only" : "");
        }
      }
    }
  }
}

TEST(Search, QueryNames) {
  EXPECT_EQ(to_string(SearchQuery{AxiomId::T, Interpretation::strict, Relation::justified()}), "T/j");
  EXPECT_EQ(to_string(SearchQuery{AxiomId::LLE, Interpretation::strict, Relation::justified()}), "LLE/strict/j");
}
