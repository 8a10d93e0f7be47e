#include <gtest/gtest.h>

#include "aspic/consequence.hpp"
#include "helpers.hpp"

using namespace aspic;
using namespace aspic::test;

namespace {

bool fa(const char* fx, std::initializer_list<const char*> adds, const char* q) {
  return follows_construction(load_fixture(fx), Ls(adds), L(q));
}
bool fj(const char* fx, std::initializer_list<const char*> adds, const char* q) {
  return follows_justified(load_fixture(fx), Ls(adds), L(q));
}

Bindings bind(const char* a, const char* b = nullptr, const char* g = nullptr) {
  Bindings out;
  out.set(MetaVar::alpha, L(a));
  if (b) out.set(MetaVar::beta, L(b));
  if (g) out.set(MetaVar::gamma, L(g));
  return out;
}

}  // namespace

TEST(Construction, FixtureCp) {
  EXPECT_TRUE(fa("fx_cp_a", {"alpha"}, "beta"));
  EXPECT_FALSE(fa("fx_cp_a", {"~beta"}, "~alpha"));
  EXPECT_TRUE(follows_construction(ArgumentationTheory{}, Ls({"a"}), L("a")));
}

TEST(Justified, Fixtures) {
  EXPECT_FALSE(fj("fx_ref_j", {"a"}, "a"));
  EXPECT_TRUE(fj("fx_lle_j", {"a"}, "r"));
  EXPECT_FALSE(fj("fx_lle_j", {"b"}, "r"));
  EXPECT_TRUE(fj("fx_rw_j", {"g"}, "a"));
  EXPECT_FALSE(fj("fx_rw_j", {"g"}, "b"));
  EXPECT_TRUE(fj("fx_m_j", {"b"}, "gamma"));
  EXPECT_FALSE(fj("fx_m_j", {"a"}, "gamma"));
  EXPECT_TRUE(fj("fx_t_j", {"a"}, "b"));
  EXPECT_TRUE(fj("fx_t_j", {"b"}, "r"));
  EXPECT_FALSE(fj("fx_t_j", {"a"}, "r"));
}

TEST(Options, PlacementDecidesUnderminability) {
  const auto at = load_fixture("fx_ref_j");
  ConsequenceOptions kn;
  kn.placement = Placement::axioms;
  EXPECT_TRUE(follows_justified(at, Ls({"a"}), L("a"), {}, kn));
  EXPECT_FALSE(follows_justified(at, Ls({"a"}), L("a")));
}

TEST(Options, AddsAlreadyInKnowledgeBaseStayPut) {
  // ~a is an axiom; adding it as a premise must neither throw nor demote it
  const auto at = load_fixture("fx_ref_j");
  ConsequenceOracle oracle(at);
  EXPECT_EQ(oracle.augmented(Ls({"~a"})), at);
  EXPECT_TRUE(oracle.follows(Relation::justified(), Ls({"~a"}), L("~a")));
}

TEST(Options, Guard) {
  // p holds on the bare theory; adding ~p as a premise knocks it out
  const auto at = T("premise p.");
  ConsequenceOptions guarded;
  guarded.guard = true;
  EXPECT_FALSE(follows_justified(at, Ls({"~p"}), L("p")));
  EXPECT_TRUE(follows_justified(at, Ls({"~p"}), L("p"), {}, guarded));
  EXPECT_FALSE(follows_justified(at, Ls({"~p"}), L("q"), {}, guarded));
}

TEST(Options, OrderingProviderIsApplied) {
  // two premises that undermine each other; preferring [p] leaves it justified
  const auto at = T("premise p. premise ~p.");
  EXPECT_FALSE(follows_justified(at, {}, L("p")));
  ConsequenceOptions o;
  o.ordering = [](const ArgumentSet& args) {
    PreferenceOrdering ord;
    ord.add(args.with_conclusion(L("~p")).front(), args.with_conclusion(L("p")).front());
    return ord;
  };
  EXPECT_TRUE(follows_justified(at, {}, L("p"), {}, o));
  EXPECT_FALSE(follows_justified(at, {}, L("~p"), {}, o));
}

TEST(Oracle, Caches) {
  ConsequenceOracle oracle(load_fixture("fx_t_j"));
  oracle.follows(Relation::justified(), Ls({"a", "b"}), L("r"));
  oracle.follows(Relation::construction(), Ls({"b", "a"}), L("r"));
  EXPECT_EQ(oracle.evaluations(), 1U);
}

TEST(Axioms, PaperCounterexamples) {
  const auto j = Relation::justified();
  auto v = evaluate_axiom(load_fixture("fx_t_j"), AxiomId::T, Interpretation::strict, bind("a", "b", "r"), j);
  EXPECT_EQ(v.status, VerdictStatus::fails);
  EXPECT_EQ(v.premise_results, (std::vector<bool>{true, true}));
  EXPECT_EQ(v.conclusion_result, false);
  EXPECT_NE(v.witness.find("not justified"), std::string::npos);

  v = evaluate_axiom(load_fixture("fx_m_j"), AxiomId::M, Interpretation::strict, bind("a", "b", "gamma"), j);
  EXPECT_EQ(v.status, VerdictStatus::fails);

  v = evaluate_axiom(load_fixture("fx_cp_a"), AxiomId::CP, Interpretation::strict, bind("alpha", "beta"),
                     Relation::construction());
  EXPECT_EQ(v.status, VerdictStatus::fails);
  EXPECT_NE(v.witness.find("no argument concludes ~alpha"), std::string::npos);

  v = evaluate_axiom(load_fixture("fx_ref_j"), AxiomId::Ref, Interpretation::strict, bind("a"), j);
  EXPECT_EQ(v.status, VerdictStatus::fails);
  EXPECT_TRUE(v.premise_results.empty());

  v = evaluate_axiom(load_fixture("fx_lle_j"), AxiomId::LLE, Interpretation::defeasible, bind("a", "b", "r"), j);
  EXPECT_EQ(v.status, VerdictStatus::fails);
  EXPECT_NE(v.witness.find("undercut"), std::string::npos);

  v = evaluate_axiom(load_fixture("fx_rw_j"), AxiomId::RW, Interpretation::defeasible, bind("a", "b", "g"), j);
  EXPECT_EQ(v.status, VerdictStatus::fails);
}

TEST(Axioms, InterpretationGatesRuleConditions) {
  const auto j = Relation::justified();
  // fx_lle_j's a <=> b pair is defeasible: vacuous under the strict reading
  auto v = evaluate_axiom(load_fixture("fx_lle_j"), AxiomId::LLE, Interpretation::strict, bind("a", "b", "r"), j);
  EXPECT_EQ(v.status, VerdictStatus::vacuous);
  EXPECT_EQ(v.premise_results.front(), false);
  EXPECT_FALSE(v.conclusion_result.has_value());
  // mixed kinds are not an equivalence under either reading
  const auto mixed = T("strict a -> b. defeasible b => a.");
  v = evaluate_axiom(mixed, AxiomId::LLE, Interpretation::defeasible, bind("a", "b", "a"), j);
  EXPECT_EQ(v.premise_results.front(), false);
  // a strict rule satisfies the defeasible reading of the arrow
  v = evaluate_axiom(T("strict a -> b."), AxiomId::RW, Interpretation::defeasible, bind("a", "b", "a"), j);
  EXPECT_EQ(v.premise_results.front(), true);
}

TEST(Axioms, RefAlwaysHoldsForConstruction) {
  for (const auto& f : fixtures()) {
    const auto at = load_fixture(f.name);
    for (const char* x : {"a", "~a", "beta", "fresh"}) {
      EXPECT_EQ(evaluate_axiom(at, AxiomId::Ref, Interpretation::strict, bind(x), Relation::construction()).status,
                VerdictStatus::holds);
    }
  }
}

TEST(Axioms, MissingBindingThrows) {
  EXPECT_THROW(evaluate_axiom(load_fixture("fx_t_j"), AxiomId::T, Interpretation::strict, bind("a", "b"),
                              Relation::justified()),
               std::invalid_argument);
}

TEST(Axioms, SchemaShapes) {
  EXPECT_EQ(to_string(schema(AxiomId::Cut).premises[0]), "alpha, beta |~ gamma");
  EXPECT_EQ(to_string(schema(AxiomId::CP).conclusion), "~beta |~ ~alpha");
  EXPECT_EQ(to_string(schema(AxiomId::LLE).premises[0]), "|= alpha == beta");
  for (auto a : kAllAxioms) EXPECT_EQ(parse_axiom(to_string(a)), a);
  EXPECT_EQ(parse_axiom("cut"), AxiomId::Cut);
  EXPECT_TRUE(has_interpretation(AxiomId::M));
  EXPECT_FALSE(has_interpretation(AxiomId::T));
}

TEST(Relations, ParseAndPrint) {
  EXPECT_EQ(parse_relation("a"), Relation::construction());
  EXPECT_EQ(parse_relation("j"), Relation::justified());
  EXPECT_EQ(to_string(parse_relation("j:preferred-credulous")), "j:preferred-credulous");
  EXPECT_THROW(parse_relation("x"), std::invalid_argument);
}

TEST(StrictClosure, Examples) {
  EXPECT_TRUE(strict_closure({}, load_fixture("fx_cp_a").rules()).empty());
  EXPECT_EQ(strict_closure(Set({"a"}), T("strict a -> b.").rules()), Set({"a", "b"}));
  const auto cl = strict_closure(Set({"alpha", "c"}), load_fixture("fx_cp_a").rules());
  EXPECT_EQ(cl, Set({"alpha", "c", "d", "e", "beta"}));
  // defeasible rules are ignored
  EXPECT_EQ(strict_closure(Set({"a"}), T("defeasible a => b.").rules()), Set({"a"}));
}

TEST(Postulates, NonClosedTheoryBreaksDirectConsistency) {
  const auto at = T("premise a. premise b. strict a -> c. strict b -> ~c.");
  const auto before = check_postulates(at);
  ASSERT_EQ(before.extensions.size(), 1U);
  EXPECT_FALSE(before.extensions[0].direct);
  EXPECT_EQ(before.extensions[0].conclusions, Set({"a", "b", "c", "~c"}));
  EXPECT_FALSE(before.all_hold());

  const auto after = check_postulates(transposition_closure(at));
  EXPECT_TRUE(after.all_hold());
  EXPECT_TRUE(after.strict_part_consistent);
  ASSERT_EQ(after.extensions.size(), 1U);
  EXPECT_TRUE(after.extensions[0].extension.empty());
  for (auto s : {Semantics::complete, Semantics::preferred}) EXPECT_TRUE(check_postulates(transposition_closure(at), s).all_hold());
}

TEST(Postulates, FixtureMWithB) {
  const auto r = check_postulates(augment(load_fixture("fx_m_j"), Ls({"b"})));
  ASSERT_EQ(r.extensions.size(), 1U);
  EXPECT_EQ(r.extensions[0].conclusions, Set({"~a", "b", "gamma"}));
  EXPECT_TRUE(r.all_hold());
}

TEST(Postulates, StrictPartConsistencyIsReported) {
  EXPECT_FALSE(check_postulates(T("axiom a. strict a -> ~a.")).strict_part_consistent);
  EXPECT_TRUE(is_consistent(Set({"a", "~b"})));
  EXPECT_FALSE(is_consistent(Set({"a", "~a"})));
}
