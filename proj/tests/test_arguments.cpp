#include <gtest/gtest.h>

#include "aspic/arguments.hpp"
#include "helpers.hpp"

using namespace aspic;
using namespace aspic::test;

namespace {

ArgumentSet args_of(const ArgumentationTheory& at, std::initializer_list<const char*> adds = {}) {
  return construct_arguments(augment(at, Ls(adds)));
}

std::set<std::string> texts(const ArgumentSet& args) {
  std::set<std::string> out;
  for (ArgumentIndex i = 0; i < args.size(); ++i) out.insert(args.expand(i));
  return out;
}

ArgumentIndex find(const ArgumentSet& args, const std::string& text) {
  for (ArgumentIndex i = 0; i < args.size(); ++i) {
    if (args.expand(i) == text) return i;
  }
  ADD_FAILURE() << "no argument " << text;
  return 0;
}

}  // namespace

TEST(Construct, PremisesOnly) {
  const auto args = construct_arguments(T("premise a."));
  ASSERT_EQ(args.size(), 1U);
  EXPECT_TRUE(args.is_premise(0));
  EXPECT_EQ(args.conclusion(0), L("a"));
  EXPECT_EQ(args.top_rule(0), nullptr);
}

TEST(Construct, FixtureMWithB) {
  const auto args = args_of(load_fixture("fx_m_j"), {"b"});
  EXPECT_EQ(texts(args), (std::set<std::string>{"[~a]", "[b]", "[[b] => gamma]"}));
}

TEST(Construct, FixtureCpWithAlphaReachesBeta) {
  const auto args = args_of(load_fixture("fx_cp_a"), {"alpha"});
  EXPECT_FALSE(args.with_conclusion(L("beta")).empty());
  EXPECT_TRUE(args.conclusions().contains(L("d")));
  EXPECT_TRUE(args.conclusions().contains(L("e")));
}

TEST(Construct, FixtureLleWithB) {
  // The cyclic pair a => b, b => a yields no circular argument.
  const auto args = args_of(load_fixture("fx_lle_j"), {"b"});
  EXPECT_EQ(texts(args),
            (std::set<std::string>{"[b]", "[c]", "[[c] -> ~n1]", "[[b] => a]", "[[[b] => a] => r]"}));
}

TEST(Construct, ViewsFollowTheTree) {
  const auto args = construct_arguments(T("premise a. axiom b. strict a, b -> c. defeasible [r]: c => d."));
  const auto d = find(args, "[[[a], [b] -> c] => d]");
  EXPECT_EQ(args.premises(d), Ls({"a", "b"}));
  EXPECT_EQ(args.top_rule(d)->id, "r");
  EXPECT_EQ(args.sub_arguments(d).size(), 4U);
  EXPECT_TRUE(std::binary_search(args.sub_arguments(d).begin(), args.sub_arguments(d).end(), d));
  const auto c = find(args, "[[a], [b] -> c]");
  EXPECT_EQ(args.describe(d), "[" + ArgumentSet::id(c) + " => d]");
}

TEST(Construct, SubArgumentClosureAndNonCircularity) {
  const auto args = construct_arguments(
      T("premise a. premise b. defeasible a => b. defeasible b => a. strict a, b -> c. defeasible c => a."));
  for (ArgumentIndex i = 0; i < args.size(); ++i) {
    for (auto s : args.sub_arguments(i)) EXPECT_LT(s, args.size());
    // conclusions along any root-to-leaf path are distinct
    std::function<void(ArgumentIndex, std::set<Literal>)> walk = [&](ArgumentIndex n, std::set<Literal> seen) {
      EXPECT_TRUE(seen.insert(args.conclusion(n)).second) << args.expand(i);
      for (auto ch : args.node(n).children) walk(ch, seen);
    };
    walk(i, {});
  }
}

TEST(Construct, MonotoneUnderAugment) {
  const auto base = load_fixture("fx_t_j");
  const auto small = texts(args_of(base, {"a"}));
  const auto big = texts(args_of(base, {"a", "b"}));
  EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
}

TEST(Construct, CapIsEnforced) {
  EXPECT_THROW(construct_arguments(T("premise a. premise b. strict a -> c. strict b -> c. strict c -> d."), 3),
               ResourceLimitError);
}

TEST(Attacks, FixtureRefWithA) {
  const auto args = args_of(load_fixture("fx_ref_j"), {"a"});
  const auto atts = compute_attacks(args);
  ASSERT_EQ(atts.size(), 1U);
  EXPECT_EQ(args.expand(atts[0].attacker), "[~a]");
  EXPECT_EQ(args.expand(atts[0].target), "[a]");
  EXPECT_EQ(atts[0].kind, AttackKind::undermine);
  EXPECT_EQ(atts[0].locus, atts[0].target);
}

TEST(Attacks, StrictTheoryHasNone) {
  EXPECT_TRUE(compute_attacks(construct_arguments(T("axiom a. axiom ~b. strict a -> b. strict b -> ~a."))).empty());
  EXPECT_TRUE(compute_attacks(construct_arguments(load_fixture("fx_cp_a"))).empty());
}

TEST(Attacks, FixtureLleWithBUndercutsBothArguments) {
  const auto args = args_of(load_fixture("fx_lle_j"), {"b"});
  const auto atts = compute_attacks(args);
  const auto cut = find(args, "[[c] -> ~n1]");
  const auto ba = find(args, "[[b] => a]");
  const auto bar_ = find(args, "[[[b] => a] => r]");
  std::set<std::tuple<ArgumentIndex, ArgumentIndex, AttackKind, ArgumentIndex>> got;
  for (const auto& a : atts) got.insert({a.attacker, a.target, a.kind, a.locus});
  EXPECT_EQ(got, (std::set<std::tuple<ArgumentIndex, ArgumentIndex, AttackKind, ArgumentIndex>>{
                     {cut, ba, AttackKind::undercut, ba}, {cut, bar_, AttackKind::undercut, ba}}));
}

TEST(Attacks, RebutIsRestricted) {
  // [a] -> b cannot be rebutted; [c] => ~b can
  const auto args = construct_arguments(T("premise a. premise c. strict a -> b. defeasible c => ~b."));
  const auto strict_b = find(args, "[[a] -> b]");
  const auto def_nb = find(args, "[[c] => ~b]");
  const auto atts = compute_attacks(args);
  ASSERT_EQ(atts.size(), 1U);
  EXPECT_EQ(atts[0].attacker, strict_b);
  EXPECT_EQ(atts[0].target, def_nb);
  EXPECT_EQ(atts[0].kind, AttackKind::rebut);
}

TEST(Attacks, AxiomsAreNotUnderminable) {
  const auto args = construct_arguments(T("axiom a. premise ~a."));
  const auto atts = compute_attacks(args);
  ASSERT_EQ(atts.size(), 1U);
  EXPECT_EQ(args.expand(atts[0].attacker), "[a]");
  EXPECT_EQ(args.expand(atts[0].target), "[~a]");
}

TEST(Attacks, InvariantsOnRandomishTheory) {
  const auto args = construct_arguments(T("premise a. premise ~c. axiom d. defeasible [n1]: a => b. defeasible [n2]: "
                                          "b => c. strict d -> ~n2. defeasible [n3]: d => ~b. strict c -> ~a."));
  const auto& kp = args.theory().kb().premises;
  for (const auto& at : compute_attacks(args)) {
    const auto& subs = args.sub_arguments(at.target);
    EXPECT_TRUE(std::binary_search(subs.begin(), subs.end(), at.locus));
    const auto c = args.conclusion(at.attacker);
    switch (at.kind) {
      case AttackKind::undermine:
        EXPECT_TRUE(args.is_premise(at.locus));
        EXPECT_TRUE(kp.contains(args.conclusion(at.locus)));
        EXPECT_EQ(c, bar(args.conclusion(at.locus)));
        break;
      case AttackKind::rebut:
        EXPECT_TRUE(args.top_rule(at.locus)->is_defeasible());
        EXPECT_EQ(c, bar(args.conclusion(at.locus)));
        break;
      case AttackKind::undercut:
        EXPECT_EQ(c, bar(*args.top_rule(at.locus)->name));
        break;
    }
  }
}

TEST(Defeats, EmptyOrderingKeepsEveryAttack) {
  const auto args = args_of(load_fixture("fx_ref_j"), {"a"});
  const auto atts = compute_attacks(args);
  const auto af = compute_defeats(args, atts);
  ASSERT_EQ(af.defeats().size(), atts.size());
  EXPECT_TRUE(af.defeats(atts[0].attacker, atts[0].target));
}

TEST(Defeats, PreferencesFilterRebutButNotUndercut) {
  const auto args =
      construct_arguments(T("premise p. premise q. defeasible [r1]: p => x. defeasible [r2]: q => ~x. strict q -> ~r1."));
  const auto px = find(args, "[[p] => x]");
  const auto qnx = find(args, "[[q] => ~x]");
  const auto cut = find(args, "[[q] -> ~r1]");
  const auto atts = compute_attacks(args);
  PreferenceOrdering ord;
  ord.add(px, qnx);   // px strictly below qnx
  ord.add(cut, px);   // undercutter strictly below its target
  const auto af = compute_defeats(args, atts, ord);
  EXPECT_FALSE(af.defeats(px, qnx));
  EXPECT_TRUE(af.defeats(qnx, px));
  EXPECT_TRUE(af.defeats(cut, px));
}

TEST(Defeats, WeakPreferenceBothWaysIsNotStrict) {
  PreferenceOrdering ord;
  ord.add(0, 1);
  ord.add(1, 0);
  EXPECT_FALSE(ord.strictly_below(0, 1));
  EXPECT_TRUE(ord.weakly_below(0, 1));
}

TEST(Defeats, FrameworkRejectsBadEndpoints) {
  EXPECT_THROW(AbstractFramework(2, {{0, 2}}), std::out_of_range);
}

TEST(Dot, StylesByKind) {
  const auto args = args_of(load_fixture("fx_lle_j"), {"b"});
  const auto atts = compute_attacks(args);
  const auto dot = to_dot(args, atts, compute_defeats(args, atts));
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("A0 [label=\"A0: "), std::string::npos);
}
