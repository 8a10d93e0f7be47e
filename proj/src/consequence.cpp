#include "aspic/consequence.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace aspic {

std::string to_string(const Relation& r) {
  if (r.kind == RelationKind::construction) return "a";
  if (r.mode == JustificationMode{}) return "j";
  return "j:" + to_string(r.mode);
}

Relation parse_relation(std::string_view text) {
  if (text == "a") return Relation::construction();
  if (text == "j") return Relation::justified();
  if (text.starts_with("j:")) return Relation::justified(parse_mode(text.substr(2)));
  throw std::invalid_argument("unknown relation '" + std::string(text) + "' (expected a, j or j:MODE)");
}

// ---------------------------------------------------------------------------

ConsequenceOracle::ConsequenceOracle(ArgumentationTheory at, ConsequenceOptions options)
    : at_(std::move(at)), options_(std::move(options)) {}

ArgumentationTheory ConsequenceOracle::augmented(std::span<const Literal> adds) const {
  std::vector<Literal> fresh;
  for (const auto& x : adds) {
    if (!at_.kb().contains(x)) fresh.push_back(x);
  }
  if (fresh.empty()) return at_;
  return augment(at_, fresh, options_.placement);
}

ConsequenceOracle::Entry& ConsequenceOracle::entry(std::span<const Literal> adds) {
  std::vector<Literal> key(adds.begin(), adds.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return cache_[std::move(key)];
}

const std::set<Literal>& ConsequenceOracle::constructible(std::span<const Literal> adds) {
  auto& e = entry(adds);
  if (!e.constructible) e.constructible = construct_arguments(augmented(adds), options_.argument_cap).conclusions();
  return *e.constructible;
}

const std::set<Literal>& ConsequenceOracle::justified(std::span<const Literal> adds, JustificationMode mode) {
  auto& e = entry(adds);
  const auto key = to_string(mode);
  if (auto it = e.justified.find(key); it != e.justified.end()) return it->second;

  const auto args = construct_arguments(augmented(adds), options_.argument_cap);
  if (!e.constructible) e.constructible = args.conclusions();
  const auto attacks = compute_attacks(args);
  const auto af = options_.ordering ? compute_defeats(args, attacks, options_.ordering(args))
                                    : compute_defeats(args, attacks);
  return e.justified.emplace(key, justified_conclusions(af, mode, options_.limits)).first->second;
}

bool ConsequenceOracle::follows_raw(const Relation& rel, std::span<const Literal> adds, Literal query) {
  if (rel.kind == RelationKind::construction) return constructible(adds).contains(query);
  return justified(adds, rel.mode).contains(query);
}

bool ConsequenceOracle::follows(const Relation& rel, std::span<const Literal> adds, Literal query) {
  if (options_.guard && follows_raw(rel, {}, query)) return true;
  return follows_raw(rel, adds, query);
}

bool follows_construction(const ArgumentationTheory& at, std::span<const Literal> adds, Literal query,
                          const ConsequenceOptions& options) {
  ConsequenceOracle oracle(at, options);
  return oracle.follows(Relation::construction(), adds, query);
}

bool follows_justified(const ArgumentationTheory& at, std::span<const Literal> adds, Literal query,
                       JustificationMode mode, const ConsequenceOptions& options) {
  ConsequenceOracle oracle(at, options);
  return oracle.follows(Relation::justified(mode), adds, query);
}

// ---------------------------------------------------------------------------

std::string_view to_string(AxiomId a) {
  switch (a) {
    case AxiomId::Ref: return "Ref";
    case AxiomId::LLE: return "LLE";
    case AxiomId::RW: return "RW";
    case AxiomId::Cut: return "Cut";
    case AxiomId::CM: return "CM";
    case AxiomId::M: return "M";
    case AxiomId::T: return "T";
    case AxiomId::CP: return "CP";
  }
  return "?";
}

AxiomId parse_axiom(std::string_view text) {
  for (auto a : kAllAxioms) {
    std::string name(to_string(a));
    if (text.size() != name.size()) continue;
    if (std::equal(text.begin(), text.end(), name.begin(),
                   [](char x, char y) { return std::tolower(x) == std::tolower(y); })) {
      return a;
    }
  }
  throw std::invalid_argument("unknown axiom '" + std::string(text) + "'");
}

std::string_view to_string(Interpretation i) { return i == Interpretation::strict ? "strict" : "defeasible"; }

Interpretation parse_interpretation(std::string_view text) {
  if (text == "strict") return Interpretation::strict;
  if (text == "defeasible") return Interpretation::defeasible;
  throw std::invalid_argument("unknown interpretation '" + std::string(text) + "'");
}

bool has_interpretation(AxiomId a) { return a == AxiomId::LLE || a == AxiomId::RW || a == AxiomId::M; }

std::string_view to_string(MetaVar v) {
  switch (v) {
    case MetaVar::alpha: return "alpha";
    case MetaVar::beta: return "beta";
    case MetaVar::gamma: return "gamma";
  }
  return "?";
}

namespace {

using K = Statement::Kind;
constexpr auto A = MetaVar::alpha;
constexpr auto B = MetaVar::beta;
constexpr auto G = MetaVar::gamma;

Statement follows(std::vector<Term> lhs, Term rhs) { return {K::consequence, std::move(lhs), rhs}; }

const std::vector<AxiomSchema>& schemas() {
  static const std::vector<AxiomSchema> table = {
      {AxiomId::Ref, {A}, {}, follows({{A}}, {A})},
      {AxiomId::LLE, {A, B, G}, {{K::equivalence, {{A}}, {B}}, follows({{A}}, {G})}, follows({{B}}, {G})},
      {AxiomId::RW, {A, B, G}, {{K::rule, {{A}}, {B}}, follows({{G}}, {A})}, follows({{G}}, {B})},
      {AxiomId::Cut, {A, B, G}, {follows({{A}, {B}}, {G}), follows({{A}}, {B})}, follows({{A}}, {G})},
      {AxiomId::CM, {A, B, G}, {follows({{A}}, {B}), follows({{A}}, {G})}, follows({{A}, {B}}, {G})},
      {AxiomId::M, {A, B, G}, {{K::rule, {{A}}, {B}}, follows({{B}}, {G})}, follows({{A}}, {G})},
      {AxiomId::T, {A, B, G}, {follows({{A}}, {B}), follows({{B}}, {G})}, follows({{A}}, {G})},
      {AxiomId::CP, {A, B}, {follows({{A}}, {B})}, follows({{B, true}}, {A, true})},
  };
  return table;
}

std::string term_text(Term t) { return (t.negated ? "~" : "") + std::string(to_string(t.var)); }

}  // namespace

const AxiomSchema& schema(AxiomId a) { return schemas().at(static_cast<std::size_t>(a)); }

std::string to_string(const Statement& s) {
  std::string lhs;
  for (const auto& t : s.lhs) {
    if (!lhs.empty()) lhs += ", ";
    lhs += term_text(t);
  }
  switch (s.kind) {
    case K::consequence: return lhs + " |~ " + term_text(s.rhs);
    case K::rule: return "|= " + lhs + " ~> " + term_text(s.rhs);
    case K::equivalence: return "|= " + lhs + " == " + term_text(s.rhs);
  }
  return "?";
}

Literal Bindings::at(MetaVar v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw std::invalid_argument("missing binding for " + std::string(to_string(v)));
  return it->second;
}

Literal Bindings::resolve(Term t) const {
  const Literal x = at(t.var);
  return t.negated ? bar(x) : x;
}

std::string to_string(const Bindings& b) {
  std::string out = "{";
  for (const auto& [v, x] : b.values()) {
    if (out.size() > 1) out += ", ";
    out += std::string(to_string(v)) + ": " + to_string(x);
  }
  return out + "}";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::holds: return "holds";
    case VerdictStatus::fails: return "fails";
    case VerdictStatus::vacuous: return "vacuous";
  }
  return "?";
}

namespace {

bool rule_exists(const ArgumentationTheory& at, Literal from, Literal to, Interpretation interp) {
  const Literal body[] = {from};
  if (at.has_rule(RuleKind::strict, body, to)) return true;
  return interp == Interpretation::defeasible && at.has_rule(RuleKind::defeasible, body, to);
}

bool equivalent(const ArgumentationTheory& at, Literal x, Literal y, Interpretation interp) {
  const Literal bx[] = {x};
  const Literal by[] = {y};
  if (at.has_rule(RuleKind::strict, bx, y) && at.has_rule(RuleKind::strict, by, x)) return true;
  return interp == Interpretation::defeasible && at.has_rule(RuleKind::defeasible, bx, y) &&
         at.has_rule(RuleKind::defeasible, by, x);
}

}  // namespace

bool evaluate_statement(ConsequenceOracle& oracle, const Statement& s, Interpretation interp, const Bindings& bindings,
                        const Relation& relation) {
  switch (s.kind) {
    case K::rule:
      return rule_exists(oracle.theory(), bindings.resolve(s.lhs.front()), bindings.resolve(s.rhs), interp);
    case K::equivalence:
      return equivalent(oracle.theory(), bindings.resolve(s.lhs.front()), bindings.resolve(s.rhs), interp);
    case K::consequence: {
      std::vector<Literal> adds;
      for (const auto& t : s.lhs) adds.push_back(bindings.resolve(t));
      return oracle.follows(relation, adds, bindings.resolve(s.rhs));
    }
  }
  return false;
}

std::string explain_failure(const ConsequenceOracle& oracle, const Relation& relation, std::span<const Literal> adds,
                            Literal query) {
  std::string added;
  for (const auto& x : adds) {
    if (!added.empty()) added += ", ";
    added += to_string(x);
  }
  const auto at = oracle.augmented(adds);
  const auto args = construct_arguments(at, oracle.options().argument_cap);
  const auto candidates = args.with_conclusion(query);
  std::string out = "with {" + added + "} added, ";
  if (candidates.empty()) return out + "no argument concludes " + to_string(query);
  if (relation.kind == RelationKind::construction) return out + to_string(query) + " is constructible";

  const auto attacks = compute_attacks(args);
  const auto af = oracle.options().ordering ? compute_defeats(args, attacks, oracle.options().ordering(args))
                                            : compute_defeats(args, attacks);
  out += to_string(query) + " is not justified (" + to_string(relation.mode) + ")";
  for (auto c : candidates) {
    out += "; " + ArgumentSet::id(c) + " = " + args.expand(c);
    const auto& defeaters = af.attackers(c);
    if (defeaters.empty()) continue;
    out += " defeated by";
    for (std::size_t i = 0; i < defeaters.size(); ++i) {
      const auto d = defeaters[i];
      std::set<AttackKind> kinds;
      for (const auto& a : attacks) {
        if (a.attacker == d && a.target == c) kinds.insert(a.kind);
      }
      out += i ? ", " : " ";
      out += ArgumentSet::id(d) + " = " + args.expand(d) + " (";
      bool first = true;
      for (auto k : kinds) {
        if (!first) out += "/";
        out += to_string(k);
        first = false;
      }
      out += ")";
    }
  }
  return out;
}

Verdict evaluate_axiom(ConsequenceOracle& oracle, AxiomId axiom, Interpretation interp, const Bindings& bindings,
                       const Relation& relation) {
  const auto& sch = schema(axiom);
  for (auto v : sch.variables) (void)bindings.at(v);

  Verdict v;
  bool all = true;
  for (const auto& p : sch.premises) {
    const bool ok = evaluate_statement(oracle, p, interp, bindings, relation);
    v.premise_results.push_back(ok);
    all = all && ok;
  }
  if (!all) {
    v.status = VerdictStatus::vacuous;
    return v;
  }
  v.conclusion_result = evaluate_statement(oracle, sch.conclusion, interp, bindings, relation);
  v.status = *v.conclusion_result ? VerdictStatus::holds : VerdictStatus::fails;
  if (v.status == VerdictStatus::fails) {
    std::vector<Literal> adds;
    for (const auto& t : sch.conclusion.lhs) adds.push_back(bindings.resolve(t));
    std::string premises;
    for (const auto& p : sch.premises) {
      if (!premises.empty()) premises += "; ";
      premises += to_string(p);
    }
    v.witness = (premises.empty() ? "" : "premises hold (" + premises + "); ") + "conclusion " +
                to_string(sch.conclusion) + " fails: " +
                explain_failure(oracle, relation, adds, bindings.resolve(sch.conclusion.rhs));
  }
  return v;
}

Verdict evaluate_axiom(const ArgumentationTheory& at, AxiomId axiom, Interpretation interp, const Bindings& bindings,
                       const Relation& relation, const ConsequenceOptions& options) {
  ConsequenceOracle oracle(at, options);
  return evaluate_axiom(oracle, axiom, interp, bindings, relation);
}

// ---------------------------------------------------------------------------

std::set<Literal> strict_closure(const std::set<Literal>& s, std::span<const Rule> rules) {
  std::set<Literal> out = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (!r.is_strict() || out.contains(r.head)) continue;
      if (std::all_of(r.body.begin(), r.body.end(), [&](Literal x) { return out.contains(x); })) {
        out.insert(r.head);
        changed = true;
      }
    }
  }
  return out;
}

bool is_consistent(const std::set<Literal>& s) {
  return std::none_of(s.begin(), s.end(), [&](Literal x) { return x.positive && s.contains(bar(x)); });
}

bool PostulateReport::all_hold() const {
  return std::all_of(extensions.begin(), extensions.end(),
                     [](const ExtensionPostulates& e) { return e.closure && e.direct && e.indirect; });
}

PostulateReport check_postulates(const ArgumentationTheory& at, Semantics semantics, EnumerationLimits limits,
                                 std::size_t argument_cap) {
  PostulateReport report;
  report.strict_part_consistent = is_consistent(strict_closure(at.kb().axioms, at.rules()));

  const auto args = construct_arguments(at, argument_cap);
  const auto attacks = compute_attacks(args);
  const auto af = compute_defeats(args, attacks);
  for (auto& e : extensions(af, semantics, limits)) {
    ExtensionPostulates p;
    p.conclusions = conclusions_of(af, e);
    const auto closed = strict_closure(p.conclusions, at.rules());
    p.closure = closed == p.conclusions;
    p.direct = is_consistent(p.conclusions);
    p.indirect = is_consistent(closed);
    p.extension = std::move(e);
    report.extensions.push_back(std::move(p));
  }
  return report;
}

}  // namespace aspic
