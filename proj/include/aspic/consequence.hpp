#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aspic/arguments.hpp"
#include "aspic/semantics.hpp"
#include "aspic/theory.hpp"

namespace aspic {

// ---------------------------------------------------------------------------
// Consequence relations, evaluated on a single theory.
//
//   construction:  query is the conclusion of some argument of AT + adds
//   justified:     query is a justified conclusion of AT + adds
// ---------------------------------------------------------------------------

enum class RelationKind { construction, justified };

struct Relation {
  RelationKind kind = RelationKind::construction;
  JustificationMode mode;  // used by `justified` only

  static Relation construction() { return {RelationKind::construction, {}}; }
  static Relation justified(JustificationMode m = {}) { return {RelationKind::justified, m}; }
  friend bool operator==(const Relation&, const Relation&) = default;
};

std::string to_string(const Relation& r);  // "a" / "j" / "j:preferred-credulous"
Relation parse_relation(std::string_view text);

using OrderingProvider = std::function<PreferenceOrdering(const ArgumentSet&)>;

struct ConsequenceOptions {
  // Where added literals go. Literals already in K (either partition) are
  // left where they are.
  Placement placement = Placement::premises;
  // When set, an instance whose query is already a consequence of the
  // unaugmented theory counts as satisfied.
  bool guard = false;
  // Empty: every attack is a defeat.
  OrderingProvider ordering;
  std::size_t argument_cap = kDefaultArgumentCap;
  EnumerationLimits limits;
};

// Memoizes, per set of added literals, the constructible and justified
// conclusions of the augmented theory. Not thread-safe; use one per thread.
class ConsequenceOracle {
 public:
  explicit ConsequenceOracle(ArgumentationTheory at, ConsequenceOptions options = {});

  const ArgumentationTheory& theory() const { return at_; }
  const ConsequenceOptions& options() const { return options_; }

  // The theory the relation inspects for `adds`.
  ArgumentationTheory augmented(std::span<const Literal> adds) const;

  bool follows(const Relation& rel, std::span<const Literal> adds, Literal query);
  const std::set<Literal>& constructible(std::span<const Literal> adds);
  const std::set<Literal>& justified(std::span<const Literal> adds, JustificationMode mode);

  std::size_t evaluations() const { return cache_.size(); }

 private:
  struct Entry {
    std::optional<std::set<Literal>> constructible;
    std::map<std::string, std::set<Literal>> justified;  // keyed by mode
  };
  Entry& entry(std::span<const Literal> adds);
  bool follows_raw(const Relation& rel, std::span<const Literal> adds, Literal query);

  ArgumentationTheory at_;
  ConsequenceOptions options_;
  std::map<std::vector<Literal>, Entry> cache_;
};

bool follows_construction(const ArgumentationTheory& at, std::span<const Literal> adds, Literal query,
                          const ConsequenceOptions& options = {});
bool follows_justified(const ArgumentationTheory& at, std::span<const Literal> adds, Literal query,
                       JustificationMode mode = {}, const ConsequenceOptions& options = {});

// ---------------------------------------------------------------------------
// Axiom schemas
// ---------------------------------------------------------------------------

enum class AxiomId { Ref, LLE, RW, Cut, CM, M, T, CP };
inline constexpr std::array<AxiomId, 8> kAllAxioms = {AxiomId::Ref, AxiomId::LLE, AxiomId::RW, AxiomId::Cut,
                                                      AxiomId::CM,  AxiomId::M,   AxiomId::T,  AxiomId::CP};

std::string_view to_string(AxiomId a);
AxiomId parse_axiom(std::string_view text);

// Reading of the rule-existence side condition. Strict: a strict rule.
// Defeasible: a strict or defeasible rule.
enum class Interpretation { strict, defeasible };
std::string_view to_string(Interpretation i);
Interpretation parse_interpretation(std::string_view text);

// LLE, RW and M mention a rule and so depend on the interpretation.
bool has_interpretation(AxiomId a);

enum class MetaVar { alpha, beta, gamma };
std::string_view to_string(MetaVar v);

struct Term {
  MetaVar var;
  bool negated = false;
};

// One line of an inference figure.
struct Statement {
  enum class Kind {
    consequence,  // lhs... |~ rhs        (lhs added together to K)
    rule,         // |= lhs[0] ~> rhs     (a single-premise rule exists)
    equivalence,  // |= lhs[0] == rhs     (rules both ways, same kind)
  };
  Kind kind;
  std::vector<Term> lhs;
  Term rhs;
};

struct AxiomSchema {
  AxiomId id;
  std::vector<MetaVar> variables;  // in canonical binding order
  std::vector<Statement> premises;
  Statement conclusion;
};

const AxiomSchema& schema(AxiomId a);

std::string to_string(const Statement& s);  // e.g. "alpha, beta |~ gamma"

class Bindings {
 public:
  Bindings() = default;
  Bindings(std::initializer_list<std::pair<const MetaVar, Literal>> init) : values_(init) {}
  void set(MetaVar v, Literal x) { values_[v] = x; }
  bool has(MetaVar v) const { return values_.contains(v); }
  Literal at(MetaVar v) const;
  Literal resolve(Term t) const;
  const std::map<MetaVar, Literal>& values() const { return values_; }
  friend bool operator==(const Bindings&, const Bindings&) = default;

 private:
  std::map<MetaVar, Literal> values_;
};

std::string to_string(const Bindings& b);

enum class VerdictStatus { holds, fails, vacuous };
std::string_view to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::vacuous;
  std::vector<bool> premise_results;
  std::optional<bool> conclusion_result;  // evaluated when every premise holds
  std::string witness;                    // explanation when status == fails
};

// Evaluates one instance of an axiom on a theory. Throws std::invalid_argument
// when a variable the schema mentions is unbound.
Verdict evaluate_axiom(ConsequenceOracle& oracle, AxiomId axiom, Interpretation interp, const Bindings& bindings,
                       const Relation& relation);
Verdict evaluate_axiom(const ArgumentationTheory& at, AxiomId axiom, Interpretation interp, const Bindings& bindings,
                       const Relation& relation, const ConsequenceOptions& options = {});

// Truth of a single statement under bindings.
bool evaluate_statement(ConsequenceOracle& oracle, const Statement& s, Interpretation interp, const Bindings& bindings,
                        const Relation& relation);

// Human-readable account of why `query` is not a consequence of `adds`.
std::string explain_failure(const ConsequenceOracle& oracle, const Relation& relation, std::span<const Literal> adds,
                            Literal query);

// ---------------------------------------------------------------------------
// Rationality postulates
// ---------------------------------------------------------------------------

// Least superset of `s` closed under forward application of the strict rules.
std::set<Literal> strict_closure(const std::set<Literal>& s, std::span<const Rule> rules);

// No literal together with its negation.
bool is_consistent(const std::set<Literal>& s);

struct ExtensionPostulates {
  Extension extension;
  std::set<Literal> conclusions;
  bool closure = false;   // Concs(E) is closed under strict rules
  bool direct = false;    // Concs(E) is consistent
  bool indirect = false;  // the strict closure of Concs(E) is consistent
};

struct PostulateReport {
  // Strict closure of Kn is consistent (reported, not enforced).
  bool strict_part_consistent = false;
  std::vector<ExtensionPostulates> extensions;

  bool all_hold() const;
};

PostulateReport check_postulates(const ArgumentationTheory& at, Semantics semantics = Semantics::grounded,
                                 EnumerationLimits limits = {}, std::size_t argument_cap = kDefaultArgumentCap);

}  // namespace aspic
