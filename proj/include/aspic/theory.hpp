#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aspic/literal.hpp"

namespace aspic {

enum class RuleKind { strict, defeasible };

// Prefix for names generated for unnamed defeasible rules and for ids of
// generated rules.
inline constexpr std::string_view kReservedPrefix = "_";

struct Rule {
  std::string id;
  RuleKind kind = RuleKind::strict;
  std::vector<Literal> body;  // input order, used for display
  Literal head;
  std::optional<Literal> name;  // defeasible rules only

  bool is_strict() const { return kind == RuleKind::strict; }
  bool is_defeasible() const { return kind == RuleKind::defeasible; }

  // Body as a sorted multiset; the basis of rule identity.
  std::vector<Literal> sorted_body() const;
};

// Same rule for set purposes: kind, body multiset and head agree.
bool same_rule(const Rule& a, const Rule& b);

// "a, c -> d" / "b => a" (no id, no name)
std::string to_string(const Rule& r);

struct KnowledgeBase {
  std::set<Literal> axioms;    // Kn
  std::set<Literal> premises;  // Kp

  bool contains(Literal x) const { return axioms.contains(x) || premises.contains(x); }
  bool empty() const { return axioms.empty() && premises.empty(); }
  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Placement { premises, axioms };

// A knowledge base together with strict and defeasible rules. Construction
// validates every invariant and completes the naming function: defeasible
// rules without a name receive a fresh one under kReservedPrefix.
class ArgumentationTheory {
 public:
  ArgumentationTheory() = default;
  // Throws TheoryError on: overlapping axioms/premises, empty bodies, a name on
  // a strict rule, a negative name, or two defeasible rules sharing a name.
  // Duplicate rules (same_rule) collapse to the first occurrence.
  ArgumentationTheory(KnowledgeBase kb, std::vector<Rule> rules);

  const KnowledgeBase& kb() const { return kb_; }
  const std::vector<Rule>& rules() const { return rules_; }

  std::size_t strict_rule_count() const;
  std::size_t defeasible_rule_count() const;

  // Every atom that occurs anywhere in the theory, sorted.
  std::set<Atom> atoms() const;

  bool has_rule(RuleKind kind, std::span<const Literal> body, Literal head) const;

  // Equal up to rule ids and body order.
  friend bool operator==(const ArgumentationTheory& a, const ArgumentationTheory& b);

 private:
  KnowledgeBase kb_;
  std::vector<Rule> rules_;
};

// Strict iff no defeasible rules and no ordinary premises.
bool is_strict(const ArgumentationTheory& at);

// Least superset whose strict part contains every transposition
// {~head} u body\{b_i} -> ~b_i of each strict rule. Defeasible rules pass
// through untouched; generated rules get fresh ids.
std::vector<Rule> transposition_closure(std::span<const Rule> rules);
ArgumentationTheory transposition_closure(const ArgumentationTheory& at);
bool is_transposition_closed(std::span<const Rule> rules);

// The theory with each literal inserted into the chosen partition. Throws
// TheoryError when a literal already sits in the other partition.
ArgumentationTheory augment(const ArgumentationTheory& at, std::span<const Literal> adds,
                            Placement placement = Placement::premises);

}  // namespace aspic
