#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aspic/theory.hpp"

namespace aspic {

namespace detail {
class ArgumentBuilder;
}

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultArgumentCap = 100'000;

using ArgumentIndex = std::size_t;

// All arguments of one theory, stored as a DAG over shared sub-arguments.
// Index i identifies argument A<i>; structurally equal arguments share an index.
class ArgumentSet {
 public:
  struct Node {
    Literal conclusion;
    std::optional<std::size_t> rule;  // index into theory().rules(); empty for premises
    std::vector<ArgumentIndex> children;
  };

  std::size_t size() const { return nodes_.size(); }
  const ArgumentationTheory& theory() const { return *theory_; }

  const Node& node(ArgumentIndex a) const { return nodes_.at(a); }
  Literal conclusion(ArgumentIndex a) const { return nodes_.at(a).conclusion; }
  bool is_premise(ArgumentIndex a) const { return !nodes_.at(a).rule.has_value(); }
  // nullptr for premise arguments
  const Rule* top_rule(ArgumentIndex a) const;
  // Prem(A), sorted
  const std::vector<Literal>& premises(ArgumentIndex a) const { return premises_.at(a); }
  // Sub(A), sorted; always contains a
  const std::vector<ArgumentIndex>& sub_arguments(ArgumentIndex a) const { return subs_.at(a); }

  std::vector<ArgumentIndex> with_conclusion(Literal x) const;
  // Concs over every argument
  std::set<Literal> conclusions() const;

  // "[a]", "[A0 => b]" with children referenced by id
  std::string describe(ArgumentIndex a) const;
  // fully expanded tree, e.g. "[[b] => a] => r"
  std::string expand(ArgumentIndex a) const;
  static std::string id(ArgumentIndex a) { return "A" + std::to_string(a); }

 private:
  friend class detail::ArgumentBuilder;
  std::shared_ptr<const ArgumentationTheory> theory_;
  std::vector<Node> nodes_;
  std::vector<std::vector<Literal>> premises_;
  std::vector<std::vector<ArgumentIndex>> subs_;
};

// Least set containing a premise argument per element of K and closed under
// rule application, restricted to arguments in which no literal is concluded
// twice along a root-to-leaf path. Throws ResourceLimitError once more than
// `cap` arguments exist.
ArgumentSet construct_arguments(const ArgumentationTheory& at, std::size_t cap = kDefaultArgumentCap);

enum class AttackKind { undermine, rebut, undercut };
std::string_view to_string(AttackKind k);

struct Attack {
  ArgumentIndex attacker;
  ArgumentIndex target;
  AttackKind kind;
  ArgumentIndex locus;  // the attacked sub-argument (premise argument for undermining)

  friend auto operator<=>(const Attack&, const Attack&) = default;
};

// Every attack licensed by the theory; sorted. Rebut is restricted: the locus
// must have a defeasible top rule. Axioms cannot be undermined.
std::vector<Attack> compute_attacks(const ArgumentSet& args);

// Weak preference pairs (a, b) read as a <= b. Any relation is accepted; the
// engine assumes, without checking, that it is reasonable in the usual sense.
class PreferenceOrdering {
 public:
  PreferenceOrdering() = default;
  void add(ArgumentIndex lower, ArgumentIndex upper) { pairs_.emplace(lower, upper); }
  bool weakly_below(ArgumentIndex a, ArgumentIndex b) const { return pairs_.contains({a, b}); }
  bool strictly_below(ArgumentIndex a, ArgumentIndex b) const { return weakly_below(a, b) && !weakly_below(b, a); }
  bool empty() const { return pairs_.empty(); }

 private:
  std::set<std::pair<ArgumentIndex, ArgumentIndex>> pairs_;
};

// Abstract framework over argument indices 0..size()-1.
class AbstractFramework {
 public:
  using Defeat = std::pair<ArgumentIndex, ArgumentIndex>;

  AbstractFramework() = default;
  // Throws std::out_of_range for endpoints >= size. Duplicates are dropped.
  AbstractFramework(std::size_t size, std::vector<Defeat> defeats, std::vector<Literal> conclusions = {});

  std::size_t size() const { return attackers_.size(); }
  const std::vector<Defeat>& defeats() const { return defeats_; }
  const std::vector<ArgumentIndex>& attackers(ArgumentIndex a) const { return attackers_.at(a); }
  const std::vector<ArgumentIndex>& targets(ArgumentIndex a) const { return targets_.at(a); }
  bool defeats(ArgumentIndex a, ArgumentIndex b) const;
  // Empty for frameworks not built from an ArgumentSet.
  const std::vector<Literal>& conclusions() const { return conclusions_; }

 private:
  std::vector<Defeat> defeats_;  // sorted, unique
  std::vector<std::vector<ArgumentIndex>> attackers_;
  std::vector<std::vector<ArgumentIndex>> targets_;
  std::vector<Literal> conclusions_;
};

// Undercuts always succeed; an undermine or rebut succeeds unless the attacker
// is strictly below the attacked sub-argument.
AbstractFramework compute_defeats(const ArgumentSet& args, std::span<const Attack> attacks,
                                  const PreferenceOrdering& ordering = {});

// Graphviz rendering of the defeat graph. Edge style encodes the attack kind:
// undermine dotted, rebut solid, undercut dashed.
std::string to_dot(const ArgumentSet& args, std::span<const Attack> attacks, const AbstractFramework& af);

}  // namespace aspic
