#include "aspic/theory.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>

namespace aspic {

std::vector<Literal> Rule::sorted_body() const {
  auto out = body;
  std::sort(out.begin(), out.end());
  return out;
}

bool same_rule(const Rule& a, const Rule& b) {
  return a.kind == b.kind && a.head == b.head && a.sorted_body() == b.sorted_body();
}

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.body[i]);
  }
  out += r.is_strict() ? " -> " : " => ";
  out += to_string(r.head);
  return out;
}

namespace {

std::string fresh_id(std::string_view stem, std::unordered_set<std::string>& taken) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = std::string(stem) + std::to_string(k);
    if (taken.insert(candidate).second) return candidate;
  }
}

}  // namespace

ArgumentationTheory::ArgumentationTheory(KnowledgeBase kb, std::vector<Rule> rules) : kb_(std::move(kb)) {
  for (const auto& x : kb_.axioms) {
    if (kb_.premises.contains(x)) {
      throw TheoryError("literal " + to_string(x) + " is both an axiom and an ordinary premise");
    }
  }

  std::set<Atom> used;
  for (const auto& x : kb_.axioms) used.insert(x.atom);
  for (const auto& x : kb_.premises) used.insert(x.atom);

  std::set<Atom> names;
  for (auto& r : rules) {
    if (r.body.empty()) throw TheoryError("rule '" + to_string(r) + "' has an empty body");
    if (r.is_strict() && r.name) throw TheoryError("strict rule '" + to_string(r) + "' cannot carry a name");
    if (r.name && !r.name->positive) {
      throw TheoryError("rule name " + to_string(*r.name) + " must be a positive literal");
    }
    for (const auto& x : r.body) used.insert(x.atom);
    used.insert(r.head.atom);
    if (r.name) {
      if (!names.insert(r.name->atom).second) {
        throw TheoryError("rule name " + to_string(*r.name) + " is used by two defeasible rules");
      }
      used.insert(r.name->atom);
    }
  }

  std::size_t next_name = 1;
  for (auto& r : rules) {
    if (!r.is_defeasible() || r.name) continue;
    for (;; ++next_name) {
      Atom candidate(std::string(kReservedPrefix) + "n" + std::to_string(next_name));
      if (!used.contains(candidate)) {
        r.name = Literal{candidate, true};
        used.insert(candidate);
        break;
      }
    }
  }

  std::unordered_set<std::string> ids;
  for (auto& r : rules) {
    const bool duplicate =
        std::any_of(rules_.begin(), rules_.end(), [&](const Rule& kept) { return same_rule(kept, r); });
    if (duplicate) continue;
    if (r.id.empty() && r.name) r.id = std::string(r.name->atom.name());
    if (r.id.empty() || ids.contains(r.id)) {
      r.id = fresh_id(r.is_strict() ? "s" : "d", ids);
    } else {
      ids.insert(r.id);
    }
    rules_.push_back(std::move(r));
  }
}

std::size_t ArgumentationTheory::strict_rule_count() const {
  return static_cast<std::size_t>(std::count_if(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_strict(); }));
}

std::size_t ArgumentationTheory::defeasible_rule_count() const { return rules_.size() - strict_rule_count(); }

std::set<Atom> ArgumentationTheory::atoms() const {
  std::set<Atom> out;
  for (const auto& x : kb_.axioms) out.insert(x.atom);
  for (const auto& x : kb_.premises) out.insert(x.atom);
  for (const auto& r : rules_) {
    for (const auto& x : r.body) out.insert(x.atom);
    out.insert(r.head.atom);
    if (r.name) out.insert(r.name->atom);
  }
  return out;
}

bool ArgumentationTheory::has_rule(RuleKind kind, std::span<const Literal> body, Literal head) const {
  std::vector<Literal> wanted(body.begin(), body.end());
  std::sort(wanted.begin(), wanted.end());
  return std::any_of(rules_.begin(), rules_.end(), [&](const Rule& r) {
    return r.kind == kind && r.head == head && r.body.size() == wanted.size() && r.sorted_body() == wanted;
  });
}

bool operator==(const ArgumentationTheory& a, const ArgumentationTheory& b) {
  if (a.kb_ != b.kb_ || a.rules_.size() != b.rules_.size()) return false;
  using Key = std::tuple<RuleKind, std::vector<Literal>, Literal, std::optional<Literal>>;
  auto keys = [](const std::vector<Rule>& rules) {
    std::vector<Key> out;
    out.reserve(rules.size());
    for (const auto& r : rules) out.emplace_back(r.kind, r.sorted_body(), r.head, r.name);
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a.rules_) == keys(b.rules_);
}

bool is_strict(const ArgumentationTheory& at) {
  return at.kb().premises.empty() && at.defeasible_rule_count() == 0;
}

namespace {

// {~head} u body\{body[i]} -> ~body[i], keeping the replaced slot in place.
Rule transpose(const Rule& r, std::size_t i) {
  Rule t;
  t.kind = RuleKind::strict;
  t.head = bar(r.body[i]);
  const Literal removed = r.body[i];
  for (std::size_t j = 0; j < r.body.size(); ++j) {
    const Literal x = j == i ? bar(r.head) : r.body[j];
    if (j != i && x == removed) continue;
    if (std::find(t.body.begin(), t.body.end(), x) == t.body.end()) t.body.push_back(x);
  }
  return t;
}

}  // namespace

std::vector<Rule> transposition_closure(std::span<const Rule> rules) {
  std::vector<Rule> out(rules.begin(), rules.end());
  std::unordered_set<std::string> ids;
  for (const auto& r : out) ids.insert(r.id);

  for (std::size_t next = 0; next < out.size(); ++next) {
    if (!out[next].is_strict()) continue;
    for (std::size_t i = 0; i < out[next].body.size(); ++i) {
      Rule t = transpose(out[next], i);
      const bool present = std::any_of(out.begin(), out.end(), [&](const Rule& r) { return same_rule(r, t); });
      if (present) continue;
      t.id = fresh_id(std::string(kReservedPrefix) + "t", ids);
      out.push_back(std::move(t));
    }
  }
  return out;
}

ArgumentationTheory transposition_closure(const ArgumentationTheory& at) {
  return ArgumentationTheory(at.kb(), transposition_closure(at.rules()));
}

bool is_transposition_closed(std::span<const Rule> rules) {
  for (const auto& r : rules) {
    if (!r.is_strict()) continue;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      const Rule t = transpose(r, i);
      if (std::none_of(rules.begin(), rules.end(), [&](const Rule& x) { return same_rule(x, t); })) return false;
    }
  }
  return true;
}

ArgumentationTheory augment(const ArgumentationTheory& at, std::span<const Literal> adds, Placement placement) {
  KnowledgeBase kb = at.kb();
  auto& target = placement == Placement::premises ? kb.premises : kb.axioms;
  const auto& other = placement == Placement::premises ? kb.axioms : kb.premises;
  for (const auto& x : adds) {
    if (other.contains(x)) {
      throw TheoryError("cannot add " + to_string(x) + " as " +
                        (placement == Placement::premises ? "a premise" : "an axiom") +
                        ": it is already in the other partition");
    }
    target.insert(x);
  }
  return ArgumentationTheory(std::move(kb), at.rules());
}

}  // namespace aspic
