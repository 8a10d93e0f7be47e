#include "aspic/arguments.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

namespace aspic {

const Rule* ArgumentSet::top_rule(ArgumentIndex a) const {
  const auto& n = nodes_.at(a);
  return n.rule ? &theory_->rules()[*n.rule] : nullptr;
}

std::vector<ArgumentIndex> ArgumentSet::with_conclusion(Literal x) const {
  std::vector<ArgumentIndex> out;
  for (ArgumentIndex i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].conclusion == x) out.push_back(i);
  }
  return out;
}

std::set<Literal> ArgumentSet::conclusions() const {
  std::set<Literal> out;
  for (const auto& n : nodes_) out.insert(n.conclusion);
  return out;
}

std::string ArgumentSet::describe(ArgumentIndex a) const {
  const auto& n = nodes_.at(a);
  if (!n.rule) return "[" + to_string(n.conclusion) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ", ";
    out += id(n.children[i]);
  }
  out += top_rule(a)->is_strict() ? " -> " : " => ";
  return out + to_string(n.conclusion) + "]";
}

std::string ArgumentSet::expand(ArgumentIndex a) const {
  const auto& n = nodes_.at(a);
  if (!n.rule) return "[" + to_string(n.conclusion) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i) out += ", ";
    out += expand(n.children[i]);
  }
  out += top_rule(a)->is_strict() ? " -> " : " => ";
  return out + to_string(n.conclusion) + "]";
}

namespace {

// Dense literal numbering local to one construction.
class LiteralIndex {
 public:
  std::uint32_t operator()(Literal x) {
    auto [it, fresh] = ids_.emplace(x, static_cast<std::uint32_t>(ids_.size()));
    return it->second;
  }
  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<Literal, std::uint32_t> ids_;
};

}  // namespace

namespace detail {

class ArgumentBuilder {
 public:
  ArgumentBuilder(const ArgumentationTheory& at, std::size_t cap) : at_(at), cap_(cap) {
    out_.theory_ = std::make_shared<const ArgumentationTheory>(at);
    for (const auto& x : at.kb().axioms) index_(x);
    for (const auto& x : at.kb().premises) index_(x);
    for (const auto& r : at.rules()) {
      CompiledRule c;
      for (const auto& x : r.body) c.body.push_back(index_(x));
      c.head = index_(r.head);
      rules_.push_back(std::move(c));
    }
    words_ = (index_.size() + 63) / 64;
    by_conclusion_.resize(index_.size());
  }

  ArgumentSet run() {
    std::set<Literal> kb(at_.kb().axioms.begin(), at_.kb().axioms.end());
    kb.insert(at_.kb().premises.begin(), at_.kb().premises.end());
    for (const auto& x : kb) add_premise(x);

    std::size_t lo = 0;
    std::size_t hi = out_.nodes_.size();
    while (lo < hi) {
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        for (std::size_t pivot = 0; pivot < rules_[r].body.size(); ++pivot) {
          chosen_.clear();
          extend(r, pivot, 0, lo, hi);
        }
      }
      lo = hi;
      hi = out_.nodes_.size();
    }
    return std::move(out_);
  }

  ArgumentSet out_;

 private:
  struct CompiledRule {
    std::vector<std::uint32_t> body;
    std::uint32_t head = 0;
  };

  bool mask_has(ArgumentIndex a, std::uint32_t lit) const {
    return (masks_[a * words_ + lit / 64] >> (lit % 64)) & 1U;
  }

  void check_cap() const {
    if (out_.nodes_.size() > cap_) {
      throw ResourceLimitError("argument construction exceeded the cap of " + std::to_string(cap_) + " arguments");
    }
  }

  void add_premise(Literal x) {
    const auto lit = index_(x);
    const ArgumentIndex a = out_.nodes_.size();
    out_.nodes_.push_back({x, std::nullopt, {}});
    out_.premises_.push_back({x});
    out_.subs_.push_back({a});
    masks_.resize(masks_.size() + words_, 0);
    masks_[a * words_ + lit / 64] |= std::uint64_t{1} << (lit % 64);
    by_conclusion_[lit].push_back(a);
    check_cap();
  }

  // Semi-naive product: positions before the pivot draw from arguments older
  // than this round, the pivot from the last round's frontier, later positions
  // from anything that existed when the round began.
  void extend(std::size_t r, std::size_t pivot, std::size_t pos, std::size_t lo, std::size_t hi) {
    const auto& rule = rules_[r];
    if (pos == rule.body.size()) {
      add_application(r);
      return;
    }
    const auto& pool = by_conclusion_[rule.body[pos]];
    const std::size_t from = pos == pivot ? lo : 0;
    const std::size_t to = pos < pivot ? lo : hi;
    auto first = std::lower_bound(pool.begin(), pool.end(), from);
    auto last = std::lower_bound(pool.begin(), pool.end(), to);
    for (auto it = first; it != last; ++it) {
      if (mask_has(*it, rule.head)) continue;
      chosen_.push_back(*it);
      extend(r, pivot, pos + 1, lo, hi);
      chosen_.pop_back();
    }
  }

  void add_application(std::size_t r) {
    const auto& rule = at_.rules()[r];
    const ArgumentIndex a = out_.nodes_.size();
    out_.nodes_.push_back({rule.head, r, chosen_});

    std::vector<Literal> prem;
    std::vector<ArgumentIndex> subs;
    masks_.resize(masks_.size() + words_, 0);
    for (auto c : chosen_) {
      prem.insert(prem.end(), out_.premises_[c].begin(), out_.premises_[c].end());
      subs.insert(subs.end(), out_.subs_[c].begin(), out_.subs_[c].end());
      for (std::size_t w = 0; w < words_; ++w) masks_[a * words_ + w] |= masks_[c * words_ + w];
    }
    std::sort(prem.begin(), prem.end());
    prem.erase(std::unique(prem.begin(), prem.end()), prem.end());
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    subs.push_back(a);
    out_.premises_.push_back(std::move(prem));
    out_.subs_.push_back(std::move(subs));

    const auto head = rules_[r].head;
    masks_[a * words_ + head / 64] |= std::uint64_t{1} << (head % 64);
    by_conclusion_[head].push_back(a);
    check_cap();
  }

  const ArgumentationTheory& at_;
  std::size_t cap_;
  LiteralIndex index_;
  std::vector<CompiledRule> rules_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> masks_;  // per argument: literals concluded in its tree
  std::vector<std::vector<ArgumentIndex>> by_conclusion_;
  std::vector<ArgumentIndex> chosen_;
};

}  // namespace detail

ArgumentSet construct_arguments(const ArgumentationTheory& at, std::size_t cap) {
  detail::ArgumentBuilder builder(at, cap);
  return builder.run();
}

std::string_view to_string(AttackKind k) {
  switch (k) {
    case AttackKind::undermine: return "undermine";
    case AttackKind::rebut: return "rebut";
    case AttackKind::undercut: return "undercut";
  }
  return "?";
}

std::vector<Attack> compute_attacks(const ArgumentSet& args) {
  const auto n = args.size();
  std::vector<std::vector<ArgumentIndex>> supers(n);
  std::unordered_map<Literal, std::vector<ArgumentIndex>> by_conclusion;
  for (ArgumentIndex b = 0; b < n; ++b) {
    for (auto s : args.sub_arguments(b)) supers[s].push_back(b);
    by_conclusion[args.conclusion(b)].push_back(b);
  }
  auto concluding = [&](Literal x) -> const std::vector<ArgumentIndex>* {
    auto it = by_conclusion.find(x);
    return it == by_conclusion.end() ? nullptr : &it->second;
  };

  std::vector<Attack> out;
  auto emit = [&](const std::vector<ArgumentIndex>* attackers, ArgumentIndex locus, AttackKind kind) {
    if (!attackers) return;
    for (auto a : *attackers) {
      for (auto b : supers[locus]) out.push_back({a, b, kind, locus});
    }
  };

  const auto& premises = args.theory().kb().premises;
  for (ArgumentIndex locus = 0; locus < n; ++locus) {
    const Literal c = args.conclusion(locus);
    if (args.is_premise(locus)) {
      if (premises.contains(c)) emit(concluding(bar(c)), locus, AttackKind::undermine);
      continue;
    }
    const Rule* top = args.top_rule(locus);
    if (!top->is_defeasible()) continue;
    emit(concluding(bar(c)), locus, AttackKind::rebut);
    emit(concluding(bar(*top->name)), locus, AttackKind::undercut);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbstractFramework::AbstractFramework(std::size_t size, std::vector<Defeat> defeats, std::vector<Literal> conclusions)
    : defeats_(std::move(defeats)), attackers_(size), targets_(size), conclusions_(std::move(conclusions)) {
  std::sort(defeats_.begin(), defeats_.end());
  defeats_.erase(std::unique(defeats_.begin(), defeats_.end()), defeats_.end());
  for (const auto& [a, b] : defeats_) {
    if (a >= size || b >= size) throw std::out_of_range("defeat endpoint outside the framework");
    targets_[a].push_back(b);
    attackers_[b].push_back(a);
  }
  for (auto& v : attackers_) std::sort(v.begin(), v.end());
}

bool AbstractFramework::defeats(ArgumentIndex a, ArgumentIndex b) const {
  return std::binary_search(defeats_.begin(), defeats_.end(), Defeat{a, b});
}

AbstractFramework compute_defeats(const ArgumentSet& args, std::span<const Attack> attacks,
                                  const PreferenceOrdering& ordering) {
  std::vector<AbstractFramework::Defeat> defeats;
  defeats.reserve(attacks.size());
  for (const auto& att : attacks) {
    const bool succeeds = att.kind == AttackKind::undercut || !ordering.strictly_below(att.attacker, att.locus);
    if (succeeds) defeats.emplace_back(att.attacker, att.target);
  }
  std::vector<Literal> conclusions;
  conclusions.reserve(args.size());
  for (ArgumentIndex i = 0; i < args.size(); ++i) conclusions.push_back(args.conclusion(i));
  return AbstractFramework(args.size(), std::move(defeats), std::move(conclusions));
}

std::string to_dot(const ArgumentSet& args, std::span<const Attack> attacks, const AbstractFramework& af) {
  std::map<AbstractFramework::Defeat, std::set<AttackKind>> kinds;
  for (const auto& att : attacks) kinds[{att.attacker, att.target}].insert(att.kind);

  std::string out = "digraph defeats {\n  node [shape=box];\n";
  for (ArgumentIndex i = 0; i < args.size(); ++i) {
    out += "  " + ArgumentSet::id(i) + " [label=\"" + ArgumentSet::id(i) + ": " + to_string(args.conclusion(i)) + "\"];\n";
  }
  for (const auto& d : af.defeats()) {
    std::string label;
    std::string style = "solid";
    if (auto it = kinds.find(d); it != kinds.end()) {
      for (auto k : it->second) {
        if (!label.empty()) label += ",";
        label += to_string(k);
      }
      const auto first = *it->second.begin();
      style = first == AttackKind::undermine ? "dotted" : first == AttackKind::rebut ? "solid" : "dashed";
    }
    out += "  " + ArgumentSet::id(d.first) + " -> " + ArgumentSet::id(d.second) + " [style=" + style + ", label=\"" +
           label + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace aspic
