#include "aspic/search.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace aspic {

void validate(const SearchBounds& b) {
  if (b.max_atoms < 1 || b.max_atoms > 20) throw std::invalid_argument("max-atoms must be in 1..20");
  if (b.max_rules < 0) throw std::invalid_argument("max-rules must be >= 0");
  if (b.max_body_len < 1) throw std::invalid_argument("max-body-len must be >= 1");
  if (b.limit < 1) throw std::invalid_argument("limit must be >= 1");
}

Placement placement_for(const SearchBounds& b) { return b.strict_only ? Placement::axioms : Placement::premises; }

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}
std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays exact; saturate on overflow
    const std::size_t m = sat_mul(r, n - k + i);
    if (m == kSaturated) return kSaturated;
    r = m / i;
  }
  return r;
}

Atom atom_at(int i) { return Atom(std::string(1, static_cast<char>('a' + i))); }

// Literal i of a universe: atom i/2, positive when even.
Literal literal_at(int i) { return Literal{atom_at(i / 2), i % 2 == 0}; }

struct Candidate {
  RuleKind kind;
  std::vector<int> body;  // literal indices, increasing
  int head;               // literal index, or -j for ~n_j
};

// Undercut heads ~n_j only for rules the theory can have: j <= rules.
std::vector<Candidate> candidates(int atoms, int rules, const SearchBounds& b) {
  const int lits = 2 * atoms;
  std::vector<std::vector<int>> bodies;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (!cur.empty()) bodies.push_back(cur);
    if (static_cast<int>(cur.size()) == b.max_body_len) return;
    for (int i = from; i < lits; ++i) {
      if (std::find(cur.begin(), cur.end(), i ^ 1) != cur.end()) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(bodies.begin(), bodies.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });

  std::vector<Candidate> out;
  const std::vector<RuleKind> kinds = b.strict_only ? std::vector{RuleKind::strict}
                                                    : std::vector{RuleKind::strict, RuleKind::defeasible};
  for (auto kind : kinds) {
    for (const auto& body : bodies) {
      for (int h = 0; h < lits; ++h) {
        if (std::find(body.begin(), body.end(), h) == body.end()) out.push_back({kind, body, h});
      }
      if (!b.strict_only) {
        for (int j = 1; j <= rules; ++j) out.push_back({kind, body, -j});
      }
    }
  }
  return out;
}

std::size_t placements(int atoms, bool strict_only) {
  std::size_t per_literal = strict_only ? 2 : 3;
  std::size_t r = 1;
  for (int i = 0; i < 2 * atoms; ++i) r = sat_mul(r, per_literal);
  return r;
}

ArgumentationTheory materialize(const std::vector<Candidate>& pool, const std::vector<std::size_t>& chosen,
                                const std::vector<int>& placement) {
  KnowledgeBase kb;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (placement[i] == 1) kb.axioms.insert(literal_at(static_cast<int>(i)));
    if (placement[i] == 2) kb.premises.insert(literal_at(static_cast<int>(i)));
  }
  std::vector<Rule> rules;
  int strict = 0, defeasible = 0;
  for (auto c : chosen) {
    const auto& cand = pool[c];
    Rule r;
    r.kind = cand.kind;
    for (int x : cand.body) r.body.push_back(literal_at(x));
    r.head = cand.head >= 0 ? literal_at(cand.head) : Literal{Atom("n" + std::to_string(-cand.head)), false};
    if (r.is_strict()) {
      r.id = "s" + std::to_string(++strict);
    } else {
      r.name = Literal{Atom("n" + std::to_string(++defeasible)), true};
      r.id = std::string(r.name->atom.name());
    }
    rules.push_back(std::move(r));
  }
  return ArgumentationTheory(std::move(kb), std::move(rules));
}

// Every theory with exactly `k` rules over `atoms` atoms, in canonical order:
// rule combinations lexicographically, then knowledge-base placements.
class Shell {
 public:
  Shell(int atoms, int k, const SearchBounds& b, bool require_all_atoms)
      : atoms_(atoms), strict_only_(b.strict_only), require_all_(require_all_atoms), pool_(candidates(atoms, k, b)) {
    combo_.resize(k);
    for (int i = 0; i < k; ++i) combo_[i] = i;
    done_ = static_cast<std::size_t>(k) > pool_.size();
    placement_.assign(2 * atoms, 0);
  }

  std::size_t size() const {
    return sat_mul(binomial(pool_.size(), combo_.size()), placements(atoms_, strict_only_));
  }

  std::optional<ArgumentationTheory> next() {
    while (!done_) {
      auto at = materialize(pool_, combo_, placement_);
      advance();
      if (!require_all_ || mentions_all(at)) return at;
    }
    return std::nullopt;
  }

 private:
  bool mentions_all(const ArgumentationTheory& at) const {
    const auto used = at.atoms();
    for (int i = 0; i < atoms_; ++i) {
      if (!used.contains(atom_at(i))) return false;
    }
    return true;
  }

  void advance() {
    const int base = strict_only_ ? 2 : 3;
    for (auto& p : placement_) {
      if (++p < base) return;
      p = 0;
    }
    const std::size_t k = combo_.size();
    const std::size_t n = pool_.size();
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (combo_[i] < n - k + i) {
        ++combo_[i];
        for (std::size_t j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

  int atoms_;
  bool strict_only_;
  bool require_all_;
  std::vector<Candidate> pool_;
  std::vector<std::size_t> combo_;
  std::vector<int> placement_;
  bool done_ = false;
};

}  // namespace

struct TheoryStream::Impl {
  SearchBounds bounds;
  std::size_t canonical = 0;
  bool exhaustive = false;
  std::vector<std::pair<int, int>> shells;  // (atoms, rules) still to run
  std::optional<Shell> current;
  std::size_t emitted = 0;
  std::mt19937_64 rng;
  std::vector<std::vector<std::vector<Candidate>>> pools;  // [atoms - 1][rules], for sampling

  explicit Impl(const SearchBounds& b) : bounds(b), rng(b.seed) {
    validate(b);
    const int A = b.max_atoms;
    for (int k = 0; k <= b.max_rules; ++k) {
      canonical = sat_add(canonical, Shell(A, k, b, false).size());
    }
    exhaustive = canonical <= b.limit;
    if (exhaustive) {
      for (int k = 0; k <= b.max_rules; ++k) shells.emplace_back(A, k);
      return;
    }
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= A; ++a) {
      for (int k = 0; k <= b.max_rules; ++k) all.emplace_back(a, k);
    }
    std::stable_sort(all.begin(), all.end(), [](auto x, auto y) {
      return std::pair(x.first + x.second, x.first) < std::pair(y.first + y.second, y.first);
    });
    std::size_t budget = b.limit / 2;
    for (auto [a, k] : all) {
      const auto size = Shell(a, k, b, true).size();
      if (size <= budget) {
        shells.emplace_back(a, k);
        budget -= size;
      }
    }
    pools.resize(A);
    for (int a = 1; a <= A; ++a) {
      for (int k = 0; k <= b.max_rules; ++k) pools[a - 1].push_back(candidates(a, k, b));
    }
  }

  std::optional<ArgumentationTheory> next() {
    if (emitted >= bounds.limit) return std::nullopt;
    while (true) {
      if (current) {
        if (auto at = current->next()) {
          ++emitted;
          return at;
        }
        current.reset();
      }
      if (shells.empty()) break;
      const auto [a, k] = shells.front();
      shells.erase(shells.begin());
      current.emplace(a, k, bounds, !exhaustive);
    }
    if (exhaustive) return std::nullopt;
    ++emitted;
    return sample();
  }

  ArgumentationTheory sample() {
    const int a = std::uniform_int_distribution<int>(1, bounds.max_atoms)(rng);
    int k = std::uniform_int_distribution<int>(0, bounds.max_rules)(rng);
    const auto& pool = pools[a - 1][k];
    k = std::min<int>(k, static_cast<int>(pool.size()));
    std::vector<std::size_t> chosen;
    while (static_cast<int>(chosen.size()) < k) {
      const auto c = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng);
      if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
    }
    std::sort(chosen.begin(), chosen.end());
    std::vector<int> placement(2 * a, 0);
    std::uniform_int_distribution<int> quarter(0, 3);
    for (auto& p : placement) {
      const int roll = quarter(rng);
      if (bounds.strict_only) {
        p = roll < 2 ? 0 : 1;
      } else {
        p = roll < 2 ? 0 : roll - 1;
      }
    }
    return materialize(pool, chosen, placement);
  }
};

TheoryStream::TheoryStream(const SearchBounds& bounds) : impl_(std::make_unique<Impl>(bounds)) {}
TheoryStream::~TheoryStream() = default;
TheoryStream::TheoryStream(TheoryStream&&) noexcept = default;
TheoryStream& TheoryStream::operator=(TheoryStream&&) noexcept = default;

std::optional<ArgumentationTheory> TheoryStream::next() { return impl_->next(); }
std::size_t TheoryStream::canonical_size() const { return impl_->canonical; }
bool TheoryStream::exhaustive() const { return impl_->exhaustive; }

std::vector<ArgumentationTheory> generate_theories(const SearchBounds& bounds) {
  std::vector<ArgumentationTheory> out;
  TheoryStream stream(bounds);
  while (auto at = stream.next()) out.push_back(std::move(*at));
  return out;
}

ArgumentationTheory prepare(const ArgumentationTheory& base, const SearchBounds& bounds) {
  return bounds.close_transposition ? transposition_closure(base) : base;
}

std::vector<Literal> binding_universe(const ArgumentationTheory& at) {
  std::set<Atom> atoms;
  for (const auto& x : at.kb().axioms) atoms.insert(x.atom);
  for (const auto& x : at.kb().premises) atoms.insert(x.atom);
  for (const auto& r : at.rules()) {
    for (const auto& x : r.body) atoms.insert(x.atom);
    atoms.insert(r.head.atom);
  }
  const auto taken = at.atoms();
  for (int i = 0;; ++i) {
    Atom fresh(i == 0 ? "z" : "z" + std::to_string(i));
    if (!taken.contains(fresh)) {
      atoms.insert(fresh);
      break;
    }
  }
  std::vector<Literal> out;
  for (const auto& a : atoms) {
    out.push_back({a, true});
    out.push_back({a, false});
  }
  return out;
}

std::string to_string(const SearchQuery& q) {
  std::string out(to_string(q.axiom));
  if (has_interpretation(q.axiom)) out += "/" + std::string(to_string(q.interp));
  return out + "/" + to_string(q.relation);
}

namespace {

std::vector<MetaVar> mentioned(const Statement& s) {
  std::vector<MetaVar> out;
  for (const auto& t : s.lhs) out.push_back(t.var);
  out.push_back(s.rhs.var);
  return out;
}

// Depth at which every variable of `s` is bound.
std::size_t level(const Statement& s, const std::vector<MetaVar>& order) {
  std::size_t d = 0;
  for (auto v : mentioned(s)) {
    d = std::max<std::size_t>(d, std::find(order.begin(), order.end(), v) - order.begin());
  }
  return d;
}

}  // namespace

std::optional<Bindings> find_failure(ConsequenceOracle& oracle, const SearchQuery& q,
                                     const std::vector<Literal>& universe) {
  const auto& sch = schema(q.axiom);
  const auto& vars = sch.variables;
  std::vector<std::vector<const Statement*>> checks(vars.size());
  for (const auto& p : sch.premises) checks[level(p, vars)].push_back(&p);

  Bindings b;
  auto rec = [&](auto&& self, std::size_t d) -> bool {
    for (const auto& x : universe) {
      b.set(vars[d], x);
      const bool ok = std::all_of(checks[d].begin(), checks[d].end(), [&](const Statement* s) {
        return evaluate_statement(oracle, *s, q.interp, b, q.relation);
      });
      if (!ok) continue;
      if (d + 1 < vars.size()) {
        if (self(self, d + 1)) return true;
      } else if (!evaluate_statement(oracle, sch.conclusion, q.interp, b, q.relation)) {
        return true;
      }
    }
    return false;
  };
  if (rec(rec, 0)) return b;
  return std::nullopt;
}

namespace {

ConsequenceOptions options_for(const SearchBounds& bounds) {
  ConsequenceOptions o;
  o.placement = placement_for(bounds);
  o.argument_cap = bounds.argument_cap;
  return o;
}

bool still_fails(const ArgumentationTheory& base, const SearchQuery& q, const Bindings& bindings,
                 const SearchBounds& bounds) {
  try {
    return evaluate_axiom(prepare(base, bounds), q.axiom, q.interp, bindings, q.relation, options_for(bounds)).status ==
           VerdictStatus::fails;
  } catch (const ResourceLimitError&) {
    return false;
  }
}

}  // namespace

Witness minimize(const ArgumentationTheory& base, const SearchQuery& q, const Bindings& bindings,
                 const SearchBounds& bounds) {
  auto current = base;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.rules().size() && !changed; ++i) {
      auto rules = current.rules();
      rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
      ArgumentationTheory candidate(current.kb(), std::move(rules));
      if (still_fails(candidate, q, bindings, bounds)) {
        current = std::move(candidate);
        changed = true;
      }
    }
    for (auto part : {&KnowledgeBase::axioms, &KnowledgeBase::premises}) {
      for (const auto& x : current.kb().*part) {
        if (changed) break;
        auto kb = current.kb();
        (kb.*part).erase(x);
        ArgumentationTheory candidate(std::move(kb), current.rules());
        if (still_fails(candidate, q, bindings, bounds)) {
          current = std::move(candidate);
          changed = true;
        }
      }
    }
  }
  auto at = prepare(current, bounds);
  auto verdict = evaluate_axiom(at, q.axiom, q.interp, bindings, q.relation, options_for(bounds));
  return {std::move(at), bindings, std::move(verdict)};
}

std::vector<SearchReport> search_counterexamples(const std::vector<SearchQuery>& queries, const SearchBounds& bounds,
                                                 bool minimize_witnesses) {
  validate(bounds);
  std::vector<SearchReport> reports;
  for (const auto& q : queries) reports.push_back({q, bounds, 0, 0, std::nullopt});
  std::size_t open = reports.size();

  TheoryStream stream(bounds);
  const auto options = options_for(bounds);
  while (open > 0) {
    auto base = stream.next();
    if (!base) break;
    const auto at = prepare(*base, bounds);
    const bool filtered = bounds.consistent_strict && !is_consistent(strict_closure(at.kb().axioms, at.rules()));
    ConsequenceOracle oracle(at, options);
    const auto universe = binding_universe(at);
    bool over_cap = false;
    for (auto& r : reports) {
      if (r.witness) continue;
      ++r.examined;
      if (filtered || over_cap) {
        ++r.skipped;
        continue;
      }
      std::optional<Bindings> found;
      try {
        found = find_failure(oracle, r.query, universe);
      } catch (const ResourceLimitError&) {
        over_cap = true;
        ++r.skipped;
        continue;
      }
      if (!found) continue;
      Witness w = minimize_witnesses ? minimize(*base, r.query, *found, bounds)
                                     : Witness{at, *found,
                                               evaluate_axiom(at, r.query.axiom, r.query.interp, *found,
                                                              r.query.relation, options)};
      const auto recheck =
          evaluate_axiom(w.theory, r.query.axiom, r.query.interp, w.bindings, r.query.relation, options);
      if (recheck.status != VerdictStatus::fails) {
        throw std::logic_error("witness for " + to_string(r.query) + " does not re-evaluate to fails");
      }
      r.witness = std::move(w);
      --open;
    }
  }
  return reports;
}

SearchReport search_counterexample(const SearchQuery& q, const SearchBounds& bounds, bool minimize_witness) {
  return search_counterexamples({q}, bounds, minimize_witness).front();
}

}  // namespace aspic
