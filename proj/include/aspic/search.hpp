#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aspic/consequence.hpp"

namespace aspic {

struct SearchBounds {
  int max_atoms = 4;     // atoms a, b, c, ... (at most 20)
  int max_rules = 6;
  int max_body_len = 2;
  bool strict_only = false;          // Kp empty, strict rules only; adds go to Kn
  bool close_transposition = false;  // close every generated theory
  bool consistent_strict = false;    // drop theories whose strict part is inconsistent
  std::size_t limit = 10'000;        // theories examined
  std::uint64_t seed = 42;
  std::size_t argument_cap = kDefaultArgumentCap;
};

// Throws std::invalid_argument for out-of-range bounds.
void validate(const SearchBounds& b);

// Where augment puts added literals for theories drawn under these bounds.
Placement placement_for(const SearchBounds& b);

// Canonical enumeration while the bounded space fits in `limit`; otherwise
// whole small shells first (by atoms + rules, then atoms), then seeded
// sampling until `limit` theories have been produced. Yields theories
// before transposition closure and the consistency filter.
class TheoryStream {
 public:
  explicit TheoryStream(const SearchBounds& bounds);
  ~TheoryStream();
  TheoryStream(TheoryStream&&) noexcept;
  TheoryStream& operator=(TheoryStream&&) noexcept;

  std::optional<ArgumentationTheory> next();
  // Size of the full canonical space, saturating at SIZE_MAX.
  std::size_t canonical_size() const;
  bool exhaustive() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<ArgumentationTheory> generate_theories(const SearchBounds& bounds);

// The theory as the search evaluates it: closed if requested.
ArgumentationTheory prepare(const ArgumentationTheory& base, const SearchBounds& bounds);

// Literals the search binds meta-variables to: both signs of every atom the
// theory mentions outside rule names, plus one fresh atom.
std::vector<Literal> binding_universe(const ArgumentationTheory& at);

struct SearchQuery {
  AxiomId axiom = AxiomId::Ref;
  Interpretation interp = Interpretation::strict;
  Relation relation;
};

std::string to_string(const SearchQuery& q);  // "T/strict/j"

struct Witness {
  ArgumentationTheory theory;
  Bindings bindings;
  Verdict verdict;
};

struct SearchReport {
  SearchQuery query;
  SearchBounds bounds;
  std::size_t examined = 0;  // theories evaluated up to and including the witness
  std::size_t skipped = 0;   // theories over the argument cap, or filtered out
  std::optional<Witness> witness;
};

// First failing instance of `q` on `at`, bindings in canonical order.
std::optional<Bindings> find_failure(ConsequenceOracle& oracle, const SearchQuery& q,
                                     const std::vector<Literal>& universe);

// Greedily drops rules and knowledge-base literals of `base` while the
// instance still fails; when closing, each candidate is re-closed.
Witness minimize(const ArgumentationTheory& base, const SearchQuery& q, const Bindings& bindings,
                 const SearchBounds& bounds);

// One pass over the theory stream answering every query. Each witness is
// self-checked before it is returned.
std::vector<SearchReport> search_counterexamples(const std::vector<SearchQuery>& queries, const SearchBounds& bounds,
                                                 bool minimize_witnesses = true);
SearchReport search_counterexample(const SearchQuery& q, const SearchBounds& bounds, bool minimize_witness = true);

}  // namespace aspic
