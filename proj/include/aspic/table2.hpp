#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspic/search.hpp"

namespace aspic {

// Y: no counterexample. (Y): counterexamples only outside strict theories.
// [Y]: counterexamples only under the defeasible reading of rules. N: fails
// even for strict theories.
enum class Cell { Y, strict_theories_only, strict_rules_only, N };
std::string_view to_string(Cell c);  // "Y", "(Y)", "[Y]", "N"

struct Table2Options {
  SearchBounds bounds;
  bool close_search = true;      // close generated theories under transposition
  bool closed_fixtures = false;  // variant run: close the fixtures too
  JustificationMode mode;
};

struct FixtureCheck {
  std::string fixture;
  SearchQuery query;
  Bindings bindings;
  Verdict verdict;
  bool ok() const { return verdict.status == VerdictStatus::fails; }
};

struct Table2Cell {
  AxiomId axiom;
  Relation relation;
  Cell expected;
  Cell got;
  std::vector<SearchReport> general;      // defeasible bounds, one per interpretation
  std::vector<SearchReport> strict_only;  // strict theories, one per interpretation
  std::optional<FixtureCheck> fixture;
  bool ok = false;
};

struct Table2Result {
  Table2Options options;
  std::vector<Table2Cell> cells;  // construction row, then justified row
  bool ok() const;
};

Cell expected_cell(RelationKind relation, AxiomId axiom);

// Classifies one cell from its two sweeps.
Cell classify(AxiomId axiom, const std::vector<SearchReport>& general, const std::vector<SearchReport>& strict_only);

std::vector<FixtureCheck> fixture_checks(bool closed = false, JustificationMode mode = {});

Table2Result run_table2(const Table2Options& options);

// Fixed-width grid, one row per relation.
std::string format_grid(const Table2Result& r);

}  // namespace aspic
