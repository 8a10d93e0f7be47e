#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "aspic/arguments.hpp"

namespace aspic {

// Sorted argument indices.
using Extension = std::vector<ArgumentIndex>;

enum class Semantics { grounded, complete, preferred };
enum class Aggregation { sceptical, credulous };

std::string_view to_string(Semantics s);
std::string_view to_string(Aggregation a);
Semantics parse_semantics(std::string_view text);
Aggregation parse_aggregation(std::string_view text);

struct JustificationMode {
  Semantics semantics = Semantics::grounded;
  Aggregation aggregation = Aggregation::sceptical;  // ignored for grounded

  friend bool operator==(const JustificationMode&, const JustificationMode&) = default;
};

std::string to_string(const JustificationMode& m);

// "grounded", "preferred-sceptical", "complete-credulous", ...
JustificationMode parse_mode(std::string_view text);

struct EnumerationLimits {
  // Arguments left undecided by the grounded labelling; the labelling search
  // is exponential in this number.
  std::size_t max_undecided = 64;
};

bool is_conflict_free(const AbstractFramework& af, const Extension& e);

// F(E): the arguments all of whose defeaters are defeated by a member of E.
Extension characteristic(const AbstractFramework& af, const Extension& e);

// Least fixpoint of the characteristic function.
Extension grounded_extension(const AbstractFramework& af);

// All complete extensions in canonical (lexicographic) order. Throws
// ResourceLimitError above limits.max_undecided.
std::vector<Extension> complete_extensions(const AbstractFramework& af, EnumerationLimits limits = {});

// The inclusion-maximal complete extensions, canonical order.
std::vector<Extension> preferred_extensions(const AbstractFramework& af, EnumerationLimits limits = {});

std::vector<Extension> extensions(const AbstractFramework& af, Semantics s, EnumerationLimits limits = {});

std::set<Literal> conclusions_of(const AbstractFramework& af, const Extension& e);

// Concs of the grounded extension, or the intersection (sceptical) / union
// (credulous) of Concs over the chosen semantics' extensions. Requires a
// framework carrying conclusions.
std::set<Literal> justified_conclusions(const AbstractFramework& af, JustificationMode mode = {},
                                        EnumerationLimits limits = {});

}  // namespace aspic
