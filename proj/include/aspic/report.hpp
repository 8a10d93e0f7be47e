#pragma once

#include <json.hpp>

#include "aspic/arguments.hpp"
#include "aspic/consequence.hpp"
#include "aspic/search.hpp"
#include "aspic/semantics.hpp"
#include "aspic/table2.hpp"

// JSON renderings for --json output. Every top-level document carries a
// versioned "schema" field.
namespace aspic::report {

using nlohmann::json;

json theory(const ArgumentationTheory& at);  // aspic-theory/1
json arguments(const ArgumentSet& args);     // aspic-arguments/1
json attacks(const ArgumentSet& args, const std::vector<Attack>& attacks, const AbstractFramework& af);
json extensions(const AbstractFramework& af, Semantics s, const std::vector<Extension>& exts,
                const std::set<Literal>& sceptical, const std::set<Literal>& credulous);
json justified(JustificationMode mode, const std::set<Literal>& concs);
json verdict(AxiomId axiom, Interpretation interp, const Relation& relation, const Bindings& bindings,
             const Verdict& v);
json search(const SearchReport& r);
json postulates(Semantics s, const PostulateReport& r);
json table2(const Table2Result& r);

json literals(const std::set<Literal>& xs);
json bindings(const Bindings& b);
json bounds(const SearchBounds& b);

}  // namespace aspic::report
