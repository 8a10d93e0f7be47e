#include "aspic/report.hpp"

namespace aspic::report {

namespace {

json rule(const Rule& r) {
  json body = json::array();
  for (const auto& x : r.body) body.push_back(to_string(x));
  json out = {{"id", r.id}, {"kind", r.is_strict() ? "strict" : "defeasible"}, {"body", body},
              {"head", to_string(r.head)}};
  out["name"] = r.name ? json(to_string(*r.name)) : json(nullptr);
  return out;
}

json extension(const Extension& e) {
  json ids = json::array();
  for (auto a : e) ids.push_back(ArgumentSet::id(a));
  return ids;
}

}  // namespace

json literals(const std::set<Literal>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

json bindings(const Bindings& b) {
  json out = json::object();
  for (const auto& [v, x] : b.values()) out[std::string(to_string(v))] = to_string(x);
  return out;
}

json theory(const ArgumentationTheory& at) {
  json rules = json::array();
  for (const auto& r : at.rules()) rules.push_back(rule(r));
  return {{"schema", "aspic-theory/1"},
          {"kb", {{"axioms", literals(at.kb().axioms)}, {"premises", literals(at.kb().premises)}}},
          {"rules", rules},
          {"strict", is_strict(at)}};
}

json arguments(const ArgumentSet& args) {
  json list = json::array();
  for (ArgumentIndex i = 0; i < args.size(); ++i) {
    json prem = json::array();
    for (const auto& x : args.premises(i)) prem.push_back(to_string(x));
    json subs = json::array();
    for (auto s : args.sub_arguments(i)) subs.push_back(ArgumentSet::id(s));
    const Rule* top = args.top_rule(i);
    list.push_back({{"id", ArgumentSet::id(i)},
                    {"conclusion", to_string(args.conclusion(i))},
                    {"premises", prem},
                    {"sub_arguments", subs},
                    {"top_rule", top ? json(top->id) : json(nullptr)},
                    {"text", args.expand(i)}});
  }
  return {{"schema", "aspic-arguments/1"}, {"count", args.size()}, {"arguments", list}};
}

json attacks(const ArgumentSet& args, const std::vector<Attack>& atts, const AbstractFramework& af) {
  (void)args;
  json list = json::array();
  for (const auto& a : atts) {
    list.push_back({{"attacker", ArgumentSet::id(a.attacker)},
                    {"target", ArgumentSet::id(a.target)},
                    {"kind", to_string(a.kind)},
                    {"locus", ArgumentSet::id(a.locus)}});
  }
  json defeats = json::array();
  for (const auto& [a, b] : af.defeats()) defeats.push_back({ArgumentSet::id(a), ArgumentSet::id(b)});
  return {{"schema", "aspic-attacks/1"}, {"attacks", list}, {"defeats", defeats}};
}

json extensions(const AbstractFramework& af, Semantics s, const std::vector<Extension>& exts,
                const std::set<Literal>& sceptical, const std::set<Literal>& credulous) {
  json list = json::array();
  for (const auto& e : exts) {
    list.push_back({{"arguments", extension(e)}, {"conclusions", literals(conclusions_of(af, e))}});
  }
  return {{"schema", "aspic-extensions/1"},
          {"semantics", to_string(s)},
          {"extensions", list},
          {"justified", {{"sceptical", literals(sceptical)}, {"credulous", literals(credulous)}}}};
}

json justified(JustificationMode mode, const std::set<Literal>& concs) {
  return {{"schema", "aspic-justified/1"}, {"mode", to_string(mode)}, {"conclusions", literals(concs)}};
}

json verdict(AxiomId axiom, Interpretation interp, const Relation& relation, const Bindings& b, const Verdict& v) {
  json out = {{"schema", "aspic-verdict/1"},
              {"axiom", to_string(axiom)},
              {"interpretation", has_interpretation(axiom) ? json(to_string(interp)) : json(nullptr)},
              {"relation", to_string(relation)},
              {"bindings", bindings(b)},
              {"status", to_string(v.status)},
              {"premise_results", v.premise_results}};
  out["conclusion_result"] = v.conclusion_result ? json(*v.conclusion_result) : json(nullptr);
  out["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
  return out;
}

json bounds(const SearchBounds& b) {
  return {{"max_atoms", b.max_atoms},       {"max_rules", b.max_rules},
          {"max_body_len", b.max_body_len}, {"strict_only", b.strict_only},
          {"close_transposition", b.close_transposition}, {"consistent_strict", b.consistent_strict},
          {"limit", b.limit},               {"seed", b.seed}};
}

json search(const SearchReport& r) {
  json out = {{"schema", "aspic-search/1"},
              {"axiom", to_string(r.query.axiom)},
              {"relation", to_string(r.query.relation)},
              {"interpretation", has_interpretation(r.query.axiom) ? json(to_string(r.query.interp)) : json(nullptr)},
              {"bounds", bounds(r.bounds)},
              {"examined", r.examined},
              {"skipped", r.skipped}};
  if (r.witness) {
    auto t = theory(r.witness->theory);
    t.erase("schema");
    out["witness"] = {{"theory", t},
                      {"bindings", bindings(r.witness->bindings)},
                      {"status", to_string(r.witness->verdict.status)},
                      {"explanation", r.witness->verdict.witness}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json postulates(Semantics s, const PostulateReport& r) {
  json list = json::array();
  for (const auto& e : r.extensions) {
    list.push_back({{"arguments", extension(e.extension)},
                    {"conclusions", literals(e.conclusions)},
                    {"closure", e.closure},
                    {"direct_consistency", e.direct},
                    {"indirect_consistency", e.indirect}});
  }
  return {{"schema", "aspic-postulates/1"},
          {"semantics", to_string(s)},
          {"strict_part_consistent", r.strict_part_consistent},
          {"extensions", list},
          {"all_hold", r.all_hold()}};
}

json table2(const Table2Result& r) {
  json cells = json::array();
  for (const auto& c : r.cells) {
    json general = json::array();
    for (const auto& s : c.general) general.push_back(search(s));
    json strict = json::array();
    for (const auto& s : c.strict_only) strict.push_back(search(s));
    json cell = {{"axiom", to_string(c.axiom)},
                 {"relation", to_string(c.relation)},
                 {"expected", to_string(c.expected)},
                 {"got", to_string(c.got)},
                 {"ok", c.ok},
                 {"general", general},
                 {"strict_only", strict}};
    if (c.fixture) {
      cell["fixture"] = {{"name", c.fixture->fixture},
                         {"bindings", bindings(c.fixture->bindings)},
                         {"status", to_string(c.fixture->verdict.status)}};
    }
    cells.push_back(cell);
  }
  return {{"schema", "aspic-table2/1"},
          {"bounds", bounds(r.options.bounds)},
          {"close_search", r.options.close_search},
          {"closed_fixtures", r.options.closed_fixtures},
          {"mode", to_string(r.options.mode)},
          {"cells", cells},
          {"ok", r.ok()}};
}

}  // namespace aspic::report
