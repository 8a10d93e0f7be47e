#include "aspic/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aspic/dsl.hpp"
#include "aspic/fixtures.hpp"
#include "aspic/report.hpp"

namespace aspic::cli {

std::string normalize_literal_text(std::string text) {
  const std::pair<std::string_view, std::string_view> aliases[] = {
      {"\xCE\xB1", "alpha"}, {"\xCE\xB2", "beta"}, {"\xCE\xB3", "gamma"}, {"\xC2\xAC", "~"}};
  for (const auto& [from, to] : aliases) {
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
      text.replace(pos, from.size(), to);
    }
  }
  return text;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Literal literal_arg(const std::string& text) {
  try {
    return parse_literal(normalize_literal_text(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Literal> literal_list(const std::string& text) {
  std::vector<Literal> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.find_first_not_of(' ') == std::string::npos) continue;
    out.push_back(literal_arg(item));
  }
  return out;
}

std::string join(const std::set<Literal>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ", ";
    out += to_string(x);
  }
  return out;
}

std::string ids(const Extension& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? ", " : "") + ArgumentSet::id(e[i]);
  return out + "}";
}

// FILE is a path, or the name of a bundled fixture when no such file exists.
ArgumentationTheory load(const std::string& where, std::ostream& err) {
  std::string text;
  if (!std::filesystem::exists(where) && find_fixture(where)) {
    text = find_fixture(where)->source;
  } else {
    std::ifstream in(where, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + where + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto result = dsl::parse(text);
  if (auto* errors = std::get_if<std::vector<dsl::ParseError>>(&result)) {
    for (const auto& e : *errors) err << where << ":" << dsl::format(e) << "\n";
    throw UsageError(std::to_string(errors->size()) + " error(s) in '" + where + "'");
  }
  return std::get<ArgumentationTheory>(std::move(result));
}

template <class F>
auto parsed(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct Common {
  std::string file;
  bool json = false;
  bool close = false;
  std::string add;
  std::string placement = "premises";
};

ArgumentationTheory theory_for(const Common& c, std::ostream& err) {
  auto at = load(c.file, err);
  if (c.close) at = transposition_closure(at);
  const auto adds = literal_list(c.add);
  if (!adds.empty()) {
    at = augment(at, adds, c.placement == "axioms" ? Placement::axioms : Placement::premises);
  }
  return at;
}

void add_common(CLI::App* sub, Common& c, bool augmentable = true) {
  sub->add_option("FILE", c.file, "theory file or bundled fixture name")->required();
  sub->add_flag("--json", c.json, "machine-readable output");
  sub->add_flag("--close-transposition", c.close, "close the theory under transposition first");
  if (augmentable) {
    sub->add_option("--add", c.add, "comma-separated literals to add to the knowledge base");
    sub->add_option("--placement", c.placement, "partition for added literals")
        ->check(CLI::IsMember({"premises", "axioms"}));
  }
}

void add_bounds(CLI::App* sub, SearchBounds& b) {
  sub->add_option("--max-atoms", b.max_atoms, "atoms per theory")->check(CLI::Range(1, 20));
  sub->add_option("--max-rules", b.max_rules, "rules per theory")->check(CLI::NonNegativeNumber);
  sub->add_option("--max-body-len", b.max_body_len, "literals per rule body")->check(CLI::PositiveNumber);
  sub->add_option("--limit", b.limit, "theories examined")->check(CLI::PositiveNumber);
  sub->add_option("--seed", b.seed, "sampling seed");
  sub->add_option("--argument-cap", b.argument_cap, "arguments per theory before it is skipped");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured argumentation engine and axiom laboratory", "aspic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common c;
  std::string semantics = "grounded";
  std::string mode = "grounded";
  std::string rel = "a";
  std::string interp = "strict";
  std::string axiom_name;
  std::string query;
  std::string alpha, beta, gamma;
  std::string dot_path;
  bool guard = false;
  bool minimize = true;
  SearchBounds bounds;
  bool closed = false;
  bool open_search = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse a theory and print its canonical form");
  add_common(parse_cmd, c, false);

  auto* args_cmd = app.add_subcommand("args", "list the arguments of a theory");
  add_common(args_cmd, c);

  auto* attacks_cmd = app.add_subcommand("attacks", "list attacks and defeats");
  add_common(attacks_cmd, c);
  attacks_cmd->add_option("--dot", dot_path, "write the defeat graph in DOT format");

  auto* ext_cmd = app.add_subcommand("extensions", "enumerate extensions");
  add_common(ext_cmd, c);
  ext_cmd->add_option("--semantics", semantics, "grounded, complete or preferred");

  auto* just_cmd = app.add_subcommand("justified", "justified conclusions");
  add_common(just_cmd, c);
  just_cmd->add_option("--mode", mode, "grounded, or SEMANTICS-sceptical / SEMANTICS-credulous");

  auto* cons_cmd = app.add_subcommand("consequence", "decide one instance of a consequence relation");
  add_common(cons_cmd, c, false);
  cons_cmd->add_option("--rel", rel, "a, j or j:MODE")->required();
  cons_cmd->add_option("--add", c.add, "comma-separated antecedent literals");
  cons_cmd->add_option("--query", query, "consequent literal")->required();
  cons_cmd->add_option("--placement", c.placement, "partition for added literals")
      ->check(CLI::IsMember({"premises", "axioms"}));
  cons_cmd->add_flag("--guard", guard, "count queries already derivable without the antecedent as satisfied");

  auto* axiom_cmd = app.add_subcommand("axiom", "evaluate one axiom instance");
  add_common(axiom_cmd, c, false);
  axiom_cmd->add_option("--axiom", axiom_name, "Ref, LLE, RW, Cut, CM, M, T or CP")->required();
  axiom_cmd->add_option("--interp", interp, "strict or defeasible");
  axiom_cmd->add_option("--rel", rel, "a, j or j:MODE")->required();
  axiom_cmd->add_option("--alpha", alpha, "binding for alpha")->required();
  axiom_cmd->add_option("--beta", beta, "binding for beta");
  axiom_cmd->add_option("--gamma", gamma, "binding for gamma");
  axiom_cmd->add_option("--placement", c.placement, "partition for added literals")
      ->check(CLI::IsMember({"premises", "axioms"}));
  axiom_cmd->add_flag("--guard", guard, "count queries already derivable without the antecedent as satisfied");

  auto* search_cmd = app.add_subcommand("search", "look for a counterexample to an axiom");
  search_cmd->add_option("--axiom", axiom_name, "Ref, LLE, RW, Cut, CM, M, T or CP")->required();
  search_cmd->add_option("--rel", rel, "a, j or j:MODE")->required();
  search_cmd->add_option("--interp", interp, "strict or defeasible");
  search_cmd->add_flag("--strict-only", bounds.strict_only, "strict theories only");
  search_cmd->add_flag("--close-transposition", bounds.close_transposition, "close every generated theory");
  search_cmd->add_flag("--consistent-strict", bounds.consistent_strict, "skip theories with inconsistent strict part");
  search_cmd->add_flag("!--no-minimize", minimize, "report the witness as found");
  search_cmd->add_flag("--json", c.json, "machine-readable output");
  add_bounds(search_cmd, bounds);

  auto* post_cmd = app.add_subcommand("postulates", "check closure and consistency of every extension");
  add_common(post_cmd, c);
  post_cmd->add_option("--semantics", semantics, "grounded, complete or preferred");

  auto* table_cmd = app.add_subcommand("table2", "reproduce the axiom table");
  add_bounds(table_cmd, bounds);
  table_cmd->add_option("--mode", mode, "justification mode for |~j");
  table_cmd->add_flag("--closed", closed, "variant run: close the fixtures under transposition");
  table_cmd->add_flag("--open-search", open_search, "do not close generated theories under transposition");
  table_cmd->add_flag("--json", c.json, "machine-readable output");

  std::string fixture_name;
  auto* fx_cmd = app.add_subcommand("fixtures", "list bundled fixtures, or print one");
  fx_cmd->add_option("NAME", fixture_name, "fixture to print");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  auto axiom_query = [&](Interpretation& in, Relation& r) {
    in = parsed([&] { return parse_interpretation(interp); });
    r = parsed([&] { return parse_relation(rel); });
  };

  try {
    if (parse_cmd->parsed()) {
      const auto at = theory_for(c, err);
      if (c.json) {
        out << report::theory(at).dump(2) << "\n";
      } else {
        out << dsl::serialize(at);
      }
      return kOk;
    }

    if (args_cmd->parsed()) {
      const auto args_set = construct_arguments(theory_for(c, err));
      if (c.json) {
        out << report::arguments(args_set).dump(2) << "\n";
      } else {
        for (ArgumentIndex i = 0; i < args_set.size(); ++i) {
          out << ArgumentSet::id(i) << ": " << args_set.expand(i) << "\n";
        }
      }
      return kOk;
    }

    if (attacks_cmd->parsed()) {
      const auto args_set = construct_arguments(theory_for(c, err));
      const auto atts = compute_attacks(args_set);
      const auto af = compute_defeats(args_set, atts);
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw UsageError("cannot write '" + dot_path + "'");
        dot << to_dot(args_set, atts, af);
      }
      if (c.json) {
        out << report::attacks(args_set, atts, af).dump(2) << "\n";
      } else {
        for (const auto& a : atts) {
          out << ArgumentSet::id(a.attacker) << " " << to_string(a.kind) << "s " << ArgumentSet::id(a.target);
          if (a.locus != a.target) out << " on " << ArgumentSet::id(a.locus);
          out << "\n";
        }
      }
      return kOk;
    }

    if (ext_cmd->parsed()) {
      const auto s = parsed([&] { return parse_semantics(semantics); });
      const auto args_set = construct_arguments(theory_for(c, err));
      const auto af = compute_defeats(args_set, compute_attacks(args_set));
      const auto exts = extensions(af, s);
      const auto sceptical = justified_conclusions(af, {s, Aggregation::sceptical});
      const auto credulous = justified_conclusions(af, {s, Aggregation::credulous});
      if (c.json) {
        out << report::extensions(af, s, exts, sceptical, credulous).dump(2) << "\n";
      } else {
        for (const auto& e : exts) out << ids(e) << ": " << join(conclusions_of(af, e)) << "\n";
      }
      return kOk;
    }

    if (just_cmd->parsed()) {
      const auto m = parsed([&] { return parse_mode(mode); });
      const auto args_set = construct_arguments(theory_for(c, err));
      const auto af = compute_defeats(args_set, compute_attacks(args_set));
      const auto concs = justified_conclusions(af, m);
      if (c.json) {
        out << report::justified(m, concs).dump(2) << "\n";
      } else {
        out << join(concs) << "\n";
      }
      return kOk;
    }

    if (cons_cmd->parsed()) {
      const auto r = parsed([&] { return parse_relation(rel); });
      ConsequenceOptions opts;
      opts.placement = c.placement == "axioms" ? Placement::axioms : Placement::premises;
      opts.guard = guard;
      auto at = load(c.file, err);
      if (c.close) at = transposition_closure(at);
      ConsequenceOracle oracle(at, opts);
      const auto adds = literal_list(c.add);
      const auto q = literal_arg(query);
      const bool holds = oracle.follows(r, adds, q);
      if (c.json) {
        report::json doc = {{"schema", "aspic-consequence/1"},
                            {"relation", to_string(r)},
                            {"add", report::literals({adds.begin(), adds.end()})},
                            {"query", to_string(q)},
                            {"follows", holds}};
        out << doc.dump(2) << "\n";
      } else {
        out << (holds ? "true" : "false") << "\n";
      }
      return kOk;
    }

    if (axiom_cmd->parsed()) {
      const auto ax = parsed([&] { return parse_axiom(axiom_name); });
      Interpretation in;
      Relation r;
      axiom_query(in, r);
      Bindings b;
      b.set(MetaVar::alpha, literal_arg(alpha));
      if (!beta.empty()) b.set(MetaVar::beta, literal_arg(beta));
      if (!gamma.empty()) b.set(MetaVar::gamma, literal_arg(gamma));
      for (auto v : schema(ax).variables) {
        if (!b.has(v)) throw UsageError(std::string(to_string(ax)) + " needs --" + std::string(to_string(v)));
      }
      ConsequenceOptions opts;
      opts.placement = c.placement == "axioms" ? Placement::axioms : Placement::premises;
      opts.guard = guard;
      auto at = load(c.file, err);
      if (c.close) at = transposition_closure(at);
      const auto v = evaluate_axiom(at, ax, in, b, r, opts);
      if (c.json) {
        out << report::verdict(ax, in, r, b, v).dump(2) << "\n";
      } else {
        out << to_string(v.status) << "\n";
        const auto& sch = schema(ax);
        for (std::size_t i = 0; i < v.premise_results.size(); ++i) {
          out << "  premise " << to_string(sch.premises[i]) << ": " << (v.premise_results[i] ? "true" : "false")
              << "\n";
        }
        if (v.conclusion_result) {
          out << "  conclusion " << to_string(sch.conclusion) << ": " << (*v.conclusion_result ? "true" : "false")
              << "\n";
        }
        if (!v.witness.empty()) out << "  " << v.witness << "\n";
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      SearchQuery q;
      q.axiom = parsed([&] { return parse_axiom(axiom_name); });
      axiom_query(q.interp, q.relation);
      parsed([&] {
        validate(bounds);
        return 0;
      });
      const auto r = search_counterexample(q, bounds, minimize);
      if (c.json) {
        out << report::search(r).dump(2) << "\n";
      } else if (r.witness) {
        out << "counterexample to " << to_string(q) << " after " << r.examined << " theories (" << r.skipped
            << " skipped)\n";
        out << "bindings " << to_string(r.witness->bindings) << "\n";
        out << dsl::serialize(r.witness->theory);
        out << r.witness->verdict.witness << "\n";
      } else {
        out << "no counterexample to " << to_string(q) << " in " << r.examined << " theories (" << r.skipped
            << " skipped)\n";
      }
      return kOk;
    }

    if (post_cmd->parsed()) {
      const auto s = parsed([&] { return parse_semantics(semantics); });
      const auto at = theory_for(c, err);
      const auto r = check_postulates(at, s);
      if (c.json) {
        out << report::postulates(s, r).dump(2) << "\n";
      } else {
        out << "strict part " << (r.strict_part_consistent ? "consistent" : "inconsistent") << "\n";
        for (const auto& e : r.extensions) {
          out << ids(e.extension) << ": closure " << (e.closure ? "yes" : "NO") << ", direct "
              << (e.direct ? "yes" : "NO") << ", indirect " << (e.indirect ? "yes" : "NO") << "\n";
        }
      }
      return r.all_hold() ? kOk : kViolation;
    }

    if (table_cmd->parsed()) {
      Table2Options opts;
      opts.bounds = bounds;
      opts.mode = parsed([&] { return parse_mode(mode); });
      opts.closed_fixtures = closed;
      opts.close_search = !open_search;
      parsed([&] {
        validate(bounds);
        return 0;
      });
      const auto start = std::chrono::steady_clock::now();
      const auto r = run_table2(opts);
      const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
      if (c.json) {
        out << report::table2(r).dump(2) << "\n";
      } else {
        out << format_grid(r) << "\n";
        for (const auto& cell : r.cells) {
          out << to_string(cell.axiom) << " " << (cell.relation.kind == RelationKind::construction ? "|~a" : "|~j")
              << ": " << to_string(cell.got);
          if (!cell.ok) out << " (expected " << to_string(cell.expected) << ")";
          for (const auto* sweep : {&cell.general, &cell.strict_only}) {
            for (const auto& s : *sweep) {
              if (!s.witness) continue;
              out << "; " << (s.bounds.strict_only ? "strict-only" : "general");
              if (has_interpretation(cell.axiom)) out << "/" << to_string(s.query.interp);
              out << " witness at theory " << s.examined << " " << to_string(s.witness->bindings);
              break;
            }
          }
          if (cell.fixture) out << "; " << cell.fixture->fixture << " " << to_string(cell.fixture->verdict.status);
          out << "\n";
        }
        out << (r.ok() ? "all cells match" : "MISMATCH") << " (" << static_cast<int>(secs.count() * 10) / 10.0
            << " s)\n";
      }
      return r.ok() ? kOk : kViolation;
    }

    if (fx_cmd->parsed()) {
      if (fixture_name.empty()) {
        for (const auto& f : fixtures()) out << f.name << "\n";
        return kOk;
      }
      const auto* f = find_fixture(fixture_name);
      if (!f) throw UsageError("unknown fixture '" + fixture_name + "'");
      out << f->source;
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TheoryError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace aspic::cli
