#include "aspic/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace aspic {

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::grounded: return "grounded";
    case Semantics::complete: return "complete";
    case Semantics::preferred: return "preferred";
  }
  return "?";
}

std::string_view to_string(Aggregation a) { return a == Aggregation::sceptical ? "sceptical" : "credulous"; }

Semantics parse_semantics(std::string_view text) {
  if (text == "grounded") return Semantics::grounded;
  if (text == "complete") return Semantics::complete;
  if (text == "preferred") return Semantics::preferred;
  throw std::invalid_argument("unknown semantics '" + std::string(text) + "'");
}

Aggregation parse_aggregation(std::string_view text) {
  if (text == "sceptical" || text == "skeptical") return Aggregation::sceptical;
  if (text == "credulous") return Aggregation::credulous;
  throw std::invalid_argument("unknown aggregation '" + std::string(text) + "'");
}

std::string to_string(const JustificationMode& m) {
  if (m.semantics == Semantics::grounded) return "grounded";
  return std::string(to_string(m.semantics)) + "-" + std::string(to_string(m.aggregation));
}

JustificationMode parse_mode(std::string_view text) {
  JustificationMode m;
  const auto dash = text.find('-');
  m.semantics = parse_semantics(text.substr(0, dash));
  if (dash != std::string_view::npos) m.aggregation = parse_aggregation(text.substr(dash + 1));
  return m;
}

namespace {

std::vector<char> membership(const AbstractFramework& af, const Extension& e) {
  std::vector<char> in(af.size(), 0);
  for (auto a : e) in.at(a) = 1;
  return in;
}

enum class Label : char { none, in, out, undec };

// Grounded labelling by unit propagation: an argument is in once every
// defeater is out, and out as soon as one defeater is in.
std::vector<Label> grounded_labelling(const AbstractFramework& af) {
  const auto n = af.size();
  std::vector<Label> label(n, Label::none);
  std::vector<std::size_t> live(n);
  std::vector<ArgumentIndex> queue;
  for (ArgumentIndex a = 0; a < n; ++a) {
    live[a] = af.attackers(a).size();
    if (live[a] == 0) {
      label[a] = Label::in;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const auto a = queue.back();
    queue.pop_back();
    for (auto t : af.targets(a)) {
      if (label[t] != Label::none) continue;
      label[t] = Label::out;
      for (auto u : af.targets(t)) {
        if (label[u] == Label::none && --live[u] == 0) {
          label[u] = Label::in;
          queue.push_back(u);
        }
      }
    }
  }
  for (auto& l : label) {
    if (l == Label::none) l = Label::undec;
  }
  return label;
}

class CompleteEnumerator {
 public:
  CompleteEnumerator(const AbstractFramework& af, std::vector<Label> grounded)
      : af_(af), label_(std::move(grounded)), open_(af.size(), 0) {
    for (ArgumentIndex a = 0; a < af.size(); ++a) {
      if (label_[a] == Label::undec) {
        undecided_.push_back(a);
        open_[a] = 1;
        label_[a] = Label::none;
      }
    }
  }

  const std::vector<ArgumentIndex>& undecided() const { return undecided_; }

  std::vector<Extension> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Complete-labelling legality of x given the labels assigned so far.
  bool consistent(ArgumentIndex x) const {
    if (label_[x] == Label::none) return true;
    bool any_in = false, any_undec = false, any_open = false;
    for (auto b : af_.attackers(x)) {
      switch (label_[b]) {
        case Label::in: any_in = true; break;
        case Label::undec: any_undec = true; break;
        case Label::none: any_open = true; break;
        case Label::out: break;
      }
    }
    switch (label_[x]) {
      case Label::in: return !any_in && !any_undec;
      case Label::out: return any_in || any_open;
      case Label::undec: return !any_in && (any_undec || any_open);
      case Label::none: return true;
    }
    return true;
  }

  void search(std::size_t k) {
    if (k == undecided_.size()) {
      Extension e;
      for (ArgumentIndex a = 0; a < af_.size(); ++a) {
        if (label_[a] == Label::in) e.push_back(a);
      }
      found_.push_back(std::move(e));
      return;
    }
    const auto x = undecided_[k];
    for (auto l : {Label::in, Label::out, Label::undec}) {
      label_[x] = l;
      bool ok = consistent(x);
      for (auto t : af_.targets(x)) {
        if (!ok) break;
        if (open_[t]) ok = consistent(t);
      }
      if (ok) search(k + 1);
    }
    label_[x] = Label::none;
  }

  const AbstractFramework& af_;
  std::vector<Label> label_;
  std::vector<char> open_;  // 1 for arguments decided by the search
  std::vector<ArgumentIndex> undecided_;
  std::vector<Extension> found_;
};

}  // namespace

bool is_conflict_free(const AbstractFramework& af, const Extension& e) {
  const auto in = membership(af, e);
  for (auto a : e) {
    for (auto t : af.targets(a)) {
      if (in[t]) return false;
    }
  }
  return true;
}

Extension characteristic(const AbstractFramework& af, const Extension& e) {
  const auto in = membership(af, e);
  std::vector<char> defeated(af.size(), 0);
  for (auto c : e) {
    for (auto t : af.targets(c)) defeated[t] = 1;
  }
  Extension out;
  for (ArgumentIndex a = 0; a < af.size(); ++a) {
    const auto& att = af.attackers(a);
    if (std::all_of(att.begin(), att.end(), [&](ArgumentIndex b) { return defeated[b] != 0; })) out.push_back(a);
  }
  return out;
}

Extension grounded_extension(const AbstractFramework& af) {
  const auto label = grounded_labelling(af);
  Extension out;
  for (ArgumentIndex a = 0; a < af.size(); ++a) {
    if (label[a] == Label::in) out.push_back(a);
  }
  return out;
}

std::vector<Extension> complete_extensions(const AbstractFramework& af, EnumerationLimits limits) {
  CompleteEnumerator search(af, grounded_labelling(af));
  if (search.undecided().size() > limits.max_undecided) {
    throw ResourceLimitError("complete-extension enumeration: " + std::to_string(search.undecided().size()) +
                             " undecided arguments exceed the limit of " + std::to_string(limits.max_undecided));
  }
  return search.run();
}

std::vector<Extension> preferred_extensions(const AbstractFramework& af, EnumerationLimits limits) {
  const auto complete = complete_extensions(af, limits);
  std::vector<Extension> out;
  for (const auto& e : complete) {
    const bool dominated = std::any_of(complete.begin(), complete.end(), [&](const Extension& f) {
      return f.size() > e.size() && std::includes(f.begin(), f.end(), e.begin(), e.end());
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

std::vector<Extension> extensions(const AbstractFramework& af, Semantics s, EnumerationLimits limits) {
  switch (s) {
    case Semantics::grounded: return {grounded_extension(af)};
    case Semantics::complete: return complete_extensions(af, limits);
    case Semantics::preferred: return preferred_extensions(af, limits);
  }
  return {};
}

std::set<Literal> conclusions_of(const AbstractFramework& af, const Extension& e) {
  if (af.conclusions().size() != af.size()) {
    throw std::logic_error("framework carries no argument conclusions");
  }
  std::set<Literal> out;
  for (auto a : e) out.insert(af.conclusions()[a]);
  return out;
}

std::set<Literal> justified_conclusions(const AbstractFramework& af, JustificationMode mode, EnumerationLimits limits) {
  if (mode.semantics == Semantics::grounded) return conclusions_of(af, grounded_extension(af));
  const auto exts = extensions(af, mode.semantics, limits);
  std::set<Literal> out;
  bool first = true;
  for (const auto& e : exts) {
    auto concs = conclusions_of(af, e);
    if (mode.aggregation == Aggregation::credulous || first) {
      out.insert(concs.begin(), concs.end());
    } else {
      std::set<Literal> kept;
      std::set_intersection(out.begin(), out.end(), concs.begin(), concs.end(), std::inserter(kept, kept.end()));
      out = std::move(kept);
    }
    first = false;
  }
  return out;
}

}  // namespace aspic
