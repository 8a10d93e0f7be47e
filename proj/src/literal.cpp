#include "aspic/literal.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace aspic {

namespace {

class SymbolTable {
 public:
  SymbolTable() { names_.emplace_back(); }

  std::pair<std::uint32_t, const std::string*> intern(std::string_view name) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = ids_.find(name); it != ids_.end()) return {it->second, &names_[it->second]};
    }
    std::unique_lock lock(mutex_);
    if (auto it = ids_.find(name); it != ids_.end()) return {it->second, &names_[it->second]};
    const auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(std::string_view(names_.back()), id);
    return {id, &names_.back()};
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;  // deque keeps element addresses stable
  std::unordered_map<std::string_view, std::uint32_t> ids_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

Atom::Atom(std::string_view name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + std::string(name) + "'");
  }
  std::tie(id_, name_) = symbols().intern(name);
}

std::string to_string(Literal x) {
  std::string out = x.positive ? "" : "~";
  out += x.atom.name();
  return out;
}

Literal parse_literal(std::string_view text) {
  bool positive = true;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '~') {
    positive = false;
    text.remove_prefix(1);
  }
  if (!is_valid_atom_name(text)) {
    throw std::invalid_argument("malformed literal '" + std::string(text) + "'");
  }
  return Literal{Atom(text), positive};
}

}  // namespace aspic
