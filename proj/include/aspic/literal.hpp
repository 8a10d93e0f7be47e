#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace aspic {

bool is_valid_atom_name(std::string_view name);

// Interned propositional atom. Names live in a process-wide symbol table, so
// copies are cheap and equality is an integer compare.
class Atom {
 public:
  Atom() = default;
  // Throws std::invalid_argument unless the name matches [A-Za-z0-9_]+.
  explicit Atom(std::string_view name);

  std::string_view name() const { return name_ ? std::string_view(*name_) : std::string_view(); }
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != 0; }

  friend bool operator==(Atom a, Atom b) { return a.id_ == b.id_; }
  // Orders by name so that iteration order never depends on interning history.
  friend std::strong_ordering operator<=>(Atom a, Atom b) {
    if (a.id_ == b.id_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  const std::string* name_ = nullptr;  // owned by the symbol table, never freed
  std::uint32_t id_ = 0;
};

// A signed atom. The language is closed under bar().
struct Literal {
  Atom atom;
  bool positive = true;

  Literal() = default;
  Literal(Atom a, bool pos) : atom(a), positive(pos) {}
  explicit Literal(std::string_view atom_name, bool pos = true) : atom(atom_name), positive(pos) {}

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    // positive before negative
    return b.positive <=> a.positive;
  }
};

inline Literal bar(Literal x) { return Literal{x.atom, !x.positive}; }

// "a" / "~a"
std::string to_string(Literal x);

// Accepts "a", "~a"; throws std::invalid_argument otherwise.
Literal parse_literal(std::string_view text);

}  // namespace aspic

template <>
struct std::hash<aspic::Literal> {
  std::size_t operator()(const aspic::Literal& x) const noexcept {
    return (static_cast<std::size_t>(x.atom.id()) << 1) | (x.positive ? 0U : 1U);
  }
};
