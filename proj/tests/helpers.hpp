#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "aspic/dsl.hpp"
#include "aspic/fixtures.hpp"
#include "aspic/literal.hpp"

namespace aspic::test {

inline Literal L(const char* text) { return parse_literal(text); }

inline std::vector<Literal> Ls(std::initializer_list<const char*> xs) {
  std::vector<Literal> out;
  for (auto x : xs) out.push_back(L(x));
  return out;
}

inline std::set<Literal> Set(std::initializer_list<const char*> xs) {
  std::set<Literal> out;
  for (auto x : xs) out.insert(L(x));
  return out;
}

inline ArgumentationTheory T(const char* text) { return dsl::parse_or_throw(text); }

}  // namespace aspic::test
