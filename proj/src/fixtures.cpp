#include "aspic/fixtures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "aspic/dsl.hpp"

namespace aspic {

namespace detail {
std::span<const Fixture> bundled_fixtures();
}

std::span<const Fixture> fixtures() { return detail::bundled_fixtures(); }

const Fixture* find_fixture(std::string_view name) {
  const auto all = fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  return it == all.end() ? nullptr : &*it;
}

ArgumentationTheory load_fixture(std::string_view name) {
  const auto* f = find_fixture(name);
  if (!f) throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
  return dsl::parse_or_throw(f->source);
}

}  // namespace aspic
