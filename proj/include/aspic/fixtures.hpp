#pragma once

#include <span>
#include <string_view>

#include "aspic/theory.hpp"

namespace aspic {

// Theories bundled with the library, compiled in from fixtures/*.at.
struct Fixture {
  std::string_view name;
  std::string_view source;
};

std::span<const Fixture> fixtures();
const Fixture* find_fixture(std::string_view name);
// Throws std::invalid_argument for an unknown name.
ArgumentationTheory load_fixture(std::string_view name);

}  // namespace aspic
