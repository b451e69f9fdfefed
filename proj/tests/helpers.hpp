#pragma once

#include <string_view>

#include "qset/notation.hpp"

namespace testing_helpers {

inline qset::QSet Q(std::string_view text) {
  qset::Entity e = qset::parse(text);
  REQUIRE(e.as_qset() != nullptr);
  return *e.as_qset();
}

inline qset::Entity E(std::string_view text) { return qset::parse(text); }

}  // namespace testing_helpers
