#pragma once

#include <functional>
#include <string>
#include <vector>

#include "skewknh/galois.hpp"

namespace skewknh {

struct SelfCheck {
  std::string name;  // "<module>.<property>"
  std::function<bool()> run;
};

// Property checks on built-in small fields; `extra` fields get the field
// axiom and engine equivalence checks as well.
std::vector<SelfCheck> selftest_checks(const std::vector<FieldPtr>& extra = {});

}  // namespace skewknh
