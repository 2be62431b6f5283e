#pragma once

#include "catbase/core.hpp"

namespace catbase {

struct BaseFactory {
  static CategoryBase validated(int n, SetFamily regions) { return CategoryBase(n, std::move(regions), true); }
};

}  // namespace catbase
