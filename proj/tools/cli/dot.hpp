#pragma once

#include <string>

#include "invsg/dfa.hpp"

namespace invsg::cli {

  // Graphviz text for d, one edge per state and letter. Letters are printed
  // as "a0", "a1", ...
  std::string export_dot(Dfa const& d);

}  // namespace invsg::cli
