#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace invsg::cli {

  // Runs one command line (without the program name) and returns the exit
  // status: 0 success, 1 rejected input, 2 invariant violation, 3 resource
  // limit. Documents are read from the named file or from in.
  int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace invsg::cli
