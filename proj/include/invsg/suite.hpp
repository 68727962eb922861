#pragma once

#include <cstddef>
#include <cstdint>

#include "invsg/serialize.hpp"
#include "invsg/types.hpp"

namespace invsg {

  struct SuiteOptions {
    std::uint64_t seed   = kDefaultSeed;
    std::size_t   trials = 64;
  };

  // Runs every check on the standard corpus and returns the combined report.
  // A failed check is recorded in the report rather than thrown; "ok" at the
  // top level is the conjunction.
  Json run_check_suite(SuiteOptions const& options = {});

}  // namespace invsg
