#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invsg/cayley_table.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  // A multiplication-preserving bijection from s onto t, as the image of each
  // element of s, if one exists. Assumes both tables are associative.
  //
  // The search assigns images to a greedy generating set of s one at a time,
  // propagates each partial assignment through the subsemigroup it generates
  // and backtracks on conflict. Candidates are pruned by a per-element
  // fingerprint (index and period of the element, row and column image
  // sizes). Throws ResourceLimit if either size exceeds cap.
  std::optional<std::vector<Element>>
  find_isomorphism(CayleyTable const& s,
                   CayleyTable const& t,
                   std::size_t        cap = kDefaultIsomorphismCap);

  bool are_isomorphic(CayleyTable const& s,
                      CayleyTable const& t,
                      std::size_t        cap = kDefaultIsomorphismCap);

  bool are_isomorphic(FiniteInverseSemigroup const& s,
                      FiniteInverseSemigroup const& t,
                      std::size_t                   cap = kDefaultIsomorphismCap);

}  // namespace invsg
