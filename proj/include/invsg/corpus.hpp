#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "invsg/lambda_product.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // The five-element Brandt semigroup, generated by a = {0->1} and its
  // inverse {1->0}, in that order.
  FiniteInverseSemigroup brandt_b2();

  // Cyclic group of order n, generated by the n-cycle on {0, ..., n - 1}.
  FiniteInverseSemigroup cyclic_group(std::size_t n);

  // Z2 acting on free_semilattice(2) by swapping {1} and {2}.
  EndomorphismAction swap_action();

  // B2 acting on free_semilattice(2) by sending everything to {1,2}; only
  // the pairs with first component {1,2} survive the universe condition.
  EndomorphismAction b2_constant_action();

  struct CorpusEntry {
    std::string            name;
    FiniteInverseSemigroup semigroup;
  };

  // I1, I2, I3, B2, Z2, Z4, the free semilattices of rank 1 to 4, and the
  // lambda-semidirect products of swap_action and b2_constant_action.
  std::vector<CorpusEntry> standard_corpus();

  // The semigroup case always; the monoid case too when s has an identity.
  std::vector<ProblemKind> applicable_kinds(FiniteInverseSemigroup const& s);

}  // namespace invsg
