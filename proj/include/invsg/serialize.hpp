#pragma once

#include <json.hpp>

#include "invsg/cayley_table.hpp"
#include "invsg/checks.hpp"
#include "invsg/congruence.hpp"
#include "invsg/dfa.hpp"
#include "invsg/lambda_product.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/syntactic.hpp"

namespace invsg {

  // JSON renderings of library values. Key order is fixed, so equal values
  // always serialise to identical text.
  using Json = nlohmann::ordered_json;

  char const* to_string(ProblemKind kind) noexcept;

  Json serialize(MultiplicationReport const& report);
  Json serialize(FiniteInverseSemigroup const& s, bool with_table = true);
  Json serialize(Congruence const& c);
  Json serialize(Dfa const& d);
  Json serialize(SyntacticAlgebra const& sa);
  Json serialize(ProjectionReport const& report);
  Json serialize(EUnitaryReport const& report);
  Json serialize(GeneratorInvarianceReport const& report);
  Json serialize(MainTheoremReport const& report);
  Json serialize(LambdaProduct const& product);
  Json serialize(LocalFinitenessReport const& report);

}  // namespace invsg
