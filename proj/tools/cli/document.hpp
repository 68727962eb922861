#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "invsg/errors.hpp"
#include "invsg/lambda_product.hpp"
#include "invsg/partial_bijection.hpp"
#include "invsg/semigroup.hpp"

namespace invsg::cli {

  // {"kind":"partial-bijection-generators","degree":2,"generators":[[1,null]]}
  struct GeneratorsPayload {
    std::size_t                   degree;
    std::vector<PartialBijection> generators;

    friend bool operator==(GeneratorsPayload const&, GeneratorsPayload const&) = default;
  };

  // {"kind":"multiplication-table","size":1,"table":[[0]],"generators":[0]}
  // An empty generator list means "choose greedily".
  struct TablePayload {
    std::vector<std::vector<Element>> table;
    std::vector<Element>              generators;

    friend bool operator==(TablePayload const&, TablePayload const&) = default;
  };

  using SemigroupPayload = std::variant<GeneratorsPayload, TablePayload>;

  // {"kind":"action","actor":{...},"target":{...},"act":[[...]],
  //  "generators":[[alpha,g],...]}; act[g][alpha] = g . alpha.
  struct ActionPayload {
    SemigroupPayload                  actor;
    SemigroupPayload                  target;
    std::vector<std::vector<Element>> act;
    std::vector<LambdaPair>           generators;

    friend bool operator==(ActionPayload const&, ActionPayload const&) = default;
  };

  // Optional top-level keys "monoid", "max_closure" and "seed".
  struct DocumentFlags {
    std::optional<bool>          monoid;
    std::optional<std::size_t>   max_closure;
    std::optional<std::uint64_t> seed;

    friend bool operator==(DocumentFlags const&, DocumentFlags const&) = default;
  };

  struct InputDocument {
    std::variant<GeneratorsPayload, TablePayload, ActionPayload> payload;
    DocumentFlags                                                flags;

    friend bool operator==(InputDocument const&, InputDocument const&) = default;
  };

  // A parse or validation failure. position is a byte offset ("byte 17") for
  // syntax errors and a JSON pointer ("/generators/0") otherwise.
  class ParseError : public RejectedInput {
   public:
    ParseError(std::string position, std::string const& message)
        : RejectedInput(position + ": " + message), _position(std::move(position)) {}

    std::string const& position() const noexcept {
      return _position;
    }

   private:
    std::string _position;
  };

  InputDocument parse_input(std::string_view text);

  // Canonical JSON text; parse_input(print_document(d)) == d.
  std::string print_document(InputDocument const& doc);

  FiniteInverseSemigroup build_semigroup(SemigroupPayload const& payload,
                                         ClosureOptions const&   options = {});

  EndomorphismAction build_action(ActionPayload const& payload, ClosureOptions const& options = {});

}  // namespace invsg::cli
