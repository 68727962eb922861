#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "invsg/cayley_table.hpp"
#include "invsg/dfa.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // The syntactic monoid M(L) of a regular language, realised as the
  // transition monoid of its minimal automaton, together with the syntactic
  // semigroup M+(L), the image of the nonempty words.
  //
  // Element 0 is the identity (the class of the empty word). The remaining
  // elements are numbered in shortlex order of their least words.
  class SyntacticAlgebra {
   public:
    CayleyTable const& monoid() const noexcept {
      return _monoid;
    }

    std::size_t size() const noexcept {
      return _monoid.size();
    }

    static constexpr Element identity = 0;

    // Sorted.
    std::span<Element const> semigroup_part() const noexcept {
      return _semigroup_part;
    }

    bool in_semigroup_part(Element x) const;

    // Whether M+(L) = M(L), i.e. some nonempty word acts as the empty word.
    // Otherwise M+(L) is M(L) without its identity.
    bool semigroup_part_is_whole_monoid() const noexcept {
      return _semigroup_part.size() == _monoid.size();
    }

    Element letter_image(Letter a) const noexcept {
      return _letter_image[a];
    }

    std::size_t alphabet_size() const noexcept {
      return _letter_image.size();
    }

    Word const& witness(Element x) const noexcept {
      return _witness[x];
    }

    // Action of an element on the states of the minimal automaton.
    std::span<Dfa::State const> transformation(Element x) const noexcept {
      return _transformations[x];
    }

    Element evaluate(std::span<Letter const> word) const;

    // M+(L) alone, with its elements renumbered in the order of
    // semigroup_part().
    CayleyTable semigroup_table() const;

   private:
    friend SyntacticAlgebra syntactic_algebra(Dfa const&, std::size_t);

    CayleyTable                          _monoid;
    std::vector<Element>                 _semigroup_part;
    std::vector<Element>                 _letter_image;
    std::vector<Word>                    _witness;
    std::vector<std::vector<Dfa::State>> _transformations;
  };

  // Throws RejectedInput unless d is minimal, ResourceLimit when the monoid
  // exceeds max_size elements.
  SyntacticAlgebra syntactic_algebra(Dfa const& d, std::size_t max_size = kDefaultMaxClosure);

  // False without a two-sided identity. For a monoid, "exactly one
  // idempotent" and "every element has a two-sided inverse" are both
  // evaluated; InvariantViolation if they disagree.
  bool is_group(CayleyTable const& table);

  // Whether M(L) is a group.
  bool is_group_language(SyntacticAlgebra const& sa);

  // No product of an idempotent and a non-idempotent, in either order, is
  // idempotent. The two orders are asserted to agree.
  bool is_e_unitary(FiniteInverseSemigroup const& s);

}  // namespace invsg
