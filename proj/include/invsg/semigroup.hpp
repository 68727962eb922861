#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/cayley_table.hpp"
#include "invsg/partial_bijection.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // A finite inverse semigroup given by its multiplication table, together
  // with a semigroup generating set and, for every element, the shortlex
  // least word over that generating set evaluating to it.
  //
  // Instances are immutable once built.
  class FiniteInverseSemigroup {
   public:
    // Validates the table with verify_inverse and throws RejectedInput on the
    // first violation. When generators is empty, greedy_generating_set is
    // used. Throws RejectedInput if the generators do not generate.
    static FiniteInverseSemigroup from_table(CayleyTable              table,
                                             std::vector<Element>     generators = {},
                                             std::vector<std::string> names      = {});

    // As from_table but skips verify_inverse. For constructions that are
    // inverse semigroups by construction.
    static FiniteInverseSemigroup from_trusted_table(CayleyTable              table,
                                                     std::vector<Element>     generators,
                                                     std::vector<std::string> names = {});

    std::size_t size() const noexcept {
      return _table.size();
    }

    CayleyTable const& table() const noexcept {
      return _table;
    }

    Element product(Element a, Element b) const noexcept {
      return _table(a, b);
    }

    Element inverse(Element x) const noexcept {
      return _inverse[x];
    }

    bool is_idempotent(Element x) const noexcept {
      return _table(x, x) == x;
    }

    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    std::span<Element const> generators() const noexcept {
      return _generators;
    }

    std::size_t number_of_generators() const noexcept {
      return _generators.size();
    }

    Word const& witness(Element x) const noexcept {
      return _witness[x];
    }

    std::string const& name(Element x) const noexcept {
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // Left fold of a word over the generators. The empty word is only
    // meaningful in a monoid and evaluates to the identity; otherwise it is
    // rejected.
    Element evaluate(std::span<Letter const> word) const;

    // The same semigroup re-presented by another generating set. Throws
    // RejectedInput if the set does not generate.
    FiniteInverseSemigroup with_generators(std::vector<Element> generators) const;

    bool is_semilattice() const noexcept;

   private:
    FiniteInverseSemigroup() = default;
    void init(std::vector<Element> generators, std::vector<std::string> names);

    CayleyTable              _table;
    std::vector<Element>     _inverse;
    std::optional<Element>   _identity;
    std::vector<Element>     _generators;
    std::vector<Word>        _witness;
    std::vector<std::string> _names;
  };

  // Elements e with e * e = e, in increasing order.
  std::vector<Element> idempotents(FiniteInverseSemigroup const& s);

  // Elements are nonempty subsets of {1, ..., k} under union, indexed by
  // bitmask - 1; generators are the singletons. Requires 1 <= k <= 20; the
  // table cap applies on top of that.
  FiniteInverseSemigroup free_semilattice(std::size_t k);

  // The monoid of all partial bijections of {0, ..., n - 1}, 1 <= n <= 5,
  // generated by the n-cycle, the transposition (0 1) and the partial
  // identity on {0, ..., n - 2}. For n = 1 the generators are the identity
  // and the empty map.
  FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t n);

  struct ClosureOptions {
    std::size_t max_elements      = kDefaultMaxClosure;
    std::size_t max_table_entries = kDefaultMaxTableEntries;
  };

  // Breadth-first closure of the generators under composition. Element i is
  // the i-th element discovered; generators come first (duplicates skipped)
  // and every later element is discovered from its shortlex least word.
  // Throws ResourceLimit when max_elements is exceeded.
  std::vector<PartialBijection>
  enumerate_closure(std::span<PartialBijection const> generators,
                    ClosureOptions const&             options = {});

  // The inverse semigroup generated by the given partial bijections, indexed
  // as in enumerate_closure. The identity is recorded only when some element
  // acts as a two-sided identity; nothing is ever adjoined. Throws
  // RejectedInput when the closure is not closed under inversion.
  FiniteInverseSemigroup
  generate_closure(std::span<PartialBijection const> generators,
                   ClosureOptions const&             options = {});

}  // namespace invsg
