#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "invsg/cayley_table.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  // A partition of a semigroup's elements compatible with multiplication on
  // both sides. Class ids are numbered by first appearance in element order.
  class Congruence {
   public:
    using ClassId = std::uint32_t;

    // Normalises the labels and checks compatibility against the table;
    // throws RejectedInput if the partition is not a congruence.
    static Congruence from_labels(CayleyTable const& table, std::span<std::uint32_t const> labels);

    // The partition induced by a map: elements are related when they have the
    // same image. Throws RejectedInput unless the map is a morphism's kernel.
    static Congruence kernel(CayleyTable const& table, std::span<Element const> images);

    static Congruence equality(std::size_t size);
    static Congruence universal(std::size_t size);

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _number_of_classes;
    }

    ClassId class_of(Element x) const noexcept {
      return _class_of[x];
    }

    std::span<ClassId const> class_index() const noexcept {
      return _class_of;
    }

    bool related(Element a, Element b) const noexcept {
      return _class_of[a] == _class_of[b];
    }

    std::vector<std::vector<Element>> classes() const;

    // Every class of *this lies inside a class of other.
    bool refines(Congruence const& other) const;

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    Congruence() = default;
    static Congruence normalised(std::span<std::uint32_t const> labels);

    std::vector<ClassId> _class_of;
    std::size_t          _number_of_classes = 0;
  };

  // Whether the labelling, normalised or not, is compatible with the table.
  bool is_compatible(CayleyTable const& table, std::span<std::uint32_t const> labels);

  // The least congruence containing the given pairs. Union-find seeded with
  // the pairs; every successful merge of (a, b) queues (xa, xb) and (ax, bx)
  // for all x until nothing changes.
  Congruence congruence_closure(CayleyTable const&                          table,
                                std::span<std::pair<Element, Element> const> pairs);

  Congruence congruence_closure(FiniteInverseSemigroup const&               s,
                                std::span<std::pair<Element, Element> const> pairs);

  struct Quotient {
    FiniteInverseSemigroup semigroup;
    // Element of s to its class.
    std::vector<Element> projection;
  };

  // The quotient indexed by class id, generated by the images of s's
  // generators. Element names are "[name of least member]".
  Quotient quotient(FiniteInverseSemigroup const& s, Congruence const& c);

  // No class contains both an idempotent and a non-idempotent.
  bool is_idempotent_pure(FiniteInverseSemigroup const& s, Congruence const& c);

  // a ~ b iff x a y and x b y are both idempotent or both not, for every x, y
  // in S with an identity adjoined. The result is checked to be an
  // idempotent-pure congruence before it is returned; InvariantViolation
  // otherwise.
  Congruence greatest_idempotent_pure(FiniteInverseSemigroup const& s);

}  // namespace invsg
