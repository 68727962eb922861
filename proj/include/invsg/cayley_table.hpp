#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invsg/types.hpp"

namespace invsg {

  // A finite binary operation on {0, ..., size - 1}, stored row-major.
  // Nothing about associativity is assumed; see verify_inverse.
  class CayleyTable {
   public:
    CayleyTable() = default;

    // All products initialised to 0. Throws ResourceLimit if size * size
    // exceeds max_entries.
    explicit CayleyTable(std::size_t size,
                         std::size_t max_entries = kDefaultMaxTableEntries);

    // Throws RejectedInput if rows are not all of length rows.size() or an
    // entry is out of range.
    static CayleyTable from_rows(std::vector<std::vector<Element>> const& rows);

    std::size_t size() const noexcept {
      return _size;
    }

    Element operator()(Element a, Element b) const noexcept {
      return _entries[static_cast<std::size_t>(a) * _size + b];
    }

    void set(Element a, Element b, Element product) noexcept {
      _entries[static_cast<std::size_t>(a) * _size + b] = product;
    }

    std::span<Element const> row(Element a) const noexcept {
      return {_entries.data() + static_cast<std::size_t>(a) * _size, _size};
    }

    std::vector<std::vector<Element>> rows() const;

    bool is_idempotent(Element e) const noexcept {
      return (*this)(e, e) == e;
    }

    std::size_t number_of_idempotents() const noexcept;

    // The two-sided identity, if there is one.
    std::optional<Element> find_identity() const noexcept;

    // Left fold of a nonempty sequence of elements.
    Element product(std::span<Element const> factors) const;

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    std::size_t          _size = 0;
    std::vector<Element> _entries;
  };

  // The elements reachable from the given ones by repeated right
  // multiplication by them, in order of discovery. For an associative table
  // this is the subsemigroup they generate.
  std::vector<Element> subsemigroup_closure(CayleyTable const&       table,
                                            std::span<Element const> gens);

  // Scans elements in index order and keeps each one not already in the
  // closure of those kept so far.
  std::vector<Element> greedy_generating_set(CayleyTable const& table);

  // Outcome of an axiom check. ok holds exactly when failure is empty.
  struct MultiplicationReport {
    enum class Kind {
      non_associative,
      missing_inverse,
      non_unique_inverse,
      not_endomorphism,
      not_action
    };

    struct Failure {
      Kind                 kind;
      std::vector<Element> witnesses;
      std::string          description;
    };

    bool                   ok = true;
    std::optional<Failure> failure;

    static MultiplicationReport success() {
      return {};
    }

    static MultiplicationReport fail(Kind                 kind,
                                     std::vector<Element> witnesses,
                                     std::string          description) {
      return {false, Failure{kind, std::move(witnesses), std::move(description)}};
    }
  };

  char const* to_string(MultiplicationReport::Kind kind) noexcept;

  // Checks that the table is associative and that every element has exactly
  // one inverse. Associativity is scanned over triples (a, b, c) in row-major
  // order when size <= kFullScanLimit; above that, Light's test is applied to
  // a greedy generating set and the failure, if any, names the triple
  // (a, generator, c). Inverses are then scanned in element order. Only the
  // first violation is reported.
  MultiplicationReport verify_inverse(CayleyTable const& table);

  inline constexpr std::size_t kFullScanLimit = 256;

}  // namespace invsg
