#include "invsg/cayley_table.hpp"

#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  CayleyTable::CayleyTable(std::size_t size, std::size_t max_entries)
      : _size(size) {
    if (size != 0 && size > max_entries / size) {
      throw ResourceLimit("multiplication table of " + std::to_string(size)
                          + " elements exceeds the cap of "
                          + std::to_string(max_entries) + " entries");
    }
    _entries.assign(size * size, 0);
  }

  CayleyTable
  CayleyTable::from_rows(std::vector<std::vector<Element>> const& rows) {
    std::size_t n = rows.size();
    if (n == 0) {
      throw RejectedInput("multiplication table must be nonempty");
    }
    CayleyTable table(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (rows[a].size() != n) {
        throw RejectedInput("row " + std::to_string(a) + " has length "
                            + std::to_string(rows[a].size()) + ", expected "
                            + std::to_string(n));
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (rows[a][b] >= n) {
          throw RejectedInput("entry (" + std::to_string(a) + ", "
                              + std::to_string(b) + ") = "
                              + std::to_string(rows[a][b]) + " out of range");
        }
        table.set(a, b, rows[a][b]);
      }
    }
    return table;
  }

  std::vector<std::vector<Element>> CayleyTable::rows() const {
    std::vector<std::vector<Element>> out(_size);
    for (Element a = 0; a < _size; ++a) {
      auto r = row(a);
      out[a].assign(r.begin(), r.end());
    }
    return out;
  }

  std::size_t CayleyTable::number_of_idempotents() const noexcept {
    std::size_t count = 0;
    for (Element e = 0; e < _size; ++e) {
      count += is_idempotent(e) ? 1 : 0;
    }
    return count;
  }

  std::optional<Element> CayleyTable::find_identity() const noexcept {
    for (Element e = 0; e < _size; ++e) {
      bool ok = true;
      for (Element x = 0; x < _size && ok; ++x) {
        ok = (*this)(e, x) == x && (*this)(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  Element CayleyTable::product(std::span<Element const> factors) const {
    if (factors.empty()) {
      throw RejectedInput("cannot multiply an empty sequence of elements");
    }
    Element acc = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = (*this)(acc, factors[i]);
    }
    return acc;
  }

  std::vector<Element> subsemigroup_closure(CayleyTable const&       table,
                                            std::span<Element const> gens) {
    std::vector<bool>    seen(table.size(), false);
    std::vector<Element> out;
    for (Element g : gens) {
      if (!seen[g]) {
        seen[g] = true;
        out.push_back(g);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Element g : gens) {
        Element y = table(out[i], g);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    return out;
  }

  std::vector<Element> greedy_generating_set(CayleyTable const& table) {
    std::vector<Element> gens;
    std::vector<bool>    covered(table.size(), false);
    for (Element x = 0; x < table.size(); ++x) {
      if (covered[x]) {
        continue;
      }
      gens.push_back(x);
      for (Element y : subsemigroup_closure(table, gens)) {
        covered[y] = true;
      }
    }
    return gens;
  }

  char const* to_string(MultiplicationReport::Kind kind) noexcept {
    using Kind = MultiplicationReport::Kind;
    switch (kind) {
      case Kind::non_associative:
        return "non-associative triple";
      case Kind::missing_inverse:
        return "missing inverse";
      case Kind::non_unique_inverse:
        return "non-unique inverse";
      case Kind::not_endomorphism:
        return "endomorphism axiom";
      case Kind::not_action:
        return "action axiom";
    }
    return "unknown";
  }

  namespace {
    using Kind = MultiplicationReport::Kind;

    MultiplicationReport non_associative(CayleyTable const& t,
                                         Element            a,
                                         Element            b,
                                         Element            c) {
      return MultiplicationReport::fail(
          Kind::non_associative,
          {a, b, c},
          "(" + std::to_string(a) + "*" + std::to_string(b) + ")*"
              + std::to_string(c) + " = " + std::to_string(t(t(a, b), c))
              + " but " + std::to_string(a) + "*(" + std::to_string(b) + "*"
              + std::to_string(c) + ") = " + std::to_string(t(a, t(b, c))));
    }

    std::optional<MultiplicationReport>
    check_associativity(CayleyTable const& t) {
      std::size_t n = t.size();
      if (n <= kFullScanLimit) {
        for (Element a = 0; a < n; ++a) {
          for (Element b = 0; b < n; ++b) {
            Element ab = t(a, b);
            for (Element c = 0; c < n; ++c) {
              if (t(ab, c) != t(a, t(b, c))) {
                return non_associative(t, a, b, c);
              }
            }
          }
        }
        return std::nullopt;
      }
      // Light's test: associativity follows once (a g) c = a (g c) holds for
      // every g in a set whose left-bracketed products cover the table.
      for (Element g : greedy_generating_set(t)) {
        for (Element a = 0; a < n; ++a) {
          Element ag = t(a, g);
          for (Element c = 0; c < n; ++c) {
            if (t(ag, c) != t(a, t(g, c))) {
              return non_associative(t, a, g, c);
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  MultiplicationReport verify_inverse(CayleyTable const& t) {
    if (auto failure = check_associativity(t)) {
      return *failure;
    }
    std::size_t n = t.size();
    for (Element x = 0; x < n; ++x) {
      std::optional<Element> found;
      for (Element y = 0; y < n; ++y) {
        if (t(t(x, y), x) == x && t(t(y, x), y) == y) {
          if (found) {
            return MultiplicationReport::fail(
                Kind::non_unique_inverse,
                {x, *found, y},
                "element " + std::to_string(x) + " has inverses "
                    + std::to_string(*found) + " and " + std::to_string(y));
          }
          found = y;
        }
      }
      if (!found) {
        return MultiplicationReport::fail(
            Kind::missing_inverse,
            {x},
            "element " + std::to_string(x) + " has no inverse");
      }
    }
    return MultiplicationReport::success();
  }

}  // namespace invsg
