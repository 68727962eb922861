#include "invsg/semigroup.hpp"

#include <numeric>
#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  FiniteInverseSemigroup
  FiniteInverseSemigroup::from_table(CayleyTable              table,
                                     std::vector<Element>     generators,
                                     std::vector<std::string> names) {
    auto report = verify_inverse(table);
    if (!report.ok) {
      throw RejectedInput(std::string("not an inverse semigroup: ")
                          + to_string(report.failure->kind) + ": "
                          + report.failure->description);
    }
    return from_trusted_table(std::move(table), std::move(generators), std::move(names));
  }

  FiniteInverseSemigroup
  FiniteInverseSemigroup::from_trusted_table(CayleyTable              table,
                                             std::vector<Element>     generators,
                                             std::vector<std::string> names) {
    if (table.size() == 0) {
      throw RejectedInput("a semigroup must have at least one element");
    }
    FiniteInverseSemigroup s;
    s._table = std::move(table);
    if (generators.empty()) {
      generators = greedy_generating_set(s._table);
    }
    s.init(std::move(generators), std::move(names));
    return s;
  }

  void FiniteInverseSemigroup::init(std::vector<Element>     generators,
                                    std::vector<std::string> names) {
    std::size_t n = _table.size();
    if (names.empty()) {
      names.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
      }
    } else if (names.size() != n) {
      throw RejectedInput("expected " + std::to_string(n) + " element names, got "
                          + std::to_string(names.size()));
    }
    _names = std::move(names);

    _inverse.assign(n, 0);
    for (Element x = 0; x < n; ++x) {
      bool found = false;
      for (Element y = 0; y < n && !found; ++y) {
        if (_table(_table(x, y), x) == x && _table(_table(y, x), y) == y) {
          _inverse[x] = y;
          found       = true;
        }
      }
      if (!found) {
        throw RejectedInput("element " + std::to_string(x) + " has no inverse");
      }
    }
    _identity = _table.find_identity();

    for (Element g : generators) {
      if (g >= n) {
        throw RejectedInput("generator " + std::to_string(g) + " out of range");
      }
    }
    _generators = std::move(generators);

    // Breadth-first search over the right Cayley graph; discovery order is
    // shortlex order of the least words.
    _witness.assign(n, Word{});
    std::vector<bool>    seen(n, false);
    std::vector<Element> order;
    order.reserve(n);
    for (Letter i = 0; i < _generators.size(); ++i) {
      Element g = _generators[i];
      if (!seen[g]) {
        seen[g]     = true;
        _witness[g] = Word{i};
        order.push_back(g);
      }
    }
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      Element x = order[pos];
      for (Letter i = 0; i < _generators.size(); ++i) {
        Element y = _table(x, _generators[i]);
        if (!seen[y]) {
          seen[y]     = true;
          _witness[y] = _witness[x];
          _witness[y].push_back(i);
          order.push_back(y);
        }
      }
    }
    if (order.size() != n) {
      throw RejectedInput("generators produce " + std::to_string(order.size())
                          + " of " + std::to_string(n) + " elements");
    }
  }

  Element FiniteInverseSemigroup::evaluate(std::span<Letter const> word) const {
    if (word.empty()) {
      if (!_identity) {
        throw RejectedInput("the empty word has no value in a semigroup without identity");
      }
      return *_identity;
    }
    for (Letter a : word) {
      if (a >= _generators.size()) {
        throw RejectedInput("letter " + std::to_string(a) + " out of range");
      }
    }
    Element acc = _generators[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i) {
      acc = _table(acc, _generators[word[i]]);
    }
    return acc;
  }

  FiniteInverseSemigroup
  FiniteInverseSemigroup::with_generators(std::vector<Element> generators) const {
    if (generators.empty()) {
      throw RejectedInput("generating set must be nonempty");
    }
    FiniteInverseSemigroup s = *this;
    s.init(std::move(generators), _names);
    return s;
  }

  bool FiniteInverseSemigroup::is_semilattice() const noexcept {
    return _table.number_of_idempotents() == size();
  }

  std::vector<Element> idempotents(FiniteInverseSemigroup const& s) {
    std::vector<Element> out;
    for (Element x = 0; x < s.size(); ++x) {
      if (s.is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  FiniteInverseSemigroup free_semilattice(std::size_t k) {
    if (k < 1 || k > 20) {
      throw RejectedInput("free semilattice rank must be in [1, 20], got "
                          + std::to_string(k));
    }
    std::size_t n = (std::size_t{1} << k) - 1;
    CayleyTable table(n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table.set(a, b, static_cast<Element>(((a + 1) | (b + 1)) - 1));
      }
      std::string name = "{";
      for (std::size_t i = 0; i < k; ++i) {
        if ((a + 1) >> i & 1) {
          name += (name.size() > 1 ? "," : "") + std::to_string(i + 1);
        }
      }
      names[a] = name + "}";
    }
    std::vector<Element> gens;
    for (std::size_t i = 0; i < k; ++i) {
      gens.push_back(static_cast<Element>((std::size_t{1} << i) - 1));
    }
    return FiniteInverseSemigroup::from_trusted_table(std::move(table), std::move(gens),
                                                      std::move(names));
  }

  FiniteInverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    if (n < 1 || n > 5) {
      throw RejectedInput("symmetric inverse monoid degree must be in [1, 5], got "
                          + std::to_string(n));
    }
    using Point = PartialBijection::Point;
    std::vector<PartialBijection> gens;
    if (n == 1) {
      gens.push_back(PartialBijection::identity(1));
      gens.push_back(PartialBijection::empty(1));
    } else {
      std::vector<Point> cycle(n);
      for (std::size_t i = 0; i < n; ++i) {
        cycle[i] = static_cast<Point>((i + 1) % n);
      }
      gens.emplace_back(cycle);
      if (n > 2) {
        std::vector<Point> transposition(cycle.size());
        std::iota(transposition.begin(), transposition.end(), Point(0));
        std::swap(transposition[0], transposition[1]);
        gens.emplace_back(transposition);
      }
      std::vector<Point> domain;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        domain.push_back(static_cast<Point>(i));
      }
      gens.push_back(PartialBijection::idempotent(n, domain));
    }
    return generate_closure(gens);
  }

}  // namespace invsg
