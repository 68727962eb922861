#include "invsg/congruence.hpp"

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "invsg/errors.hpp"

namespace invsg {

  Congruence Congruence::normalised(std::span<std::uint32_t const> labels) {
    Congruence                       c;
    std::map<std::uint32_t, ClassId> renumber;
    c._class_of.reserve(labels.size());
    for (auto label : labels) {
      auto [it, inserted] = renumber.emplace(label, static_cast<ClassId>(renumber.size()));
      c._class_of.push_back(it->second);
    }
    c._number_of_classes = renumber.size();
    return c;
  }

  bool is_compatible(CayleyTable const& table, std::span<std::uint32_t const> labels) {
    std::size_t n = table.size();
    if (labels.size() != n) {
      return false;
    }
    // It suffices to compare each element with the first member of its class.
    std::map<std::uint32_t, Element> first;
    for (Element a = 0; a < n; ++a) {
      auto [it, inserted] = first.emplace(labels[a], a);
      if (inserted) {
        continue;
      }
      Element b = it->second;
      for (Element x = 0; x < n; ++x) {
        if (labels[table(x, a)] != labels[table(x, b)]
            || labels[table(a, x)] != labels[table(b, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence Congruence::from_labels(CayleyTable const&             table,
                                     std::span<std::uint32_t const> labels) {
    if (labels.size() != table.size()) {
      throw RejectedInput("partition has " + std::to_string(labels.size())
                          + " labels for " + std::to_string(table.size()) + " elements");
    }
    if (!is_compatible(table, labels)) {
      throw RejectedInput("partition is not compatible with multiplication");
    }
    return normalised(labels);
  }

  Congruence Congruence::kernel(CayleyTable const& table, std::span<Element const> images) {
    return from_labels(table, images);
  }

  Congruence Congruence::equality(std::size_t size) {
    std::vector<std::uint32_t> labels(size);
    std::iota(labels.begin(), labels.end(), 0);
    return normalised(labels);
  }

  Congruence Congruence::universal(std::size_t size) {
    std::vector<std::uint32_t> labels(size, 0);
    return normalised(labels);
  }

  std::vector<std::vector<Element>> Congruence::classes() const {
    std::vector<std::vector<Element>> out(_number_of_classes);
    for (Element x = 0; x < _class_of.size(); ++x) {
      out[_class_of[x]].push_back(x);
    }
    return out;
  }

  bool Congruence::refines(Congruence const& other) const {
    if (other.size() != size()) {
      return false;
    }
    std::vector<std::uint32_t> target(_number_of_classes, UINT32_MAX);
    for (Element x = 0; x < size(); ++x) {
      auto& t = target[_class_of[x]];
      if (t == UINT32_MAX) {
        t = other._class_of[x];
      } else if (t != other._class_of[x]) {
        return false;
      }
    }
    return true;
  }

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      Element find(Element x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Returns false if already joined.
      bool unite(Element a, Element b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

     private:
      std::vector<Element> _parent;
    };
  }  // namespace

  Congruence congruence_closure(CayleyTable const&                           table,
                                std::span<std::pair<Element, Element> const> pairs) {
    std::size_t n = table.size();
    UnionFind   uf(n);
    std::vector<std::pair<Element, Element>> queue;
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n) {
        throw RejectedInput("pair (" + std::to_string(a) + ", " + std::to_string(b)
                            + ") out of range");
      }
      if (uf.unite(a, b)) {
        queue.emplace_back(a, b);
      }
    }
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (Element x = 0; x < n; ++x) {
        for (auto [u, v] : {std::pair{table(x, a), table(x, b)},
                            std::pair{table(a, x), table(b, x)}}) {
          if (uf.unite(u, v)) {
            queue.emplace_back(u, v);
          }
        }
      }
    }
    std::vector<std::uint32_t> labels(n);
    for (Element x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return Congruence::from_labels(table, labels);
  }

  Congruence congruence_closure(FiniteInverseSemigroup const&                s,
                                std::span<std::pair<Element, Element> const> pairs) {
    return congruence_closure(s.table(), pairs);
  }

  Quotient quotient(FiniteInverseSemigroup const& s, Congruence const& c) {
    if (c.size() != s.size()) {
      throw RejectedInput("congruence is on a semigroup of a different size");
    }
    std::size_t          m = c.number_of_classes();
    std::vector<Element> representative(m, UINT32_MAX);
    for (Element x = 0; x < s.size(); ++x) {
      if (representative[c.class_of(x)] == UINT32_MAX) {
        representative[c.class_of(x)] = x;
      }
    }
    CayleyTable              table(m);
    std::vector<std::string> names(m);
    for (Element p = 0; p < m; ++p) {
      for (Element q = 0; q < m; ++q) {
        table.set(p, q, c.class_of(s.product(representative[p], representative[q])));
      }
      names[p] = "[" + s.name(representative[p]) + "]";
    }
    std::vector<Element> gens;
    for (Element g : s.generators()) {
      gens.push_back(c.class_of(g));
    }
    std::vector<Element> projection(c.class_index().begin(), c.class_index().end());
    return {FiniteInverseSemigroup::from_trusted_table(std::move(table), std::move(gens),
                                                       std::move(names)),
            std::move(projection)};
  }

  bool is_idempotent_pure(FiniteInverseSemigroup const& s, Congruence const& c) {
    if (c.size() != s.size()) {
      throw RejectedInput("congruence is on a semigroup of a different size");
    }
    // 0 unseen, 1 idempotent, 2 non-idempotent
    std::vector<std::uint8_t> kind(c.number_of_classes(), 0);
    for (Element x = 0; x < s.size(); ++x) {
      std::uint8_t k = s.is_idempotent(x) ? 1 : 2;
      auto&        seen = kind[c.class_of(x)];
      if (seen == 0) {
        seen = k;
      } else if (seen != k) {
        return false;
      }
    }
    return true;
  }

  Congruence greatest_idempotent_pure(FiniteInverseSemigroup const& s) {
    std::size_t n = s.size();
    // Index n stands for the adjoined identity of S^1.
    auto times = [&](Element a, Element b) -> Element {
      if (a == n) {
        return b;
      }
      if (b == n) {
        return a;
      }
      return s.product(a, b);
    };

    // xay is idempotent iff (xa)y is, so the right contexts of an element z
    // are captured by the set {y in S^1 : zy idempotent}. Two elements are
    // related iff every left multiple lands on the same right-context set.
    std::map<std::vector<bool>, std::uint32_t> right_ids;
    std::vector<std::uint32_t>                 right_class(n);
    for (Element z = 0; z < n; ++z) {
      std::vector<bool> contexts(n + 1);
      for (Element y = 0; y <= n; ++y) {
        contexts[y] = s.is_idempotent(times(z, y));
      }
      auto [it, inserted] = right_ids.emplace(std::move(contexts),
                                              static_cast<std::uint32_t>(right_ids.size()));
      right_class[z] = it->second;
    }

    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    std::vector<std::uint32_t>                          labels(n);
    for (Element a = 0; a < n; ++a) {
      std::vector<std::uint32_t> signature(n + 1);
      for (Element x = 0; x <= n; ++x) {
        signature[x] = right_class[times(x, a)];
      }
      auto [it, inserted] = signature_ids.emplace(
          std::move(signature), static_cast<std::uint32_t>(signature_ids.size()));
      labels[a] = it->second;
    }

    if (!is_compatible(s.table(), labels)) {
      throw InvariantViolation("context relation is not a congruence");
    }
    auto c = Congruence::from_labels(s.table(), labels);
    if (!is_idempotent_pure(s, c)) {
      throw InvariantViolation("context relation is not idempotent-pure");
    }
    return c;
  }

}  // namespace invsg
