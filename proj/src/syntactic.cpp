#include "invsg/syntactic.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  bool SyntacticAlgebra::in_semigroup_part(Element x) const {
    return std::binary_search(_semigroup_part.begin(), _semigroup_part.end(), x);
  }

  Element SyntacticAlgebra::evaluate(std::span<Letter const> word) const {
    Element acc = identity;
    for (Letter a : word) {
      if (a >= _letter_image.size()) {
        throw RejectedInput("letter " + std::to_string(a) + " out of range");
      }
      acc = _monoid(acc, _letter_image[a]);
    }
    return acc;
  }

  CayleyTable SyntacticAlgebra::semigroup_table() const {
    std::vector<Element> position(_monoid.size(), 0);
    for (Element i = 0; i < _semigroup_part.size(); ++i) {
      position[_semigroup_part[i]] = i;
    }
    CayleyTable out(_semigroup_part.size());
    for (Element i = 0; i < _semigroup_part.size(); ++i) {
      for (Element j = 0; j < _semigroup_part.size(); ++j) {
        out.set(i, j, position[_monoid(_semigroup_part[i], _semigroup_part[j])]);
      }
    }
    return out;
  }

  SyntacticAlgebra syntactic_algebra(Dfa const& d, std::size_t max_size) {
    if (!is_minimal(d)) {
      throw RejectedInput("syntactic_algebra needs a minimal automaton; minimize first");
    }
    using Transformation = std::vector<Dfa::State>;
    std::size_t k        = d.alphabet_size();
    std::size_t states   = d.number_of_states();

    SyntacticAlgebra                  sa;
    std::map<Transformation, Element> index;
    auto                              add = [&](Transformation t, Word w) -> Element {
      auto [it, inserted] = index.emplace(t, static_cast<Element>(sa._transformations.size()));
      if (inserted) {
        if (sa._transformations.size() >= max_size) {
          throw ResourceLimit("syntactic monoid exceeds the cap of " + std::to_string(max_size)
                              + " elements");
        }
        sa._transformations.push_back(std::move(t));
        sa._witness.push_back(std::move(w));
      }
      return it->second;
    };

    Transformation id(states);
    for (Dfa::State q = 0; q < states; ++q) {
      id[q] = q;
    }
    add(id, {});

    // Breadth-first over right multiplication by letters. Right Cayley graph
    // edges are recorded so the table can be filled by folding witnesses.
    std::vector<std::vector<Element>> right;
    for (std::size_t pos = 0; pos < sa._transformations.size(); ++pos) {
      right.emplace_back(k);
      for (Letter a = 0; a < k; ++a) {
        Transformation t(states);
        for (Dfa::State q = 0; q < states; ++q) {
          t[q] = d.next(sa._transformations[pos][q], a);
        }
        Word w = sa._witness[pos];
        w.push_back(a);
        right[pos][a] = add(std::move(t), std::move(w));
      }
    }

    std::size_t n = sa._transformations.size();
    sa._monoid    = CayleyTable(n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element acc = x;
        for (Letter a : sa._witness[y]) {
          acc = right[acc][a];
        }
        sa._monoid.set(x, y, acc);
      }
    }
    for (Letter a = 0; a < k; ++a) {
      sa._letter_image.push_back(right[0][a]);
    }
    sa._semigroup_part = subsemigroup_closure(sa._monoid, sa._letter_image);
    std::sort(sa._semigroup_part.begin(), sa._semigroup_part.end());
    return sa;
  }

  bool is_group(CayleyTable const& table) {
    auto e = table.find_identity();
    if (!e) {
      return false;
    }
    bool one_idempotent = table.number_of_idempotents() == 1;
    bool inverses       = true;
    for (Element x = 0; x < table.size() && inverses; ++x) {
      bool found = false;
      for (Element y = 0; y < table.size() && !found; ++y) {
        found = table(x, y) == *e && table(y, x) == *e;
      }
      inverses = found;
    }
    if (one_idempotent != inverses) {
      throw InvariantViolation("group tests disagree: one idempotent = "
                               + std::string(one_idempotent ? "true" : "false")
                               + ", all inverses = " + (inverses ? "true" : "false"));
    }
    return inverses;
  }

  bool is_group_language(SyntacticAlgebra const& sa) {
    return is_group(sa.monoid());
  }

  bool is_e_unitary(FiniteInverseSemigroup const& s) {
    bool left = true, right = true;
    for (Element e = 0; e < s.size(); ++e) {
      if (!s.is_idempotent(e)) {
        continue;
      }
      for (Element a = 0; a < s.size(); ++a) {
        if (s.is_idempotent(a)) {
          continue;
        }
        left  = left && !s.is_idempotent(s.product(e, a));
        right = right && !s.is_idempotent(s.product(a, e));
      }
    }
    if (left != right) {
      throw InvariantViolation("E-unitary tests disagree between ea and ae");
    }
    return left;
  }

}  // namespace invsg
