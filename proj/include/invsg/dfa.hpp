#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invsg/semigroup.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // A complete deterministic automaton over the letters {0, ..., alphabet - 1}.
  class Dfa {
   public:
    using State = std::uint32_t;

    // transitions is row-major, states x alphabet_size. Throws RejectedInput
    // on shape or range errors.
    Dfa(std::size_t        alphabet_size,
        std::size_t        number_of_states,
        State              start,
        std::vector<State> transitions,
        std::vector<bool>  accepting);

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::size_t number_of_states() const noexcept {
      return _accepting.size();
    }

    State start() const noexcept {
      return _start;
    }

    State next(State q, Letter a) const noexcept {
      return _transitions[static_cast<std::size_t>(q) * _alphabet_size + a];
    }

    bool is_accepting(State q) const noexcept {
      return _accepting[q];
    }

    State run(State q, std::span<Letter const> word) const;

    bool accepts(std::span<Letter const> word) const {
      return _accepting[run(_start, word)];
    }

    // The same automaton restricted to states reachable from start,
    // renumbered breadth-first with letters in increasing order.
    Dfa trimmed() const;

    friend bool operator==(Dfa const&, Dfa const&) = default;

   private:
    std::size_t        _alphabet_size;
    State              _start;
    std::vector<State> _transitions;
    std::vector<bool>  _accepting;
  };

  // States: 0 is the start state, 1 + s is element s. Letter i is generator
  // i. Element states accept exactly the idempotents; the start state accepts
  // exactly in the monoid case. Throws RejectedInput in the monoid case when
  // s has no identity.
  Dfa idempotent_problem_dfa(FiniteInverseSemigroup const& s, ProblemKind kind);

  // The minimal complete automaton for the same language (Hopcroft's
  // partition refinement), numbered breadth-first from the start state.
  Dfa minimize(Dfa const& d);

  // Every state reachable and no two states equivalent.
  bool is_minimal(Dfa const& d);

  // Same alphabet and same language, decided by a search of the product
  // automaton for a reachable pair with differing acceptance.
  bool equivalent(Dfa const& a, Dfa const& b);

}  // namespace invsg
