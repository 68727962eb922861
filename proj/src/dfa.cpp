#include "invsg/dfa.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "invsg/errors.hpp"

namespace invsg {

  Dfa::Dfa(std::size_t        alphabet_size,
           std::size_t        number_of_states,
           State              start,
           std::vector<State> transitions,
           std::vector<bool>  accepting)
      : _alphabet_size(alphabet_size),
        _start(start),
        _transitions(std::move(transitions)),
        _accepting(std::move(accepting)) {
    if (alphabet_size == 0 || number_of_states == 0) {
      throw RejectedInput("a DFA needs at least one letter and one state");
    }
    if (_accepting.size() != number_of_states) {
      throw RejectedInput("accepting flags do not match the number of states");
    }
    if (_transitions.size() != number_of_states * alphabet_size) {
      throw RejectedInput("transition table is not states x alphabet");
    }
    if (start >= number_of_states) {
      throw RejectedInput("start state out of range");
    }
    for (State q : _transitions) {
      if (q >= number_of_states) {
        throw RejectedInput("transition target " + std::to_string(q) + " out of range");
      }
    }
  }

  Dfa::State Dfa::run(State q, std::span<Letter const> word) const {
    for (Letter a : word) {
      if (a >= _alphabet_size) {
        throw RejectedInput("letter " + std::to_string(a) + " out of range");
      }
      q = next(q, a);
    }
    return q;
  }

  Dfa Dfa::trimmed() const {
    constexpr State    unseen = UINT32_MAX;
    std::vector<State> renumber(number_of_states(), unseen);
    std::vector<State> order{_start};
    renumber[_start] = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      for (Letter a = 0; a < _alphabet_size; ++a) {
        State r = next(order[pos], a);
        if (renumber[r] == unseen) {
          renumber[r] = static_cast<State>(order.size());
          order.push_back(r);
        }
      }
    }
    std::vector<State> transitions;
    std::vector<bool>  accepting;
    transitions.reserve(order.size() * _alphabet_size);
    for (State q : order) {
      for (Letter a = 0; a < _alphabet_size; ++a) {
        transitions.push_back(renumber[next(q, a)]);
      }
      accepting.push_back(_accepting[q]);
    }
    return Dfa(_alphabet_size, order.size(), 0, std::move(transitions), std::move(accepting));
  }

  Dfa idempotent_problem_dfa(FiniteInverseSemigroup const& s, ProblemKind kind) {
    if (kind == ProblemKind::monoid && !s.identity()) {
      throw RejectedInput("the monoid idempotent problem needs a semigroup with identity");
    }
    if (s.number_of_generators() == 0) {
      throw RejectedInput("the idempotent problem needs a generating set");
    }
    using State            = Dfa::State;
    std::size_t        k = s.number_of_generators();
    std::size_t        n = s.size() + 1;
    std::vector<State> transitions;
    std::vector<bool>  accepting(n);
    transitions.reserve(n * k);
    for (Letter a = 0; a < k; ++a) {
      transitions.push_back(static_cast<State>(s.generators()[a] + 1));
    }
    accepting[0] = kind == ProblemKind::monoid;
    for (Element x = 0; x < s.size(); ++x) {
      for (Letter a = 0; a < k; ++a) {
        transitions.push_back(static_cast<State>(s.product(x, s.generators()[a]) + 1));
      }
      accepting[x + 1] = s.is_idempotent(x);
    }
    return Dfa(k, n, 0, std::move(transitions), std::move(accepting));
  }

  namespace {
    using State = Dfa::State;

    // Hopcroft's algorithm on a DFA whose states are all reachable. Returns
    // the block of each state.
    std::vector<std::uint32_t> hopcroft_blocks(Dfa const& d) {
      std::size_t n = d.number_of_states();
      std::size_t k = d.alphabet_size();

      // preimages[a][r] = states q with next(q, a) = r
      std::vector<std::vector<std::vector<State>>> preimages(k, std::vector<std::vector<State>>(n));
      for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
          preimages[a][d.next(q, a)].push_back(q);
        }
      }

      std::vector<std::vector<State>> blocks;
      std::vector<std::uint32_t>      block_of(n);
      {
        std::vector<State> acc, rej;
        for (State q = 0; q < n; ++q) {
          (d.is_accepting(q) ? acc : rej).push_back(q);
        }
        for (auto* b : {&acc, &rej}) {
          if (!b->empty()) {
            for (State q : *b) {
              block_of[q] = static_cast<std::uint32_t>(blocks.size());
            }
            blocks.push_back(std::move(*b));
          }
        }
      }

      // Worklist of (block, letter) splitters.
      std::vector<std::pair<std::uint32_t, Letter>> work;
      std::vector<std::vector<bool>>                in_work;
      auto push = [&](std::uint32_t b, Letter a) {
        if (in_work.size() <= b) {
          in_work.resize(b + 1, std::vector<bool>(k, false));
        }
        if (!in_work[b][a]) {
          in_work[b][a] = true;
          work.emplace_back(b, a);
        }
      };
      std::uint32_t smallest = blocks.size() == 2 && blocks[1].size() < blocks[0].size() ? 1 : 0;
      for (Letter a = 0; a < k; ++a) {
        push(smallest, a);
      }

      std::vector<bool>        marked(n, false);
      std::vector<std::size_t> hits;
      while (!work.empty()) {
        auto [splitter, a] = work.back();
        work.pop_back();
        in_work[splitter][a] = false;

        std::vector<State> x;
        for (State r : blocks[splitter]) {
          for (State q : preimages[a][r]) {
            if (!marked[q]) {
              marked[q] = true;
              x.push_back(q);
            }
          }
        }
        // Group the marked states by block.
        std::vector<std::uint32_t> touched;
        std::vector<std::size_t>   count(blocks.size(), 0);
        for (State q : x) {
          if (count[block_of[q]]++ == 0) {
            touched.push_back(block_of[q]);
          }
        }
        for (std::uint32_t b : touched) {
          if (count[b] == blocks[b].size()) {
            continue;
          }
          std::vector<State> inside, outside;
          for (State q : blocks[b]) {
            (marked[q] ? inside : outside).push_back(q);
          }
          auto fresh = static_cast<std::uint32_t>(blocks.size());
          blocks[b]  = std::move(outside);
          blocks.push_back(std::move(inside));
          for (State q : blocks[fresh]) {
            block_of[q] = fresh;
          }
          for (Letter c = 0; c < k; ++c) {
            if (in_work.size() > b && in_work[b][c]) {
              push(fresh, c);
            } else {
              push(blocks[fresh].size() <= blocks[b].size() ? fresh : b, c);
            }
          }
        }
        for (State q : x) {
          marked[q] = false;
        }
      }
      return block_of;
    }
  }  // namespace

  Dfa minimize(Dfa const& d) {
    Dfa         t      = d.trimmed();
    auto        blocks = hopcroft_blocks(t);
    std::size_t k      = t.alphabet_size();
    std::size_t m      = *std::max_element(blocks.begin(), blocks.end()) + 1;

    std::vector<State> transitions(m * k);
    std::vector<bool>  accepting(m);
    for (State q = 0; q < t.number_of_states(); ++q) {
      for (Letter a = 0; a < k; ++a) {
        transitions[blocks[q] * k + a] = blocks[t.next(q, a)];
      }
      accepting[blocks[q]] = t.is_accepting(q);
    }
    return Dfa(k, m, blocks[t.start()], std::move(transitions), std::move(accepting)).trimmed();
  }

  bool is_minimal(Dfa const& d) {
    return d.trimmed().number_of_states() == d.number_of_states()
           && minimize(d).number_of_states() == d.number_of_states();
  }

  bool equivalent(Dfa const& a, Dfa const& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
      return false;
    }
    std::size_t                      nb = b.number_of_states();
    std::vector<bool>                seen(a.number_of_states() * nb, false);
    std::vector<std::pair<State, State>> stack{{a.start(), b.start()}};
    seen[a.start() * nb + b.start()] = true;
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      if (a.is_accepting(p) != b.is_accepting(q)) {
        return false;
      }
      for (Letter c = 0; c < a.alphabet_size(); ++c) {
        State p2 = a.next(p, c), q2 = b.next(q, c);
        if (!seen[p2 * nb + q2]) {
          seen[p2 * nb + q2] = true;
          stack.emplace_back(p2, q2);
        }
      }
    }
    return true;
  }

}  // namespace invsg
