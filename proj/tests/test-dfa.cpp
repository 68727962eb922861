#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "invsg/corpus.hpp"
#include "invsg/dfa.hpp"
#include "invsg/errors.hpp"
#include "invsg/semigroup.hpp"

#include "oracles.hpp"

namespace invsg {

  namespace {
    Dfa random_dfa(std::mt19937_64& rng) {
      std::uniform_int_distribution<std::size_t> states_dist(1, 8);
      std::uniform_int_distribution<std::size_t> letters_dist(1, 3);
      std::size_t                                n = states_dist(rng);
      std::size_t                                k = letters_dist(rng);
      std::uniform_int_distribution<Dfa::State>  state(0, static_cast<Dfa::State>(n - 1));
      std::bernoulli_distribution                coin(0.4);
      std::vector<Dfa::State>                    delta(n * k);
      std::vector<bool>                          accepting(n);
      for (auto& q : delta) {
        q = state(rng);
      }
      for (std::size_t q = 0; q < n; ++q) {
        accepting[q] = coin(rng);
      }
      return Dfa(k, n, state(rng), delta, accepting);
    }

    FiniteInverseSemigroup trivial_group() {
      std::vector<PartialBijection> gens = {PartialBijection::identity(1)};
      return generate_closure(gens);
    }
  }  // namespace

  TEST_CASE("Dfa 001: validation", "[quick][dfa]") {
    CHECK_THROWS_AS(Dfa(1, 2, 0, {0}, {true, false}), RejectedInput);
    CHECK_THROWS_AS(Dfa(1, 2, 0, {0, 2}, {true, false}), RejectedInput);
    CHECK_THROWS_AS(Dfa(1, 2, 2, {0, 1}, {true, false}), RejectedInput);
    CHECK_THROWS_AS(Dfa(1, 2, 0, {0, 1}, {true}), RejectedInput);
    CHECK_THROWS_AS(Dfa(1, 0, 0, {}, {}), RejectedInput);
    Dfa d(2, 2, 0, {1, 0, 1, 1}, {false, true});
    CHECK(d.accepts(Word{0}));
    CHECK_FALSE(d.accepts(Word{1}));
    CHECK(d.accepts(Word{1, 0}));
    CHECK_FALSE(d.accepts(Word{}));
  }

  TEST_CASE("Dfa 002: trimmed", "[quick][dfa]") {
    // State 1 is unreachable.
    Dfa d(1, 3, 2, {0, 1, 0}, {true, false, false});
    auto t = d.trimmed();
    CHECK(t.number_of_states() == 2);
    CHECK(t.start() == 0);
    CHECK(t.next(0, 0) == 1);
    CHECK(t.is_accepting(1));
  }

  TEST_CASE("IdempotentDfa 001: trivial group", "[quick][dfa]") {
    auto d = idempotent_problem_dfa(trivial_group(), ProblemKind::semigroup);
    CHECK(d.number_of_states() == 2);
    CHECK(d.alphabet_size() == 1);
    CHECK_FALSE(d.accepts(Word{}));
    CHECK(d.accepts(Word{0}));
    CHECK(d.accepts(Word{0, 0, 0}));
    auto m = idempotent_problem_dfa(trivial_group(), ProblemKind::monoid);
    CHECK(m.accepts(Word{}));
  }

  TEST_CASE("IdempotentDfa 002: Z2 parity", "[quick][dfa]") {
    auto z2 = cyclic_group(2);
    auto d  = idempotent_problem_dfa(z2, ProblemKind::semigroup);
    auto m  = idempotent_problem_dfa(z2, ProblemKind::monoid);
    Word w;
    for (std::size_t len = 0; len <= 8; ++len) {
      CHECK(d.accepts(w) == (len > 0 && len % 2 == 0));
      CHECK(m.accepts(w) == (len % 2 == 0));
      w.push_back(0);
    }
  }

  TEST_CASE("IdempotentDfa 003: B2", "[quick][dfa]") {
    auto b2 = brandt_b2();
    auto d  = idempotent_problem_dfa(b2, ProblemKind::semigroup);
    CHECK(d.number_of_states() == 6);
    CHECK(d.accepts(Word{0, 1}));
    CHECK(d.accepts(Word{1, 0}));
    CHECK(d.accepts(Word{0, 0}));
    CHECK_FALSE(d.accepts(Word{0}));
    CHECK_FALSE(d.accepts(Word{1}));
    CHECK_FALSE(d.accepts(Word{0, 1, 0}));
    CHECK_THROWS_AS(idempotent_problem_dfa(b2, ProblemKind::monoid), RejectedInput);
  }

  TEST_CASE("IdempotentDfa 004: recognises the idempotent words", "[quick][dfa]") {
    for (auto const& entry : standard_corpus()) {
      auto const& s = entry.semigroup;
      for (auto kind : applicable_kinds(s)) {
        auto d = idempotent_problem_dfa(s, kind);
        CHECK(d.number_of_states() == s.size() + 1);
        for (auto const& w : oracle::words_up_to(s.number_of_generators(), 4)) {
          bool expected = w.empty() ? kind == ProblemKind::monoid : s.is_idempotent(oracle::fold(s, w));
          INFO(entry.name);
          REQUIRE(d.accepts(w) == expected);
        }
      }
    }
  }

  TEST_CASE("Minimize 001: examples", "[quick][dfa]") {
    auto fs = minimize(idempotent_problem_dfa(free_semilattice(2), ProblemKind::semigroup));
    CHECK(fs.number_of_states() == 2);
    CHECK(minimize(fs) == fs);

    auto z2 = cyclic_group(2);
    CHECK(minimize(idempotent_problem_dfa(z2, ProblemKind::monoid)).number_of_states() == 2);
    CHECK(minimize(idempotent_problem_dfa(z2, ProblemKind::semigroup)).number_of_states() == 3);

    auto b2 = minimize(idempotent_problem_dfa(brandt_b2(), ProblemKind::semigroup));
    CHECK(is_minimal(b2));
    CHECK_FALSE(is_minimal(idempotent_problem_dfa(free_semilattice(2), ProblemKind::semigroup)));
  }

  TEST_CASE("Minimize 002: corpus agrees with Moore refinement", "[quick][dfa]") {
    for (auto const& entry : standard_corpus()) {
      for (auto kind : applicable_kinds(entry.semigroup)) {
        auto d = idempotent_problem_dfa(entry.semigroup, kind);
        auto m = minimize(d);
        INFO(entry.name);
        CHECK(m.number_of_states() == oracle::moore_state_count(d));
        CHECK(equivalent(d, m));
        CHECK(is_minimal(m));
        CHECK(minimize(m) == m);
      }
    }
  }

  TEST_CASE("Minimize 003: random automata", "[quick][dfa]") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
      auto d = random_dfa(rng);
      auto m = minimize(d);
      REQUIRE(m.number_of_states() == oracle::moore_state_count(d));
      REQUIRE(equivalent(d, m));
      REQUIRE(is_minimal(m));
      REQUIRE(minimize(m) == m);
      for (auto const& w : oracle::words_up_to(d.alphabet_size(), 4)) {
        REQUIRE(d.accepts(w) == m.accepts(w));
      }
    }
  }

  TEST_CASE("Equivalent 001: different languages", "[quick][dfa]") {
    Dfa even(1, 2, 0, {1, 0}, {true, false});
    Dfa odd(1, 2, 0, {1, 0}, {false, true});
    Dfa all(1, 1, 0, {0}, {true});
    CHECK_FALSE(equivalent(even, odd));
    CHECK_FALSE(equivalent(even, all));
    CHECK(equivalent(even, even));
    Dfa binary(2, 1, 0, {0, 0}, {true});
    CHECK_FALSE(equivalent(all, binary));
  }

}  // namespace invsg
