#include <utility>
#include <vector>

#include <catch_amalgamated.hpp>

#include "invsg/congruence.hpp"
#include "invsg/corpus.hpp"
#include "invsg/errors.hpp"
#include "invsg/isomorphism.hpp"
#include "invsg/semigroup.hpp"

#include "oracles.hpp"

namespace invsg {

  namespace {
    using Pairs = std::vector<std::pair<Element, Element>>;

    oracle::Labels labels(Congruence const& c) {
      return {c.class_index().begin(), c.class_index().end()};
    }
  }  // namespace

  TEST_CASE("Congruence 001: construction", "[quick][congruence]") {
    auto                       b2 = brandt_b2();
    std::vector<std::uint32_t> l  = {7, 7, 3, 3, 3};
    CHECK_THROWS_AS(Congruence::from_labels(b2.table(), l), RejectedInput);
    std::vector<std::uint32_t> u = {9, 9, 9, 9, 9};
    auto                       c = Congruence::from_labels(b2.table(), u);
    CHECK(c == Congruence::universal(5));
    CHECK(c.number_of_classes() == 1);
    CHECK(Congruence::equality(5).number_of_classes() == 5);
    CHECK(Congruence::equality(5).refines(c));
    CHECK_FALSE(c.refines(Congruence::equality(5)));
    std::vector<std::uint32_t> short_labels = {0, 0};
    CHECK_THROWS_AS(Congruence::from_labels(b2.table(), short_labels), RejectedInput);
  }

  TEST_CASE("Congruence 002: closure examples", "[quick][congruence]") {
    auto b2 = brandt_b2();
    CHECK(congruence_closure(b2, Pairs{}) == Congruence::equality(5));
    Pairs all;
    for (Element a = 0; a < 5; ++a) {
      for (Element b = 0; b < 5; ++b) {
        all.emplace_back(a, b);
      }
    }
    CHECK(congruence_closure(b2, all).number_of_classes() == 1);
    // aa^-1 and a^-1 a
    Pairs p = {{3, 4}};
    auto  c = congruence_closure(b2, p);
    CHECK(labels(c) == oracle::least_congruence(b2.table().rows(), p));
    CHECK(c.number_of_classes() == 1);
  }

  TEST_CASE("Congruence 003: closure agrees with partition enumeration", "[quick][congruence]") {
    for (auto const& entry : standard_corpus()) {
      auto const& s = entry.semigroup;
      if (s.size() > 6) {
        continue;
      }
      auto rows = s.table().rows();
      for (Element a = 0; a < s.size(); ++a) {
        for (Element b = a; b < s.size(); ++b) {
          Pairs p = {{a, b}};
          INFO(entry.name << " (" << a << "," << b << ")");
          REQUIRE(labels(congruence_closure(s, p)) == oracle::least_congruence(rows, p));
        }
      }
    }
  }

  TEST_CASE("Congruence 004: quotients", "[quick][congruence]") {
    auto b2 = brandt_b2();
    auto q  = quotient(b2, Congruence::equality(5));
    CHECK(are_isomorphic(q.semigroup, b2));
    auto u = quotient(b2, Congruence::universal(5));
    CHECK(u.semigroup.size() == 1);

    // Merging {1} and {2} in the free semilattice of rank 2 forces {1,2} in.
    auto  fs = free_semilattice(2);
    Pairs p  = {{0, 1}};
    auto  c  = congruence_closure(fs, p);
    CHECK(c.number_of_classes() == 1);
    CHECK(quotient(fs, c).semigroup.size() == 1);

    auto  fs3 = free_semilattice(3);
    Pairs p3  = {{0, 1}};
    auto  c3  = congruence_closure(fs3, p3);
    auto  q3  = quotient(fs3, c3);
    CHECK(labels(c3) == oracle::least_congruence(fs3.table().rows(), p3));
    CHECK(q3.semigroup.size() == c3.number_of_classes());
    for (Element a = 0; a < fs3.size(); ++a) {
      for (Element b = 0; b < fs3.size(); ++b) {
        CHECK(q3.projection[fs3.product(a, b)] == q3.semigroup.product(q3.projection[a], q3.projection[b]));
      }
    }
  }

  TEST_CASE("Congruence 005: idempotent-pure", "[quick][congruence]") {
    auto b2 = brandt_b2();
    CHECK(is_idempotent_pure(b2, Congruence::equality(5)));
    CHECK_FALSE(is_idempotent_pure(b2, Congruence::universal(5)));
    auto fs = free_semilattice(3);
    CHECK(is_idempotent_pure(fs, Congruence::universal(fs.size())));
  }

  TEST_CASE("Congruence 006: greatest idempotent-pure", "[quick][congruence]") {
    for (std::size_t n : {2, 4}) {
      auto g = cyclic_group(n);
      CHECK(greatest_idempotent_pure(g) == Congruence::equality(n));
    }
    for (std::size_t k = 1; k <= 4; ++k) {
      auto fs = free_semilattice(k);
      CHECK(greatest_idempotent_pure(fs) == Congruence::universal(fs.size()));
    }
    for (auto const& entry : standard_corpus()) {
      auto const& s = entry.semigroup;
      if (s.size() > 40) {
        continue;
      }
      INFO(entry.name);
      auto g = greatest_idempotent_pure(s);
      CHECK(labels(g) == oracle::greatest_idempotent_pure_by_contexts(s.table().rows()));
      CHECK(is_idempotent_pure(s, g));
      if (s.size() <= 6) {
        auto by_partitions = oracle::greatest_idempotent_pure_by_partitions(s.table().rows());
        REQUIRE(by_partitions.has_value());
        CHECK(labels(g) == *by_partitions);
      }
    }
  }

}  // namespace invsg
