#include <vector>

#include <catch_amalgamated.hpp>

#include "invsg/checks.hpp"
#include "invsg/congruence.hpp"
#include "invsg/corpus.hpp"
#include "invsg/errors.hpp"
#include "invsg/isomorphism.hpp"
#include "invsg/suite.hpp"

#include "oracles.hpp"

namespace invsg {

  TEST_CASE("Projection 001: groups in the monoid case", "[quick][checks]") {
    for (std::size_t n : {2, 4}) {
      auto g = cyclic_group(n);
      auto r = syntactic_projection(g, ProblemKind::monoid);
      CHECK(r.ok());
      CHECK(r.kernel == Congruence::equality(n));
      CHECK(r.algebra.size() == n);
      CHECK(are_isomorphic(r.algebra.monoid(), g.table()));
    }
  }

  TEST_CASE("Projection 002: semilattice", "[quick][checks]") {
    auto fs = free_semilattice(2);
    auto r  = syntactic_projection(fs, ProblemKind::semigroup);
    CHECK(r.kernel == Congruence::universal(3));
    CHECK(r.algebra.semigroup_part().size() == 1);
  }

  TEST_CASE("Projection 003: B2", "[quick][checks]") {
    auto b2 = brandt_b2();
    auto r  = syntactic_projection(b2, ProblemKind::semigroup);
    CHECK(r.ok());
    CHECK(r.kernel == greatest_idempotent_pure(b2));
    std::vector<std::uint32_t> oracle_labels = oracle::greatest_idempotent_pure_by_contexts(b2.table().rows());
    CHECK(r.kernel == Congruence::from_labels(b2.table(), oracle_labels));
    CHECK(r.kernel == Congruence::equality(5));
  }

  TEST_CASE("Projection 004: the whole corpus", "[quick][checks]") {
    for (auto const& entry : standard_corpus()) {
      for (auto kind : applicable_kinds(entry.semigroup)) {
        INFO(entry.name);
        auto r = compute_syntactic_projection(entry.semigroup, kind);
        CHECK(r.well_defined);
        CHECK(r.surjective);
        CHECK(r.idempotent_pure);
        CHECK(r.kernel_is_greatest);
        std::vector<std::uint32_t> labels
            = oracle::greatest_idempotent_pure_by_contexts(entry.semigroup.table().rows());
        CHECK(std::equal(labels.begin(), labels.end(), r.kernel.class_index().begin()));
      }
    }
  }

  TEST_CASE("EUnitaryCorollary 001: examples", "[quick][checks]") {
    auto g = check_e_unitary_corollary(cyclic_group(4), ProblemKind::monoid);
    CHECK(g.e_unitary);
    CHECK(g.group_language);
    auto gs = check_e_unitary_corollary(cyclic_group(4), ProblemKind::semigroup);
    CHECK(gs.e_unitary);
    CHECK(gs.group_language);

    auto b2 = check_e_unitary_corollary(brandt_b2(), ProblemKind::semigroup);
    CHECK_FALSE(b2.e_unitary);
    CHECK_FALSE(b2.group_language);
  }

  TEST_CASE("EUnitaryCorollary 002: semilattice flag handling", "[quick][checks]") {
    auto fs = free_semilattice(2);
    auto r  = check_e_unitary_corollary(fs, ProblemKind::semigroup);
    CHECK(r.e_unitary);
    CHECK(r.semigroup_part_is_group);
    CHECK_FALSE(r.monoid_is_group);
    CHECK(r.group_language);
    CHECK_THROWS_AS(check_e_unitary_corollary(fs, ProblemKind::monoid), RejectedInput);

    // I1 = {identity, empty} is a semilattice with identity.
    auto i1 = symmetric_inverse_monoid(1);
    auto m  = check_e_unitary_corollary(i1, ProblemKind::monoid);
    CHECK(m.e_unitary);
    CHECK(m.monoid_is_group);
    CHECK(m.group_language);
  }

  TEST_CASE("GeneratorInvariance 001: examples", "[quick][checks]") {
    auto z4 = cyclic_group(4);
    auto g  = z4.generators()[0];
    std::vector<Element> one = {g};
    std::vector<Element> two = {g, z4.product(g, g)};
    for (auto kind : {ProblemKind::semigroup, ProblemKind::monoid}) {
      CHECK(check_generator_invariance(z4, one, one, kind).isomorphic);
      CHECK(check_generator_invariance(z4, one, two, kind).isomorphic);
    }
    auto                 b2 = brandt_b2();
    std::vector<Element> all = {0, 1, 2, 3, 4};
    auto r = check_generator_invariance(b2, b2.generators(), all, ProblemKind::semigroup);
    CHECK(r.isomorphic);
    CHECK(r.size_a == r.size_b);
    std::vector<Element> bad = {0};
    CHECK_THROWS_AS(check_generator_invariance(b2, bad, all, ProblemKind::semigroup), RejectedInput);
  }

  TEST_CASE("MainTheorem 001: examples", "[quick][checks]") {
    auto fs = check_main_theorem_finite_direction(free_semilattice(3), ProblemKind::semigroup);
    CHECK(fs.semigroup_part_size == 1);
    CHECK(fs.bound == 7u);
    CHECK(fs.size == 7);
    CHECK(fs.attained);

    auto z2 = check_main_theorem_finite_direction(cyclic_group(2), ProblemKind::semigroup);
    CHECK(z2.generators == 1);
    CHECK(z2.semigroup_part_size == 2);
    CHECK(z2.bound == 6u);
    CHECK(z2.holds);
    CHECK_FALSE(z2.attained);

    auto b2 = check_main_theorem_finite_direction(brandt_b2(), ProblemKind::semigroup);
    CHECK(b2.holds);
    CHECK(b2.dfa_states == 6);
    CHECK(b2.minimal_states <= 6);
  }

  TEST_CASE("MainTheorem 002: free semilattices attain the bound", "[quick][checks]") {
    for (std::size_t k = 1; k <= 4; ++k) {
      auto r = check_main_theorem_finite_direction(free_semilattice(k), ProblemKind::semigroup);
      CHECK(r.semigroup_part_size == 1);
      CHECK(r.bound == (std::uint64_t(1) << k) - 1);
      CHECK(r.attained);
    }
  }

  TEST_CASE("Suite 001: ok and deterministic", "[quick][suite]") {
    auto a = run_check_suite();
    auto b = run_check_suite();
    CHECK(a["ok"].get<bool>());
    CHECK(a.dump() == b.dump());
    auto c = run_check_suite({99, 2});
    CHECK(c["ok"].get<bool>());
  }

}  // namespace invsg
