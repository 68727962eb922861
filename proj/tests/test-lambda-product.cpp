#include <vector>

#include <catch_amalgamated.hpp>

#include "invsg/corpus.hpp"
#include "invsg/errors.hpp"
#include "invsg/isomorphism.hpp"
#include "invsg/lambda_product.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  namespace {
    // Identity at 0.
    FiniteInverseSemigroup z2() {
      return FiniteInverseSemigroup::from_table(CayleyTable::from_rows({{0, 1}, {1, 0}}));
    }

    FiniteInverseSemigroup trivial_group() {
      std::vector<PartialBijection> gens = {PartialBijection::identity(1)};
      return generate_closure(gens);
    }
  }  // namespace

  TEST_CASE("Action 001: valid actions", "[quick][lambda]") {
    CHECK(validate_action(EndomorphismAction::trivial(trivial_group(), free_semilattice(3))).ok);
    CHECK(validate_action(EndomorphismAction::trivial(brandt_b2(), free_semilattice(2))).ok);
    CHECK(validate_action(swap_action()).ok);
    CHECK(validate_action(b2_constant_action()).ok);
  }

  TEST_CASE("Action 002: not an endomorphism", "[quick][lambda]") {
    // g.{1} = {1,2}, g.{2} = {2}, g.{1,2} = {2}
    EndomorphismAction bad(z2(), free_semilattice(2), {{0, 1, 2}, {2, 1, 1}});
    auto               report = validate_action(bad);
    REQUIRE_FALSE(report.ok);
    CHECK(report.failure->kind == MultiplicationReport::Kind::not_endomorphism);
    CHECK(report.failure->witnesses == std::vector<Element>{1, 0, 1});
    CHECK_THROWS_AS(lambda_product(bad), RejectedInput);
  }

  TEST_CASE("Action 003: not an action", "[quick][lambda]") {
    // The identity swaps and g fixes everything.
    EndomorphismAction bad(z2(), free_semilattice(2), {{1, 0, 2}, {0, 1, 2}});
    auto               report = validate_action(bad);
    REQUIRE_FALSE(report.ok);
    CHECK(report.failure->kind == MultiplicationReport::Kind::not_action);
  }

  TEST_CASE("Action 004: shape errors", "[quick][lambda]") {
    CHECK_THROWS_AS(EndomorphismAction(z2(), free_semilattice(2), {{0, 1, 2}}), RejectedInput);
    CHECK_THROWS_AS(EndomorphismAction(z2(), free_semilattice(2), {{0, 1, 2}, {0, 1}}), RejectedInput);
    CHECK_THROWS_AS(EndomorphismAction(z2(), free_semilattice(2), {{0, 1, 2}, {0, 1, 3}}), RejectedInput);
  }

  TEST_CASE("LambdaProduct 001: trivial actor", "[quick][lambda]") {
    for (std::size_t k = 1; k <= 3; ++k) {
      auto p = lambda_product(EndomorphismAction::trivial(trivial_group(), free_semilattice(k)));
      CHECK(p.semigroup().size() == free_semilattice(k).size());
      CHECK(are_isomorphic(p.semigroup(), free_semilattice(k)));
    }
    auto p = lambda_product(EndomorphismAction::trivial(trivial_group(), brandt_b2()));
    CHECK(are_isomorphic(p.semigroup(), brandt_b2()));
  }

  TEST_CASE("LambdaProduct 002: swap action", "[quick][lambda]") {
    auto p = lambda_product(swap_action());
    CHECK(p.semigroup().size() == 6);
    CHECK(p.pairs().size() == 6);
    CHECK(verify_inverse(p.semigroup().table()).ok);
    CHECK(p.semigroup().name(0).starts_with("({1},"));
  }

  TEST_CASE("LambdaProduct 003: universe and formula", "[quick][lambda]") {
    for (auto const& action : {swap_action(), b2_constant_action()}) {
      auto        p = lambda_product(action);
      auto const& G = action.actor();
      auto const& A = action.target();
      std::vector<LambdaPair> expected;
      for (Element alpha = 0; alpha < A.size(); ++alpha) {
        for (Element g = 0; g < G.size(); ++g) {
          bool in = action.act(G.product(g, G.inverse(g)), alpha) == alpha;
          CHECK(p.in_universe({alpha, g}) == in);
          if (in) {
            expected.push_back({alpha, g});
          }
        }
      }
      CHECK(std::vector<LambdaPair>(p.pairs().begin(), p.pairs().end()) == expected);
      for (auto x : p.pairs()) {
        for (auto y : p.pairs()) {
          Element gh    = G.product(x.g, y.g);
          Element left  = action.act(G.product(gh, G.inverse(gh)), x.alpha);
          Element right = action.act(x.g, y.alpha);
          LambdaPair z{A.product(left, right), gh};
          REQUIRE(p.multiply(x, y) == z);
          REQUIRE(p.in_universe(z));
          REQUIRE(p.semigroup().product(*p.index_of(x), *p.index_of(y)) == *p.index_of(z));
        }
      }
    }
  }

  TEST_CASE("LambdaProduct 004: B2 constant action excludes pairs", "[quick][lambda]") {
    auto p = lambda_product(b2_constant_action());
    CHECK(p.pairs().size() == 5);
    for (auto x : p.pairs()) {
      CHECK(x.alpha == 2);
    }
    CHECK_FALSE(p.in_universe({0, 0}));
    CHECK(verify_inverse(p.semigroup().table()).ok);
  }

  TEST_CASE("LambdaProduct 005: generators", "[quick][lambda]") {
    auto                    all  = lambda_product(swap_action());
    std::vector<LambdaPair> gens(all.pairs().begin(), all.pairs().end());
    auto                    p = lambda_product(swap_action(), gens);
    CHECK(p.semigroup().number_of_generators() == 6);
    CHECK(p.semigroup().table() == all.semigroup().table());
    std::vector<LambdaPair> outside = {{0, 0}, {1, 3}};
    CHECK_THROWS_AS(lambda_product(b2_constant_action(), outside), RejectedInput);
  }

  TEST_CASE("LocalFiniteness 001: trivial actor", "[quick][lambda]") {
    auto p      = lambda_product(EndomorphismAction::trivial(trivial_group(), free_semilattice(3)));
    auto report = check_local_finiteness_bound(p, free_semilattice_sigma(), {64, 1, kDefaultSeed});
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].bound == 1);
    CHECK(report.rows[0].max_observed == 1);
    CHECK(report.rows[0].exhaustive);
    CHECK(report.holds);
  }

  TEST_CASE("LocalFiniteness 002: swap action", "[quick][lambda]") {
    auto p      = lambda_product(swap_action());
    auto report = check_local_finiteness_bound(p, free_semilattice_sigma(), {64, 2, kDefaultSeed});
    REQUIRE(report.rows.size() == 2);
    CHECK(report.rows[0].bound == 6);
    CHECK(report.rows[0].subsets_checked == 6);
    CHECK(report.rows[0].max_observed <= 6);
    CHECK(report.rows[1].bound == 30);
    CHECK(report.rows[1].subsets_checked == 15);
    CHECK(report.rows[1].max_observed <= 6);
    CHECK(report.rows[1].max_ratio < 1.0);
    CHECK(report.sigma_valid);
    CHECK(report.holds);
  }

  TEST_CASE("LocalFiniteness 003: sampling is seeded", "[quick][lambda]") {
    auto p = lambda_product(b2_constant_action());
    auto a = check_local_finiteness_bound(p, constant_sigma(3), {3, 2, 5});
    auto b = check_local_finiteness_bound(p, constant_sigma(3), {3, 2, 5});
    REQUIRE(a.rows.size() == 2);
    CHECK_FALSE(a.rows[1].exhaustive);
    CHECK(a.rows[1].subsets_checked == 3);
    CHECK(a.rows[1].max_observed == b.rows[1].max_observed);
    CHECK(a.holds);
  }

  TEST_CASE("LocalFiniteness 004: an invalid sigma is reported", "[quick][lambda]") {
    auto p      = lambda_product(swap_action());
    auto report = check_local_finiteness_bound(p, constant_sigma(1), {64, 1, kDefaultSeed});
    CHECK_FALSE(report.sigma_valid);
    CHECK_FALSE(report.holds);
  }

  TEST_CASE("Bound 001: n (2^(kn) - 1)", "[quick][bound]") {
    CHECK(billhardt_bound(1, 3) == 7);
    CHECK(billhardt_bound(1, 1) == 1);
    CHECK(billhardt_bound(2, 1) == 6);
    CHECK(billhardt_bound(1, 62) == (std::uint64_t(1) << 62) - 1);
    CHECK_THROWS_AS(billhardt_bound(0, 1), RejectedInput);
    CHECK_THROWS_AS(billhardt_bound(1, 0), RejectedInput);
    CHECK_THROWS_AS(billhardt_bound(1, 63), RejectedInput);
    CHECK_THROWS_AS(billhardt_bound(31, 2), RejectedInput);
    CHECK(billhardt_bound(8, 7) == 8 * ((std::uint64_t(1) << 56) - 1));
    CHECK(within_billhardt_bound(7, 1, 3));
    CHECK_FALSE(within_billhardt_bound(8, 1, 3));
    CHECK(within_billhardt_bound(UINT64_MAX, 1, 64));
    CHECK(within_billhardt_bound(UINT64_MAX, 100, 100));
    CHECK_FALSE(within_billhardt_bound(UINT64_MAX, 1, 63));
  }

}  // namespace invsg
