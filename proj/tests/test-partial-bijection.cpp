#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include <catch_amalgamated.hpp>

#include "invsg/errors.hpp"
#include "invsg/partial_bijection.hpp"

#include "oracles.hpp"

namespace invsg {

  namespace {
    constexpr auto U = PartialBijection::undefined;

    std::vector<std::optional<std::uint32_t>> as_optional(PartialBijection const& p) {
      std::vector<std::optional<std::uint32_t>> out;
      for (auto y : p.images()) {
        out.push_back(y == U ? std::nullopt : std::optional<std::uint32_t>(y));
      }
      return out;
    }
  }  // namespace

  TEST_CASE("PartialBijection 001: construction", "[quick][partial_bijection]") {
    PartialBijection p({1, U});
    CHECK(p.degree() == 2);
    CHECK(p.rank() == 1);
    CHECK(p(0) == 1u);
    CHECK(p(1) == std::nullopt);
    CHECK(p.to_string() == "{0->1}");
    CHECK(PartialBijection::empty(3).to_string() == "{}");
    CHECK(PartialBijection::identity(3).is_identity());
    CHECK_FALSE(PartialBijection::empty(3).is_identity());
    std::vector<PartialBijection::Point> dom = {0, 2};
    CHECK(PartialBijection::idempotent(3, dom) == PartialBijection({0, U, 2}));
  }

  TEST_CASE("PartialBijection 002: rejected input", "[quick][partial_bijection]") {
    CHECK_THROWS_AS(PartialBijection({0, 0}), RejectedInput);
    CHECK_THROWS_WITH(PartialBijection({0, 0}), Catch::Matchers::ContainsSubstring("not injective"));
    CHECK_THROWS_AS(PartialBijection({2, U}), RejectedInput);
    CHECK_THROWS_AS(PartialBijection(std::vector<PartialBijection::Point>{}), RejectedInput);
    CHECK_THROWS_AS(compose(PartialBijection::identity(2), PartialBijection::identity(3)), RejectedInput);
  }

  TEST_CASE("PartialBijection 003: compose examples", "[quick][partial_bijection]") {
    PartialBijection a({1, U});
    PartialBijection b({U, 0});
    CHECK(compose(PartialBijection::identity(2), b) == b);
    CHECK(compose(a, b) == PartialBijection({0, U}));
    CHECK(compose(a, a) == PartialBijection::empty(2));
    CHECK(compose(b, a) == PartialBijection({U, 1}));
  }

  TEST_CASE("PartialBijection 004: invert examples", "[quick][partial_bijection]") {
    CHECK(invert(PartialBijection::identity(4)) == PartialBijection::identity(4));
    CHECK(invert(PartialBijection({1, U})) == PartialBijection({U, 0}));
    CHECK(invert(PartialBijection::empty(2)) == PartialBijection::empty(2));
  }

  TEST_CASE("PartialBijection 005: all_partial_bijections counts", "[quick][partial_bijection]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto all = all_partial_bijections(n);
      CHECK(all.size() == oracle::symmetric_inverse_monoid_size(n));
      std::unordered_set<PartialBijection> distinct(all.begin(), all.end());
      CHECK(distinct.size() == all.size());
    }
  }

  TEST_CASE("PartialBijection 006: compose agrees with the naive map", "[quick][partial_bijection]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto all = all_partial_bijections(n);
      for (auto const& p : all) {
        for (auto const& q : all) {
          CHECK(as_optional(compose(p, q)) == oracle::compose(as_optional(p), as_optional(q)));
        }
      }
    }
  }

  TEST_CASE("PartialBijection 007: inverse laws", "[quick][partial_bijection]") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& p : all_partial_bijections(n)) {
        auto q = invert(p);
        REQUIRE(invert(q) == p);
        REQUIRE(compose(compose(p, q), p) == p);
        REQUIRE(compose(compose(q, p), q) == q);
        REQUIRE(q.rank() == p.rank());
      }
    }
  }

  TEST_CASE("PartialBijection 008: random compositions", "[quick][partial_bijection]") {
    std::mt19937_64 rng(7);
    auto            all = all_partial_bijections(5);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 2000; ++i) {
      auto const& p = all[pick(rng)];
      auto const& q = all[pick(rng)];
      auto const& r = all[pick(rng)];
      REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
      REQUIRE(invert(compose(p, q)) == compose(invert(q), invert(p)));
    }
  }

}  // namespace invsg
