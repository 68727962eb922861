#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "invsg/cayley_table.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // A finite inverse semigroup G (the actor) acting on the left of a finite
  // inverse semigroup A (the target): act(g, alpha) is g . alpha.
  class EndomorphismAction {
   public:
    // rows[g][alpha] = g . alpha. Throws RejectedInput on a shape mismatch or
    // out-of-range entry; the action axioms are checked by validate_action.
    EndomorphismAction(FiniteInverseSemigroup                   actor,
                       FiniteInverseSemigroup                   target,
                       std::vector<std::vector<Element>> const& rows);

    // Every element of the actor acts as the identity map.
    static EndomorphismAction trivial(FiniteInverseSemigroup actor,
                                      FiniteInverseSemigroup target);

    FiniteInverseSemigroup const& actor() const noexcept {
      return _actor;
    }

    FiniteInverseSemigroup const& target() const noexcept {
      return _target;
    }

    Element act(Element g, Element alpha) const noexcept {
      return _act[static_cast<std::size_t>(g) * _target.size() + alpha];
    }

    std::vector<std::vector<Element>> rows() const;

   private:
    FiniteInverseSemigroup _actor;
    FiniteInverseSemigroup _target;
    std::vector<Element>   _act;
  };

  // Checks g.(a o b) = (g.a) o (g.b) over all (g, a, b), then
  // (gh).a = g.(h.a) over all (g, h, a), each in lexicographic order. The
  // first violation is reported with its witnesses.
  MultiplicationReport validate_action(EndomorphismAction const& action);

  struct LambdaPair {
    Element alpha;
    Element g;

    friend bool operator==(LambdaPair const&, LambdaPair const&) = default;
    friend auto operator<=>(LambdaPair const&, LambdaPair const&) = default;
  };

  class LambdaProduct;

  // Pairs are ordered lexicographically by (alpha, g). When generators is
  // empty the product is presented by greedy_generating_set. Throws
  // RejectedInput if validate_action fails or a generator is not in the
  // universe, InvariantViolation if the universe is not closed or the result
  // is not an inverse semigroup.
  LambdaProduct lambda_product(EndomorphismAction          action,
                               std::span<LambdaPair const> generators = {});

  // The lambda-semidirect product: pairs (alpha, g) with (g g^-1) . alpha =
  // alpha, multiplied by
  //   (alpha, g)(beta, h) = ( ((gh)(gh)^-1 . alpha) o (g . beta), gh ).
  class LambdaProduct {
   public:
    std::span<LambdaPair const> pairs() const noexcept {
      return _pairs;
    }

    FiniteInverseSemigroup const& semigroup() const noexcept {
      return _semigroup;
    }

    EndomorphismAction const& action() const noexcept {
      return _action;
    }

    std::optional<Element> index_of(LambdaPair p) const;

    // The product formula applied to two arbitrary pairs of A x G.
    LambdaPair multiply(LambdaPair x, LambdaPair y) const;

    bool in_universe(LambdaPair p) const;

   private:
    friend LambdaProduct lambda_product(EndomorphismAction, std::span<LambdaPair const>);

    LambdaProduct(EndomorphismAction      action,
                  std::vector<LambdaPair> pairs,
                  FiniteInverseSemigroup  semigroup)
        : _action(std::move(action)),
          _pairs(std::move(pairs)),
          _semigroup(std::move(semigroup)) {}

    EndomorphismAction      _action;
    std::vector<LambdaPair> _pairs;
    FiniteInverseSemigroup  _semigroup;
  };

  // A non-decreasing bound on the size of k-generated subsemigroups.
  using SizeFunction = std::function<std::uint64_t(std::uint64_t)>;

  // 2^k - 1, saturating; valid for every semilattice.
  SizeFunction free_semilattice_sigma();

  // The constant |A|; valid for any finite A.
  SizeFunction constant_sigma(std::uint64_t size);

  struct LocalFinitenessOptions {
    std::size_t   trials = 64;
    std::size_t   max_m  = 2;
    std::uint64_t seed   = kDefaultSeed;
  };

  struct LocalFinitenessRow {
    std::size_t   m;
    std::size_t   subsets_checked;
    bool          exhaustive;
    std::uint64_t bound;
    std::size_t   max_observed;
    double        max_ratio;
    bool          holds;
  };

  struct LocalFinitenessReport {
    std::size_t                     actor_size;
    std::size_t                     product_size;
    std::vector<LocalFinitenessRow> rows;
    // Sampled subsets Z of the target with |<Z>| <= sigma(|Z|).
    std::size_t sigma_samples;
    bool        sigma_valid;
    bool        holds;
  };

  // For each m in 1..max_m, takes every m-subset Y of the product when there
  // are at most `trials` of them and `trials` random ones otherwise, and
  // checks |<Y>| <= |G| sigma(m |G|). sigma itself is sampled against the
  // target with the same rule. Deterministic for a given seed.
  LocalFinitenessReport check_local_finiteness_bound(LambdaProduct const&          product,
                                                     SizeFunction const&           sigma,
                                                     LocalFinitenessOptions const& options = {});

  // n (2^(kn) - 1). Throws RejectedInput unless 1 <= k, 1 <= n, kn <= 62 and
  // the product fits in 64 bits.
  std::uint64_t billhardt_bound(std::uint64_t n, std::uint64_t k);

  // size <= n (2^(kn) - 1), evaluated without overflow for any n, k >= 1.
  bool within_billhardt_bound(std::uint64_t size, std::uint64_t n, std::uint64_t k);

}  // namespace invsg
