#include "invsg/lambda_product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "invsg/errors.hpp"

namespace invsg {

  EndomorphismAction::EndomorphismAction(FiniteInverseSemigroup                   actor,
                                         FiniteInverseSemigroup                   target,
                                         std::vector<std::vector<Element>> const& rows)
      : _actor(std::move(actor)), _target(std::move(target)) {
    if (rows.size() != _actor.size()) {
      throw RejectedInput("action table has " + std::to_string(rows.size())
                          + " rows, expected one per actor element ("
                          + std::to_string(_actor.size()) + ")");
    }
    _act.reserve(_actor.size() * _target.size());
    for (std::size_t g = 0; g < rows.size(); ++g) {
      if (rows[g].size() != _target.size()) {
        throw RejectedInput("action row " + std::to_string(g) + " has length "
                            + std::to_string(rows[g].size()) + ", expected "
                            + std::to_string(_target.size()));
      }
      for (Element a : rows[g]) {
        if (a >= _target.size()) {
          throw RejectedInput("action row " + std::to_string(g) + " entry "
                              + std::to_string(a) + " out of range");
        }
        _act.push_back(a);
      }
    }
  }

  EndomorphismAction EndomorphismAction::trivial(FiniteInverseSemigroup actor,
                                                 FiniteInverseSemigroup target) {
    std::vector<Element> identity_row(target.size());
    std::iota(identity_row.begin(), identity_row.end(), 0);
    std::vector<std::vector<Element>> rows(actor.size(), identity_row);
    return EndomorphismAction(std::move(actor), std::move(target), rows);
  }

  std::vector<std::vector<Element>> EndomorphismAction::rows() const {
    std::vector<std::vector<Element>> out(_actor.size());
    for (Element g = 0; g < _actor.size(); ++g) {
      for (Element a = 0; a < _target.size(); ++a) {
        out[g].push_back(act(g, a));
      }
    }
    return out;
  }

  MultiplicationReport validate_action(EndomorphismAction const& action) {
    using Kind      = MultiplicationReport::Kind;
    auto const& G   = action.actor();
    auto const& A   = action.target();
    for (Element g = 0; g < G.size(); ++g) {
      for (Element a = 0; a < A.size(); ++a) {
        for (Element b = 0; b < A.size(); ++b) {
          Element lhs = action.act(g, A.product(a, b));
          Element rhs = A.product(action.act(g, a), action.act(g, b));
          if (lhs != rhs) {
            return MultiplicationReport::fail(
                Kind::not_endomorphism,
                {g, a, b},
                "g=" + G.name(g) + " alpha=" + A.name(a) + " beta=" + A.name(b)
                    + ": g.(alpha o beta) = " + A.name(lhs)
                    + " but (g.alpha) o (g.beta) = " + A.name(rhs));
          }
        }
      }
    }
    for (Element g = 0; g < G.size(); ++g) {
      for (Element h = 0; h < G.size(); ++h) {
        for (Element a = 0; a < A.size(); ++a) {
          Element lhs = action.act(G.product(g, h), a);
          Element rhs = action.act(g, action.act(h, a));
          if (lhs != rhs) {
            return MultiplicationReport::fail(
                Kind::not_action,
                {g, h, a},
                "g=" + G.name(g) + " h=" + G.name(h) + " alpha=" + A.name(a)
                    + ": (gh).alpha = " + A.name(lhs) + " but g.(h.alpha) = "
                    + A.name(rhs));
          }
        }
      }
    }
    return MultiplicationReport::success();
  }

  namespace {
    LambdaPair multiply_pairs(EndomorphismAction const& action, LambdaPair x, LambdaPair y) {
      auto const& G  = action.actor();
      auto const& A  = action.target();
      Element     gh = G.product(x.g, y.g);
      Element     e  = G.product(gh, G.inverse(gh));
      return {A.product(action.act(e, x.alpha), action.act(x.g, y.alpha)), gh};
    }

    bool satisfies_universe_condition(EndomorphismAction const& action, LambdaPair p) {
      auto const& G = action.actor();
      return action.act(G.product(p.g, G.inverse(p.g)), p.alpha) == p.alpha;
    }

    std::optional<Element> find_pair(std::span<LambdaPair const> sorted, LambdaPair p) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
      if (it == sorted.end() || *it != p) {
        return std::nullopt;
      }
      return static_cast<Element>(it - sorted.begin());
    }
  }  // namespace

  LambdaPair LambdaProduct::multiply(LambdaPair x, LambdaPair y) const {
    return multiply_pairs(_action, x, y);
  }

  bool LambdaProduct::in_universe(LambdaPair p) const {
    return satisfies_universe_condition(_action, p);
  }

  std::optional<Element> LambdaProduct::index_of(LambdaPair p) const {
    return find_pair(_pairs, p);
  }

  LambdaProduct lambda_product(EndomorphismAction action, std::span<LambdaPair const> generators) {
    auto report = validate_action(action);
    if (!report.ok) {
      throw RejectedInput(std::string("invalid action: ") + to_string(report.failure->kind)
                          + ": " + report.failure->description);
    }
    auto const& G = action.actor();
    auto const& A = action.target();

    std::vector<LambdaPair> universe;
    for (Element a = 0; a < A.size(); ++a) {
      for (Element g = 0; g < G.size(); ++g) {
        if (satisfies_universe_condition(action, {a, g})) {
          universe.push_back({a, g});
        }
      }
    }

    std::size_t n = universe.size();
    CayleyTable table(n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        auto idx = find_pair(universe, multiply_pairs(action, universe[i], universe[j]));
        if (!idx) {
          throw InvariantViolation("universe not closed: product of pairs " + std::to_string(i)
                                   + " and " + std::to_string(j) + " leaves it");
        }
        table.set(i, j, *idx);
      }
    }

    std::vector<Element> gens;
    for (auto const& p : generators) {
      auto idx = find_pair(universe, p);
      if (!idx) {
        throw RejectedInput("generator (" + std::to_string(p.alpha) + ", " + std::to_string(p.g)
                            + ") is not in the universe");
      }
      gens.push_back(*idx);
    }
    std::vector<std::string> names;
    for (auto const& p : universe) {
      names.push_back("(" + A.name(p.alpha) + "," + G.name(p.g) + ")");
    }
    try {
      auto semigroup = FiniteInverseSemigroup::from_table(std::move(table), std::move(gens),
                                                          std::move(names));
      return LambdaProduct(std::move(action), std::move(universe), std::move(semigroup));
    } catch (RejectedInput const& e) {
      throw InvariantViolation(std::string("lambda-semidirect product: ") + e.what());
    }
  }

  SizeFunction free_semilattice_sigma() {
    return [](std::uint64_t k) -> std::uint64_t {
      return k >= 64 ? UINT64_MAX : (std::uint64_t{1} << k) - 1;
    };
  }

  SizeFunction constant_sigma(std::uint64_t size) {
    return [size](std::uint64_t) { return size; };
  }

  namespace {
    __extension__ using uint128 = unsigned __int128;

    std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t out;
      return __builtin_mul_overflow(a, b, &out) ? UINT64_MAX : out;
    }

    // C(n, m), saturating.
    std::uint64_t binomial(std::uint64_t n, std::uint64_t m) {
      if (m > n) {
        return 0;
      }
      m = std::min(m, n - m);
      uint128 acc = 1;
      for (std::uint64_t i = 1; i <= m; ++i) {
        acc = acc * (n - m + i) / i;
        if (acc > UINT64_MAX) {
          return UINT64_MAX;
        }
      }
      return static_cast<std::uint64_t>(acc);
    }

    // Calls f on every m-subset of {0..n-1} in lexicographic order when there
    // are at most `trials` of them, otherwise on `trials` random m-subsets.
    // Returns (number visited, exhaustive).
    template <typename F>
    std::pair<std::size_t, bool> for_subsets(std::size_t     n,
                                             std::size_t     m,
                                             std::size_t     trials,
                                             std::mt19937_64& rng,
                                             F&&             f) {
      if (binomial(n, m) <= trials) {
        std::vector<Element> subset(m);
        std::iota(subset.begin(), subset.end(), 0);
        std::size_t count = 0;
        while (true) {
          f(std::span<Element const>(subset));
          ++count;
          std::size_t i = m;
          while (i > 0 && subset[i - 1] == n - m + i - 1) {
            --i;
          }
          if (i == 0) {
            break;
          }
          ++subset[i - 1];
          for (std::size_t j = i; j < m; ++j) {
            subset[j] = subset[j - 1] + 1;
          }
        }
        return {count, true};
      }
      std::vector<Element> all(n);
      std::iota(all.begin(), all.end(), 0);
      for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Element> subset;
        std::sample(all.begin(), all.end(), std::back_inserter(subset), m, rng);
        f(std::span<Element const>(subset));
      }
      return {trials, false};
    }
  }  // namespace

  LocalFinitenessReport check_local_finiteness_bound(LambdaProduct const&          product,
                                                     SizeFunction const&           sigma,
                                                     LocalFinitenessOptions const& options) {
    if (options.trials == 0 || options.max_m == 0) {
      throw RejectedInput("trials and max_m must be positive");
    }
    auto const& S = product.semigroup();
    auto const& A = product.action().target();
    std::size_t g_size = product.action().actor().size();

    std::mt19937_64       rng(options.seed);
    LocalFinitenessReport report{g_size, S.size(), {}, 0, true, true};

    // sigma against the target, for every argument the bound will use.
    std::size_t   k_max = std::min(options.max_m * g_size, A.size());
    std::uint64_t previous = 0;
    for (std::size_t k = 1; k <= options.max_m * g_size; ++k) {
      std::uint64_t value = sigma(k);
      if (value < previous) {
        report.sigma_valid = false;
      }
      previous = value;
      if (k > k_max) {
        continue;
      }
      auto [count, exhaustive] = for_subsets(A.size(), k, options.trials, rng,
                                             [&](std::span<Element const> z) {
                                               if (subsemigroup_closure(A.table(), z).size() > value) {
                                                 report.sigma_valid = false;
                                               }
                                             });
      report.sigma_samples += count;
    }

    for (std::size_t m = 1; m <= options.max_m && m <= S.size(); ++m) {
      LocalFinitenessRow row{m, 0, false, saturating_mul(g_size, sigma(m * g_size)), 0, 0.0, true};
      auto [count, exhaustive] = for_subsets(S.size(), m, options.trials, rng,
                                             [&](std::span<Element const> y) {
                                               std::size_t size = subsemigroup_closure(S.table(), y).size();
                                               row.max_observed = std::max(row.max_observed, size);
                                             });
      row.subsets_checked = count;
      row.exhaustive      = exhaustive;
      row.holds           = row.max_observed <= row.bound;
      row.max_ratio = static_cast<double>(row.max_observed) / static_cast<double>(row.bound);
      report.holds  = report.holds && row.holds;
      report.rows.push_back(row);
    }
    report.holds = report.holds && report.sigma_valid;
    return report;
  }

  std::uint64_t billhardt_bound(std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k == 0) {
      throw RejectedInput("n and k must be positive");
    }
    if (k > 62 || n > 62 || k * n > 62) {
      throw RejectedInput("k * n must be at most 62, got k=" + std::to_string(k)
                          + " n=" + std::to_string(n));
    }
    std::uint64_t out;
    if (__builtin_mul_overflow(n, (std::uint64_t{1} << (k * n)) - 1, &out)) {
      throw RejectedInput("n (2^(kn) - 1) does not fit in 64 bits");
    }
    return out;
  }

  bool within_billhardt_bound(std::uint64_t size, std::uint64_t n, std::uint64_t k) {
    if (n == 0 || k == 0) {
      throw RejectedInput("n and k must be positive");
    }
    if (k >= 64 || n >= 64 || k * n >= 64) {
      return true;  // bound >= 2^64 - 1
    }
    uint128 bound
        = static_cast<uint128>(n) * ((std::uint64_t{1} << (k * n)) - 1);
    return size <= bound;
  }

}  // namespace invsg
