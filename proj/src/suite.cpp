#include "invsg/suite.hpp"

#include "invsg/corpus.hpp"
#include "invsg/errors.hpp"

namespace invsg {

  namespace {
    // Runs f and records either its serialised result or the error.
    template <typename F>
    Json attempt(bool& ok, F&& f) {
      try {
        return serialize(f());
      } catch (Error const& e) {
        ok = false;
        return {{"error", e.what()}};
      }
    }
  }  // namespace

  Json run_check_suite(SuiteOptions const& options) {
    bool ok     = true;
    Json report = {{"seed", options.seed}, {"trials", options.trials}};

    Json members = Json::array();
    for (auto const& entry : standard_corpus()) {
      auto const& s      = entry.semigroup;
      auto        axioms = verify_inverse(s.table());
      ok                 = ok && axioms.ok;
      Json member        = {{"name", entry.name},
                            {"size", s.size()},
                            {"generators", s.number_of_generators()},
                            {"idempotents", idempotents(s).size()},
                            {"axioms", serialize(axioms)}};
      for (auto kind : applicable_kinds(s)) {
        Json checks;
        checks["lemma"] = attempt(ok, [&] { return syntactic_projection(s, kind); });
        checks["e_unitary"] = attempt(ok, [&] { return check_e_unitary_corollary(s, kind); });
        checks["main"] = attempt(ok, [&] { return check_main_theorem_finite_direction(s, kind); });
        member[to_string(kind)] = std::move(checks);
      }
      members.push_back(std::move(member));
    }
    report["corpus"] = std::move(members);

    Json invariance = Json::array();
    {
      auto z4 = cyclic_group(4);
      Element g = z4.generators()[0];
      std::vector<Element> single{g}, pair{g, z4.product(g, g)};
      invariance.push_back({{"name", "Z4"}, {"report", attempt(ok, [&] {
                              return check_generator_invariance(z4, single, pair,
                                                                ProblemKind::semigroup);
                            })}});
      auto b2 = brandt_b2();
      std::vector<Element> gens(b2.generators().begin(), b2.generators().end()), all;
      for (Element x = 0; x < b2.size(); ++x) {
        all.push_back(x);
      }
      invariance.push_back({{"name", "B2"}, {"report", attempt(ok, [&] {
                              return check_generator_invariance(b2, gens, all,
                                                                ProblemKind::semigroup);
                            })}});
    }
    report["generator_invariance"] = std::move(invariance);

    Json products = Json::array();
    LocalFinitenessOptions lf{options.trials, 2, options.seed};
    for (auto [name, action] : {std::pair{"Z2xFS2", swap_action()},
                                std::pair{"B2xFS2", b2_constant_action()}}) {
      auto product = lambda_product(action);
      auto sigma   = product.action().target().is_semilattice()
                         ? free_semilattice_sigma()
                         : constant_sigma(product.action().target().size());
      auto local = check_local_finiteness_bound(product, sigma, lf);
      ok         = ok && local.holds;
      products.push_back({{"name", name},
                          {"size", product.semigroup().size()},
                          {"local_finiteness", serialize(local)}});
    }
    report["lambda_products"] = std::move(products);
    report["ok"]              = ok;
    return report;
  }

}  // namespace invsg
