#include "invsg/serialize.hpp"

namespace invsg {

  char const* to_string(ProblemKind kind) noexcept {
    return kind == ProblemKind::monoid ? "monoid" : "semigroup";
  }

  Json serialize(MultiplicationReport const& report) {
    Json out;
    out["ok"] = report.ok;
    if (report.failure) {
      out["failure"] = {{"kind", to_string(report.failure->kind)},
                        {"witnesses", report.failure->witnesses},
                        {"description", report.failure->description}};
    }
    return out;
  }

  Json serialize(FiniteInverseSemigroup const& s, bool with_table) {
    Json out;
    out["size"]        = s.size();
    out["idempotents"] = idempotents(s);
    out["identity"]    = s.identity() ? Json(*s.identity()) : Json(nullptr);
    out["generators"]  = std::vector<Element>(s.generators().begin(), s.generators().end());
    Json elements      = Json::array();
    for (Element x = 0; x < s.size(); ++x) {
      elements.push_back(
          {{"name", s.name(x)}, {"inverse", s.inverse(x)}, {"witness", s.witness(x)}});
    }
    out["elements"] = std::move(elements);
    if (with_table) {
      out["table"] = s.table().rows();
    }
    return out;
  }

  Json serialize(Congruence const& c) {
    return {{"classes", c.number_of_classes()},
            {"class_index", std::vector<Congruence::ClassId>(c.class_index().begin(),
                                                             c.class_index().end())}};
  }

  Json serialize(Dfa const& d) {
    Json transitions = Json::array();
    Json accepting   = Json::array();
    for (Dfa::State q = 0; q < d.number_of_states(); ++q) {
      std::vector<Dfa::State> row;
      for (Letter a = 0; a < d.alphabet_size(); ++a) {
        row.push_back(d.next(q, a));
      }
      transitions.push_back(row);
      accepting.push_back(static_cast<bool>(d.is_accepting(q)));
    }
    return {{"alphabet_size", d.alphabet_size()},
            {"states", d.number_of_states()},
            {"start", d.start()},
            {"transitions", std::move(transitions)},
            {"accepting", std::move(accepting)}};
  }

  Json serialize(SyntacticAlgebra const& sa) {
    std::vector<Element> letters;
    Json                 witnesses = Json::array();
    for (Letter a = 0; a < sa.alphabet_size(); ++a) {
      letters.push_back(sa.letter_image(a));
    }
    for (Element x = 0; x < sa.size(); ++x) {
      witnesses.push_back(sa.witness(x));
    }
    return {{"monoid_size", sa.size()},
            {"identity", SyntacticAlgebra::identity},
            {"semigroup_part",
             std::vector<Element>(sa.semigroup_part().begin(), sa.semigroup_part().end())},
            {"case", sa.semigroup_part_is_whole_monoid() ? "M+ = M" : "M+ = M minus identity"},
            {"letter_images", letters},
            {"witnesses", std::move(witnesses)},
            {"table", sa.monoid().rows()}};
  }

  Json serialize(ProjectionReport const& report) {
    return {{"case", to_string(report.kind)},
            {"dfa_states", report.dfa_states},
            {"minimal_states", report.minimal_states},
            {"monoid_size", report.algebra.size()},
            {"semigroup_part_size", report.algebra.semigroup_part().size()},
            {"dichotomy",
             report.algebra.semigroup_part_is_whole_monoid() ? "M+ = M" : "M+ = M minus identity"},
            {"image", report.image},
            {"kernel", serialize(report.kernel)},
            {"greatest_idempotent_pure", serialize(report.greatest)},
            {"W_well_defined", report.well_defined},
            {"S_surjective", report.surjective},
            {"P_idempotent_pure", report.idempotent_pure},
            {"K_kernel_is_greatest", report.kernel_is_greatest},
            {"ok", report.ok()}};
  }

  Json serialize(EUnitaryReport const& report) {
    return {{"case", to_string(report.kind)},
            {"e_unitary", report.e_unitary},
            {"group_language", report.group_language},
            {"syntactic_monoid_is_group", report.monoid_is_group},
            {"syntactic_semigroup_is_group", report.semigroup_part_is_group},
            {"agree", report.e_unitary == report.group_language}};
  }

  Json serialize(GeneratorInvarianceReport const& report) {
    return {{"case", to_string(report.kind)},
            {"generators_a", report.generators_a},
            {"generators_b", report.generators_b},
            {"size_a", report.size_a},
            {"size_b", report.size_b},
            {"isomorphic", report.isomorphic}};
  }

  Json serialize(MainTheoremReport const& report) {
    return {{"case", to_string(report.kind)},
            {"size", report.size},
            {"generators", report.generators},
            {"dfa_states", report.dfa_states},
            {"minimal_states", report.minimal_states},
            {"syntactic_monoid_size", report.monoid_size},
            {"n", report.semigroup_part_size},
            {"bound", report.bound ? Json(*report.bound) : Json("> 2^64")},
            {"holds", report.holds},
            {"attained", report.attained}};
  }

  Json serialize(LambdaProduct const& product) {
    Json pairs = Json::array();
    for (auto const& p : product.pairs()) {
      pairs.push_back({p.alpha, p.g});
    }
    Json out          = serialize(product.semigroup());
    out["pairs"]      = std::move(pairs);
    out["actor_size"] = product.action().actor().size();
    out["target_size"] = product.action().target().size();
    return out;
  }

  Json serialize(LocalFinitenessReport const& report) {
    Json rows = Json::array();
    for (auto const& row : report.rows) {
      rows.push_back({{"m", row.m},
                      {"subsets_checked", row.subsets_checked},
                      {"exhaustive", row.exhaustive},
                      {"bound", row.bound},
                      {"max_observed", row.max_observed},
                      {"max_ratio", row.max_ratio},
                      {"holds", row.holds}});
    }
    return {{"actor_size", report.actor_size},
            {"product_size", report.product_size},
            {"rows", std::move(rows)},
            {"sigma_samples", report.sigma_samples},
            {"sigma_valid", report.sigma_valid},
            {"holds", report.holds}};
  }

}  // namespace invsg
