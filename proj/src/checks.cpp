#include "invsg/checks.hpp"

#include <algorithm>
#include <string>

#include "invsg/errors.hpp"
#include "invsg/isomorphism.hpp"
#include "invsg/lambda_product.hpp"

namespace invsg {

  namespace {
    char const* kind_name(ProblemKind kind) {
      return kind == ProblemKind::monoid ? "monoid" : "semigroup";
    }

    CayleyTable projection_target(SyntacticAlgebra const& sa, ProblemKind kind) {
      return kind == ProblemKind::monoid ? sa.monoid() : sa.semigroup_table();
    }
  }  // namespace

  ProjectionReport compute_syntactic_projection(FiniteInverseSemigroup const& s, ProblemKind kind) {
    Dfa  d       = idempotent_problem_dfa(s, kind);
    Dfa  minimal = minimize(d);
    auto sa      = syntactic_algebra(minimal);

    std::size_t          n = s.size();
    std::vector<Element> image(n);
    for (Element x = 0; x < n; ++x) {
      image[x] = sa.evaluate(s.witness(x));
    }

    bool well_defined = true;
    for (Element a = 0; a < n && well_defined; ++a) {
      for (Element b = 0; b < n && well_defined; ++b) {
        well_defined = sa.monoid()(image[a], image[b]) == image[s.product(a, b)];
      }
    }

    std::vector<Element> sorted_image = image;
    std::sort(sorted_image.begin(), sorted_image.end());
    sorted_image.erase(std::unique(sorted_image.begin(), sorted_image.end()), sorted_image.end());
    bool surjective = std::equal(sorted_image.begin(), sorted_image.end(),
                                 sa.semigroup_part().begin(), sa.semigroup_part().end());
    if (kind == ProblemKind::monoid) {
      surjective = surjective && sa.semigroup_part_is_whole_monoid();
    }

    bool idempotent_pure = true;
    for (Element x = 0; x < n; ++x) {
      if (sa.monoid().is_idempotent(image[x]) && !s.is_idempotent(x)) {
        idempotent_pure = false;
      }
    }

    std::vector<std::uint32_t> labels(image.begin(), image.end());
    auto kernel = well_defined ? Congruence::kernel(s.table(), labels) : Congruence::equality(n);
    auto greatest = greatest_idempotent_pure(s);
    bool kernel_is_greatest = well_defined && kernel == greatest;

    return ProjectionReport{kind,
                            d.number_of_states(),
                            minimal.number_of_states(),
                            std::move(sa),
                            std::move(image),
                            std::move(kernel),
                            std::move(greatest),
                            well_defined,
                            surjective,
                            idempotent_pure,
                            kernel_is_greatest};
  }

  ProjectionReport syntactic_projection(FiniteInverseSemigroup const& s, ProblemKind kind) {
    auto report = compute_syntactic_projection(s, kind);
    if (!report.ok()) {
      std::string failed;
      for (auto [flag, label] : {std::pair{report.well_defined, "W"},
                                 std::pair{report.surjective, "S"},
                                 std::pair{report.idempotent_pure, "P"},
                                 std::pair{report.kernel_is_greatest, "K"}}) {
        if (!flag) {
          failed += failed.empty() ? label : std::string(",") + label;
        }
      }
      throw InvariantViolation("syntactic projection checks failed (" + std::string(kind_name(kind))
                               + " case): " + failed);
    }
    return report;
  }

  EUnitaryReport check_e_unitary_corollary(FiniteInverseSemigroup const& s, ProblemKind kind) {
    auto sa = syntactic_algebra(minimize(idempotent_problem_dfa(s, kind)));
    EUnitaryReport report{kind, is_e_unitary(s), is_group_language(sa),
                          is_group(sa.semigroup_table()), false};
    report.group_language
        = kind == ProblemKind::monoid ? report.monoid_is_group : report.semigroup_part_is_group;
    if (report.e_unitary != report.group_language) {
      throw InvariantViolation(std::string("E-unitary = ") + (report.e_unitary ? "true" : "false")
                               + " but group language = "
                               + (report.group_language ? "true" : "false") + " ("
                               + kind_name(kind) + " case)");
    }
    return report;
  }

  GeneratorInvarianceReport check_generator_invariance(FiniteInverseSemigroup const& s,
                                                       std::span<Element const>      gens_a,
                                                       std::span<Element const>      gens_b,
                                                       ProblemKind                   kind) {
    auto algebra_for = [&](std::span<Element const> gens) {
      for (Element g : gens) {
        if (g >= s.size()) {
          throw RejectedInput("generator " + std::to_string(g) + " out of range");
        }
      }
      auto t = s.with_generators(std::vector<Element>(gens.begin(), gens.end()));
      return projection_target(syntactic_algebra(minimize(idempotent_problem_dfa(t, kind))), kind);
    };
    CayleyTable a = algebra_for(gens_a);
    CayleyTable b = algebra_for(gens_b);
    GeneratorInvarianceReport report{kind,   gens_a.size(), gens_b.size(),
                                     a.size(), b.size(),    are_isomorphic(a, b)};
    if (!report.isomorphic) {
      throw InvariantViolation("syntactic algebras for the two generating sets differ");
    }
    return report;
  }

  MainTheoremReport check_main_theorem_finite_direction(FiniteInverseSemigroup const& s,
                                                        ProblemKind                   kind) {
    Dfa  d       = idempotent_problem_dfa(s, kind);
    Dfa  minimal = minimize(d);
    auto sa      = syntactic_algebra(minimal);

    MainTheoremReport report{kind,
                             s.size(),
                             s.number_of_generators(),
                             d.number_of_states(),
                             minimal.number_of_states(),
                             sa.size(),
                             sa.semigroup_part().size(),
                             std::nullopt,
                             false,
                             false};
    std::uint64_t n = report.semigroup_part_size, k = report.generators;
    report.holds    = within_billhardt_bound(s.size(), n, k);
    try {
      report.bound    = billhardt_bound(n, k);
      report.attained = *report.bound == s.size();
    } catch (RejectedInput const&) {
      report.bound.reset();
    }
    if (d.number_of_states() > s.size() + 1) {
      throw InvariantViolation("idempotent problem DFA has more than |S| + 1 states");
    }
    if (!equivalent(d, minimal)) {
      throw InvariantViolation("minimal DFA does not recognise the idempotent problem");
    }
    if (!report.holds) {
      throw InvariantViolation("|S| = " + std::to_string(s.size()) + " exceeds n (2^(kn) - 1) for n = "
                               + std::to_string(n) + ", k = " + std::to_string(k));
    }
    return report;
  }

}  // namespace invsg
