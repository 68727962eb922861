#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invsg/congruence.hpp"
#include "invsg/dfa.hpp"
#include "invsg/semigroup.hpp"
#include "invsg/syntactic.hpp"
#include "invsg/types.hpp"

namespace invsg {

  // The map from S to the syntactic algebra of its idempotent problem that
  // sends each element to the class of its witness word, with the four
  // checks made on it:
  //   well_defined       phi(s) phi(t) = phi(st) for all s, t
  //   surjective         the image is M+(L) (semigroup case) or M(L) (monoid)
  //   idempotent_pure    phi(s) idempotent implies s idempotent
  //   kernel_is_greatest the kernel equals greatest_idempotent_pure(S)
  struct ProjectionReport {
    ProblemKind          kind;
    std::size_t          dfa_states;
    std::size_t          minimal_states;
    SyntacticAlgebra     algebra;
    std::vector<Element> image;
    Congruence           kernel;
    Congruence           greatest;
    bool                 well_defined;
    bool                 surjective;
    bool                 idempotent_pure;
    bool                 kernel_is_greatest;

    bool ok() const noexcept {
      return well_defined && surjective && idempotent_pure && kernel_is_greatest;
    }
  };

  // Builds the report without throwing on a failed check.
  ProjectionReport compute_syntactic_projection(FiniteInverseSemigroup const& s, ProblemKind kind);

  // As compute_syntactic_projection; throws InvariantViolation naming the
  // failed checks.
  ProjectionReport syntactic_projection(FiniteInverseSemigroup const& s, ProblemKind kind);

  // E-unitary against "the idempotent problem is a group language". The
  // group test is applied to the image of the idempotent-pure projection:
  // M+(L) in the semigroup case, M(L) in the monoid case. Both readings are
  // recorded.
  struct EUnitaryReport {
    ProblemKind kind;
    bool        e_unitary;
    bool        monoid_is_group;
    bool        semigroup_part_is_group;
    bool        group_language;
  };

  // Throws InvariantViolation when e_unitary != group_language.
  EUnitaryReport check_e_unitary_corollary(FiniteInverseSemigroup const& s, ProblemKind kind);

  struct GeneratorInvarianceReport {
    ProblemKind kind;
    std::size_t generators_a;
    std::size_t generators_b;
    std::size_t size_a;
    std::size_t size_b;
    bool        isomorphic;
  };

  // Compares M+(L) (semigroup case) or M(L) (monoid case) for two generating
  // sets. Throws RejectedInput if a set does not generate S and
  // InvariantViolation if the results are not isomorphic.
  GeneratorInvarianceReport check_generator_invariance(FiniteInverseSemigroup const& s,
                                                       std::span<Element const>      gens_a,
                                                       std::span<Element const>      gens_b,
                                                       ProblemKind                   kind);

  struct MainTheoremReport {
    ProblemKind                  kind;
    std::size_t                  size;
    std::size_t                  generators;
    std::size_t                  dfa_states;
    std::size_t                  minimal_states;
    std::size_t                  monoid_size;
    std::size_t                  semigroup_part_size;
    std::optional<std::uint64_t> bound;  // empty when it does not fit in 64 bits
    bool                         holds;
    bool                         attained;
  };

  // The idempotent problem is recognised by a DFA with at most |S| + 1
  // states and has a finite syntactic monoid; and |S| <= n (2^(kn) - 1) with
  // n = |M+(L)| and k the number of generators. InvariantViolation if any of
  // these fail.
  MainTheoremReport check_main_theorem_finite_direction(FiniteInverseSemigroup const& s,
                                                        ProblemKind                   kind);

}  // namespace invsg
