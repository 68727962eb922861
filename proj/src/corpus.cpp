#include "invsg/corpus.hpp"

#include "invsg/errors.hpp"

namespace invsg {

  FiniteInverseSemigroup brandt_b2() {
    using Point = PartialBijection::Point;
    std::vector<PartialBijection> gens{PartialBijection(std::vector<Point>{1, PartialBijection::undefined}),
                                       PartialBijection(std::vector<Point>{PartialBijection::undefined, 0})};
    return generate_closure(gens);
  }

  FiniteInverseSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw RejectedInput("cyclic group order must be positive");
    }
    std::vector<PartialBijection::Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      cycle[i] = static_cast<PartialBijection::Point>((i + 1) % n);
    }
    std::vector<PartialBijection> gens{PartialBijection(cycle)};
    return generate_closure(gens);
  }

  EndomorphismAction swap_action() {
    // free_semilattice(2): 0 = {1}, 1 = {2}, 2 = {1,2}
    auto z2 = cyclic_group(2);
    std::vector<std::vector<Element>> rows(z2.size());
    for (Element g = 0; g < z2.size(); ++g) {
      rows[g] = z2.identity() == g ? std::vector<Element>{0, 1, 2} : std::vector<Element>{1, 0, 2};
    }
    return EndomorphismAction(std::move(z2), free_semilattice(2), rows);
  }

  EndomorphismAction b2_constant_action() {
    auto b2 = brandt_b2();
    std::vector<std::vector<Element>> rows(b2.size(), std::vector<Element>{2, 2, 2});
    return EndomorphismAction(std::move(b2), free_semilattice(2), rows);
  }

  std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;
    out.push_back({"I1", symmetric_inverse_monoid(1)});
    out.push_back({"I2", symmetric_inverse_monoid(2)});
    out.push_back({"I3", symmetric_inverse_monoid(3)});
    out.push_back({"B2", brandt_b2()});
    out.push_back({"Z2", cyclic_group(2)});
    out.push_back({"Z4", cyclic_group(4)});
    for (std::size_t k = 1; k <= 4; ++k) {
      out.push_back({"FS" + std::to_string(k), free_semilattice(k)});
    }
    out.push_back({"Z2xFS2", lambda_product(swap_action()).semigroup()});
    out.push_back({"B2xFS2", lambda_product(b2_constant_action()).semigroup()});
    return out;
  }

  std::vector<ProblemKind> applicable_kinds(FiniteInverseSemigroup const& s) {
    if (s.identity()) {
      return {ProblemKind::semigroup, ProblemKind::monoid};
    }
    return {ProblemKind::semigroup};
  }

}  // namespace invsg
