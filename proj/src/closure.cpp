#include <string>
#include <unordered_map>

#include "invsg/errors.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

  std::vector<PartialBijection>
  enumerate_closure(std::span<PartialBijection const> generators,
                    ClosureOptions const&             options) {
    if (generators.empty()) {
      throw RejectedInput("closure needs at least one generator");
    }
    std::size_t degree = generators[0].degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw RejectedInput("generators have different degrees");
      }
    }

    std::vector<PartialBijection>                 elements;
    std::unordered_map<PartialBijection, Element> index;
    auto discover = [&](PartialBijection p) {
      if (index.contains(p)) {
        return;
      }
      if (elements.size() >= options.max_elements) {
        throw ResourceLimit("closure exceeds the cap of "
                            + std::to_string(options.max_elements) + " elements");
      }
      index.emplace(p, static_cast<Element>(elements.size()));
      elements.push_back(std::move(p));
    };

    for (auto const& g : generators) {
      discover(g);
    }
    for (std::size_t pos = 0; pos < elements.size(); ++pos) {
      for (auto const& g : generators) {
        discover(compose(elements[pos], g));
      }
    }
    return elements;
  }

  FiniteInverseSemigroup
  generate_closure(std::span<PartialBijection const> generators,
                   ClosureOptions const&             options) {
    auto        elements = enumerate_closure(generators, options);
    std::size_t n        = elements.size();

    std::unordered_map<PartialBijection, Element> index;
    index.reserve(n);
    for (Element i = 0; i < n; ++i) {
      index.emplace(elements[i], i);
    }

    for (auto const& p : elements) {
      if (!index.contains(invert(p))) {
        throw RejectedInput("the generated semigroup is not inverse: " + p.to_string()
                            + " is generated but its inverse is not");
      }
    }

    CayleyTable table(n, options.max_table_entries);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        table.set(a, b, index.at(compose(elements[a], elements[b])));
      }
    }

    std::vector<Element> gens;
    gens.reserve(generators.size());
    for (auto const& g : generators) {
      gens.push_back(index.at(g));
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (auto const& p : elements) {
      names.push_back(p.to_string());
    }
    return FiniteInverseSemigroup::from_trusted_table(std::move(table), std::move(gens),
                                                      std::move(names));
  }

}  // namespace invsg
