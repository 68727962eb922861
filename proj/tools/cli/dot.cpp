#include "dot.hpp"

#include <sstream>

namespace invsg::cli {

  std::string export_dot(Dfa const& d) {
    std::ostringstream os;
    os << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
    for (Dfa::State q = 0; q < d.number_of_states(); ++q) {
      os << "  q" << q << " [shape=" << (d.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  start -> q" << d.start() << ";\n";
    for (Dfa::State q = 0; q < d.number_of_states(); ++q) {
      for (Letter a = 0; a < d.alphabet_size(); ++a) {
        os << "  q" << q << " -> q" << d.next(q, a) << " [label=\"a" << a << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace invsg::cli
