#include <algorithm>
#include <sstream>

#include "pga/cli.hpp"

namespace pga::cli {

namespace {

std::string label_text(const Label& label) {
  std::string out = label.weight.to_string();
  if (label.var) out += "·" + label.var->name();
  return out;
}

}  // namespace

std::string dot_export(const Pga& a) {
  std::vector<Transition> edges = a.transitions();
  std::sort(edges.begin(), edges.end(), [](const Transition& x, const Transition& y) {
    auto key = [](const Transition& t) {
      return std::make_tuple(t.from, t.to, t.label.var.has_value(),
                             t.label.var ? t.label.var->name() : std::string());
    };
    return key(x) < key(y);
  });

  std::ostringstream os;
  os << "digraph pga {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (StateId q = 0; q < a.state_count(); ++q) {
    os << "  q" << q << " [label=\"q" << q;
    if (!a.initial_weight(q).is_zero()) os << "\\nI=" << a.initial_weight(q).to_string();
    if (!a.final_weight(q).is_zero()) os << "\\nF=" << a.final_weight(q).to_string();
    os << "\"];\n";
  }
  for (const Transition& t : edges)
    os << "  q" << t.from << " -> q" << t.to << " [label=\"" << label_text(t.label)
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace pga::cli
