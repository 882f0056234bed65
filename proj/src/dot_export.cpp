#include "firebreak/dot_export.hpp"

#include <sstream>

namespace firebreak {

namespace {

std::string short_number(const Rational& v) { return fraction_string(v); }

std::string short_number(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

template <class T>
std::string render(const Instance<T>& inst, const CutSystem* cut) {
  const auto& g = inst.graph;
  std::ostringstream out;
  out << "digraph firebreak {\n";
  out << "  node [shape=circle fontsize=10];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    out << "  v" << v << " [label=\"" << v << "\\nphi=" << short_number(vx.value)
        << " pi=" << short_number(vx.ignition) << '"';
    if (vx.ignition == T(1)) out << " style=filled fillcolor=firebrick1";
    out << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.pair >= 0 && ed.pair < e) continue;  // draw a mutual pair once
    out << "  v" << ed.tail << " -> v" << ed.head;
    out << " [label=\"k=" << short_number(ed.cost);
    if (ed.spread != T(1)) out << " s=" << short_number(ed.spread);
    out << '"';
    bool both_ways = !ed.directed || ed.pair >= 0;
    if (both_ways) out << " dir=none";
    if (cut && cut->contains(e)) out << " style=dashed color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const LoadedInstance& inst, const CutSystem* cut) {
  return std::visit([&](const auto& i) { return render(i, cut); }, inst);
}

}  // namespace firebreak
