#include "slfq/dot.hpp"

#include <sstream>

namespace slfq {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string cell_id(const KnitVertex& kv) {
  return "s" + std::to_string(kv.slice) + "_" + kv.vertex;
}

}  // namespace

std::string to_dot(const FiniteQuiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const auto& v : q.vertices) os << "  " << quoted(v) << ";\n";
  for (const auto& a : q.arrows)
    os << "  " << quoted(a.from) << " -> " << quoted(a.to) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const KnittedComponent& k, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n";
  for (const KnitVertex& kv : k.vertices) {
    if (kv.state == KnitState::Absent) continue;
    os << "  " << quoted(cell_id(kv)) << " [label=";
    if (kv.state == KnitState::Unresolved) {
      os << quoted(kv.vertex + " @ " + std::to_string(kv.slice) + "\n?")
         << ", style=dashed, color=gray";
    } else {
      std::string dims;
      for (std::size_t i = 0; i < kv.dims.size(); ++i) {
        if (i) dims += ' ';
        dims += std::to_string(kv.dims[i]);
      }
      os << quoted(kv.vertex + " @ " + std::to_string(kv.slice) + "\n(" + dims + ")");
    }
    os << "];\n";
  }
  for (const KnitArrow& a : k.arrows)
    os << "  " << quoted(cell_id(k.vertices[static_cast<std::size_t>(a.from)]))
       << " -> " << quoted(cell_id(k.vertices[static_cast<std::size_t>(a.to)]))
       << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace slfq
