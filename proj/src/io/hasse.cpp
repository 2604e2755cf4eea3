#include "segdesc/io/hasse.hpp"

#include <algorithm>
#include <sstream>

namespace segdesc::io {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

} // namespace

std::string export_hasse(const analysis::RelationMatrices& matrices, const std::vector<std::string>& names) {
  auto edges = matrices.hasse_edges;
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "digraph necessary {\n  rankdir=TB;\n";
  for (const auto& name : names) out << "  " << quoted(name) << ";\n";
  for (const auto& [i, k] : edges) out << "  " << quoted(names.at(i)) << " -> " << quoted(names.at(k)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_hasse(const std::vector<std::pair<std::string, std::string>>& edges,
                         const std::vector<std::string>& names) {
  analysis::RelationMatrices m;
  auto index = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  for (const auto& [a, b] : edges) m.hasse_edges.emplace_back(index(a), index(b));
  return export_hasse(m, names);
}

} // namespace segdesc::io
