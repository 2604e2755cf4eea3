#include "segdesc/io/report.hpp"

#include <map>
#include <sstream>

namespace segdesc::io {

namespace {

std::string joined(const Json& list, const char* sep = ", ") {
  std::string out;
  for (const auto& item : list) {
    if (!out.empty()) out += sep;
    out += item.is_string() ? item.get<std::string>() : item.dump();
  }
  return out;
}

std::string set_text(const Json& list) { return "{" + joined(list) + "}"; }

std::string pad(const std::string& s, std::size_t width) {
  std::size_t glyphs = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++glyphs;
  return glyphs >= width ? s : s + std::string(width - glyphs, ' ');
}

void system_table(std::ostream& out, const Json& system) {
  out << "SD system (" << system["mode"].get<std::string>() << ", redundancy "
      << system["redundancy"].get<std::string>() << "): " << system["inequalities"].size() << " inequalities\n";
  std::map<std::string, std::vector<const Json*>> by_variable;
  std::vector<const Json*> unbound;
  for (const auto& row : system["inequalities"]) {
    if (row["bound"].is_null()) unbound.push_back(&row);
    else by_variable[row["bound"]["variable"].get<std::string>()].push_back(&row);
  }
  const auto& ordering = system["ordering"];
  for (auto it = ordering.rbegin(); it != ordering.rend(); ++it) {
    const auto name = it->get<std::string>();
    const auto found = by_variable.find(name);
    if (found == by_variable.end()) continue;
    out << "  " << name << "\n";
    for (const Json* row : found->second)
      out << "    " << pad((*row)["label"].get<std::string>(), 14) << (*row)["text"].get<std::string>() << "\n";
  }
  if (!unbound.empty()) {
    out << "  (no bound)\n";
    for (const Json* row : unbound)
      out << "    " << pad((*row)["label"].get<std::string>(), 14) << (*row)["text"].get<std::string>() << "\n";
  }
}

void tree(std::ostream& out, const Json& node, const std::string& indent) {
  out << indent << node["id"].get<long long>() << " " << node["label"].get<std::string>() << "  "
      << node["text"].get<std::string>();
  if (node.contains("reference")) out << "  [" << node["reference"].get<std::string>() << "]";
  out << "\n";
  if (node.contains("parents"))
    for (const auto& parent : node["parents"]) tree(out, parent, indent + "  ");
}

void explanations(std::ostream& out, const Json& body) {
  const auto& records = body["contradictions"];
  out << "Contradictions: " << records.size() << (body["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
  for (const auto& r : records) {
    out << "  (" << r["lower"].get<long long>() << "," << r["upper"].get<long long>() << ")  roots "
        << set_text(r["roots"]) << "  constraints " << set_text(r["comparison_constraints"]) << "  comparisons "
        << set_text(r["comparisons"]) << "\n";
  }
  if (!body["constraint_subsets"].empty()) {
    out << "Constraint subsets:";
    for (const auto& s : body["constraint_subsets"]) out << " " << set_text(s);
    out << "\n";
  }
}

void grid(std::ostream& out, const char* title, const Json& rows, const Json& names) {
  out << title << "\n     ";
  for (const auto& n : names) out << pad(n.get<std::string>(), 4);
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << pad(names[i].get<std::string>(), 5);
    for (char c : rows[i].get<std::string>()) out << pad(std::string(1, c), 4);
    out << "\n";
  }
}

void subset_list(std::ostream& out, const char* title, const Json& sets) {
  out << title << ":";
  if (sets.empty()) out << " none";
  out << "\n";
  for (const auto& s : sets) out << "  " << set_text(s) << "\n";
}

} // namespace

std::string render_text(const ReportDocument& report) {
  const Json& b = report.body;
  std::ostringstream out;
  if (report.kind == "error") {
    const auto& e = b["error"];
    out << "error: " << e["message"].get<std::string>();
    if (e.contains("location")) out << " (at " << e["location"].get<std::string>() << ")";
    out << "\n";
    return out.str();
  }
  out << "Analysis: " << report.kind << "\n";
  if (b.contains("epsilon")) out << "epsilon " << b["epsilon"].get<std::string>() << ", ordering " << joined(b["ordering"], " < ") << "\n";
  if (b.contains("comparisons")) out << "Comparisons: " << set_text(b["comparisons"]) << "\n";
  out << "\n";

  if (report.kind == "check") {
    out << "Verdict: " << (b["feasible"].get<bool>() ? "consistent" : "inconsistent") << "\n";
    if (!b["feasible"].get<bool>()) {
      explanations(out, b);
      subset_list(out, "Minimal comparison subsets to remove", b["minimal_comparison_subsets"]);
      if (!b["genealogy"].is_null()) {
        out << "Genealogy of the first contradiction (roots " << set_text(b["genealogy"]["roots"]) << ")\n";
        tree(out, b["genealogy"]["lower"], "  ");
        if (b["genealogy"].contains("upper")) tree(out, b["genealogy"]["upper"], "  ");
      }
    }
    out << "\n";
    system_table(out, b["system"]);
  } else if (report.kind == "bounds") {
    out << "Weight ranges\n";
    for (const auto& r : b["ranges"]) out << "  " << r["display"].get<std::string>() << "\n";
    out << "\n";
    system_table(out, b["system"]);
  } else if (report.kind == "relations") {
    if (b.contains("pair")) {
      const auto a = b["pair"][0].get<std::string>(), c = b["pair"][1].get<std::string>();
      if (b.contains("necessary")) out << "necessary " << a << " >= " << c << ": " << (b["necessary"].get<bool>() ? "T" : "F") << "\n";
      if (b.contains("possible")) out << "possible " << a << " >= " << c << ": " << (b["possible"].get<bool>() ? "T" : "F") << "\n";
    } else {
      if (b.contains("necessary")) {
        grid(out, "Necessary relation", b["necessary"], b["alternatives"]);
        out << "Hasse edges:";
        for (const auto& e : b["hasse_edges"]) out << " " << e[0].get<std::string>() << "->" << e[1].get<std::string>();
        out << "\nreflexive " << (b["necessary_reflexive"].get<bool>() ? "yes" : "no") << ", transitive "
            << (b["necessary_transitive"].get<bool>() ? "yes" : "no") << "\n\n";
      }
      if (b.contains("possible")) grid(out, "Possible relation", b["possible"], b["alternatives"]);
    }
  } else if (report.kind == "reduct" || report.kind == "construct") {
    out << "Pair " << b["pair"][0].get<std::string>() << ", " << b["pair"][1].get<std::string>() << "; hypothesis "
        << b["hypothesis"].get<std::string>() << "\n";
    explanations(out, b);
    if (report.kind == "reduct") {
      subset_list(out, "Preference reducts", b["reducts"]);
    } else if (b["unsalvageable"].get<bool>()) {
      out << "No comparison removal makes the relation possible\n";
    } else {
      subset_list(out, "Hitting sets", b["hitting_sets"]);
      subset_list(out, "Preference constructs", b["constructs"]);
    }
    out << "verified: " << (b["verified"].get<bool>() ? "yes" : "no") << "\n\n";
    system_table(out, b["system"]);
  } else if (report.kind == "criteria-reducts") {
    out << "Criteria subsets\n";
    for (const auto& e : b["evaluated"])
      out << "  " << pad(set_text(e["criteria"]), 16) << (e["consistent"].get<bool>() ? "consistent" : "inconsistent") << "\n";
    subset_list(out, "Criteria reducts", b["reducts"]);
  } else if (report.kind == "trace") {
    system_table(out, b["system"]);
  }
  return out.str();
}

} // namespace segdesc::io
