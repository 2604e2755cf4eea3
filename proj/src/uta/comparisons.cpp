#include "segdesc/uta/comparisons.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace segdesc::uta {

std::string Comparison::id() const {
  return first + (relation == Preference::Strict ? ">" : "~") + second;
}

std::string Comparison::display() const {
  return first + (relation == Preference::Strict ? " ≻ " : " ∼ ") + second;
}

namespace {

struct Token {
  std::string name;
  std::optional<Preference> next;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<Token> split_chain(std::string_view text) {
  static const std::pair<std::string_view, Preference> operators[] = {
      {"≻", Preference::Strict}, {">", Preference::Strict},     {"∼", Preference::Indifferent},
      {"~", Preference::Indifferent}, {"=", Preference::Indifferent}};
  std::vector<Token> out;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    bool matched = false;
    for (const auto& [symbol, pref] : operators) {
      if (text.substr(i, symbol.size()) == symbol) {
        out.push_back({trim(text.substr(start, i - start)), pref});
        i += symbol.size();
        start = i;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  out.push_back({trim(text.substr(start)), std::nullopt});
  for (const auto& t : out) {
    if (t.name.empty()) throw ComparisonError("missing alternative in '" + std::string(text) + "'");
    for (char c : t.name)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw ComparisonError("missing relation between alternatives in '" + std::string(text) + "'");
  }
  return out;
}

} // namespace

Comparison parse_comparison(std::string_view text) {
  auto tokens = split_chain(text);
  if (tokens.size() != 2) throw ComparisonError("expected exactly one relation in '" + std::string(text) + "'");
  return {tokens[0].name, *tokens[0].next, tokens[1].name};
}

ReferenceComparisons ReferenceComparisons::from_chain(std::string_view chain) {
  if (trim(chain).empty()) return {};
  auto tokens = split_chain(chain);
  if (tokens.size() < 2) throw ComparisonError("a ranking chain needs at least two alternatives");
  std::vector<Comparison> pairs;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i)
    pairs.push_back({tokens[i].name, *tokens[i].next, tokens[i + 1].name});
  return ReferenceComparisons(std::move(pairs));
}

std::size_t ReferenceComparisons::find(std::string_view id) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (pairs_[i].id() == id) return i;
  return std::string::npos;
}

bool ReferenceComparisons::remove(std::string_view id) {
  const auto i = find(id);
  if (i == std::string::npos) return false;
  pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(i));
  return true;
}

void ReferenceComparisons::validate(const PerformanceTable& table) const {
  std::set<std::string> ids;
  for (const auto& c : pairs_) {
    for (const auto* name : {&c.first, &c.second})
      if (!table.find_alternative(*name))
        throw ComparisonError("comparison " + c.id() + " names unknown alternative '" + *name + "'");
    if (c.first == c.second) throw ComparisonError("comparison " + c.id() + " compares an alternative with itself");
    if (!ids.insert(c.id()).second) throw ComparisonError("comparison " + c.id() + " is listed twice");
  }
}

} // namespace segdesc::uta
