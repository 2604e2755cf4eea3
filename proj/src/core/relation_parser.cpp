#include "segdesc/core/relation_parser.hpp"

#include <cctype>
#include <optional>

namespace segdesc::core {

namespace {

class Parser {
public:
  Parser(std::string_view text, VariableSet& vars) : text_(text), vars_(vars) {}

  RawRelation relation(OriginTag origin) {
    RawRelation r;
    r.origin = std::move(origin);
    r.lhs = expression();
    r.relation = relation_operator();
    r.rhs = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw RelationSyntaxError(message + " at column " + std::to_string(pos_ + 1), pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Relation relation_operator() {
    skip_space();
    if (consume("<=") || consume("≤") || consume("⩽")) return Relation::LessEqual;
    if (consume(">=") || consume("≥") || consume("⩾")) return Relation::GreaterEqual;
    if (consume("==") || consume("=")) return Relation::Equal;
    if (consume("<")) return Relation::Less;
    if (consume(">")) return Relation::Greater;
    fail("expected a relation operator");
  }

  LinearExpr expression() {
    LinearExpr e;
    bool first = true;
    for (;;) {
      skip_space();
      bool negative = false;
      if (consume("+")) {
      } else if (consume("-")) {
        negative = true;
      } else if (!first) {
        break;
      }
      LinearExpr t = term();
      if (negative) t *= Rational(-1);
      e += t;
      first = false;
    }
    return e;
  }

  static LinearExpr multiply(const LinearExpr& a, const LinearExpr& b, std::size_t column,
                             std::string_view text) {
    if (!a.is_constant() && !b.is_constant())
      throw NonLinearTermError("non-linear term in '" + std::string(text) + "' at column " +
                                   std::to_string(column),
                               column);
    if (a.is_constant()) return b * a.constant();
    return a * b.constant();
  }

  LinearExpr term() {
    LinearExpr acc = power();
    for (;;) {
      skip_space();
      const std::size_t column = pos_ + 1;
      if (consume("*")) {
        acc = multiply(acc, power(), column, text_);
      } else if (consume("/")) {
        LinearExpr divisor = power();
        if (!divisor.is_constant())
          throw NonLinearTermError("division by a variable in '" + std::string(text_) + "' at column " +
                                       std::to_string(column),
                                   column);
        if (divisor.constant().is_zero()) fail("division by zero");
        acc /= divisor.constant();
      } else if (pos_ < text_.size() && starts_factor(text_[pos_])) {
        // Juxtaposition: "2 w1", "0.5w2".
        acc = multiply(acc, power(), column, text_);
      } else {
        return acc;
      }
    }
  }

  static bool starts_factor(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '.';
  }

  LinearExpr power() {
    LinearExpr base = factor();
    skip_space();
    const std::size_t column = pos_ + 1;
    if (consume("^")) {
      LinearExpr exponent = factor();
      if (!exponent.is_constant() || !exponent.constant().is_integer())
        fail("exponent must be an integer constant");
      if (!base.is_constant()) {
        if (exponent.constant() == Rational(1)) return base;
        throw NonLinearTermError("non-linear power in '" + std::string(text_) + "' at column " +
                                     std::to_string(column),
                                 column);
      }
      const long n = std::stol(exponent.constant().numerator_string());
      Rational result(1);
      for (long i = 0; i < (n < 0 ? -n : n); ++i) result *= base.constant();
      if (n < 0) result = result.reciprocal();
      return LinearExpr(result);
    }
    return base;
  }

  LinearExpr factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of relation");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LinearExpr inner = expression();
      if (!consume(")")) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      // Exponent only when followed by a digit or sign, so "2e" stays "2 * e".
      if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') &&
          (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) ||
           ((text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+') && pos_ + 2 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 2]))))) {
        pos_ += 2;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      try {
        return LinearExpr(Rational::parse(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '@'))
        ++pos_;
      return LinearExpr::variable(vars_.intern(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VariableSet& vars_;
  std::size_t pos_ = 0;
};

} // namespace

RawRelation parse_relation(std::string_view text, VariableSet& vars, OriginTag origin) {
  return Parser(text, vars).relation(std::move(origin));
}

std::vector<RawRelation> parse_relations(std::string_view text, VariableSet& vars) {
  std::vector<RawRelation> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) {
      try {
        out.push_back(parse_relation(line, vars));
      } catch (const NonLinearTermError& e) {
        throw NonLinearTermError("line " + std::to_string(line_no) + ": " + e.what(), e.column());
      } catch (const RelationSyntaxError& e) {
        throw RelationSyntaxError("line " + std::to_string(line_no) + ": " + e.what(), e.column());
      }
    }
    start = end + 1;
  }
  return out;
}

} // namespace segdesc::core
