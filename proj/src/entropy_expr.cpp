#include "hkas/entropy_expr.hpp"

#include <cctype>

#include "hkas/error.hpp"

namespace hkas {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EntropyExpr parse() {
    EntropyExpr expr;
    skip_space();
    if (accept('H')) {
      expr.kind = EntropyExpr::Kind::Entropy;
    } else if (accept('I')) {
      expr.kind = EntropyExpr::Kind::MutualInformation;
    } else {
      fail("expected 'H' or 'I'");
    }
    expect('(');
    expr.first = parse_list();
    if (expr.kind == EntropyExpr::Kind::MutualInformation) {
      expect(';');
      expr.second = parse_list();
    }
    if (accept('|')) expr.given = parse_list();
    expect(')');
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return expr;
  }

 private:
  static bool is_label_char(char ch) {
    return !std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != '|' && ch != ';' &&
           ch != '(' && ch != ')' && ch != ':';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(pos_, message + ", found " + found);
  }

  VarId parse_var() {
    skip_space();
    VarKind kind;
    if (accept('K')) {
      kind = VarKind::Key;
    } else if (accept('S')) {
      kind = VarKind::Secret;
    } else {
      fail("expected a variable 'K:<class>' or 'S:<class>'");
    }
    expect(':');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a class label");
    return VarId{kind, std::string(text_.substr(start, pos_ - start))};
  }

  std::vector<VarId> parse_list() {
    std::vector<VarId> vars{parse_var()};
    while (accept(',')) vars.push_back(parse_var());
    return vars;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<VarId>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i].to_string();
  }
  return out;
}

VarSet resolve(const std::vector<VarId>& vars, const Scheme& s) {
  for (const auto& v : vars) s.graph().index_of(v.owner);
  return VarSet(vars.begin(), vars.end());
}

}  // namespace

std::string EntropyExpr::to_string() const {
  std::string out = kind == Kind::Entropy ? "H(" : "I(";
  out += join(first);
  if (kind == Kind::MutualInformation) out += ";" + join(second);
  if (!given.empty()) out += "|" + join(given);
  return out + ")";
}

EntropyExpr parse_entropy_expr(std::string_view text) { return Parser(text).parse(); }

double evaluate(const EntropyExpr& expr, const Scheme& s) {
  const VarSet first = resolve(expr.first, s);
  const VarSet given = resolve(expr.given, s);
  if (expr.kind == EntropyExpr::Kind::Entropy) {
    return conditional_entropy(s.dist(), first, given);
  }
  const VarSet second = resolve(expr.second, s);
  return conditional_mutual_information(s.dist(), first, second, given);
}

}  // namespace hkas
