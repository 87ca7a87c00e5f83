#include "fuzzpart/mf_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace fuzzpart::dsl {
namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += i + 1 == parts.size() ? " or " : ", ";
    out += parts[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error("syntax error at offset " + std::to_string(offset) + ": expected " +
            join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t offset, std::string name)
    : Error("unknown identifier '" + name + "' at offset " +
            std::to_string(offset)),
      offset_(offset),
      name_(std::move(name)) {}

const char* to_string(Func f) {
  switch (f) {
    case Func::Abs: return "abs";
    case Func::Cos: return "cos";
    case Func::Sin: return "sin";
    case Func::Min: return "min";
    case Func::Max: return "max";
    case Func::Sqrt: return "sqrt";
  }
  return "?";
}

namespace {

struct FuncInfo {
  Func fn;
  int arity;
};

const FuncInfo* lookup_func(std::string_view name) {
  static const std::pair<std::string_view, FuncInfo> table[] = {
      {"abs", {Func::Abs, 1}}, {"cos", {Func::Cos, 1}},
      {"sin", {Func::Sin, 1}}, {"min", {Func::Min, 2}},
      {"max", {Func::Max, 2}}, {"sqrt", {Func::Sqrt, 1}},
  };
  for (const auto& [n, info] : table) {
    if (n == name) return &info;
  }
  return nullptr;
}

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  double number = 0.0;
  std::string_view ident;
};

std::string token_name(const Token& t) {
  switch (t.kind) {
    case TokKind::Number: return "number";
    case TokKind::Ident: return "'" + std::string(t.ident) + "'";
    case TokKind::Plus: return "'+'";
    case TokKind::Minus: return "'-'";
    case TokKind::Star: return "'*'";
    case TokKind::Slash: return "'/'";
    case TokKind::LParen: return "'('";
    case TokKind::RParen: return "')'";
    case TokKind::Comma: return "','";
    case TokKind::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { next(); }

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    if (tok_.kind != TokKind::End) {
      throw SyntaxError(tok_.offset, {"'+'", "'-'", "'*'", "'/'", "end of input"},
                        token_name(tok_));
    }
    return e;
  }

 private:
  static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  void next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    tok_.offset = pos_;
    tok_.ident = {};
    if (pos_ >= text_.size()) {
      tok_.kind = TokKind::End;
      return;
    }
    const char ch = text_[pos_];
    switch (ch) {
      case '+': tok_.kind = TokKind::Plus; ++pos_; return;
      case '-': tok_.kind = TokKind::Minus; ++pos_; return;
      case '*': tok_.kind = TokKind::Star; ++pos_; return;
      case '/': tok_.kind = TokKind::Slash; ++pos_; return;
      case '(': tok_.kind = TokKind::LParen; ++pos_; return;
      case ')': tok_.kind = TokKind::RParen; ++pos_; return;
      case ',': tok_.kind = TokKind::Comma; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) ||
        (ch == '.' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc()) {
        throw SyntaxError(pos_, {"number"}, "malformed number literal");
      }
      tok_.kind = TokKind::Number;
      tok_.number = value;
      pos_ += static_cast<std::size_t>(ptr - begin);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      tok_.kind = TokKind::Ident;
      tok_.ident = text_.substr(start, pos_ - start);
      return;
    }
    throw SyntaxError(pos_, {"a valid token"},
                      "unexpected character '" + std::string(1, ch) + "'");
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (tok_.kind == TokKind::Plus || tok_.kind == TokKind::Minus) {
      const char op = tok_.kind == TokKind::Plus ? '+' : '-';
      next();
      ExprPtr rhs = parse_term();
      lhs = make({Binary{op, std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (tok_.kind == TokKind::Star || tok_.kind == TokKind::Slash) {
      const char op = tok_.kind == TokKind::Star ? '*' : '/';
      next();
      ExprPtr rhs = parse_unary();
      lhs = make({Binary{op, std::move(lhs), std::move(rhs)}});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (tok_.kind == TokKind::Minus) {
      next();
      return make({Negate{parse_unary()}});
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    switch (tok_.kind) {
      case TokKind::Number: {
        const double v = tok_.number;
        next();
        return make({Number{v}});
      }
      case TokKind::Ident: {
        const std::string_view name = tok_.ident;
        const std::size_t at = tok_.offset;
        if (name == "x") {
          next();
          return make({Var{}});
        }
        if (name == "pi") {
          next();
          return make({Pi{}});
        }
        const FuncInfo* info = lookup_func(name);
        if (info == nullptr) throw UnknownIdentifier(at, std::string(name));
        next();
        return parse_call(*info);
      }
      case TokKind::LParen: {
        next();
        ExprPtr e = parse_expr();
        if (tok_.kind != TokKind::RParen) {
          throw SyntaxError(tok_.offset, {"')'"}, token_name(tok_));
        }
        next();
        return e;
      }
      default:
        throw SyntaxError(tok_.offset,
                          {"number", "'x'", "'pi'", "function", "'('", "'-'"},
                          token_name(tok_));
    }
  }

  ExprPtr parse_call(const FuncInfo& info) {
    if (tok_.kind != TokKind::LParen) {
      throw SyntaxError(tok_.offset, {"'('"}, token_name(tok_));
    }
    next();
    std::vector<ExprPtr> args;
    args.push_back(parse_expr());
    while (static_cast<int>(args.size()) < info.arity) {
      if (tok_.kind != TokKind::Comma) {
        throw SyntaxError(tok_.offset, {"','"}, token_name(tok_));
      }
      next();
      args.push_back(parse_expr());
    }
    if (tok_.kind == TokKind::Comma) {
      throw SyntaxError(tok_.offset, {"')'"}, token_name(tok_));
    }
    if (tok_.kind != TokKind::RParen) {
      throw SyntaxError(tok_.offset, {"')'"}, token_name(tok_));
    }
    next();
    return make({Call{info.fn, std::move(args)}});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_;
};

int precedence(const Expr& e) {
  struct Visitor {
    int operator()(const Number&) const { return 4; }
    int operator()(const Var&) const { return 4; }
    int operator()(const Pi&) const { return 4; }
    int operator()(const Call&) const { return 4; }
    int operator()(const Negate&) const { return 3; }
    int operator()(const Binary& b) const {
      return b.op == '+' || b.op == '-' ? 1 : 2;
    }
  };
  return std::visit(Visitor{}, e.node);
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, int parent_prec, bool is_right,
                 std::string& out) {
  const int child_prec = precedence(child);
  const bool parens =
      is_right ? child_prec <= parent_prec : child_prec < parent_prec;
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  struct Visitor {
    std::string& out;
    void operator()(const Number& n) const {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", n.value);
      out += buf;
    }
    void operator()(const Var&) const { out += 'x'; }
    void operator()(const Pi&) const { out += "pi"; }
    void operator()(const Negate& n) const {
      out += '-';
      print_child(*n.operand, 3, true, out);
    }
    void operator()(const Binary& b) const {
      const int p = b.op == '+' || b.op == '-' ? 1 : 2;
      print_child(*b.lhs, p, false, out);
      out += ' ';
      out += b.op;
      out += ' ';
      print_child(*b.rhs, p, true, out);
    }
    void operator()(const Call& c) const {
      out += to_string(c.fn);
      out += '(';
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (i) out += ", ";
        print(*c.args[i], out);
      }
      out += ')';
    }
  };
  std::visit(Visitor{out}, e.node);
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  struct Visitor {
    const Expr& other;
    bool operator()(const Number& n) const {
      return n.value == std::get<Number>(other.node).value;
    }
    bool operator()(const Var&) const { return true; }
    bool operator()(const Pi&) const { return true; }
    bool operator()(const Negate& n) const {
      return equal(*n.operand, *std::get<Negate>(other.node).operand);
    }
    bool operator()(const Binary& b) const {
      const auto& o = std::get<Binary>(other.node);
      return b.op == o.op && equal(*b.lhs, *o.lhs) && equal(*b.rhs, *o.rhs);
    }
    bool operator()(const Call& c) const {
      const auto& o = std::get<Call>(other.node);
      if (c.fn != o.fn || c.args.size() != o.args.size()) return false;
      for (std::size_t i = 0; i < c.args.size(); ++i) {
        if (!equal(*c.args[i], *o.args[i])) return false;
      }
      return true;
    }
  };
  return std::visit(Visitor{b}, a.node);
}

ExprPtr parse_mf(std::string_view text) { return Parser(text).parse(); }

std::string pretty_print(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

double evaluate(const Expr& e, double x) {
  struct Visitor {
    double x;
    double operator()(const Number& n) const { return n.value; }
    double operator()(const Var&) const { return x; }
    double operator()(const Pi&) const { return std::numbers::pi; }
    double operator()(const Negate& n) const { return -evaluate(*n.operand, x); }
    double operator()(const Binary& b) const {
      const double lhs = evaluate(*b.lhs, x);
      const double rhs = evaluate(*b.rhs, x);
      switch (b.op) {
        case '+': return lhs + rhs;
        case '-': return lhs - rhs;
        case '*': return lhs * rhs;
        case '/':
          if (rhs == 0.0) throw EvaluationError("division by zero");
          return lhs / rhs;
      }
      throw EvaluationError("unknown operator");
    }
    double operator()(const Call& c) const {
      const double a = evaluate(*c.args[0], x);
      switch (c.fn) {
        case Func::Abs: return std::abs(a);
        case Func::Cos: return std::cos(a);
        case Func::Sin: return std::sin(a);
        case Func::Sqrt:
          if (a < 0.0) throw EvaluationError("sqrt of a negative value");
          return std::sqrt(a);
        case Func::Min: return std::min(a, evaluate(*c.args[1], x));
        case Func::Max: return std::max(a, evaluate(*c.args[1], x));
      }
      throw EvaluationError("unknown function");
    }
  };
  return std::visit(Visitor{x}, e.node);
}

NormalizedMF compile_mf(const ExprPtr& e, const MFValidationConfig& cfg) {
  const std::string name = pretty_print(*e);
  auto clamped = [e](double x) {
    if (std::abs(x) >= 1.0) return 0.0;
    return evaluate(*e, x);
  };
  // Probe with evaluation failures mapped to NaN so validation reports
  // them as an invariant violation with the witness point.
  NormalizedMF probe{name, [clamped](double x) {
                       try {
                         return clamped(x);
                       } catch (const EvaluationError&) {
                         return std::numeric_limits<double>::quiet_NaN();
                       }
                     }};
  validate_normalized_mf(probe, cfg);
  return NormalizedMF{name, clamped};
}

NormalizedMF compile_mf(std::string_view text, const MFValidationConfig& cfg) {
  return compile_mf(parse_mf(text), cfg);
}

}  // namespace fuzzpart::dsl
