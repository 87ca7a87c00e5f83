#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fuzzpart/errors.hpp"
#include "fuzzpart/normalized_mf.hpp"

namespace fuzzpart::dsl {

/// Parse failure, with the byte offset of the offending token and the
/// set of tokens that would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, std::string name);

  std::size_t offset() const { return offset_; }
  const std::string& name() const { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// Division by zero or a domain error while evaluating an expression.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

enum class Func { Abs, Cos, Sin, Min, Max, Sqrt };

const char* to_string(Func f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  double value;
};
struct Var {};  // the free variable x
struct Pi {};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // one of + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Call {
  Func fn;
  std::vector<ExprPtr> args;  // arity checked at parse time
};

/// Expression AST over: x, real literals, pi, + - * /, unary -, and
/// abs, cos, sin, min, max, sqrt.
struct Expr {
  std::variant<Number, Var, Pi, Negate, Binary, Call> node;
};

bool equal(const Expr& a, const Expr& b);

/// Recursive-descent parse with standard precedence (unary minus over
/// * / over + -), left associativity, insignificant whitespace.
/// Throws SyntaxError / UnknownIdentifier.
ExprPtr parse_mf(std::string_view text);

/// Canonical text form; parsing it yields an identical AST.
std::string pretty_print(const Expr& e);

/// Evaluates at x. Throws EvaluationError on division by zero, domain
/// errors, or non-finite results.
double evaluate(const Expr& e, double x);

/// Wraps the expression as eta(x) = expr(x) for |x| < 1 and 0 outside
/// (the support clamp is structural, not written by the user), then
/// runs full NormalizedMF validation. Only validated shapes are
/// returned; violations throw InvalidMF with the violated invariant
/// and a witness point. Evaluation failures surface the same way.
NormalizedMF compile_mf(const ExprPtr& e, const MFValidationConfig& cfg = {});

/// parse + compile in one step; the resulting name is the canonical
/// printed form.
NormalizedMF compile_mf(std::string_view text,
                        const MFValidationConfig& cfg = {});

}  // namespace fuzzpart::dsl
