#include <doctest.h>

#include <cmath>
#include <random>

#include "fuzzpart/mf_dsl.hpp"

using namespace fuzzpart;
using namespace fuzzpart::dsl;

TEST_CASE("parse and evaluate basic expressions") {
  CHECK(evaluate(*parse_mf("1 - abs(x)"), 0.25) == 0.75);
  CHECK(evaluate(*parse_mf("(cos(pi*x)+1)/2"), 0.5) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(evaluate(*parse_mf("2 + 3 * 4"), 0.0) == 14.0);
  CHECK(evaluate(*parse_mf("2 * 3 + 4"), 0.0) == 10.0);
  CHECK(evaluate(*parse_mf("2 - 3 - 4"), 0.0) == -5.0);  // left associative
  CHECK(evaluate(*parse_mf("-x*x"), 3.0) == -9.0);       // unary binds tight
  CHECK(evaluate(*parse_mf("min(2, max(3, 1))"), 0.0) == 2.0);
  CHECK(evaluate(*parse_mf("sqrt(4)"), 0.0) == 2.0);
  CHECK(evaluate(*parse_mf("sin(0)"), 0.0) == 0.0);
  CHECK(evaluate(*parse_mf("pi"), 0.0) == doctest::Approx(3.14159265358979));
}

TEST_CASE("unknown identifiers carry their byte offset") {
  try {
    parse_mf("1 - abs(y)");
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.offset() == 8);
    CHECK(e.name() == "y");
  }
  try {
    parse_mf("foo(1)");
    FAIL("expected UnknownIdentifier");
  } catch (const UnknownIdentifier& e) {
    CHECK(e.offset() == 0);
    CHECK(e.name() == "foo");
  }
}

TEST_CASE("syntax errors carry exact offsets across a malformed corpus") {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  // Two unknown-identifier cases live in the previous test; together
  // with these eight the corpus covers ten malformed inputs.
  const Case cases[] = {
      {"", 0},             // empty input, operand expected
      {"1 +", 3},          // dangling operator
      {"min(x)", 5},       // too few arguments: ',' expected at ')'
      {"abs(x, 1)", 5},    // too many arguments: ')' expected at ','
      {"(1 - x", 6},       // unclosed parenthesis
      {"2 ** x", 3},       // operand expected after '*'
      {"1 2", 2},          // trailing token
      {"1 $ 2", 2},        // unexpected character
      {"min(x y)", 6},     // ',' expected between arguments
      {"cos()", 4},        // empty argument list
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    try {
      parse_mf(c.text);
      FAIL_CHECK("expected SyntaxError");
    } catch (const SyntaxError& e) {
      CHECK(e.offset() == c.offset);
      CHECK(!e.expected().empty());
    }
  }
}

TEST_CASE("pretty printing round-trips to an identical tree") {
  for (const char* text : {
           "1 - abs(x)",
           "(cos(pi*x)+1)/2",
           "1 - x*x",
           "-(x + 1) * -2",
           "min(1 - x, max(x, 0.25)) / (2 - 1)",
           "1 - 2 - 3",
           "1 - (2 - 3)",
           "2 / 3 / 4",
           "--x",
           "0.12345678901234567 * x",
       }) {
    CAPTURE(text);
    const ExprPtr ast = parse_mf(text);
    const std::string printed = pretty_print(*ast);
    CAPTURE(printed);
    const ExprPtr reparsed = parse_mf(printed);
    CHECK(equal(*ast, *reparsed));
  }
}

TEST_CASE("round trip holds for randomly generated trees") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick(0, 9);
  std::uniform_real_distribution<double> num(0.0, 4.0);

  // Random expression generator, depth-limited.
  std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
    const int kind = depth <= 0 ? pick(rng) % 3 : pick(rng);
    auto mk = [](Expr e) { return std::make_shared<Expr>(std::move(e)); };
    switch (kind) {
      case 0: return mk({Number{num(rng)}});
      case 1: return mk({Var{}});
      case 2: return mk({Pi{}});
      case 3: return mk({Negate{gen(depth - 1)}});
      case 4: return mk({Binary{'+', gen(depth - 1), gen(depth - 1)}});
      case 5: return mk({Binary{'-', gen(depth - 1), gen(depth - 1)}});
      case 6: return mk({Binary{'*', gen(depth - 1), gen(depth - 1)}});
      case 7: return mk({Binary{'/', gen(depth - 1), gen(depth - 1)}});
      case 8: return mk({Call{Func::Abs, {gen(depth - 1)}}});
      default:
        return mk({Call{Func::Min, {gen(depth - 1), gen(depth - 1)}}});
    }
  };

  for (int i = 0; i < 500; ++i) {
    const ExprPtr ast = gen(5);
    const std::string printed = pretty_print(*ast);
    CAPTURE(printed);
    const ExprPtr reparsed = parse_mf(printed);
    REQUIRE(equal(*ast, *reparsed));
  }
}

TEST_CASE("compiled triangular matches the built-in bit for bit") {
  const NormalizedMF compiled = compile_mf("1 - abs(x)");
  const NormalizedMF builtin = mf_triangular();
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.25 + 2.5 * i / 10000.0;
    REQUIRE(std::abs(compiled(x) - builtin(x)) <= 1e-15);
  }
}

TEST_CASE("compiled cosine matches the built-in bit for bit") {
  const NormalizedMF compiled = compile_mf("(cos(pi*x)+1)/2");
  const NormalizedMF builtin = mf_cosine();
  for (int i = 0; i <= 10000; ++i) {
    const double x = -1.25 + 2.5 * i / 10000.0;
    REQUIRE(std::abs(compiled(x) - builtin(x)) <= 1e-15);
  }
}

TEST_CASE("the parabola is rejected with a complement witness at 0.5") {
  try {
    compile_mf("1 - x*x");
    FAIL("expected InvalidMF");
  } catch (const InvalidMF& e) {
    CHECK(e.invariant() == MFInvariant::Complement);
    CHECK(e.witness() == doctest::Approx(0.5).epsilon(1e-9));
  }
}

TEST_CASE("every invariant has a rejected fixture with the right label") {
  struct Fixture {
    const char* text;
    MFInvariant expect;
  };
  // Support cannot be violated from the DSL because the compiler clamps
  // outside [-1, 1]; its rejection path is covered through normalize()
  // in the 1-D suite.
  const Fixture fixtures[] = {
      {"(1 - abs(x))/2", MFInvariant::Core},
      {"1 - max(0,x) - max(0,-x)/2", MFInvariant::Symmetry},
      {"1 - abs(x) + 0.2*sin(2*pi*abs(x))", MFInvariant::Monotonicity},
      {"1 - abs(x)/2", MFInvariant::Continuity},
      {"1 - x*x", MFInvariant::Complement},
      {"1/x", MFInvariant::Evaluation},
  };
  for (const Fixture& f : fixtures) {
    CAPTURE(f.text);
    try {
      compile_mf(f.text);
      FAIL_CHECK("expected InvalidMF");
    } catch (const InvalidMF& e) {
      CHECK(e.invariant() == f.expect);
    }
  }
}

TEST_CASE("a bare 'x' fails validation instead of being symmetrized") {
  try {
    compile_mf("x");
    FAIL("expected InvalidMF");
  } catch (const InvalidMF& e) {
    CHECK(e.invariant() == MFInvariant::Core);  // eta(0) = 0 there
  }
}

TEST_CASE("division by zero during evaluation raises EvaluationError") {
  const ExprPtr e = parse_mf("1/x");
  CHECK_THROWS_AS(evaluate(*e, 0.0), EvaluationError);
  CHECK(evaluate(*e, 2.0) == 0.5);
  CHECK_THROWS_AS(evaluate(*parse_mf("sqrt(0 - 1)"), 0.0), EvaluationError);
}

TEST_CASE("random input never escapes the documented error types") {
  std::mt19937_64 rng(7777);
  const std::string alphabet = "xpiabscosinmqrt0123456789.,+-*/() _";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) text += alphabet[pick(rng)];
    CAPTURE(text);
    try {
      const ExprPtr ast = parse_mf(text);
      REQUIRE(equal(*ast, *parse_mf(pretty_print(*ast))));
    } catch (const SyntaxError& e) {
      REQUIRE(e.offset() <= text.size());
    } catch (const UnknownIdentifier& e) {
      REQUIRE(e.offset() < text.size());
    }
  }
}

TEST_CASE("compiled shapes clamp their support structurally") {
  const NormalizedMF eta = compile_mf("1 - abs(x)");
  CHECK(eta(1.0) == 0.0);
  CHECK(eta(-3.7) == 0.0);
  CHECK(eta(0.999) > 0.0);
}
