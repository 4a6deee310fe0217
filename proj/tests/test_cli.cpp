#include "bousfield/cli/evaluator.hpp"
#include "bousfield/cli/format.hpp"
#include "bousfield/cli/parser.hpp"
#include "bousfield/lawcheck.hpp"
#include "cli_corpus.hpp"
#include "doctest.h"

using namespace bousfield;
using namespace bousfield::cli;

namespace {

std::string text(std::string_view input) { return format(evaluate(input), Mode::Text); }
std::string json(std::string_view input) { return format(evaluate(input), Mode::Json); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse shapes") {
    const NodePtr a = parse("t(2,[3,inf]) * j(5,{0})");
    const auto* op = std::get_if<BinOp>(&a->v);
    REQUIRE(op != nullptr);
    CHECK(op->op == BinOpKind::Smash);
    CHECK(std::get<ElemLit>(op->lhs->v).kind == 't');
    CHECK(std::get<ElemLit>(op->rhs->v).kind == 'j');
    CHECK(op->rhs->offset == 15);

    const NodePtr b = parse("neg(@BP)");
    const auto* call = std::get_if<Call>(&b->v);
    REQUIRE(call != nullptr);
    CHECK(call->fn == Fn::Neg);
    REQUIRE(call->args.size() == 1);
    CHECK(std::get<CatalogRef>(call->args[0]->v).name == "BP");
  }

  TEST_CASE("precedence") {
    // smash binds tighter than join
    CHECK(text("k({0}) + k({1}) * k({1,2})") == "k({0, 1})");
    CHECK(text("(k({0}) + k({1})) * k({1,2})") == "k({1})");
    CHECK(text("k({0} | {1} & {1,2})") == "k({0, 1})");
    CHECK(text("k(~{0} & [0,3])") == "k([1,3])");
  }

  TEST_CASE("evaluate examples") {
    CHECK(text("t(2,[3,inf]) + t(5,[1,inf])") == "t(2, [1,inf])");
    CHECK(text("@E(1) * @H") == "k({0})");
    CHECK(text("j(0,{}) <= k({0})") == "false");
    CHECK(text("@KU == @E(1)") == "true");
    CHECK(text("@BP<=@S") == "true");
    CHECK(text("@BP<n>(2)") == "k([0,2] | {inf})");
    CHECK(text("heyting(k({0,1}), k({0}))") == "t(0, {0} | [2,inf])  (strong)");
    CHECK(text("neg(t(3,N))") == "j(2, {})");
    CHECK(text("comp(k(per(0,2,{0})))") == "none");
    CHECK(text("comp(k({0}))") == "t(0, [1,inf])");
    CHECK(text("idem(j(1,{}))") == "false");
    CHECK(text("bool(k({0}))") == "true");
    CHECK(text("theta({0}; none; unbounded)") == "j(w, {0})");
    CHECK(text("theta({0}, none, 3)") == "j(3, {0})");
    CHECK(text("sup(t(2,[3,inf]), j(5,{0}))") == "t(2, {0} | [3,inf])");
    CHECK(text("sup()") == "k({})");
    CHECK(text("proj(k([5,inf]), j(1,{0}))") == "k({0} | [5,inf])");
    CHECK(text("reconstruct({1}, {}, [0,inf] & ~{inf})") == "j(w, {1})");
    CHECK(text("reconstruct({0}, [2,inf], N)") == "none");
    CHECK(text("tail(t(2,[3,inf]))") == "[3,inf]");
    CHECK(text("head(j(w,{1}))") == "j(w)");
    CHECK(text("classify(per(0,2,{0}))") == "big");
  }

  TEST_CASE("format") {
    CHECK(format(Element::one(), Mode::Text) == "t(0, N)");
    CHECK(format(Element::zero(), Mode::Json) ==
          R"({"kind":"k","tail":{"threshold":0,"bits":[],"period":1,"residues":[],"infinity":false}})");
    CHECK(text("sigma(t(2, {0} | [5,inf]))") == "(s1={0} | [5,inf], s2=[2,inf], s3=[0,inf])");
    CHECK(json("j(0,{}) <= k({0})") == "false");
    CHECK(json("comp(k(N))") == "null");
    CHECK(json("classify({0})") == "\"small\"");
  }

  TEST_CASE("roundtrip over the grid") {
    for (const Element& x : enumerate_grid(GridConfig::full())) {
      const std::string s = format(x, Mode::Text);
      INFO(s);
      REQUIRE(std::get<Element>(evaluate(s)) == x);
      const IndexSet& t = x.tail();
      REQUIRE(std::get<IndexSet>(evaluate("tail(" + s + ")")) == t);
      CHECK(format(evaluate(s), Mode::Json) == format(x, Mode::Json));
    }
  }

  TEST_CASE("malformed inputs give positioned errors") {
    REQUIRE(corpus::malformed().size() >= 20);
    for (const corpus::Case& c : corpus::malformed()) {
      INFO(c.input);
      if (c.stage == corpus::Stage::Parse) {
        try {
          (void)parse(c.input);
          FAIL("parsed");
        } catch (const SyntaxError& e) {
          CHECK(e.offset() == c.offset);
        }
      } else {
        NodePtr ast;
        REQUIRE_NOTHROW(ast = parse(c.input));
        try {
          (void)evaluate(*ast);
          FAIL("evaluated");
        } catch (const EvalError& e) {
          CHECK(e.offset() == c.offset);
        }
      }
    }
  }

  TEST_CASE("error rendering") {
    try {
      (void)parse("k({0,}");
      FAIL("parsed");
    } catch (const SyntaxError& e) {
      CHECK(format_error(e, "k({0,}") ==
            "error at offset 6: expected ')' but input ended\n  k({0,}\n        ^");
    }
  }
}
