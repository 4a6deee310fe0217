#include "bousfield/element.hpp"
#include "bousfield/lawcheck.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bousfield;

namespace {

const ExtNat inf = ExtNat::infinity();
const IndexSet N = IndexSet::all();
const IndexSet evens = IndexSet::periodic(0, 2, {0});
IndexSet from(IndexSet::nat n) { return IndexSet::interval(n, inf); }
IndexSet fin(std::initializer_list<IndexSet::nat> xs, bool with_inf = false) {
  return IndexSet::finite(xs, with_inf);
}
Element t(IndexSet::nat q, IndexSet s) { return Element::t(ExtNat(q), std::move(s)); }
Element j(IndexSet::nat m, IndexSet s) { return Element::j(OmegaNat(m), std::move(s)); }
Element k(IndexSet s) { return Element::k(std::move(s)); }

const std::vector<Element>& grid() {
  static const std::vector<Element> g = enumerate_grid(GridConfig::small());
  return g;
}

}  // namespace

TEST_SUITE("element") {
  TEST_CASE("constructors") {
    CHECK(j(3, fin({0, 2})).is_j());
    CHECK(j(3, evens) == k(evens));
    CHECK(Element::j(std::nullopt, fin({1})) == k(fin({1})));
    CHECK_THROWS_AS(t(2, fin({0})), ConstraintError);
    CHECK_THROWS_AS(t(2, evens), ConstraintError);
    CHECK(Element::zero() == k(IndexSet::empty()));
    CHECK(Element::one() == t(0, N));
  }

  TEST_CASE("join examples") {
    CHECK(t(2, from(3)) + t(5, from(1)) == t(2, from(1)));
    const IndexSet big = evens | IndexSet::singleton(inf);
    CHECK(j(3, fin({1})) + k(big) == k(fin({1}) | big));
    CHECK(j(3, fin({1})) + k(fin({4})) == j(3, fin({1, 4})));
    for (const Element& x : grid()) CHECK(Element::zero() + x == x);
  }

  TEST_CASE("smash examples") {
    CHECK(t(5, from(2)) * j(3, fin({2, 4})) == k(fin({2, 4})));
    CHECK(t(1, from(2)) * j(3, fin({2, 4})) == j(3, fin({2, 4})));
    CHECK(Element::t(inf, N) * Element::j(OmegaNat::omega(), fin({0})) == k(fin({0})));
    CHECK(Element::t(inf, N) * Element::j(OmegaNat::infinity(), fin({0})) ==
          Element::j(OmegaNat::infinity(), fin({0})));
    for (const Element& x : grid()) CHECK(Element::one() * x == x);
  }

  TEST_CASE("smash associativity instance") {
    const Element a = t(1, from(2)), b = j(2, fin({0})), c = k(fin({0}, true));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b) * c == Element::zero());
  }

  TEST_CASE("order examples") {
    CHECK(leq(j(7, fin({0})), t(99, N)));
    CHECK_FALSE(leq(j(0, IndexSet::empty()), k(fin({0}))));
    CHECK(leq(j(0, IndexSet::empty()), k(evens)));
    for (const Element& x : grid()) CHECK(leq(x, Element::one()));
  }

  TEST_CASE("tail and head") {
    CHECK(tail_of(t(2, from(3))) == from(3));
    CHECK(head_of(Element::j(OmegaNat::omega(), fin({1}))).to_string() == "j(w)");
    CHECK(head_of(t(2, from(3))).to_string() == "t(2)");
    CHECK(head_of(k(fin({1}))).to_string() == "k");
  }

  TEST_CASE("operations agree with the rewriting oracle on the grid") {
    for (const Element& x : grid())
      for (const Element& y : grid()) {
        REQUIRE(x + y == oracle::join(x, y));
        REQUIRE(x * y == oracle::smash(x, y));
        REQUIRE(leq(x, y) == oracle::order_table(x, y));
        REQUIRE(leq(x, y) == oracle::leq_by_join(x, y));
      }
  }

  TEST_CASE("text form") {
    CHECK(Element::one().to_string() == "t(0, N)");
    CHECK(t(2, from(3)).to_string() == "t(2, [3,inf])");
    CHECK(Element::j(OmegaNat::omega(), fin({1})).to_string() == "j(w, {1})");
    CHECK(Element::zero().to_string() == "k({})");
  }
}
