#include <random>

#include "bousfield/index_set.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bousfield;
using nat = IndexSet::nat;

namespace {

const IndexSet evens = IndexSet::periodic(0, 2, {0});
const IndexSet odds = IndexSet::periodic(0, 2, {1});
const ExtNat inf = ExtNat::infinity();

// A set given by raw, usually non-canonical parts, with its own membership rule.
struct Raw {
  std::vector<bool> bits;
  nat period;
  std::vector<nat> residues;
  bool inf;

  bool has(nat n) const {
    if (n < bits.size()) return bits[n];
    return std::find(residues.begin(), residues.end(), n % period) != residues.end();
  }
  IndexSet build() const { return IndexSet::from_parts(bits, period, residues, inf); }
};

Raw random_raw(std::mt19937_64& rng) {
  Raw r;
  const nat len = rng() % 9;
  for (nat i = 0; i < len; ++i) r.bits.push_back(rng() % 2);
  const nat periods[] = {1, 2, 3, 4, 6};
  r.period = periods[rng() % 5];
  for (nat i = 0; i < r.period; ++i)
    if (rng() % 3 == 0) r.residues.push_back(i);
  r.inf = rng() % 2;
  return r;
}

}  // namespace

TEST_SUITE("index_set") {
  TEST_CASE("membership") {
    CHECK(evens.contains(nat{4}));
    CHECK_FALSE(IndexSet::finite({0, 1}).contains(inf));
    CHECK(IndexSet::interval(3, inf).contains(inf));
    CHECK_FALSE(IndexSet::interval(3, ExtNat(5)).contains(nat{6}));
    CHECK(IndexSet::all().contains(inf));
    CHECK_FALSE(IndexSet::naturals().contains(inf));
  }

  TEST_CASE("operations") {
    CHECK((evens | odds) == IndexSet::naturals());
    CHECK((IndexSet::interval(3, inf) & IndexSet::finite({0, 3, 5})) == IndexSet::finite({3, 5}));
    const IndexSet c = ~IndexSet::finite({1});
    CHECK(c.bits() == std::vector<bool>{true, false});
    CHECK(c.period() == 1);
    CHECK(c.residues() == std::vector<nat>{0});
    CHECK(c.contains_infinity());
    CHECK(~~evens == evens);
    CHECK((evens & odds).is_empty());
  }

  TEST_CASE("classify") {
    CHECK(IndexSet::finite({0, 4}).classify() == SizeClass::Small);
    CHECK(evens.classify() == SizeClass::BigNotCosmall);
    CHECK(IndexSet::interval(5, inf).classify() == SizeClass::Cosmall);
    CHECK(IndexSet::singleton(inf).classify() == SizeClass::BigNotCosmall);
    CHECK(IndexSet::naturals().classify() == SizeClass::BigNotCosmall);
    CHECK(IndexSet::empty().classify() == SizeClass::Small);
  }

  TEST_CASE("subset") {
    CHECK(is_subset(IndexSet::finite({3}), IndexSet::interval(3, inf)));
    CHECK(is_subset(evens, IndexSet::all()));
    CHECK_FALSE(is_subset(IndexSet::interval(1, inf), IndexSet::interval(2, inf)));
  }

  TEST_CASE("min and sup") {
    CHECK(IndexSet::empty().min() == std::nullopt);
    CHECK(IndexSet::interval(4, inf).min() == ExtNat(4));
    CHECK(IndexSet::singleton(inf).min() == inf);
    CHECK(IndexSet::finite({2, 7}).sup() == OmegaNat(7));
    CHECK(evens.sup() == OmegaNat::omega());
    CHECK(IndexSet::finite({2}, true).sup() == OmegaNat::infinity());
  }

  TEST_CASE("canonical form") {
    // Same set, three spellings.
    const IndexSet a = IndexSet::from_parts({true, false, true, false}, 4, std::vector<nat>{0, 2}, false);
    const IndexSet b = IndexSet::periodic(0, 6, {0, 2, 4});
    CHECK(a == evens);
    CHECK(b == evens);
    CHECK(evens.period() == 2);
    CHECK(evens.threshold() == 0);
    CHECK(IndexSet::interval(3, inf).threshold() == 3);
    CHECK(IndexSet::interval(3, inf).period() == 1);
  }

  TEST_CASE("periodic lcm") {
    const IndexSet three = IndexSet::periodic(0, 3, {0});
    const IndexSet u = evens | three;
    CHECK(u.period() == 6);
    for (nat n = 0; n < 40; ++n) CHECK(u.contains(n) == (n % 2 == 0 || n % 3 == 0));
  }

  TEST_CASE("oversized period is rejected") {
    const IndexSet a = IndexSet::periodic(0, 1021, {0});
    const IndexSet b = IndexSet::periodic(0, 1031, {0});
    CHECK_THROWS_AS((void)(a | b), std::length_error);
  }

  TEST_CASE("random sets agree with raw membership") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 400; ++round) {
      const Raw ra = random_raw(rng), rb = random_raw(rng);
      const IndexSet a = ra.build(), b = rb.build();
      for (nat n = 0; n < oracle::kProbe; ++n) {
        REQUIRE(a.contains(n) == ra.has(n));
        CHECK((a | b).contains(n) == (ra.has(n) || rb.has(n)));
        CHECK((a & b).contains(n) == (ra.has(n) && rb.has(n)));
        CHECK((~a).contains(n) == !ra.has(n));
      }
      CHECK(a.contains(inf) == ra.inf);
      CHECK((a | b).contains_infinity() == (ra.inf || rb.inf));
      CHECK((~a).contains_infinity() == !ra.inf);
      // equality is set equality
      CHECK((a == b) == oracle::same_members(a, b));
      CHECK(is_subset(a, b) == oracle::subset(a, b));
      CHECK(a.is_small() == oracle::small(a));
      CHECK(a.is_cosmall() == oracle::cosmall(a));
    }
  }

  TEST_CASE("boolean algebra laws") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
      const IndexSet a = random_raw(rng).build(), b = random_raw(rng).build(),
                     c = random_raw(rng).build();
      CHECK((a | (b & c)) == ((a | b) & (a | c)));
      CHECK((a & (b | c)) == ((a & b) | (a & c)));
      CHECK(~(a | b) == (~a & ~b));
      CHECK((a | ~a) == IndexSet::all());
      CHECK((a & ~a).is_empty());
      CHECK(((a | b) | c) == (a | (b | c)));
    }
  }

  TEST_CASE("text form") {
    CHECK(IndexSet::empty().to_string() == "{}");
    CHECK(IndexSet::all().to_string() == "N");
    CHECK(IndexSet::all().to_string(true) == "[0,inf]");
    CHECK(IndexSet::interval(3, inf).to_string() == "[3,inf]");
    CHECK(IndexSet::finite({0, 2}, true).to_string() == "{0, 2, inf}");
    CHECK(IndexSet::interval(2, ExtNat(5)).to_string() == "[2,5]");
    CHECK(evens.to_string() == "per(0,2,{0})");
  }
}
