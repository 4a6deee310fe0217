#include <map>

#include "bousfield/catalog.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bousfield;

namespace {

const ExtNat inf = ExtNat::infinity();

Element at(const char* name, std::optional<ExtNat> p = std::nullopt) {
  return lookup(name, p).element;
}
Element at(const char* name, std::uint64_t n) { return at(name, ExtNat(n)); }

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("lookup examples") {
    const CatalogHit tmf = lookup("TMF");
    CHECK(tmf.element == Element::k(IndexSet::finite({0, 1, 2})));
    CHECK(tmf.exactness == Exactness::Exact);
    const CatalogHit kp = lookup("K'", ExtNat(3));
    CHECK(kp.element == Element::k(IndexSet::finite({3})));
    CHECK(kp.exactness == Exactness::ModuloTC);
    CHECK(at("F", 0) == Element::one());
    CHECK(at("F", 0) == at("S"));
    CHECK(lookup("C_nS", ExtNat(2)).exactness == Exactness::ModuloTC);
    CHECK(lookup("E^", ExtNat(2)).exactness == Exactness::Exact);
  }

  TEST_CASE("lookup errors") {
    CHECK_THROWS_AS(lookup("nope"), CatalogError);
    CHECK_THROWS_AS(lookup("K"), CatalogError);
    CHECK_THROWS_AS(lookup("S", ExtNat(1)), CatalogError);
    CHECK_THROWS_AS(lookup("K", inf), CatalogError);
    CHECK_NOTHROW(lookup("T", inf));
  }

  TEST_CASE("aliases agree") {
    std::map<std::string, std::vector<const CatalogEntry*>> groups;
    for (const CatalogEntry& e : catalog_entries()) groups[e.alias_of].push_back(&e);
    CHECK(groups.size() > 20);
    for (const auto& [primary, members] : groups) {
      REQUIRE(find_entry(primary) != nullptr);
      for (const CatalogEntry* e : members) {
        CHECK(e->domain == find_entry(primary)->domain);
        CHECK(e->exactness == find_entry(primary)->exactness);
        for (std::uint64_t n = 0; n < 6; ++n) {
          const std::optional<ExtNat> p =
              e->parametric() ? std::optional<ExtNat>(ExtNat(n)) : std::nullopt;
          CHECK(lookup(e->name, p).element == lookup(primary, p).element);
        }
      }
    }
  }

  TEST_CASE("spot values") {
    CHECK(at("H") == Element::k(IndexSet::finite({0}, true)));
    CHECK(at("BP") == Element::t(inf, IndexSet::all()));
    CHECK(at("E", 1) == Element::k(IndexSet::interval(0, ExtNat(1))));
    CHECK(at("KU") == at("E", 1));
    CHECK(at("J", inf) == Element::j(OmegaNat::infinity(), IndexSet::empty()));
    CHECK(at("Jw") == Element::j(OmegaNat::omega(), IndexSet::empty()));
    CHECK(at("P", 2) == Element::t(inf, IndexSet::interval(2, inf)));
  }

  TEST_CASE("derived relations") {
    for (std::uint64_t i = 0; i < 6; ++i)
      for (std::uint64_t n = 0; n < 6; ++n) {
        const Element prod = oracle::smash(at("K", i), at("K", n));
        CHECK((prod == Element::zero()) == (i != n));
      }
    CHECK(oracle::smash(at("E", 1), at("H/p")) == Element::zero());
    for (std::uint64_t i = 0; i < 6; ++i)
      for (std::uint64_t q = 0; q < 6; ++q) CHECK(oracle::order_table(at("K", i), at("T", q)));
    for (std::uint64_t q = 0; q < 5; ++q)
      for (std::uint64_t m = 0; m < 5; ++m) {
        const Element prod = oracle::smash(at("T", q), at("J", m));
        CHECK((prod == at("J", m)) == (q <= m));
        if (q > m) CHECK(prod == Element::zero());
      }
    // K(n) is below the Morava E-theory class exactly up to height n
    for (std::uint64_t i = 0; i < 6; ++i)
      CHECK(oracle::order_table(at("K", i), at("E", 3)) == (i <= 3));
  }

  TEST_CASE("names") {
    const auto names = list_names();
    CHECK(names.size() == catalog_entries().size());
    CHECK(std::is_sorted(names.begin(), names.end(),
                         [](const CatalogName& a, const CatalogName& b) { return a.name < b.name; }));
    CHECK(find_entry("F")->pattern() == "F(n)");
    CHECK(find_entry("T")->pattern() == "T(q)");
  }
}
