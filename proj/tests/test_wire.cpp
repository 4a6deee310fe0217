#include "bousfield/lawcheck.hpp"
#include "bousfield/wire.hpp"
#include "doctest.h"

using namespace bousfield;
using wire::Json;

TEST_SUITE("wire") {
  TEST_CASE("element forms") {
    CHECK(wire::encode(Element::zero()).dump() ==
          R"({"kind":"k","tail":{"threshold":0,"bits":[],"period":1,"residues":[],"infinity":false}})");
    CHECK(wire::encode(Element::one()).dump() ==
          R"({"kind":"t","q":0,"tail":{"threshold":0,"bits":[],"period":1,"residues":[0],"infinity":true}})");
    CHECK(wire::encode(Element::j(OmegaNat::omega(), IndexSet::finite({1}))).dump() ==
          R"({"kind":"j","m":"w","tail":{"threshold":2,"bits":[0,1],"period":1,"residues":[],"infinity":false}})");
    CHECK(wire::encode(ExtNat::infinity()) == Json("inf"));
  }

  TEST_CASE("roundtrip on the grid") {
    for (const Element& x : enumerate_grid(GridConfig::full())) {
      const Json j = wire::encode(x);
      CHECK(wire::decode_element(Json::parse(j.dump())) == x);
      CHECK(wire::decode_sigma(wire::encode(sigma(x))) == sigma(x));
      CHECK(wire::decode_index_set(wire::encode(x.tail())) == x.tail());
    }
  }

  TEST_CASE("summary roundtrip") {
    const IdealSummary s{IndexSet::interval(3, ExtNat::infinity()), ExtNat(2),
                         MShape::bounded(OmegaNat::omega())};
    const Json j = wire::encode(s);
    CHECK(j.dump() ==
          R"({"A":{"threshold":3,"bits":[0,0,0],"period":1,"residues":[0],"infinity":true},"qMin":2,"mShape":{"bounded":"w"}})");
    CHECK(wire::decode_summary(j) == s);
    const IdealSummary e{};
    CHECK(wire::decode_summary(wire::encode(e)) == e);
  }

  TEST_CASE("rejects bad input") {
    const auto bad_set = [](const char* text) { return wire::decode_index_set(Json::parse(text)); };
    CHECK_THROWS_AS(bad_set(R"({"threshold":1,"bits":[0],"period":1,"residues":[],"infinity":false})"),
                    wire::DecodeError);
    CHECK_THROWS_AS(bad_set(R"({"threshold":0,"bits":[],"period":2,"residues":[0,1],"infinity":false})"),
                    wire::DecodeError);
    CHECK_THROWS_AS(bad_set(R"({"threshold":0,"bits":[],"period":1,"residues":[]})"), wire::DecodeError);
    CHECK_THROWS_AS(bad_set(R"({"threshold":0,"bits":[],"period":0,"residues":[],"infinity":false})"),
                    wire::DecodeError);
    CHECK_THROWS_AS(wire::decode_element(Json::parse(
                        R"({"kind":"t","q":1,"tail":{"threshold":0,"bits":[],"period":1,"residues":[],"infinity":false}})")),
                    wire::DecodeError);
    CHECK_THROWS_AS(wire::decode_element(Json::parse(R"({"kind":"x"})")), wire::DecodeError);
  }

  TEST_CASE("catalog dump") {
    const Json c = wire::encode_catalog();
    REQUIRE(c.is_array());
    CHECK(c.size() == catalog_entries().size());
    for (const Json& e : c) {
      CHECK(e.contains("name"));
      CHECK(e.contains("exactness"));
    }
  }
}
