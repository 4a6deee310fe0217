#ifndef BOUSFIELD_WIRE_HPP
#define BOUSFIELD_WIRE_HPP

// Canonical JSON forms. Keys are emitted in a fixed order so that dumps are
// byte-for-byte deterministic.

#include <stdexcept>

#include <json.hpp>

#include "bousfield/catalog.hpp"
#include "bousfield/element.hpp"
#include "bousfield/ideals.hpp"
#include "bousfield/index_set.hpp"
#include "bousfield/structure.hpp"

namespace bousfield::wire {

using Json = nlohmann::ordered_json;

class DecodeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json encode(ExtNat n);
Json encode(OmegaNat m);
/// {"threshold","bits","period","residues","infinity"}
Json encode(const IndexSet& s);
/// {"kind":"t"|"j"|"k", "q"|"m", "tail"}
Json encode(const Element& x);
Json encode(const Head& h);
Json encode(const SigmaTriple& s);
Json encode(const HeytingResult& h);
/// {"A", "qMin": number|"inf"|null, "mShape": "empty"|{"bounded":m}|"unbounded"}
Json encode(const IdealSummary& s);
Json encode(const CatalogEntry& e);
Json encode_catalog();

ExtNat decode_ext_nat(const Json& j);
OmegaNat decode_omega_nat(const Json& j);
/// Rejects well-formed but non-canonical encodings.
IndexSet decode_index_set(const Json& j);
Element decode_element(const Json& j);
SigmaTriple decode_sigma(const Json& j);
IdealSummary decode_summary(const Json& j);

}  // namespace bousfield::wire

#endif
