#include "bousfield/wire.hpp"

#include <string>
#include <vector>

namespace bousfield::wire {

Json encode(ExtNat n) {
  if (n.is_infinite()) return "inf";
  return n.value();
}

Json encode(OmegaNat m) {
  if (m.is_infinite()) return "inf";
  if (m.is_omega()) return "w";
  return m.value();
}

Json encode(const IndexSet& s) {
  Json bits = Json::array();
  for (bool b : s.bits()) bits.push_back(b ? 1u : 0u);
  Json out;
  out["threshold"] = s.threshold();
  out["bits"] = std::move(bits);
  out["period"] = s.period();
  out["residues"] = s.residues();
  out["infinity"] = s.contains_infinity();
  return out;
}

Json encode(const Element& x) {
  Json out;
  if (x.is_t()) {
    out["kind"] = "t";
    out["q"] = encode(x.as_t().q);
  } else if (x.is_j()) {
    out["kind"] = "j";
    out["m"] = encode(x.as_j().m);
  } else {
    out["kind"] = "k";
  }
  out["tail"] = encode(x.tail());
  return out;
}

Json encode(const Head& h) {
  Json out;
  switch (h.kind()) {
    case Head::Kind::T:
      out["kind"] = "t";
      out["q"] = encode(h.index());
      break;
    case Head::Kind::J:
      out["kind"] = "j";
      out["m"] = encode(h.index());
      break;
    case Head::Kind::K: out["kind"] = "k"; break;
  }
  return out;
}

Json encode(const SigmaTriple& s) {
  Json out;
  out["s1"] = encode(s.s1);
  out["s2"] = encode(s.s2);
  out["s3"] = encode(s.s3);
  return out;
}

Json encode(const HeytingResult& h) {
  Json out;
  out["element"] = encode(h.element);
  out["strong"] = h.strong;
  return out;
}

Json encode(const IdealSummary& s) {
  Json out;
  out["A"] = encode(s.a);
  out["qMin"] = s.q_min ? encode(*s.q_min) : Json(nullptr);
  switch (s.m_shape.kind()) {
    case MShape::Kind::Empty: out["mShape"] = "empty"; break;
    case MShape::Kind::Unbounded: out["mShape"] = "unbounded"; break;
    case MShape::Kind::Bounded: {
      Json b;
      b["bounded"] = encode(s.m_shape.max());
      out["mShape"] = std::move(b);
      break;
    }
  }
  return out;
}

Json encode(const CatalogEntry& e) {
  Json out;
  out["name"] = e.name;
  out["params"] = Json::array();
  if (e.parametric()) out["params"].push_back(e.domain == ParamDomain::Finite ? "n" : "q");
  if (e.parametric()) {
    Json inst = Json::array();
    std::vector<ExtNat> samples = {ExtNat(0), ExtNat(1), ExtNat(2), ExtNat(3)};
    if (e.domain == ParamDomain::Extended) samples.push_back(ExtNat::infinity());
    for (ExtNat p : samples) {
      Json one;
      one["param"] = encode(p);
      one["element"] = encode(e.construct(p));
      inst.push_back(std::move(one));
    }
    out["element"] = nullptr;
    out["instances"] = std::move(inst);
  } else {
    out["element"] = encode(e.construct(ExtNat(0)));
  }
  out["exactness"] = to_string(e.exactness);
  out["aliasOf"] = e.alias_of;
  out["citation"] = e.equation;
  return out;
}

Json encode_catalog() {
  Json out = Json::array();
  for (const CatalogEntry& e : catalog_entries()) out.push_back(encode(e));
  return out;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw DecodeError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t natural(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw DecodeError(std::string(what) + " must be a natural number");
  return j.get<std::uint64_t>();
}

}  // namespace

ExtNat decode_ext_nat(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtNat::infinity();
  const auto n = natural(j, "q");
  if (n > ExtNat::kMaxFinite) throw DecodeError("number too large");
  return ExtNat(n);
}

OmegaNat decode_omega_nat(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return OmegaNat::infinity();
    if (s == "w") return OmegaNat::omega();
    throw DecodeError("m must be a number, \"w\" or \"inf\"");
  }
  const auto n = natural(j, "m");
  if (n > ExtNat::kMaxFinite) throw DecodeError("number too large");
  return OmegaNat(n);
}

IndexSet decode_index_set(const Json& j) {
  const auto threshold = natural(field(j, "threshold"), "threshold");
  const Json& bits_json = field(j, "bits");
  if (!bits_json.is_array() || bits_json.size() != threshold)
    throw DecodeError("bits must be an array of length threshold");
  std::vector<bool> bits;
  for (const Json& b : bits_json) {
    const auto v = natural(b, "bit");
    if (v > 1) throw DecodeError("bits must be 0 or 1");
    bits.push_back(v == 1);
  }
  const auto period = natural(field(j, "period"), "period");
  const Json& res_json = field(j, "residues");
  if (!res_json.is_array()) throw DecodeError("residues must be an array");
  std::vector<std::uint64_t> residues;
  for (const Json& r : res_json) residues.push_back(natural(r, "residue"));
  const Json& inf = field(j, "infinity");
  if (!inf.is_boolean()) throw DecodeError("infinity must be a boolean");

  IndexSet s;
  try {
    s = IndexSet::from_parts(bits, period, residues, inf.get<bool>());
  } catch (const std::exception& e) {
    throw DecodeError(e.what());
  }
  if (s.bits() != bits || s.period() != period || s.residues() != residues)
    throw DecodeError("index set is not in canonical form");
  return s;
}

Element decode_element(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw DecodeError("kind must be a string");
  const auto k = kind.get<std::string>();
  IndexSet tail = decode_index_set(field(j, "tail"));
  try {
    if (k == "t") return Element::t(decode_ext_nat(field(j, "q")), std::move(tail));
    if (k == "j") {
      if (tail.is_big()) throw DecodeError("j-element with a big tail is not canonical");
      return Element::j(decode_omega_nat(field(j, "m")), std::move(tail));
    }
    if (k == "k") return Element::k(std::move(tail));
  } catch (const ConstraintError& e) {
    throw DecodeError(e.what());
  }
  throw DecodeError("kind must be \"t\", \"j\" or \"k\"");
}

SigmaTriple decode_sigma(const Json& j) {
  return {decode_index_set(field(j, "s1")), decode_index_set(field(j, "s2")),
          decode_index_set(field(j, "s3"))};
}

IdealSummary decode_summary(const Json& j) {
  IdealSummary s;
  s.a = decode_index_set(field(j, "A"));
  const Json& q = field(j, "qMin");
  if (!q.is_null()) s.q_min = decode_ext_nat(q);
  const Json& m = field(j, "mShape");
  if (m.is_string() && m.get<std::string>() == "empty") {
    s.m_shape = MShape::empty();
  } else if (m.is_string() && m.get<std::string>() == "unbounded") {
    s.m_shape = MShape::unbounded();
  } else if (m.is_object() && m.contains("bounded")) {
    s.m_shape = MShape::bounded(decode_omega_nat(m.at("bounded")));
  } else {
    throw DecodeError("mShape must be \"empty\", \"unbounded\" or {\"bounded\": m}");
  }
  return s;
}

}  // namespace bousfield::wire
