#include "bousfield/catalog.hpp"

#include <algorithm>
#include <initializer_list>

namespace bousfield {

const char* to_string(Exactness e) {
  return e == Exactness::Exact ? "exact" : "modulo-tc";
}

std::string CatalogEntry::pattern() const {
  switch (domain) {
    case ParamDomain::None: return name;
    case ParamDomain::Finite: return name + "(n)";
    case ParamDomain::Extended: return name + "(q)";
  }
  return name;
}

namespace {

using Ctor = std::function<Element(ExtNat)>;

IndexSet from_n(ExtNat n) { return IndexSet::interval(n.value(), ExtNat::infinity()); }
IndexSet up_to(ExtNat n) { return IndexSet::interval(0, n); }
IndexSet point(ExtNat n) { return IndexSet::singleton(n); }
const IndexSet& everything() {
  static const IndexSet s = IndexSet::all();
  return s;
}

struct Group {
  std::initializer_list<const char*> names;
  ParamDomain domain;
  Exactness exactness;
  const char* equation;
  Ctor construct;
};

std::vector<CatalogEntry> build() {
  const ExtNat inf = ExtNat::infinity();
  const auto constant = [](Element x) { return [x](ExtNat) { return x; }; };
  const auto k = [](IndexSet s) { return Element::k(std::move(s)); };

  const std::vector<Group> groups = {
      {{"0"}, ParamDomain::None, Exactness::Exact, "0 = k({})", constant(Element::zero())},
      {{"S", "S^p"}, ParamDomain::None, Exactness::Exact, "S = S^_p = T(0) = t(0,N)",
       constant(Element::one())},
      {{"S/p", "S/p^inf"}, ParamDomain::None, Exactness::Exact,
       "S/p = S/p^inf = t(0,[1,inf])", constant(Element::t(ExtNat(0), from_n(ExtNat(1))))},
      {{"F"}, ParamDomain::Finite, Exactness::Exact, "F(n) = t(0,[n,inf])",
       [](ExtNat n) { return Element::t(ExtNat(0), from_n(n)); }},
      {{"HQ", "SQ", "IHQ"}, ParamDomain::None, Exactness::Exact, "HQ = SQ = I(HQ) = k({0})",
       constant(k(point(ExtNat(0))))},
      {{"H/p", "H/p^inf", "IH", "IH/p"}, ParamDomain::None, Exactness::Exact,
       "H/p = H/p^inf = I(H) = I(H/p) = k({inf})", constant(k(point(inf)))},
      {{"IBP<n>"}, ParamDomain::Finite, Exactness::Exact, "I(BP<n>) = k({inf})",
       [inf](ExtNat) { return Element::k(point(inf)); }},
      {{"H"}, ParamDomain::None, Exactness::Exact, "H = k({0,inf})",
       constant(k(IndexSet::finite({0}, true)))},
      {{"K'", "v_n^-1F"}, ParamDomain::Finite, Exactness::ModuloTC,
       "v_n^-1 F(n) = K'(n) ~= k({n})", [](ExtNat n) { return Element::k(point(n)); }},
      {{"T"}, ParamDomain::Extended, Exactness::Exact, "T(q) = t(q,N)",
       [](ExtNat q) { return Element::t(q, everything()); }},
      {{"BP", "BP^p"}, ParamDomain::None, Exactness::Exact, "BP = BP^_p = T(inf) = t(inf,N)",
       constant(Element::t(inf, everything()))},
      {{"P", "BP/I_n"}, ParamDomain::Finite, Exactness::Exact, "P(n) = BP/I_n = t(inf,[n,inf])",
       [inf](ExtNat n) { return Element::t(inf, from_n(n)); }},
      {{"K", "B", "v_n^-1P", "M_nS"}, ParamDomain::Finite, Exactness::Exact,
       "B(n) = v_n^-1 P(n) = K(n) = M_nS = k({n})",
       [](ExtNat n) { return Element::k(point(n)); }},
      {{"IK", "IB"}, ParamDomain::Finite, Exactness::Exact, "IB(n) = IK(n) = k({n})",
       [](ExtNat n) { return Element::k(point(n)); }},
      {{"E", "v_n^-1BP<n>", "v_n^-1BP", "L_nS"}, ParamDomain::Finite, Exactness::Exact,
       "E(n) = v_n^-1 BP<n> = v_n^-1 BP = L_nS = k([0,n])",
       [](ExtNat n) { return Element::k(up_to(n)); }},
      {{"E^", "L_KnS"}, ParamDomain::Finite, Exactness::Exact, "E(n)^ = L_K(n)S = k([0,n])",
       [](ExtNat n) { return Element::k(up_to(n)); }},
      {{"C_nS"}, ParamDomain::Finite, Exactness::ModuloTC, "C_nS ~= t(0,[n+1,inf])",
       [](ExtNat n) { return Element::t(ExtNat(0), from_n(ExtNat(n.value() + 1))); }},
      {{"BP<n>"}, ParamDomain::Finite, Exactness::Exact, "BP<n> = k([0,n] u {inf})",
       [inf](ExtNat n) { return Element::k(up_to(n) | point(inf)); }},
      {{"BP<n>/I_n"}, ParamDomain::Finite, Exactness::Exact, "BP<n>/I_n = k({n,inf})",
       [inf](ExtNat n) { return Element::k(point(n) | point(inf)); }},
      {{"KU", "KO"}, ParamDomain::None, Exactness::Exact, "KU = KO = k({0,1})",
       constant(k(IndexSet::finite({0, 1})))},
      {{"kU", "kO"}, ParamDomain::None, Exactness::Exact, "kU = kO = k({0,1,inf})",
       constant(k(IndexSet::finite({0, 1}, true)))},
      {{"Ell", "TMF"}, ParamDomain::None, Exactness::Exact, "Ell = TMF = k({0,1,2})",
       constant(k(IndexSet::finite({0, 1, 2})))},
      {{"IS"}, ParamDomain::None, Exactness::Exact, "I(S) = I(T(0)) = j(0,{})",
       constant(Element::j(OmegaNat(0), IndexSet::empty()))},
      {{"IF"}, ParamDomain::Finite, Exactness::Exact, "I(F(n)) = j(0,{})",
       [](ExtNat) { return Element::j(OmegaNat(0), IndexSet::empty()); }},
      {{"IS^p", "IS/p^inf"}, ParamDomain::None, Exactness::Exact,
       "I(S^_p) = I(S/p^inf) = j(0,{0})", constant(Element::j(OmegaNat(0), point(ExtNat(0))))},
      {{"IT", "J"}, ParamDomain::Extended, Exactness::Exact, "I(T(m)) = J(m) = j(m,{})",
       [](ExtNat m) { return Element::j(OmegaNat::from(m), IndexSet::empty()); }},
      {{"Jw"}, ParamDomain::None, Exactness::Exact, "J(w) = j(w,{})",
       constant(Element::j(OmegaNat::omega(), IndexSet::empty()))},
  };

  std::vector<CatalogEntry> out;
  for (const Group& g : groups) {
    const std::string primary = *g.names.begin();
    for (const char* name : g.names)
      out.push_back({name, g.domain, g.exactness, g.equation, primary, g.construct});
  }
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  const auto& entries = catalog_entries();
  auto it = std::lower_bound(entries.begin(), entries.end(), name,
                             [](const CatalogEntry& e, std::string_view n) { return e.name < n; });
  if (it == entries.end() || it->name != name) return nullptr;
  return &*it;
}

CatalogHit lookup(std::string_view name, std::optional<ExtNat> param) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw CatalogError("unknown catalog name '" + std::string(name) + "'");
  if (!e->parametric()) {
    if (param) throw CatalogError("'" + e->name + "' takes no parameter");
    return {e->construct(ExtNat(0)), e->exactness};
  }
  if (!param) throw CatalogError("'" + e->name + "' needs a parameter: " + e->pattern());
  if (e->domain == ParamDomain::Finite && param->is_infinite())
    throw CatalogError("'" + e->name + "' needs a finite parameter, got inf");
  return {e->construct(*param), e->exactness};
}

std::vector<CatalogName> list_names() {
  std::vector<CatalogName> out;
  for (const CatalogEntry& e : catalog_entries())
    out.push_back({e.name, e.pattern(), e.exactness, e.equation});
  return out;
}

}  // namespace bousfield
