#include "bousfield/ideals.hpp"

#include <algorithm>

namespace bousfield {

std::string MShape::to_string() const {
  switch (kind_) {
    case Kind::Empty: return "empty";
    case Kind::Bounded: return max_.to_string();
    case Kind::Unbounded: return "unbounded";
  }
  return "?";
}

std::string IdealSummary::to_string() const {
  return "theta(" + a.to_string() + "; " + (q_min ? q_min->to_string() : "none") + "; " +
         m_shape.to_string() + ")";
}

IdealSummary summary_from_generators(std::span<const Element> gens) {
  IdealSummary s;
  std::optional<OmegaNat> m_max;
  auto raise_m = [&](OmegaNat m) { m_max = m_max ? std::max(*m_max, m) : m; };
  for (const Element& g : gens) {
    s.a = s.a | g.tail();
    if (g.is_t()) {
      const ExtNat q = g.as_t().q;
      s.q_min = s.q_min ? std::min(*s.q_min, q) : q;
      raise_m(OmegaNat::infinity());
    } else if (g.is_j()) {
      raise_m(g.as_j().m);
    } else if (g.tail().is_big()) {
      raise_m(OmegaNat::infinity());
    }
  }
  if (m_max) s.m_shape = MShape::bounded(*m_max);
  return s;
}

IdealSummary summary_unbounded_j(IndexSet a) {
  return IdealSummary{std::move(a), std::nullopt, MShape::unbounded()};
}

Element theta(const IdealSummary& s) {
  if (s.q_min) {
    if (!s.a.is_cosmall())
      throw ConstraintError("ideal summary has a t-head but its tail union " + s.a.to_string() +
                            " is not cosmall");
    return Element::t(*s.q_min, s.a);
  }
  if (s.a.is_big()) return Element::k(s.a);
  switch (s.m_shape.kind()) {
    case MShape::Kind::Empty: return Element::k(s.a);
    case MShape::Kind::Unbounded: return Element::j(OmegaNat::omega(), s.a);
    case MShape::Kind::Bounded: return Element::j(s.m_shape.max(), s.a);
  }
  return Element::k(s.a);
}

IdealSummary smash_summary(const Element& x, const IdealSummary& s) {
  IdealSummary out;
  out.a = s.a & x.tail();
  if (x.is_t()) {
    const ExtNat qx = x.as_t().q;
    if (s.q_min) {
      out.q_min = std::max(qx, *s.q_min);
      out.m_shape = MShape::bounded(OmegaNat::infinity());
      return out;
    }
    // t(qx) * j(m) keeps the j-head exactly when qx <= m.
    const OmegaNat floor = OmegaNat::from(qx);
    switch (s.m_shape.kind()) {
      case MShape::Kind::Empty: break;
      case MShape::Kind::Bounded:
        if (floor <= s.m_shape.max()) out.m_shape = s.m_shape;
        break;
      case MShape::Kind::Unbounded:
        if (qx.is_finite()) out.m_shape = MShape::unbounded();
        break;
    }
    return out;
  }
  if (x.is_j()) {
    // Only j(mx) * t(q) with q <= mx yields a j-head, and it is j(mx).
    const OmegaNat mx = x.as_j().m;
    if (s.q_min && OmegaNat::from(*s.q_min) <= mx) out.m_shape = MShape::bounded(mx);
  }
  return out;
}

Element join_all(std::span<const Element> xs) {
  Element acc = Element::zero();
  for (const Element& x : xs) acc = join(acc, x);
  return acc;
}

}  // namespace bousfield
