#include "bousfield/structure.hpp"

#include "bousfield/ideals.hpp"

namespace bousfield {

bool is_idempotent(const Element& x) { return !x.is_j(); }

bool is_complemented(const Element& x) {
  if (x.is_t()) return x.as_t().q == ExtNat(0);
  if (x.is_k()) return x.tail().is_small();
  return false;
}

std::optional<Element> boolean_complement(const Element& x) {
  if (!is_complemented(x)) return std::nullopt;
  if (x.is_t()) return Element::k(~x.tail());
  return Element::t(ExtNat(0), ~x.tail());
}

namespace {

// Summary of the ideal A(x,z) = {y : x * y <= z}. The ideal is down-closed, so
//   i in A        iff  x * k(i)     <= z,
//   q has a t-head iff x * t(q,T)   <= z for some cosmall T,
//   m has a j-head iff x * j(m,{})  <= z.
IdealSummary heyting_ideal(const Element& x, const Element& z) {
  IdealSummary s;
  s.a = ~x.tail() | z.tail();

  const Element j_top = Element::j(OmegaNat::infinity(), IndexSet::empty());
  const bool every_j_below_z = leq(j_top, z);  // then j(m,{}) <= z for all m

  if (x.is_t()) {
    const ExtNat qx = x.as_t().q;
    // x * t(q,T) = t(max(qx,q), Tx n T); the tail can always be made to fit.
    if (z.is_t()) {
      const ExtNat qz = z.as_t().q;
      s.q_min = qx >= qz ? ExtNat(0) : qz;
    }
    // x * j(m,{}) is j(m,{}) when qx <= m and 0 otherwise.
    if (every_j_below_z) {
      s.m_shape = MShape::bounded(OmegaNat::infinity());
    } else {
      const OmegaNat floor = OmegaNat::from(qx);
      if (z.is_j() && floor <= z.as_j().m) {
        s.m_shape = MShape::bounded(z.as_j().m);
      } else if (qx.is_infinite()) {
        s.m_shape = MShape::bounded(OmegaNat::omega());
      } else if (qx.value() > 0) {
        s.m_shape = MShape::bounded(OmegaNat(qx.value() - 1));
      }
    }
    return s;
  }

  // x * j(m,{}) = 0 when x is a j- or k-element.
  s.m_shape = MShape::bounded(OmegaNat::infinity());

  if (x.is_j()) {
    // x * t(q,T) is j(mx, Sx n T) for q <= mx and k(Sx n T) otherwise; T can
    // avoid the small set Sx entirely.
    const OmegaNat mx = x.as_j().m;
    if (leq(Element::j(mx, IndexSet::empty()), z)) {
      s.q_min = ExtNat(0);
    } else if (mx.is_finite()) {
      s.q_min = ExtNat(mx.value() + 1);
    } else if (mx.is_omega()) {
      s.q_min = ExtNat::infinity();
    }
    return s;
  }

  // x = k(U): x * t(q,T) = k(U n T) <= z iff U n T is inside tail(z), which some
  // cosmall T achieves exactly when ~U u tail(z) is cosmall.
  if (s.a.is_cosmall()) s.q_min = ExtNat(0);
  return s;
}

}  // namespace

HeytingResult heyting(const Element& x, const Element& z) {
  Element y = theta(heyting_ideal(x, z));
  const bool strong = leq(z, y) && join(x, y) == Element::one();
  return HeytingResult{std::move(y), strong};
}

Element negation(const Element& x) { return heyting(x, Element::zero()).element; }

Element quotient_project(const Element& eps, const Element& a) {
  if (!is_idempotent(eps))
    throw ConstraintError("quotient needs an idempotent, got " + eps.to_string());
  return join(a, eps);
}

std::string SigmaTriple::to_string() const {
  return "(s1=" + s1.to_string(true) + ", s2=" + s2.to_string(true) +
         ", s3=" + s3.to_string(true) + ")";
}

namespace {

IndexSet up_from(ExtNat q) {
  if (q.is_infinite()) return IndexSet::singleton(q);
  return IndexSet::interval(q.value(), ExtNat::infinity());
}

IndexSet down_to(OmegaNat m) {
  if (m.is_infinite()) return IndexSet::all();
  if (m.is_omega()) return IndexSet::naturals();
  return IndexSet::interval(0, ExtNat(m.value()));
}

}  // namespace

SigmaTriple sigma(const Element& x) {
  if (x.is_t()) return {x.tail(), up_from(x.as_t().q), IndexSet::all()};
  if (x.is_j()) return {x.tail(), IndexSet::empty(), down_to(x.as_j().m)};
  return {x.tail(), IndexSet::empty(), x.tail().is_small() ? IndexSet::empty() : IndexSet::all()};
}

std::optional<Element> reconstruct(const SigmaTriple& u) {
  std::optional<Element> candidate;
  if (!u.s2.is_empty()) {
    if (!u.s1.is_cosmall()) return std::nullopt;
    candidate = Element::t(*u.s2.min(), u.s1);
  } else if (u.s1.is_small() && !u.s3.is_empty()) {
    candidate = Element::j(*u.s3.sup(), u.s1);
  } else {
    candidate = Element::k(u.s1);
  }
  // Only genuine table rows have a preimage.
  if (sigma(*candidate) != u) return std::nullopt;
  return candidate;
}

}  // namespace bousfield
