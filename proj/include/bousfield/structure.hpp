#ifndef BOUSFIELD_STRUCTURE_HPP
#define BOUSFIELD_STRUCTURE_HPP

#include <optional>
#include <ostream>
#include <string>

#include "bousfield/element.hpp"
#include "bousfield/index_set.hpp"

namespace bousfield {

/// x * x == x; these are exactly the t- and k-elements.
bool is_idempotent(const Element& x);

/// Membership in the boolean part: t(0,T) with T cosmall, or k(U) with U small.
bool is_complemented(const Element& x);

/// The complement y (x + y == 1, x * y == 0) when x has one.
std::optional<Element> boolean_complement(const Element& x);

struct HeytingResult {
  Element element;
  bool strong = false;
  friend bool operator==(const HeytingResult&, const HeytingResult&) = default;
};

/**
 * The Heyting element (x -> z): the largest y with x * y <= z.
 *
 * Computed in closed form as theta of the ideal A(x,z) = {y : x * y <= z}, whose
 * summary is read off from the heads of x and z. `strong` records whether the
 * result also satisfies z <= y and x + y == 1.
 */
HeytingResult heyting(const Element& x, const Element& z);

/// The largest y with x * y == 0, i.e. heyting(x, 0).
Element negation(const Element& x);

/// a + eps, the projection onto {a : a >= eps}. Throws ConstraintError when eps is
/// not idempotent.
Element quotient_project(const Element& eps, const Element& a);

struct SigmaTriple {
  IndexSet s1;
  IndexSet s2;
  IndexSet s3;
  friend auto operator<=>(const SigmaTriple&, const SigmaTriple&) = default;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const SigmaTriple& s) {
    return os << s.to_string();
  }
};

/// Injectivity signature:
///   t(q,T)     -> (T, [q,inf], [0,inf])
///   j(m,S)     -> (S, {},      [0,m] n N_inf)   (so j(w,S) gives N, j(inf,S) gives N_inf)
///   k(U) small -> (U, {},      {})
///   k(U) big   -> (U, {},      [0,inf])
SigmaTriple sigma(const Element& x);

/// Inverse of sigma; nullopt when the triple is not the signature of any element.
std::optional<Element> reconstruct(const SigmaTriple& u);

}  // namespace bousfield

#endif
