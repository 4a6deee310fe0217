#ifndef BOUSFIELD_IDEALS_HPP
#define BOUSFIELD_IDEALS_HPP

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "bousfield/element.hpp"
#include "bousfield/ext_nat.hpp"
#include "bousfield/index_set.hpp"

namespace bousfield {

/// Shape of M = {m : j(m) is the head of some member}: empty, with a largest
/// element, or nonempty without one (then M is an infinite subset of N).
class MShape {
public:
  enum class Kind { Empty, Bounded, Unbounded };

  static MShape empty() { return MShape(Kind::Empty, OmegaNat(0)); }
  static MShape bounded(OmegaNat max) { return MShape(Kind::Bounded, max); }
  static MShape unbounded() { return MShape(Kind::Unbounded, OmegaNat(0)); }

  Kind kind() const { return kind_; }
  /// Largest element; meaningful for Bounded only.
  OmegaNat max() const { return max_; }

  friend bool operator==(const MShape&, const MShape&) = default;
  std::string to_string() const;

private:
  MShape(Kind k, OmegaNat m) : kind_(k), max_(m) {}
  Kind kind_;
  OmegaNat max_;
};

/**
 * What theta needs to know about an ideal I:
 *   a      = union of the tails of the members,
 *   q_min  = least q with t(q) a head of a member (absent when there is none),
 *   m_shape = the shape of the set of j-head indices.
 */
struct IdealSummary {
  IndexSet a;
  std::optional<ExtNat> q_min;
  MShape m_shape = MShape::empty();

  friend bool operator==(const IdealSummary&, const IdealSummary&) = default;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const IdealSummary& s) {
    return os << s.to_string();
  }
};

/// Summary of the ideal generated by a finite list. A t-generator t(q,T) puts
/// j(m, {i}) into the ideal for every m >= q (smash with j(m,{i}), i in T), so it
/// forces the j-head set to reach inf. So does k(U) with U big, which lies above
/// every j(m, {}).
IdealSummary summary_from_generators(std::span<const Element> gens);

/// The ideal generated by j(m, a) for infinitely many finite m.
IdealSummary summary_unbounded_j(IndexSet a);

/// Least upper bound of the summarised ideal:
///   (a) no t-heads, and a big or no j-heads   -> k(A)
///   (b) no t-heads, A small, j-heads unbounded -> j(w, A)
///   (c) no t-heads, A small, largest j-head m0 -> j(m0, A)
///   (d) some t-head                            -> t(q_min, A)
/// Throws ConstraintError in case (d) when A is not cosmall; no ideal has that summary.
Element theta(const IdealSummary& s);

/// Summary of x * I = {x * u : u in I}.
IdealSummary smash_summary(const Element& x, const IdealSummary& s);

/// Finite join, starting from 0.
Element join_all(std::span<const Element> xs);

}  // namespace bousfield

#endif
