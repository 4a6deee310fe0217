#ifndef BOUSFIELD_ELEMENT_HPP
#define BOUSFIELD_ELEMENT_HPP

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "bousfield/ext_nat.hpp"
#include "bousfield/index_set.hpp"

namespace bousfield {

/// Raised when a value would break a structural invariant (a t-tail that is not
/// cosmall, a quotient by a non-idempotent, an impossible ideal summary).
class ConstraintError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct TPart {
  ExtNat q;
  IndexSet tail;  // cosmall
  friend auto operator<=>(const TPart&, const TPart&) = default;
};

struct JPart {
  OmegaNat m;
  IndexSet tail;  // small
  friend auto operator<=>(const JPart&, const JPart&) = default;
};

struct KPart {
  IndexSet tail;
  friend auto operator<=>(const KPart&, const KPart&) = default;
};

/// Head of an element: t(q), j(m) or the bare symbol k.
class Head {
public:
  enum class Kind { T, J, K };

  static Head t(ExtNat q) { return Head(Kind::T, OmegaNat::from(q)); }
  static Head j(OmegaNat m) { return Head(Kind::J, m); }
  static Head k() { return Head(Kind::K, OmegaNat(0)); }

  Kind kind() const { return kind_; }
  /// q for t-heads (always finite or inf), m for j-heads.
  OmegaNat index() const { return index_; }

  friend bool operator==(const Head&, const Head&) = default;
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Head& h) { return os << h.to_string(); }

private:
  Head(Kind k, OmegaNat i) : kind_(k), index_(i) {}
  Kind kind_;
  OmegaNat index_;
};

/**
 * An element of the combinatorial semiring: t(q,T) with T cosmall, j(m,S) with
 * S small, or k(U).
 *
 * The constructors are the only way in, and they enforce the tail conditions, so
 * two Elements are equal exactly when they denote the same element. Join is
 * written `+` and smash `*`.
 */
class Element {
public:
  using Rep = std::variant<TPart, JPart, KPart>;

  static Element zero() { return k(IndexSet::empty()); }
  static Element one() { return t(ExtNat(0), IndexSet::all()); }

  /// Throws ConstraintError unless `tail` is cosmall.
  static Element t(ExtNat q, IndexSet tail);
  /// The normalising constructor: j(m,S) when m is not bottom and S is small,
  /// otherwise k(S).
  static Element j(BotOmegaNat m, IndexSet tail);
  static Element k(IndexSet tail);

  bool is_t() const { return std::holds_alternative<TPart>(rep_); }
  bool is_j() const { return std::holds_alternative<JPart>(rep_); }
  bool is_k() const { return std::holds_alternative<KPart>(rep_); }

  const TPart& as_t() const { return std::get<TPart>(rep_); }
  const JPart& as_j() const { return std::get<JPart>(rep_); }
  const KPart& as_k() const { return std::get<KPart>(rep_); }
  const Rep& rep() const { return rep_; }

  const IndexSet& tail() const;
  Head head() const;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;

  /// Literal form, e.g. "t(2, [3,inf])", which the expression parser reads back.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Element& x) {
    return os << x.to_string();
  }

private:
  explicit Element(Rep r) : rep_(std::move(r)) {}
  Rep rep_;
};

Element join(const Element& x, const Element& y);
Element smash(const Element& x, const Element& y);
/// The semiring order, decided from the explicit case table.
bool leq(const Element& x, const Element& y);

inline Element operator+(const Element& x, const Element& y) { return join(x, y); }
inline Element operator*(const Element& x, const Element& y) { return smash(x, y); }

inline const IndexSet& tail_of(const Element& x) { return x.tail(); }
inline Head head_of(const Element& x) { return x.head(); }

}  // namespace bousfield

#endif
