#ifndef BOUSFIELD_INDEX_SET_HPP
#define BOUSFIELD_INDEX_SET_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bousfield/ext_nat.hpp"

namespace bousfield {

enum class SizeClass { Small, BigNotCosmall, Cosmall };

const char* to_string(SizeClass c);

/**
 * An eventually periodic subset of N u {inf}.
 *
 * A natural n < threshold() is a member iff bits()[n]; a natural n >= threshold()
 * is a member iff (n mod period()) is one of residues(). Membership of infinity is
 * a separate flag.
 *
 * Values are always canonical: the period is the least period of the tail and the
 * threshold is the least one for which the prefix is not already described by the
 * tail. Two sets are equal exactly when their fields are equal, so the defaulted
 * comparison operators are set equality (and an arbitrary but fixed total order).
 */
class IndexSet {
public:
  using nat = std::uint64_t;

  /// Longest period allowed after an lcm; larger results throw std::length_error.
  static constexpr nat kMaxPeriod = nat{1} << 20;

  IndexSet() = default;  // the empty set

  static IndexSet empty() { return {}; }
  /// N u {inf}.
  static IndexSet all();
  /// N without infinity.
  static IndexSet naturals();
  static IndexSet finite(std::span<const nat> members, bool with_infinity = false);
  static IndexSet finite(std::initializer_list<nat> members, bool with_infinity = false);
  static IndexSet singleton(ExtNat n);
  /// [lo, hi]; when hi is infinite the set contains every n >= lo and infinity itself.
  static IndexSet interval(nat lo, ExtNat hi);
  /// {n >= start : n mod period in residues}, optionally with infinity.
  static IndexSet periodic(nat start, nat period, std::span<const nat> residues,
                           bool with_infinity = false);
  static IndexSet periodic(nat start, nat period, std::initializer_list<nat> residues,
                           bool with_infinity = false);
  /// Arbitrary (possibly non-canonical) representation; result is canonical.
  static IndexSet from_parts(std::vector<bool> bits, nat period, std::span<const nat> residues,
                             bool with_infinity);

  nat threshold() const { return bits_.size(); }
  const std::vector<bool>& bits() const { return bits_; }
  nat period() const { return tail_.size(); }
  std::vector<nat> residues() const;
  bool contains_infinity() const { return infinity_; }

  bool contains(nat n) const;
  bool contains(ExtNat n) const;

  bool is_empty() const { return bits_.empty() && !tail_nonempty() && !infinity_; }
  SizeClass classify() const;
  bool is_small() const { return !tail_nonempty() && !infinity_; }
  bool is_big() const { return !is_small(); }
  bool is_cosmall() const { return infinity_ && tail_full(); }

  /// Least member, if any.
  std::optional<ExtNat> min() const;
  /// Supremum in N_w: the largest member, w when the set contains infinitely many
  /// naturals but not infinity, inf when infinity is a member. Empty set gives nullopt.
  std::optional<OmegaNat> sup() const;
  /// Every finite member below the given bound, ascending.
  std::vector<nat> members_below(nat bound) const;

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator~(const IndexSet& a);

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Literal form accepted by the expression parser. With spell_full_interval the
  /// whole of N u {inf} prints as "[0,inf]" instead of "N".
  std::string to_string(bool spell_full_interval = false) const;
  friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    return os << s.to_string();
  }

private:
  bool tail_nonempty() const;
  bool tail_full() const;
  void canonicalize();
  template <class Op>
  static IndexSet combine(const IndexSet& a, const IndexSet& b, Op op);

  std::vector<bool> bits_;
  std::vector<bool> tail_{false};  // indexed by residue, size == period
  bool infinity_ = false;
};

inline IndexSet unite(const IndexSet& a, const IndexSet& b) { return a | b; }
inline IndexSet intersect(const IndexSet& a, const IndexSet& b) { return a & b; }
inline IndexSet complement(const IndexSet& a) { return ~a; }
bool is_subset(const IndexSet& a, const IndexSet& b);

}  // namespace bousfield

#endif
