#ifndef BOUSFIELD_EXT_NAT_HPP
#define BOUSFIELD_EXT_NAT_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

namespace bousfield {

/// Element of N u {inf}. Every natural is below infinity.
class ExtNat {
public:
  using value_type = std::uint64_t;
  static constexpr value_type kMaxFinite = std::numeric_limits<value_type>::max() / 4;

  constexpr ExtNat() = default;
  constexpr explicit ExtNat(value_type n) : raw_(n) {}

  static constexpr ExtNat infinity() { return ExtNat(Raw{kInf}); }

  constexpr bool is_finite() const { return raw_ != kInf; }
  constexpr bool is_infinite() const { return raw_ == kInf; }
  /// Only meaningful when is_finite().
  constexpr value_type value() const { return raw_; }

  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(raw_); }
  friend std::ostream& operator<<(std::ostream& os, ExtNat n) { return os << n.to_string(); }

private:
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  struct Raw { value_type v; };
  constexpr explicit ExtNat(Raw r) : raw_(r.v) {}

  value_type raw_ = 0;
};

/// Element of N u {w, inf} ordered 0 < 1 < 2 < ... < w < inf.
class OmegaNat {
public:
  using value_type = std::uint64_t;

  constexpr OmegaNat() = default;
  constexpr explicit OmegaNat(value_type n) : raw_(n) {}

  static constexpr OmegaNat omega() { return OmegaNat(Raw{kOmega}); }
  static constexpr OmegaNat infinity() { return OmegaNat(Raw{kInf}); }

  /// N_inf embeds into N_w with inf going to inf, so a finite q never exceeds w.
  static constexpr OmegaNat from(ExtNat n) {
    return n.is_infinite() ? infinity() : OmegaNat(n.value());
  }

  constexpr bool is_finite() const { return raw_ < kOmega; }
  constexpr bool is_omega() const { return raw_ == kOmega; }
  constexpr bool is_infinite() const { return raw_ == kInf; }
  constexpr value_type value() const { return raw_; }

  friend constexpr auto operator<=>(OmegaNat, OmegaNat) = default;

  std::string to_string() const {
    if (is_omega()) return "w";
    if (is_infinite()) return "inf";
    return std::to_string(raw_);
  }
  friend std::ostream& operator<<(std::ostream& os, OmegaNat n) { return os << n.to_string(); }

private:
  static constexpr value_type kOmega = std::numeric_limits<value_type>::max() - 1;
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  struct Raw { value_type v; };
  constexpr explicit OmegaNat(Raw r) : raw_(r.v) {}

  value_type raw_ = 0;
};

/// N_w with an adjoined bottom; std::nullopt is bottom and compares below everything.
using BotOmegaNat = std::optional<OmegaNat>;

}  // namespace bousfield

#endif
