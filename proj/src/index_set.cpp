#include "bousfield/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bousfield {

const char* to_string(SizeClass c) {
  switch (c) {
    case SizeClass::Small: return "small";
    case SizeClass::BigNotCosmall: return "big";
    case SizeClass::Cosmall: return "cosmall";
  }
  return "?";
}

IndexSet IndexSet::all() {
  IndexSet s;
  s.tail_ = {true};
  s.infinity_ = true;
  return s;
}

IndexSet IndexSet::naturals() {
  IndexSet s;
  s.tail_ = {true};
  return s;
}

IndexSet IndexSet::finite(std::span<const nat> members, bool with_infinity) {
  IndexSet s;
  nat top = 0;
  for (nat n : members) top = std::max(top, n + 1);
  if (top > kMaxPeriod) throw std::length_error("finite set member too large");
  s.bits_.assign(top, false);
  for (nat n : members) s.bits_[n] = true;
  s.infinity_ = with_infinity;
  s.canonicalize();
  return s;
}

IndexSet IndexSet::finite(std::initializer_list<nat> members, bool with_infinity) {
  return finite(std::span<const nat>(members.begin(), members.size()), with_infinity);
}

IndexSet IndexSet::singleton(ExtNat n) {
  if (n.is_infinite()) return finite({}, true);
  return finite({n.value()});
}

IndexSet IndexSet::interval(nat lo, ExtNat hi) {
  if (hi.is_infinite()) {
    if (lo > kMaxPeriod) throw std::length_error("interval start too large");
    IndexSet s;
    s.bits_.assign(lo, false);
    s.tail_ = {true};
    s.infinity_ = true;
    s.canonicalize();
    return s;
  }
  if (hi.value() < lo) return empty();
  if (hi.value() >= kMaxPeriod) throw std::length_error("interval end too large");
  IndexSet s;
  s.bits_.assign(hi.value() + 1, false);
  for (nat n = lo; n <= hi.value(); ++n) s.bits_[n] = true;
  s.canonicalize();
  return s;
}

IndexSet IndexSet::periodic(nat start, nat period, std::span<const nat> residues,
                            bool with_infinity) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  if (period > kMaxPeriod || start > kMaxPeriod) throw std::length_error("period too large");
  IndexSet s;
  s.tail_.assign(period, false);
  for (nat r : residues) {
    if (r >= period) throw std::invalid_argument("residue out of range for period");
    s.tail_[r] = true;
  }
  s.bits_.assign(start, false);
  s.infinity_ = with_infinity;
  s.canonicalize();
  return s;
}

IndexSet IndexSet::periodic(nat start, nat period, std::initializer_list<nat> residues,
                            bool with_infinity) {
  return periodic(start, period, std::span<const nat>(residues.begin(), residues.size()),
                  with_infinity);
}

IndexSet IndexSet::from_parts(std::vector<bool> bits, nat period, std::span<const nat> residues,
                              bool with_infinity) {
  if (period == 0) throw std::invalid_argument("period must be positive");
  if (period > kMaxPeriod || bits.size() > kMaxPeriod) throw std::length_error("period too large");
  IndexSet s;
  s.bits_ = std::move(bits);
  s.tail_.assign(period, false);
  for (nat r : residues) {
    if (r >= period) throw std::invalid_argument("residue out of range for period");
    s.tail_[r] = true;
  }
  s.infinity_ = with_infinity;
  s.canonicalize();
  return s;
}

std::vector<IndexSet::nat> IndexSet::residues() const {
  std::vector<nat> out;
  for (nat r = 0; r < tail_.size(); ++r)
    if (tail_[r]) out.push_back(r);
  return out;
}

bool IndexSet::contains(nat n) const {
  if (n < bits_.size()) return bits_[n];
  return tail_[n % tail_.size()];
}

bool IndexSet::contains(ExtNat n) const {
  return n.is_infinite() ? infinity_ : contains(n.value());
}

bool IndexSet::tail_nonempty() const {
  return std::find(tail_.begin(), tail_.end(), true) != tail_.end();
}

bool IndexSet::tail_full() const {
  return std::find(tail_.begin(), tail_.end(), false) == tail_.end();
}

SizeClass IndexSet::classify() const {
  if (is_small()) return SizeClass::Small;
  if (is_cosmall()) return SizeClass::Cosmall;
  return SizeClass::BigNotCosmall;
}

std::optional<ExtNat> IndexSet::min() const {
  for (nat n = 0; n < bits_.size(); ++n)
    if (bits_[n]) return ExtNat(n);
  const nat p = tail_.size();
  for (nat n = bits_.size(); n < bits_.size() + p; ++n)
    if (contains(n)) return ExtNat(n);
  if (infinity_) return ExtNat::infinity();
  return std::nullopt;
}

std::optional<OmegaNat> IndexSet::sup() const {
  if (infinity_) return OmegaNat::infinity();
  if (tail_nonempty()) return OmegaNat::omega();
  for (nat n = bits_.size(); n-- > 0;)
    if (bits_[n]) return OmegaNat(n);
  return std::nullopt;
}

std::vector<IndexSet::nat> IndexSet::members_below(nat bound) const {
  std::vector<nat> out;
  for (nat n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

void IndexSet::canonicalize() {
  // Least period: it divides the current one.
  const nat p = tail_.size();
  for (nat d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (nat i = 0; i + d < p && ok; ++i) ok = tail_[i] == tail_[i + d];
    if (ok) {
      tail_.resize(d);
      break;
    }
  }
  // Least threshold: drop trailing prefix bits the tail already predicts.
  while (!bits_.empty()) {
    const nat n = bits_.size() - 1;
    if (bits_[n] != tail_[n % tail_.size()]) break;
    bits_.pop_back();
  }
}

template <class Op>
IndexSet IndexSet::combine(const IndexSet& a, const IndexSet& b, Op op) {
  const nat pa = a.tail_.size();
  const nat pb = b.tail_.size();
  const nat p = std::lcm(pa, pb);
  if (p > kMaxPeriod) throw std::length_error("combined period too large");
  const nat t = std::max(a.bits_.size(), b.bits_.size());
  IndexSet s;
  s.bits_.resize(t);
  for (nat n = 0; n < t; ++n) s.bits_[n] = op(a.contains(n), b.contains(n));
  s.tail_.resize(p);
  for (nat r = 0; r < p; ++r) s.tail_[r] = op(a.tail_[r % pa], b.tail_[r % pb]);
  s.infinity_ = op(a.infinity_, b.infinity_);
  s.canonicalize();
  return s;
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  return IndexSet::combine(a, b, [](bool x, bool y) { return x || y; });
}

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  return IndexSet::combine(a, b, [](bool x, bool y) { return x && y; });
}

IndexSet operator~(const IndexSet& a) {
  IndexSet s = a;
  s.bits_.flip();
  s.tail_.flip();
  s.infinity_ = !a.infinity_;
  return s;  // complementing preserves canonicity
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return (a & b) == a; }

namespace {

void flush_singletons(std::vector<std::string>& parts, std::vector<std::string>& pending) {
  if (pending.empty()) return;
  std::string s = "{";
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (i) s += ", ";
    s += pending[i];
  }
  s += "}";
  parts.push_back(std::move(s));
  pending.clear();
}

}  // namespace

std::string IndexSet::to_string(bool spell_full_interval) const {
  const nat t = bits_.size();
  const bool has_tail = tail_nonempty();
  const bool inf_in_tail = has_tail && infinity_;

  std::vector<std::string> parts;
  std::vector<std::string> pending;
  // Finite prefix as maximal runs; runs of three or more print as intervals.
  for (nat n = 0; n < t;) {
    if (!bits_[n]) {
      ++n;
      continue;
    }
    nat end = n;
    while (end + 1 < t && bits_[end + 1]) ++end;
    if (end - n >= 2) {
      flush_singletons(parts, pending);
      parts.push_back("[" + std::to_string(n) + "," + std::to_string(end) + "]");
    } else {
      for (nat k = n; k <= end; ++k) pending.push_back(std::to_string(k));
    }
    n = end + 1;
  }
  if (infinity_ && !inf_in_tail) pending.push_back("inf");
  flush_singletons(parts, pending);

  if (has_tail) {
    if (tail_full() && infinity_) {
      parts.push_back(t == 0 && !spell_full_interval ? "N" : "[" + std::to_string(t) + ",inf]");
    } else {
      std::ostringstream os;
      os << "per(" << t << "," << tail_.size() << ",{";
      bool first = true;
      for (nat r : residues()) {
        if (!first) os << ",";
        first = false;
        os << r;
      }
      os << "}";
      if (infinity_) os << ",inf";
      os << ")";
      parts.push_back(os.str());
    }
  }

  if (parts.empty()) return "{}";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " | " + parts[i];
  return out;
}

}  // namespace bousfield
