#include "bousfield/element.hpp"

#include <algorithm>

namespace bousfield {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string Head::to_string() const {
  switch (kind_) {
    case Kind::T: return "t(" + index_.to_string() + ")";
    case Kind::J: return "j(" + index_.to_string() + ")";
    case Kind::K: return "k";
  }
  return "?";
}

Element Element::t(ExtNat q, IndexSet tail) {
  if (!tail.is_cosmall())
    throw ConstraintError("t(q,T) needs a cosmall T, got " + tail.to_string());
  return Element(TPart{q, std::move(tail)});
}

Element Element::j(BotOmegaNat m, IndexSet tail) {
  if (!m || tail.is_big()) return k(std::move(tail));
  return Element(JPart{*m, std::move(tail)});
}

Element Element::k(IndexSet tail) { return Element(KPart{std::move(tail)}); }

const IndexSet& Element::tail() const {
  return std::visit([](const auto& p) -> const IndexSet& { return p.tail; }, rep_);
}

Head Element::head() const {
  return std::visit(overloaded{
                        [](const TPart& p) { return Head::t(p.q); },
                        [](const JPart& p) { return Head::j(p.m); },
                        [](const KPart&) { return Head::k(); },
                    },
                    rep_);
}

std::string Element::to_string() const {
  return std::visit(overloaded{
                        [](const TPart& p) {
                          return "t(" + p.q.to_string() + ", " + p.tail.to_string() + ")";
                        },
                        [](const JPart& p) {
                          return "j(" + p.m.to_string() + ", " + p.tail.to_string() + ")";
                        },
                        [](const KPart& p) { return "k(" + p.tail.to_string() + ")"; },
                    },
                    rep_);
}

Element join(const Element& x, const Element& y) {
  return std::visit(
      overloaded{
          [](const TPart& a, const TPart& b) {
            return Element::t(std::min(a.q, b.q), a.tail | b.tail);
          },
          [](const TPart& a, const JPart& b) { return Element::t(a.q, a.tail | b.tail); },
          [](const TPart& a, const KPart& b) { return Element::t(a.q, a.tail | b.tail); },
          [](const JPart& a, const TPart& b) { return Element::t(b.q, a.tail | b.tail); },
          [](const KPart& a, const TPart& b) { return Element::t(b.q, a.tail | b.tail); },
          [](const JPart& a, const JPart& b) {
            return Element::j(std::max(a.m, b.m), a.tail | b.tail);
          },
          // j(m, S u U) when U is small and k(S u U) when U is big; the
          // normalising constructor makes exactly that split.
          [](const JPart& a, const KPart& b) { return Element::j(a.m, a.tail | b.tail); },
          [](const KPart& a, const JPart& b) { return Element::j(b.m, a.tail | b.tail); },
          [](const KPart& a, const KPart& b) { return Element::k(a.tail | b.tail); },
      },
      x.rep(), y.rep());
}

namespace {

Element smash_tj(const TPart& a, const JPart& b) {
  if (OmegaNat::from(a.q) <= b.m) return Element::j(b.m, a.tail & b.tail);
  return Element::k(a.tail & b.tail);
}

}  // namespace

Element smash(const Element& x, const Element& y) {
  return std::visit(
      overloaded{
          [](const TPart& a, const TPart& b) {
            return Element::t(std::max(a.q, b.q), a.tail & b.tail);
          },
          [](const TPart& a, const JPart& b) { return smash_tj(a, b); },
          [](const JPart& a, const TPart& b) { return smash_tj(b, a); },
          [](const auto& a, const auto& b) { return Element::k(a.tail & b.tail); },
      },
      x.rep(), y.rep());
}

bool leq(const Element& x, const Element& y) {
  return std::visit(
      overloaded{
          [](const TPart& a, const TPart& b) { return is_subset(a.tail, b.tail) && a.q >= b.q; },
          [](const TPart&, const JPart&) { return false; },
          [](const TPart&, const KPart&) { return false; },
          [](const JPart& a, const TPart& b) { return is_subset(a.tail, b.tail); },
          [](const JPart& a, const JPart& b) { return is_subset(a.tail, b.tail) && a.m <= b.m; },
          [](const JPart& a, const KPart& b) {
            return is_subset(a.tail, b.tail) && b.tail.is_big();
          },
          [](const KPart& a, const auto& b) { return is_subset(a.tail, b.tail); },
      },
      x.rep(), y.rep());
}

}  // namespace bousfield
