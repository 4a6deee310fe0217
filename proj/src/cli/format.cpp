#include "bousfield/cli/format.hpp"

#include <algorithm>
#include <sstream>

#include "bousfield/wire.hpp"

namespace bousfield::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string listing_text(const CatalogListing& l) {
  std::size_t width = 0;
  for (const CatalogName& n : l.names) width = std::max(width, n.pattern.size());
  std::ostringstream os;
  for (std::size_t i = 0; i < l.names.size(); ++i) {
    const CatalogName& n = l.names[i];
    if (i > 0) os << '\n';
    os << '@' << n.pattern << std::string(width - n.pattern.size() + 2, ' ') << n.equation;
    if (n.exactness != Exactness::Exact) os << "  (" << to_string(n.exactness) << ')';
  }
  return os.str();
}

std::string text(const Value& v) {
  return std::visit(
      overloaded{
          [](const Element& x) { return x.to_string(); },
          [](const IndexSet& s) { return s.to_string(); },
          [](bool b) { return std::string(b ? "true" : "false"); },
          [](const SigmaTriple& s) { return s.to_string(); },
          [](const HeytingResult& h) {
            return h.element.to_string() + (h.strong ? "  (strong)" : "  (not strong)");
          },
          [](const Head& h) { return h.to_string(); },
          [](SizeClass c) { return std::string(to_string(c)); },
          [](const CatalogListing& l) { return listing_text(l); },
          [](NoneValue) { return std::string("none"); },
      },
      v);
}

wire::Json json(const Value& v) {
  return std::visit(
      overloaded{
          [](const Element& x) { return wire::encode(x); },
          [](const IndexSet& s) { return wire::encode(s); },
          [](bool b) { return wire::Json(b); },
          [](const SigmaTriple& s) { return wire::encode(s); },
          [](const HeytingResult& h) { return wire::encode(h); },
          [](const Head& h) { return wire::encode(h); },
          [](SizeClass c) { return wire::Json(to_string(c)); },
          [](const CatalogListing&) { return wire::encode_catalog(); },
          [](NoneValue) { return wire::Json(nullptr); },
      },
      v);
}

}  // namespace

std::string format(const Value& v, Mode mode) {
  return mode == Mode::Text ? text(v) : json(v).dump();
}

std::string format_error(const PositionedError& e, std::string_view input) {
  std::ostringstream os;
  os << "error at offset " << e.offset() << ": " << e.what() << '\n'
     << "  " << input << '\n'
     << "  " << std::string(std::min(e.offset(), input.size()), ' ') << '^';
  return os.str();
}

}  // namespace bousfield::cli
