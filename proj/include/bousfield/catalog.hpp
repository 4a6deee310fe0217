#ifndef BOUSFIELD_CATALOG_HPP
#define BOUSFIELD_CATALOG_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bousfield/element.hpp"
#include "bousfield/ext_nat.hpp"

namespace bousfield {

/// Exact: the spectrum has exactly this Bousfield class. ModuloTC: the classes
/// agree after quotienting by the telescope-conjecture defect.
enum class Exactness { Exact, ModuloTC };

const char* to_string(Exactness e);

enum class ParamDomain {
  None,      // no parameter
  Finite,    // n in N
  Extended,  // q in N u {inf}
};

class CatalogError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

struct CatalogEntry {
  std::string name;
  ParamDomain domain = ParamDomain::None;
  Exactness exactness = Exactness::Exact;
  /// The identity this entry records, e.g. "KU = KO = k({0,1})".
  std::string equation;
  /// Name of the primary entry of the alias group (equal to `name` for primaries).
  std::string alias_of;
  std::function<Element(ExtNat)> construct;

  bool parametric() const { return domain != ParamDomain::None; }
  /// "F(n)" for parametric entries, the bare name otherwise.
  std::string pattern() const;
};

struct CatalogHit {
  Element element;
  Exactness exactness;
};

/// All entries, aliases included, sorted by name.
const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry* find_entry(std::string_view name);

/// Throws CatalogError on an unknown name, a missing or superfluous parameter, or a
/// parameter outside the entry's domain.
CatalogHit lookup(std::string_view name, std::optional<ExtNat> param = std::nullopt);

struct CatalogName {
  std::string name;
  std::string pattern;
  Exactness exactness;
  std::string equation;
  friend bool operator==(const CatalogName&, const CatalogName&) = default;
};

std::vector<CatalogName> list_names();

}  // namespace bousfield

#endif
