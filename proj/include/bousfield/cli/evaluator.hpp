#ifndef BOUSFIELD_CLI_EVALUATOR_HPP
#define BOUSFIELD_CLI_EVALUATOR_HPP

#include <string_view>
#include <variant>
#include <vector>

#include "bousfield/catalog.hpp"
#include "bousfield/cli/ast.hpp"
#include "bousfield/element.hpp"
#include "bousfield/index_set.hpp"
#include "bousfield/structure.hpp"

namespace bousfield::cli {

struct CatalogListing {
  std::vector<CatalogName> names;
  friend bool operator==(const CatalogListing&, const CatalogListing&) = default;
};

/// Result of comp() or reconstruct() when there is nothing to return.
struct NoneValue {
  friend bool operator==(NoneValue, NoneValue) = default;
};

using Value = std::variant<Element, IndexSet, bool, SigmaTriple, HeytingResult, Head, SizeClass,
                           CatalogListing, NoneValue>;

/// Strict bottom-up evaluation. Throws EvalError with the offset of the offending node.
Value evaluate(const Node& ast);

/// parse + evaluate.
Value evaluate(std::string_view input);

}  // namespace bousfield::cli

#endif
