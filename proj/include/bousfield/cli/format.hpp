#ifndef BOUSFIELD_CLI_FORMAT_HPP
#define BOUSFIELD_CLI_FORMAT_HPP

#include <string>

#include "bousfield/cli/evaluator.hpp"

namespace bousfield::cli {

enum class Mode { Text, Json };

/// Text output re-parses to the same value for elements and sets. Json is the
/// compact wire form.
std::string format(const Value& v, Mode mode);

/// "error at offset 6: expected ')'" followed by the input and a caret line.
std::string format_error(const PositionedError& e, std::string_view input);

}  // namespace bousfield::cli

#endif
