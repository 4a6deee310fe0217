#ifndef BOUSFIELD_CLI_AST_HPP
#define BOUSFIELD_CLI_AST_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bousfield/ext_nat.hpp"
#include "bousfield/ideals.hpp"
#include "bousfield/index_set.hpp"

namespace bousfield::cli {

/// An error tied to a byte offset of the input line.
class PositionedError : public std::runtime_error {
public:
  PositionedError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class SyntaxError : public PositionedError {
public:
  using PositionedError::PositionedError;
};

class EvalError : public PositionedError {
public:
  using PositionedError::PositionedError;
};

enum class Fn {
  Neg,
  Heyting,
  Comp,
  Idem,
  Bool,
  Sigma,
  Reconstruct,
  Proj,
  Theta,
  Sup,
  Tail,
  Head,
  Classify,
  Catalog,
};

const char* to_string(Fn f);

struct Node;
using NodePtr = std::unique_ptr<Node>;

/// A set literal is evaluated while parsing; only its value is kept.
struct SetLit {
  IndexSet value;
};

struct ElemLit {
  char kind;                // 't', 'j' or 'k'
  ExtNat q;                 // t only
  OmegaNat m;               // j only
  IndexSet tail;
  std::size_t tail_offset;  // for constraint diagnostics
};

struct CatalogRef {
  std::string name;
  std::optional<ExtNat> param;
};

struct QLit {
  std::optional<ExtNat> q;  // "none" is nullopt
};

struct MShapeLit {
  MShape shape;
};

enum class BinOpKind { Join, Smash };
enum class RelKind { Leq, Eq };

struct BinOp {
  BinOpKind op;
  NodePtr lhs;
  NodePtr rhs;
};

struct Rel {
  RelKind op;
  NodePtr lhs;
  NodePtr rhs;
};

struct Call {
  Fn fn;
  std::vector<NodePtr> args;
};

struct Node {
  std::size_t offset;
  std::variant<SetLit, ElemLit, CatalogRef, QLit, MShapeLit, BinOp, Rel, Call> v;
};

}  // namespace bousfield::cli

#endif
