#ifndef BOUSFIELD_CLI_PARSER_HPP
#define BOUSFIELD_CLI_PARSER_HPP

#include <string_view>

#include "bousfield/cli/ast.hpp"

namespace bousfield::cli {

/**
 * Parses one expression.
 *
 *   expr  := sum (("<=" | "==") sum)?
 *   sum   := prod ("+" prod)*                       + is join
 *   prod  := atom ("*" atom)*                       * is smash
 *   atom  := "t(" nat_inf "," set ")" | "j(" nat_w "," set ")" | "k(" set ")"
 *          | "@" NAME ("(" nat_inf ")")? | FN "(" args ")" | "(" expr ")"
 *   set   := term ("|" term)*;  term := unary ("&" unary)*;  unary := "~" unary | base
 *   base  := "{" items? "}" | "[" nat_inf "," nat_inf "]" | "N"
 *          | "per(" start "," period "," "{" residues "}" ("," "inf")? ")" | "(" set ")"
 *
 * N is the whole of N u {inf}; [a,inf] contains inf. Throws SyntaxError carrying
 * the byte offset of the problem, including for unknown functions and catalog names.
 */
NodePtr parse(std::string_view input);

}  // namespace bousfield::cli

#endif
