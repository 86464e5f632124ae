#pragma once

#include <string_view>

#include "pga/ast.hpp"
#include "pga/errors.hpp"

namespace pga {

/// Parses a program per the grammar:
///
///   program := stmt (";" stmt)* [";"]
///   stmt    := "skip"
///            | ident ":=" rhs
///            | "if" "(" guard ")" block "else" block
///            | "observe" "(" guard ")"
///   block   := "{" program "}"
///   rhs     := nat | ident | ident "+" nat
///            | "bernoulli" "(" prob ")"
///            | "geometric" "(" prob ")"
///   guard   := disj ; disj := conj ("||" conj)* ; conj := atom ("&&" atom)*
///   atom    := "!" atom | "(" guard ")" | "true" | ident cmp nat
///   cmp     := "=" | "!=" | "<" | "<=" | ">" | ">="
///   prob    := nat "/" nat | decimal literal in [0,1]
///
/// Comments run from '#' to end of line. Throws SyntaxError with source
/// location and the expected-token set, or SemanticError for out-of-range
/// probability literals.
Program parse(std::string_view source);

}  // namespace pga
