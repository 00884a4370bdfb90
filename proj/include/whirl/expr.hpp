#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "whirl/rational.hpp"

namespace whirl {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// A tiny shared expression language used by both the statistic DSL and
// custom function-family constraints.
//
//   expr    := or
//   or      := and ('||' and)*
//   and     := cmp ('&&' cmp)*
//   cmp     := sum (('=='|'!='|'<='|'>='|'<'|'>') sum)?
//   sum     := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | '!' unary | primary
//   primary := integer | name | name '(' args ')' | '(' expr ')'
//
// Atoms (named calls and bare names) are resolved by the caller; everything
// else evaluates to an exact rational, with booleans as 0/1.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct Atom {
    std::string name;            // e.g. "chi", "eta", "F", "B", "f"
    std::vector<std::string> args;  // raw argument tokens
};

struct ExprNode {
    enum class Kind { constant, atom, unary, binary };
    Kind kind;
    Rational value;      // constant
    Atom atom;           // atom
    char op = 0;         // unary: '-' '!'; binary: + - * / = n l g L G a o
    ExprPtr lhs, rhs;
};

ExprPtr parse_expression(const std::string& text);

// Evaluates with the given atom resolver; comparisons yield 0/1.
Rational evaluate(const ExprPtr& e, const std::function<Rational(const Atom&)>& resolve);

// All atoms appearing in the expression, in source order.
std::vector<Atom> collect_atoms(const ExprPtr& e);

}  // namespace whirl
