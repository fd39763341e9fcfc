#pragma once

#include <string_view>

#include "algqe/formula.hpp"

namespace algqe {

// Grammar (both languages):
//   formula := 'exists' VAR '.' formula | 'forall' VAR '.' formula
//            | formula ('&&' | '||' | '->') formula | '!' formula
//            | '(' formula ')' | 'true' | 'false' | atom
//   atom    := term REL term
//   term    := term ('+'|'-') term | term '*' term | '-' term | 'conj(' term ')'
//            | VAR | INT
// Precedence: unary > * > +/- > comparisons > ! > && > || > ->, with -> right
// associative. The algebra language has REL in {=, <=, !=} and conj; the
// base-field language has REL in {=, <=, <, !=, >=, >}, rational numerals
// p/q, and no conj.
AlgFormula parse_alg_formula(std::string_view text);
AlgTerm parse_alg_term(std::string_view text);
RealFormula parse_real_formula(std::string_view text);
Poly parse_poly(std::string_view text);

}  // namespace algqe
