#pragma once

#include <string>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// Element grammar:
//   expr   := term (('+'|'-') term)*
//   term   := (coeff '*')? factor ('*' factor)*
//   factor := ident ('^' int)? | '(' expr ')' | 'sqrt' '(' int ')'
//   coeff  := int ('/' int)?
// '*' is mandatory between factors; sqrt(d) is accepted only when the session
// field is Q(sqrt(d)). The result is normalized.
NcPoly parse_element(const std::string& src, const HopfPresentation& H);

// single monomial with coefficient 1 (e.g. "x^2*y")
Word parse_word(const std::string& src, const HopfPresentation& H);

// scalar syntax: "3", "-7/2", "1/2+3/2*sqrt(2)"
Scalar parse_scalar(const std::string& src, const FieldDesc& field);

}  // namespace hopf
