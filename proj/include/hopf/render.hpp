#pragma once

#include <string>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// "x^2*y*x^-1"; the unit word renders as "1"
std::string render_word(const Word& w, const HopfPresentation& H);

// terms in descending word order, e.g. "y*g + g^2 - g"; round-trips through
// parse_element
std::string render_element(const NcPoly& p, const HopfPresentation& H);

// "coef * w1 (x) w2" per term, joined with " + "
std::string render_tensor(const Tensor2& t, const HopfPresentation& H);
std::string render_tensor(const Tensor3& t, const HopfPresentation& H);

}  // namespace hopf
