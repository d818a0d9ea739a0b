#pragma once

#include <string>

#include "hopf/presets.hpp"

namespace hopf {

// Presentation file schema (JSON):
// {
//   "field": "Q" | {"quad": d},
//   "generators": [{"name": "g", "kind": "grouplike"},
//                  {"name": "y", "kind": "skewprimitive", "pair": "g^2"}],
//   "rules": [{"lhs": "g*y", "rhs": "2*y*g"}],
//   "precedence": ["y", "g"],      // optional, defaults to declaration order
//   "weights": {"y": 2}            // optional, defaults to 1
// }
HopfPresentation load_presentation_json(const std::string& text,
                                        const std::string& name = "file");
HopfPresentation load_presentation_file(const std::string& path);
std::string presentation_to_json(const HopfPresentation& H);

// Lie algebra file schema (JSON):
// {"dim": 3, "names": ["h","e","f"],
//  "brackets": [[0, 1, ["0","2","0"]], ...]}   // [i, j, coeff-vector]
LieAlgebra load_lie_json(const std::string& text);
LieAlgebra load_lie_file(const std::string& path);

// Preset selector strings: F:t=1, A:b=1,xi=2, C:m=2, E:n=1, Zn:n=2, heis,
// zxz2, env:<file>; anything else is treated as a presentation file path.
HopfPresentation resolve_algebra(const std::string& selector);

}  // namespace hopf
