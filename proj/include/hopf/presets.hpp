#pragma once

#include <optional>

#include "hopf/hopf_algebra.hpp"
#include "hopf/lie.hpp"

namespace hopf {

// Laurent Hopf algebra on x^{+-1} and a (1, x^t)-primitive y, no relations.
HopfPresentation preset_F(long t);
// g y = xi y g, y (1, g^b)-primitive
HopfPresentation preset_A(long b, const Scalar& xi);
// g y = y g + g^m - g, y (1, g^{m-1})-primitive
HopfPresentation preset_C(long m);
// commuting x_0..x_n, y x_i = -x_i y, y^2 = x_0^2 - 1, y (1, x_0)-primitive
HopfPresentation preset_E(long n);
// group algebra of Z^n
HopfPresentation preset_group_z(long n);
// group algebra of the discrete Heisenberg group, yx = xy z^-1 with z central
HopfPresentation preset_heisenberg();
// group algebra of Z x Z/2: invertible x, u with u^2 = 1
HopfPresentation preset_z_cross_z2();
// enveloping algebra with PBW rewrite rules; L must satisfy Jacobi
HopfPresentation preset_env(const LieAlgebra& L);

struct PresetId {
    enum class Tag { F, A, C, E, GroupZ, Heisenberg, ZxZ2, Env };
    Tag tag;
    long t = 0;                    // F
    long b = 0;                    // A
    Scalar xi = Scalar(1);         // A
    long m = 0;                    // C
    long n = 0;                    // E, GroupZ
    std::optional<LieAlgebra> lie; // Env

    std::string label() const;
};

HopfPresentation build(const PresetId& id);

// The unique pair of group-like words (u, v) with
// Delta(p) = p (x) u + v (x) p, when p is skew-primitive.
std::optional<std::pair<Word, Word>> is_skew_primitive(const NcPoly& p,
                                                       const HopfPresentation& H);

}  // namespace hopf
