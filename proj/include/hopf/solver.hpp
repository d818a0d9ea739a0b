#pragma once

#include <optional>

#include "hopf/echelon.hpp"
#include "hopf/presets.hpp"

namespace hopf {

// --- multi-index combinatorics ---------------------------------------------

using MultiIndex = std::vector<long>;

// alpha = (i_1, ..., i_{n+1}) names the basis monomial
// x^{i_1} y x^{i_2} y ... y x^{i_{n+1}} of F(t)
Word f_monomial(const MultiIndex& alpha);

// sum of the first n entries
long t_sum(const MultiIndex& alpha);

// sigma(i_1,...,i_{n+1}) = (-i_{n+1}-t, -i_n-t, ..., -i_2-t, -i_1)
MultiIndex sigma_map(const MultiIndex& alpha, long t);
// tau(i_1,...,i_{n+1}) = (i_1-b, i_2, ..., i_{n+1})
MultiIndex tau_map(const MultiIndex& alpha, long b);
MultiIndex tau_inv_map(const MultiIndex& alpha, long b);

// S(M_alpha) == (-1)^n M_{sigma alpha}, checked by independent
// anti-multiplicative expansion in F(t)
bool antipode_monomial_identity(const MultiIndex& alpha, const HopfPresentation& Ft);
bool antipode_monomial_identity(const MultiIndex& alpha, long t);

struct OrbitReport {
    bool closed_form_matches = true;
    bool images_distinct = true;
    std::vector<MultiIndex> even_images;  // (tau^-1 sigma)^{2s} beta for s = 0..s_max
    bool pass() const { return closed_form_matches && images_distinct; }
};

// Iterates tau^-1 sigma explicitly and confirms the closed form
// (l_1 + s(n-1)t, l_2, ..., l_n, l_{n+1} - s(n-1)t) plus pairwise
// distinctness of the 2s-step images. Requires t != 0 and n >= 2.
OrbitReport orbit_check(const MultiIndex& beta, long t, long s_max);

// --- bounded-window linear solvers -----------------------------------------

struct Window {
    long max_y_degree = 1;       // total skew-primitive letter count
    long exponent_bound = 0;     // each invertible-generator run in [-E, E]
    std::size_t candidate_cap = 20000;
};

class WindowTooLarge : public Error {
public:
    using Error::Error;
};

// all irreducible words within the window, ascending in the word order
std::vector<Word> window_words(const HopfPresentation& H, const Window& w);

struct SkewPrimSpace {
    Word u, v;
    Window window;
    std::vector<NcPoly> basis;  // monic, leading words strictly increasing
    std::size_t dimension() const { return basis.size(); }
};

// Exact solution space of Delta(f) = f (x) u + v (x) f over the window,
// echelonized by leading word. Every returned element is re-verified against
// the defining tensor equation.
SkewPrimSpace skew_primitive_space(const HopfPresentation& H, const Word& u,
                                   const Word& v, const Window& w,
                                   Exec mode = default_exec());

// group-like elements supported on window words (exactly the group-like words)
std::vector<Word> group_like_space(const HopfPresentation& H, const Window& w,
                                   Exec mode = default_exec());

// --- classification of skew-primitives in F(t), t != 0 ---------------------

class NotSkewPrimitive : public Error {
public:
    using Error::Error;
};

// Would falsify the classification theorem; must never fire on verified input.
class ClassificationFailure : public Error {
public:
    using Error::Error;
};

struct SkewPrimClassification {
    long y_degree = 0;          // 0 or 1
    Scalar lambda = Scalar(0);
    long a = 0;                 // exponent offset
    long m = 0;                 // y_degree 0: f = lambda x^a (x^m - 1)
    NcPoly homogeneous_part;    // y_degree 1: f = part + lambda x^a (x^t - 1)
};

SkewPrimClassification classify_skew_primitive(const HopfPresentation& Ft,
                                               const NcPoly& f);
// rebuilds f from its classification (exact round-trip)
NcPoly reconstruct_skew_primitive(const SkewPrimClassification& c, long t);

// --- conjugate relations and the GK-2 subalgebra data ----------------------

class NoRelation : public Error {
public:
    using Error::Error;
};

class DegenerateF : public Error {
public:
    using Error::Error;
};

struct ConjugateRelation {
    std::vector<Scalar> coeffs;  // a_0 ... a_n, a_0 != 0
    Scalar lambda = Scalar(0);   // coefficient of g^b - 1
    long b = 0;                  // y is (1, g^b)-primitive
    long n() const { return static_cast<long>(coeffs.size()) - 1; }
};

// First linear dependence a_0 y + a_1 g y g^-1 + ... + a_n g^n y g^-n
// + lambda (g^b - 1) = 0 with a_0 != 0 and minimal n, scanning up to cap
// conjugates; nullopt when independent throughout.
std::optional<ConjugateRelation> find_conjugate_relation(const HopfPresentation& H,
                                                         const Word& g, const NcPoly& y,
                                                         long cap = 8);

struct SubalgebraData {
    NcPoly f;       // monic combination of conjugates, in K_1 \ K_0
    Scalar xi;
    Scalar beta;    // g f = xi f g + beta g (g^b - 1), verified exactly
    long b = 0;
    ConjugateRelation relation;
};

SubalgebraData find_subalgebra_data(const HopfPresentation& H, const Word& g,
                                    const NcPoly& y, long cap = 8);

}  // namespace hopf
