#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/parallel.hpp"
#include "hopf/rewrite.hpp"
#include "hopf/rng.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

// Base field of a presentation: Q, or Q(sqrt(d)).
struct FieldDesc {
    long quad_d = 0;  // 0 => Q
    bool is_rational() const { return quad_d == 0; }
    bool admits(const Scalar& s) const {
        return s.is_rational() || s.quad_d() == quad_d;
    }
    std::string str() const {
        return quad_d == 0 ? "Q" : "Q(sqrt(" + std::to_string(quad_d) + "))";
    }
};

enum class GenKind {
    group_like,       // Delta(g) = g (x) g
    skew_primitive,   // Delta(y) = y (x) 1 + pair (x) y
};

struct HopfGenerator {
    std::string name;
    bool invertible = false;
    GenKind kind = GenKind::group_like;
    Word pair;  // skew-primitive only; a word in invertible group-like generators
};

// Finitely presented Hopf algebra: generator alphabet with coalgebra tags,
// oriented rewrite rules, and the base field. Immutable after construction.
class HopfPresentation {
public:
    HopfPresentation(std::string name, std::vector<HopfGenerator> gens,
                     RewriteSystem rw, FieldDesc field);

    const std::string& name() const { return name_; }
    const std::vector<HopfGenerator>& gens() const { return gens_; }
    const HopfGenerator& gen(std::size_t i) const { return gens_[i]; }
    std::size_t gen_count() const { return gens_.size(); }
    const RewriteSystem& rw() const { return rw_; }
    const WordOrder& order() const { return rw_.order(); }
    const FieldDesc& field() const { return field_; }

    std::optional<std::uint32_t> gen_index(const std::string& name) const;

    // atoms of skew-primitive generators (the "y"-letters)
    const std::vector<bool>& skew_flags() const { return skew_flags_; }
    long y_degree(const Word& w) const { return w.count_where(skew_flags_); }
    long y_degree(const NcPoly& p) const { return p.max_gen_count(skew_flags_); }
    bool has_skew_gen(const Word& w) const { return y_degree(w) > 0; }

    // every atom is a group-like generator
    bool is_group_like_word(const Word& w) const;

    NcPoly nf(const NcPoly& p) const { return normal_form(p, rw_); }
    NcPoly nf(const Word& w) const { return normal_form(w, rw_); }
    NcPoly mul(const NcPoly& p, const NcPoly& q) const { return poly_mul(p, q, rw_); }

private:
    std::string name_;
    std::vector<HopfGenerator> gens_;
    RewriteSystem rw_;
    FieldDesc field_;
    std::vector<bool> skew_flags_;
};

// --- structure maps ------------------------------------------------------

// Algebra-map extension of the generator coproducts; components normalized.
Tensor2 coproduct(const Word& w, const HopfPresentation& H);
Tensor2 coproduct(const NcPoly& p, const HopfPresentation& H);

Scalar counit(const Word& w, const HopfPresentation& H);
Scalar counit(const NcPoly& p, const HopfPresentation& H);

// Anti-multiplicative extension of S(g) = g^-1, S(y) = -pair^-1 * y.
NcPoly antipode(const Word& w, const HopfPresentation& H);
NcPoly antipode(const NcPoly& p, const HopfPresentation& H);

Tensor3 coproduct_left(const Tensor2& t, const HopfPresentation& H);   // (Delta (x) id)
Tensor3 coproduct_right(const Tensor2& t, const HopfPresentation& H);  // (id (x) Delta)

// --- axiom verification ---------------------------------------------------

enum class AxiomCheck { coassociativity, counit, antipode, relations };

struct AxiomViolation {
    AxiomCheck check;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::size_t samples_checked = 0;
    bool pass() const { return violations.empty(); }
};

// Uniform word of bounded degree, normalized; coefficients for random
// elements come from {-2,-1,1,2}.
Word random_irreducible_word(const HopfPresentation& H, long max_degree, Rng& rng);
NcPoly random_element(const HopfPresentation& H, long max_degree, Rng& rng);

// Exact verification of (a) coassociativity, (b) counit, (c) antipode on all
// generators plus `trials` random elements of degree <= sample_degree, and
// (d) well-definedness of every rewrite rule under Delta, epsilon and S.
AxiomReport hopf_axiom_report(const HopfPresentation& H, long sample_degree,
                              std::size_t trials, std::uint64_t seed = 0,
                              Exec mode = default_exec());

// --- gradings -------------------------------------------------------------

// Integer-vector weights per generator; inverted letters contribute the
// negated weight.
struct Grading {
    std::vector<std::vector<long>> weight;  // weight[gen] = vector
    std::size_t dims() const { return weight.empty() ? 0 : weight.front().size(); }
    std::vector<long> of(const Word& w) const;
};

struct GradingReport {
    std::vector<std::string> violations;
    std::size_t monomials_checked = 0;
    bool pass() const { return violations.empty(); }
};

// Checks rule homogeneity, Delta weight additivity on random monomials, and
// vanishing of the counit in nonzero weight.
GradingReport grading_check(const HopfPresentation& H, const Grading& g,
                            std::size_t trials, long max_degree = 4,
                            std::uint64_t seed = 0);

// --- cobar differentials ---------------------------------------------------

Tensor2 cobar_d1(const NcPoly& c, const HopfPresentation& H);
Tensor3 cobar_d2(const Tensor2& u, const HopfPresentation& H);

}  // namespace hopf
