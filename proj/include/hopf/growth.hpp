#pragma once

#include "hopf/echelon.hpp"
#include "hopf/hopf_algebra.hpp"

namespace hopf {

class DimensionCap : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

struct GrowthLimits {
    std::size_t basis_cap = 200000;
};

struct DimSequence {
    std::vector<std::size_t> dims;  // dim span(V^n) for n = 1..N
    bool truncated = false;         // cap hit; dims holds the sequence so far
    std::string generating_set;
};

// Exact dimensions of span(V^n), n = 1..N, by echelonized layer expansion.
// Requires 1 in span(V). On hitting the basis cap the sequence so far is
// returned with the truncation marker set.
DimSequence span_dimension_sequence(const HopfPresentation& H,
                                    const std::vector<NcPoly>& V, long N,
                                    Exec mode = default_exec(),
                                    const GrowthLimits& limits = {});

// default generating subspace: 1, every generator, inverses of invertibles
std::vector<NcPoly> standard_generating_set(const HopfPresentation& H);

struct GkEstimate {
    bool superpolynomial = false;
    int degree = 0;          // meaningful when !superpolynomial
    double log_ratio = 0.0;  // log2(d_{2m} / d_m) at the largest usable m
};

// Doubling-ratio growth-degree estimate: superpolynomial when the top-quarter
// successive ratios all reach 1.5, otherwise round(log2(d_{2m}/d_m)).
GkEstimate gk_estimate(const DimSequence& seq);

// Word-metric ball sizes |B(n)|, n = 1..N, for a group-algebra preset, by
// breadth-first search over normal forms in the symmetric generating set.
DimSequence ball_growth(const HopfPresentation& H, long N,
                        Exec mode = default_exec(), const GrowthLimits& limits = {});

struct ClosureReport {
    std::vector<std::string> violations;
    std::size_t span_dimension = 0;
    std::size_t elements_checked = 0;
    bool pass() const { return violations.empty(); }
};

// Spans all products of the given elements and their antipodes up to
// degree_cap and checks, within that span: Delta lands in span (x) span and S
// lands in span. Violations are data, not errors.
ClosureReport verify_hopf_subalgebra(const HopfPresentation& H,
                                     const std::vector<NcPoly>& gens, long degree_cap,
                                     Exec mode = default_exec(),
                                     const GrowthLimits& limits = {});

}  // namespace hopf
