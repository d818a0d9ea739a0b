#include "hopf/growth.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hopf {

std::vector<NcPoly> standard_generating_set(const HopfPresentation& H) {
    std::vector<NcPoly> v{NcPoly::one()};
    for (std::uint32_t g = 0; g < H.gen_count(); ++g) {
        v.push_back(H.nf(Word::gen(g)));
        if (H.gen(g).invertible) v.push_back(H.nf(Word::gen(g, -1)));
    }
    return v;
}

namespace {

struct SpanGrowth {
    SpanEchelon echelon;
    std::vector<NcPoly> frontier;  // entries added in the last layer

    explicit SpanGrowth(const WordOrder& order) : echelon(order) {}

    // expands one layer: frontier x V products, then deterministic commits
    void step(const HopfPresentation& H, const std::vector<NcPoly>& V, Exec mode) {
        const std::size_t nf = frontier.size(), nv = V.size();
        const auto products =
            parallel_map<NcPoly>(nf * nv, mode, [&](std::size_t k) {
                return H.mul(frontier[k / nv], V[k % nv]);
            });
        std::vector<NcPoly> next;
        for (const NcPoly& p : products) {
            const NcPoly r = echelon.reduce(p);
            if (r.is_zero()) continue;
            next.push_back(r.monic(H.order()));
            echelon.insert(next.back());
        }
        frontier = std::move(next);
    }
};

}  // namespace

DimSequence span_dimension_sequence(const HopfPresentation& H,
                                    const std::vector<NcPoly>& V, long N, Exec mode,
                                    const GrowthLimits& limits) {
    if (N < 1) throw InvalidParameter("N must be >= 1");
    if (V.empty()) throw InvalidParameter("empty generating set");

    std::vector<NcPoly> vnf;
    for (const auto& p : V) vnf.push_back(H.nf(p));

    SpanGrowth grow(H.order());
    for (const auto& p : vnf) {
        const NcPoly r = grow.echelon.reduce(p);
        if (r.is_zero()) continue;
        grow.frontier.push_back(r.monic(H.order()));
        grow.echelon.insert(grow.frontier.back());
    }
    if (!grow.echelon.contains(NcPoly::one()))
        throw InvalidParameter("span_dimension_sequence requires 1 in span(V)");

    DimSequence seq;
    seq.dims.push_back(grow.echelon.size());
    for (long n = 2; n <= N; ++n) {
        if (grow.echelon.size() > limits.basis_cap) {
            seq.truncated = true;
            return seq;
        }
        grow.step(H, vnf, mode);
        seq.dims.push_back(grow.echelon.size());
    }
    return seq;
}

GkEstimate gk_estimate(const DimSequence& seq) {
    const auto& d = seq.dims;
    const std::size_t N = d.size();
    if (N < 8)
        throw InsufficientData("gk_estimate needs a dimension sequence of length >= 8");

    GkEstimate est;
    // superpolynomial test on the top quarter of successive ratios
    const std::size_t q = std::max<std::size_t>(1, N / 4);
    bool all_fast = true;
    for (std::size_t n = N - q; n < N; ++n) {
        // d[n] / d[n-1] >= 3/2  <=>  2 d[n] >= 3 d[n-1]
        if (2 * d[n] < 3 * d[n - 1]) {
            all_fast = false;
            break;
        }
    }
    const std::size_t m = N / 2;
    est.log_ratio = std::log2(static_cast<double>(d[2 * m - 1]) / static_cast<double>(d[m - 1]));
    if (all_fast) {
        est.superpolynomial = true;
        return est;
    }
    est.degree = static_cast<int>(std::llround(est.log_ratio));
    return est;
}

DimSequence ball_growth(const HopfPresentation& H, long N, Exec mode,
                        const GrowthLimits& limits) {
    if (N < 1) throw InvalidParameter("N must be >= 1");
    for (std::uint32_t g = 0; g < H.gen_count(); ++g)
        if (H.gen(g).kind != GenKind::group_like)
            throw InvalidParameter("ball_growth requires a group-algebra preset");

    std::vector<Word> sym;
    for (std::uint32_t g = 0; g < H.gen_count(); ++g) {
        sym.push_back(Word::gen(g));
        sym.push_back(Word::gen(g, -1));
    }

    std::set<Word> ball{Word::one()};
    std::vector<Word> frontier{Word::one()};
    DimSequence seq;
    seq.generating_set = "symmetric generators of " + H.name();
    for (long n = 1; n <= N; ++n) {
        const std::size_t nf = frontier.size(), ns = sym.size();
        const auto products = parallel_map<Word>(nf * ns, mode, [&](std::size_t k) {
            const NcPoly p = H.nf(word_mul(frontier[k / ns], sym[k % ns]));
            const auto mono = p.as_unit_monomial();
            if (!mono)
                throw InvalidParameter("product is not a single group element; "
                                       "not a group algebra");
            return *mono;
        });
        std::vector<Word> next;
        for (const Word& w : products)
            if (ball.insert(w).second) next.push_back(w);
        frontier = std::move(next);
        seq.dims.push_back(ball.size());
        if (ball.size() > limits.basis_cap) {
            seq.truncated = true;
            return seq;
        }
    }
    return seq;
}

ClosureReport verify_hopf_subalgebra(const HopfPresentation& H,
                                     const std::vector<NcPoly>& gens, long degree_cap,
                                     Exec mode, const GrowthLimits& limits) {
    if (gens.empty()) throw InvalidParameter("verify_hopf_subalgebra requires generators");
    if (degree_cap < 1) throw InvalidParameter("degree_cap must be >= 1");

    std::vector<NcPoly> V{NcPoly::one()};
    for (const auto& g : gens) {
        V.push_back(H.nf(g));
        V.push_back(antipode(V.back(), H));
    }

    SpanGrowth grow(H.order());
    for (const auto& p : V) {
        const NcPoly r = grow.echelon.reduce(p);
        if (r.is_zero()) continue;
        grow.frontier.push_back(r.monic(H.order()));
        grow.echelon.insert(grow.frontier.back());
    }
    for (long n = 2; n <= degree_cap; ++n) {
        grow.step(H, V, mode);
        if (grow.echelon.size() > limits.basis_cap)
            throw DimensionCap("subalgebra span exceeded the basis cap");
    }

    const auto& basis = grow.echelon.entries();
    ClosureReport report;
    report.span_dimension = basis.size();
    report.elements_checked = basis.size();

    std::vector<std::vector<std::string>> issues(basis.size());
    parallel_for(basis.size(), mode, [&](std::size_t i) {
        const NcPoly& b = basis[i];
        const Tensor2 d = coproduct(b, H);
        // span (x) span = ker(rho (x) id) `intersect` ker(id (x) rho), where
        // rho is the reduction remainder with kernel exactly the span
        Tensor2 left, right;
        for (const auto& [k, c] : d.terms()) {
            for (const auto& [w, rc] : grow.echelon.reduce(NcPoly(Scalar(1), k[0])).terms())
                left.add_term({w, k[1]}, c * rc);
            for (const auto& [w, rc] : grow.echelon.reduce(NcPoly(Scalar(1), k[1])).terms())
                right.add_term({k[0], w}, c * rc);
        }
        if (!left.is_zero() || !right.is_zero())
            issues[i].push_back("Delta of basis element #" + std::to_string(i) +
                                " leaves span (x) span");
        if (!grow.echelon.reduce(antipode(b, H)).is_zero())
            issues[i].push_back("antipode of basis element #" + std::to_string(i) +
                                " leaves the span");
    });
    for (auto& v : issues)
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    return report;
}

}  // namespace hopf
