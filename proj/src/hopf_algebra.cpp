#include "hopf/hopf_algebra.hpp"

#include <algorithm>
#include <set>

namespace hopf {

HopfPresentation::HopfPresentation(std::string name, std::vector<HopfGenerator> gens,
                                   RewriteSystem rw, FieldDesc field)
    : name_(std::move(name)), gens_(std::move(gens)), rw_(std::move(rw)), field_(field) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (!seen.insert(g.name).second)
            throw InvalidParameter("duplicate generator name: " + g.name);
        if (g.kind == GenKind::group_like && !g.invertible)
            throw InvalidParameter("group-like generator must be invertible: " + g.name);
        if (g.kind == GenKind::skew_primitive && g.invertible)
            throw InvalidParameter("skew-primitive generator must not be invertible: " + g.name);
    }
    for (const auto& g : gens_) {
        if (g.kind != GenKind::skew_primitive) continue;
        for (const Atom& a : g.pair.atoms()) {
            if (a.gen >= gens_.size() || gens_[a.gen].kind != GenKind::group_like ||
                !gens_[a.gen].invertible)
                throw InvalidParameter("pair word of " + g.name +
                                       " must consist of invertible group-like generators");
        }
    }
    skew_flags_.resize(gens_.size(), false);
    for (std::size_t i = 0; i < gens_.size(); ++i)
        skew_flags_[i] = gens_[i].kind == GenKind::skew_primitive;
    for (const auto& rule : rw_.rules()) {
        auto check_word = [&](const Word& w) {
            for (const Atom& a : w.atoms()) {
                if (a.gen >= gens_.size()) throw InvalidParameter("rule uses unknown generator");
                if (a.sign < 0 && !gens_[a.gen].invertible)
                    throw NegativePower("negative power of non-invertible generator in rule");
            }
        };
        check_word(rule.lhs);
        for (const auto& [w, c] : rule.rhs.terms()) {
            check_word(w);
            if (!field_.admits(c))
                throw FieldMismatch("rule coefficient outside the session field");
        }
    }
}

std::optional<std::uint32_t> HopfPresentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

bool HopfPresentation::is_group_like_word(const Word& w) const {
    for (const Atom& a : w.atoms())
        if (gens_[a.gen].kind != GenKind::group_like) return false;
    return true;
}

namespace {

// coproduct of a single atom
Tensor2 atom_coproduct(const Atom& a, const HopfPresentation& H) {
    Tensor2 t;
    const HopfGenerator& g = H.gen(a.gen);
    if (g.kind == GenKind::group_like) {
        const Word w = Word::gen(a.gen, a.sign);
        t.add_term({w, w}, Scalar(1));
    } else {
        // Delta(y) = y (x) 1 + pair (x) y
        t.add_term({Word::gen(a.gen), Word::one()}, Scalar(1));
        t.add_term({g.pair, Word::gen(a.gen)}, Scalar(1));
    }
    return t;
}

Tensor2 tensor2_mul_raw(const Tensor2& s, const Tensor2& t) {
    Tensor2 r;
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms())
            r.add_term({word_mul(ks[0], kt[0]), word_mul(ks[1], kt[1])}, cs * ct);
    return r;
}

Tensor2 normalize(const Tensor2& t, const HopfPresentation& H) {
    Tensor2 r;
    for (const auto& [k, c] : t.terms()) {
        const NcPoly p0 = H.nf(k[0]);
        const NcPoly p1 = H.nf(k[1]);
        for (const auto& [w0, c0] : p0.terms())
            for (const auto& [w1, c1] : p1.terms()) r.add_term({w0, w1}, c * c0 * c1);
    }
    return r;
}

}  // namespace

Tensor2 coproduct(const Word& w, const HopfPresentation& H) {
    Tensor2 acc;
    acc.add_term({Word::one(), Word::one()}, Scalar(1));
    for (const Atom& a : w.atoms()) acc = tensor2_mul_raw(acc, atom_coproduct(a, H));
    return normalize(acc, H);
}

Tensor2 coproduct(const NcPoly& p, const HopfPresentation& H) {
    Tensor2 r;
    for (const auto& [w, c] : p.terms()) r += coproduct(w, H).scale(c);
    return r;
}

Scalar counit(const Word& w, const HopfPresentation& H) {
    // 1 on group-like letters, 0 on skew-primitive ones
    return H.has_skew_gen(w) ? Scalar(0) : Scalar(1);
}

Scalar counit(const NcPoly& p, const HopfPresentation& H) {
    Scalar s(0);
    for (const auto& [w, c] : p.terms())
        if (!H.has_skew_gen(w)) s += c;
    return s;
}

NcPoly antipode(const Word& w, const HopfPresentation& H) {
    // S is anti-multiplicative; each letter maps to a single monomial
    Scalar coeff(1);
    Word acc;
    const auto& atoms = w.atoms();
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
        const HopfGenerator& g = H.gen(it->gen);
        if (g.kind == GenKind::group_like) {
            acc = word_mul(acc, Word::gen(it->gen, -it->sign));
        } else {
            // S(y) = -pair^-1 * y
            coeff = -coeff;
            acc = word_mul(acc, word_mul(g.pair.inverse(), Word::gen(it->gen)));
        }
    }
    return H.nf(acc).scale(coeff);
}

NcPoly antipode(const NcPoly& p, const HopfPresentation& H) {
    NcPoly r;
    for (const auto& [w, c] : p.terms()) r += antipode(w, H).scale(c);
    return r;
}

Tensor3 coproduct_left(const Tensor2& t, const HopfPresentation& H) {
    Tensor3 r;
    for (const auto& [k, c] : t.terms())
        for (const auto& [kk, cc] : coproduct(k[0], H).terms())
            r.add_term({kk[0], kk[1], k[1]}, c * cc);
    return r;
}

Tensor3 coproduct_right(const Tensor2& t, const HopfPresentation& H) {
    Tensor3 r;
    for (const auto& [k, c] : t.terms())
        for (const auto& [kk, cc] : coproduct(k[1], H).terms())
            r.add_term({k[0], kk[0], kk[1]}, c * cc);
    return r;
}

Word random_irreducible_word(const HopfPresentation& H, long max_degree, Rng& rng) {
    const long len = rng.range(0, max_degree);
    Word w;
    for (long i = 0; i < len; ++i) {
        const auto g = static_cast<std::uint32_t>(rng.bounded(H.gen_count()));
        const int sign = H.gen(g).invertible && rng.coin() ? -1 : 1;
        w = word_mul(w, Word::gen(g, sign));
    }
    // land on a basis word
    const NcPoly p = H.nf(w);
    if (p.is_zero()) return Word::one();
    return p.terms().begin()->first;
}

NcPoly random_element(const HopfPresentation& H, long max_degree, Rng& rng) {
    static const long kCoeffs[4] = {-2, -1, 1, 2};
    const long nterms = rng.range(1, 3);
    NcPoly p;
    for (long i = 0; i < nterms; ++i) {
        const Word w = random_irreducible_word(H, max_degree, rng);
        p.add_term(w, Scalar(kCoeffs[rng.bounded(4)]));
    }
    return p;
}

namespace {

std::string describe(const NcPoly& p) {
    return std::to_string(p.term_count()) + " term(s)";
}

void check_element(const HopfPresentation& H, const NcPoly& p, const std::string& label,
                   std::vector<AxiomViolation>& out) {
    const Tensor2 d = coproduct(p, H);

    // (a) (Delta (x) id) Delta = (id (x) Delta) Delta
    if (!(coproduct_left(d, H) == coproduct_right(d, H)))
        out.push_back({AxiomCheck::coassociativity, "coassociativity fails on " + label});

    // (b) (eps (x) id) Delta = id = (id (x) eps) Delta
    NcPoly left, right;
    for (const auto& [k, c] : d.terms()) {
        left.add_term(k[1], c * counit(k[0], H));
        right.add_term(k[0], c * counit(k[1], H));
    }
    if (!(left == p) || !(right == p))
        out.push_back({AxiomCheck::counit, "counit axiom fails on " + label});

    // (c) m(S (x) id) Delta = eps(.) 1 = m(id (x) S) Delta
    NcPoly conv_l, conv_r;
    for (const auto& [k, c] : d.terms()) {
        conv_l += H.mul(antipode(k[0], H), H.nf(k[1])).scale(c);
        conv_r += H.mul(H.nf(k[0]), antipode(k[1], H)).scale(c);
    }
    const NcPoly target = NcPoly(counit(p, H), Word::one());
    if (!(conv_l == target) || !(conv_r == target))
        out.push_back({AxiomCheck::antipode, "antipode axiom fails on " + label});
}

}  // namespace

AxiomReport hopf_axiom_report(const HopfPresentation& H, long sample_degree,
                              std::size_t trials, std::uint64_t seed, Exec mode) {
    AxiomReport report;

    // (d) relations are compatible with the structure maps
    for (std::size_t i = 0; i < H.rw().rules().size(); ++i) {
        const auto& rule = H.rw().rules()[i];
        const std::string label = "rule #" + std::to_string(i);
        if (!(coproduct(rule.lhs, H) == coproduct(rule.rhs, H)))
            report.violations.push_back(
                {AxiomCheck::relations, label + ": Delta(lhs) != Delta(rhs)"});
        if (!(counit(rule.lhs, H) == counit(rule.rhs, H)))
            report.violations.push_back(
                {AxiomCheck::relations, label + ": eps(lhs) != eps(rhs)"});
        if (!(antipode(rule.lhs, H) == antipode(rule.rhs, H)))
            report.violations.push_back(
                {AxiomCheck::relations, label + ": S(lhs) != S(rhs)"});
    }

    // samples: generators first, then seeded random elements
    std::vector<NcPoly> samples;
    for (std::size_t i = 0; i < H.gen_count(); ++i)
        samples.push_back(H.nf(Word::gen(static_cast<std::uint32_t>(i))));
    Rng rng(seed);
    for (std::size_t i = 0; i < trials; ++i)
        samples.push_back(random_element(H, sample_degree, rng));

    std::vector<std::vector<AxiomViolation>> found(samples.size());
    parallel_for(samples.size(), mode, [&](std::size_t i) {
        check_element(H, samples[i], "sample #" + std::to_string(i) + " (" +
                          describe(samples[i]) + ")", found[i]);
    });
    for (auto& f : found)
        report.violations.insert(report.violations.end(), f.begin(), f.end());
    report.samples_checked = samples.size();
    return report;
}

std::vector<long> Grading::of(const Word& w) const {
    std::vector<long> acc(dims(), 0);
    for (const Atom& a : w.atoms())
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a.sign * weight[a.gen][i];
    return acc;
}

GradingReport grading_check(const HopfPresentation& H, const Grading& g,
                            std::size_t trials, long max_degree, std::uint64_t seed) {
    GradingReport report;
    if (g.weight.size() != H.gen_count())
        throw InvalidParameter("grading must assign a weight to every generator");

    // precondition: rules are weight-homogeneous
    for (std::size_t i = 0; i < H.rw().rules().size(); ++i) {
        const auto& rule = H.rw().rules()[i];
        const auto lw = g.of(rule.lhs);
        for (const auto& [w, c] : rule.rhs.terms()) {
            if (g.of(w) != lw) {
                report.violations.push_back("rule #" + std::to_string(i) +
                                            " is not weight-homogeneous");
                break;
            }
        }
    }
    if (!report.violations.empty()) return report;

    Rng rng(seed);
    const std::vector<long> zero(g.dims(), 0);
    for (std::size_t t = 0; t < trials; ++t) {
        const Word w = random_irreducible_word(H, max_degree, rng);
        const auto target = g.of(w);
        for (const auto& [k, c] : coproduct(w, H).terms()) {
            auto sum = g.of(k[0]);
            const auto rightw = g.of(k[1]);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += rightw[i];
            if (sum != target) {
                report.violations.push_back("Delta not weight-additive on sampled monomial #" +
                                            std::to_string(t));
                break;
            }
        }
        if (target != zero && !counit(w, H).is_zero())
            report.violations.push_back("counit nonzero on monomial of nonzero weight (#" +
                                        std::to_string(t) + ")");
        ++report.monomials_checked;
    }
    return report;
}

Tensor2 cobar_d1(const NcPoly& c, const HopfPresentation& H) {
    Tensor2 r;
    for (const auto& [w, s] : c.terms()) {
        r.add_term({Word::one(), w}, s);
        r.add_term({w, Word::one()}, s);
    }
    r -= coproduct(c, H);
    return r;
}

Tensor3 cobar_d2(const Tensor2& u, const HopfPresentation& H) {
    Tensor3 r;
    for (const auto& [k, s] : u.terms()) {
        r.add_term({Word::one(), k[0], k[1]}, s);
        r.add_term({k[0], k[1], Word::one()}, -s);
        for (const auto& [dk, dc] : coproduct(k[0], H).terms())
            r.add_term({dk[0], dk[1], k[1]}, -(s * dc));
        for (const auto& [dk, dc] : coproduct(k[1], H).terms())
            r.add_term({k[0], dk[0], dk[1]}, s * dc);
    }
    return r;
}

}  // namespace hopf
