#include "hopf/presets.hpp"

namespace hopf {

namespace {

Word w_gen(std::uint32_t g, int sign = 1) { return Word::gen(g, sign); }

Word cat(std::initializer_list<Word> ws) {
    Word acc;
    for (const Word& w : ws) acc = word_mul(acc, w);
    return acc;
}

HopfPresentation validated(HopfPresentation H) {
    // deterministic part of the axiom report: relations plus the generators
    const AxiomReport rep = hopf_axiom_report(H, 1, 0, 0, Exec::serial);
    if (!rep.pass())
        throw AxiomFailure("preset " + H.name() + " fails structure checks: " +
                           rep.violations.front().detail);
    return H;
}

// commutation rules x_j^s x_i^r -> x_i^r x_j^s for all j > i in [0, count)
void add_commutation(std::vector<RewriteRule>& rules, std::uint32_t count) {
    for (std::uint32_t j = 1; j < count; ++j)
        for (std::uint32_t i = 0; i < j; ++i)
            for (int sj : {1, -1})
                for (int si : {1, -1})
                    rules.push_back({cat({w_gen(j, sj), w_gen(i, si)}),
                                     NcPoly(Scalar(1), cat({w_gen(i, si), w_gen(j, sj)}))});
}

}  // namespace

HopfPresentation preset_F(long t) {
    std::vector<HopfGenerator> gens{
        {"x", true, GenKind::group_like, Word::one()},
        {"y", false, GenKind::skew_primitive, Word::power(0, t)},
    };
    return validated(HopfPresentation("F:t=" + std::to_string(t), std::move(gens),
                                      RewriteSystem({}, WordOrder::default_for(2)),
                                      FieldDesc{}));
}

HopfPresentation preset_A(long b, const Scalar& xi) {
    if (xi.is_zero()) throw InvalidParameter("A(b, xi) requires xi != 0");
    std::vector<HopfGenerator> gens{
        {"g", true, GenKind::group_like, Word::one()},
        {"y", false, GenKind::skew_primitive, Word::power(0, b)},
    };
    const Scalar xi_inv = xi.inverse();
    std::vector<RewriteRule> rules{
        {cat({w_gen(0), w_gen(1)}), NcPoly(xi, cat({w_gen(1), w_gen(0)}))},
        {cat({w_gen(0, -1), w_gen(1)}), NcPoly(xi_inv, cat({w_gen(1), w_gen(0, -1)}))},
    };
    // rules move g past y; y must rank below g
    WordOrder order({1, 0}, {1, 1});
    FieldDesc field{xi.quad_d()};
    return validated(HopfPresentation("A:b=" + std::to_string(b) + ",xi=" + xi.str(),
                                      std::move(gens),
                                      RewriteSystem(std::move(rules), std::move(order)),
                                      field));
}

HopfPresentation preset_C(long m) {
    if (m < 2) throw InvalidParameter("C(m) requires m >= 2");
    std::vector<HopfGenerator> gens{
        {"g", true, GenKind::group_like, Word::one()},
        {"y", false, GenKind::skew_primitive, Word::power(0, m - 1)},
    };
    // g y = y g + g^m - g
    NcPoly rhs1(Scalar(1), cat({w_gen(1), w_gen(0)}));
    rhs1.add_term(Word::power(0, m), Scalar(1));
    rhs1.add_term(Word::power(0, 1), Scalar(-1));
    // conjugating the defining relation: g^-1 y = y g^-1 - g^{m-2} + g^-1
    NcPoly rhs2(Scalar(1), cat({w_gen(1), w_gen(0, -1)}));
    rhs2.add_term(Word::power(0, m - 2), Scalar(-1));
    rhs2.add_term(Word::power(0, -1), Scalar(1));
    std::vector<RewriteRule> rules{
        {cat({w_gen(0), w_gen(1)}), std::move(rhs1)},
        {cat({w_gen(0, -1), w_gen(1)}), std::move(rhs2)},
    };
    // weight(y) > m - 1 keeps the g^m term below g*y
    WordOrder order({1, 0}, {1, m});
    return validated(HopfPresentation("C:m=" + std::to_string(m), std::move(gens),
                                      RewriteSystem(std::move(rules), std::move(order)),
                                      FieldDesc{}));
}

HopfPresentation preset_E(long n) {
    if (n < 0) throw InvalidParameter("E(n) requires n >= 0");
    const auto xcount = static_cast<std::uint32_t>(n + 1);
    const std::uint32_t y = xcount;
    std::vector<HopfGenerator> gens;
    for (std::uint32_t i = 0; i < xcount; ++i)
        gens.push_back({"x" + std::to_string(i), true, GenKind::group_like, Word::one()});
    gens.push_back({"y", false, GenKind::skew_primitive, w_gen(0)});

    std::vector<RewriteRule> rules;
    add_commutation(rules, xcount);
    for (std::uint32_t i = 0; i < xcount; ++i)
        for (int s : {1, -1})
            rules.push_back({cat({w_gen(y), w_gen(i, s)}),
                             NcPoly(Scalar(-1), cat({w_gen(i, s), w_gen(y)}))});
    NcPoly ysq(Scalar(1), Word::power(0, 2));
    ysq.add_term(Word::one(), Scalar(-1));
    rules.push_back({cat({w_gen(y), w_gen(y)}), std::move(ysq)});

    return validated(HopfPresentation("E:n=" + std::to_string(n), std::move(gens),
                                      RewriteSystem(std::move(rules),
                                                    WordOrder::default_for(xcount + 1)),
                                      FieldDesc{}));
}

HopfPresentation preset_group_z(long n) {
    if (n < 1) throw InvalidParameter("GroupZ requires n >= 1");
    std::vector<HopfGenerator> gens;
    for (long i = 1; i <= n; ++i)
        gens.push_back({"x" + std::to_string(i), true, GenKind::group_like, Word::one()});
    std::vector<RewriteRule> rules;
    add_commutation(rules, static_cast<std::uint32_t>(n));
    return validated(HopfPresentation("Zn:n=" + std::to_string(n), std::move(gens),
                                      RewriteSystem(std::move(rules),
                                                    WordOrder::default_for(n)),
                                      FieldDesc{}));
}

HopfPresentation preset_heisenberg() {
    std::vector<HopfGenerator> gens{
        {"x", true, GenKind::group_like, Word::one()},
        {"y", true, GenKind::group_like, Word::one()},
        {"z", true, GenKind::group_like, Word::one()},
    };
    const std::uint32_t x = 0, y = 1, z = 2;
    std::vector<RewriteRule> rules;
    // Mal'cev collection toward x^a y^b z^c; z = [x, y] is central and
    // weightless so the collected form stays comparable
    auto coll = [&](int sy, int sx, int sz) {
        rules.push_back({cat({w_gen(y, sy), w_gen(x, sx)}),
                         NcPoly(Scalar(1), cat({w_gen(x, sx), w_gen(y, sy), w_gen(z, sz)}))});
    };
    coll(1, 1, -1);    // y x = x y z^-1
    coll(1, -1, 1);    // y x^-1 = x^-1 y z
    coll(-1, 1, 1);    // y^-1 x = x y^-1 z
    coll(-1, -1, -1);  // y^-1 x^-1 = x^-1 y^-1 z^-1
    for (std::uint32_t g : {x, y})
        for (int sz : {1, -1})
            for (int sg : {1, -1})
                rules.push_back({cat({w_gen(z, sz), w_gen(g, sg)}),
                                 NcPoly(Scalar(1), cat({w_gen(g, sg), w_gen(z, sz)}))});
    WordOrder order({0, 1, 2}, {1, 1, 0});
    return validated(HopfPresentation("heis", std::move(gens),
                                      RewriteSystem(std::move(rules), std::move(order)),
                                      FieldDesc{}));
}

HopfPresentation preset_z_cross_z2() {
    std::vector<HopfGenerator> gens{
        {"x", true, GenKind::group_like, Word::one()},
        {"u", true, GenKind::group_like, Word::one()},
    };
    const std::uint32_t x = 0, u = 1;
    std::vector<RewriteRule> rules{
        {w_gen(u, -1), NcPoly(Scalar(1), w_gen(u))},      // u^-1 = u
        {cat({w_gen(u), w_gen(u)}), NcPoly::one()},       // u^2 = 1
        {cat({w_gen(u), w_gen(x)}), NcPoly(Scalar(1), cat({w_gen(x), w_gen(u)}))},
        {cat({w_gen(u), w_gen(x, -1)}), NcPoly(Scalar(1), cat({w_gen(x, -1), w_gen(u)}))},
    };
    return validated(HopfPresentation("zxz2", std::move(gens),
                                      RewriteSystem(std::move(rules),
                                                    WordOrder::default_for(2)),
                                      FieldDesc{}));
}

HopfPresentation preset_env(const LieAlgebra& L) {
    const JacobiReport jr = jacobi_check(L);
    if (!jr.pass())
        throw InvalidParameter("enveloping algebra requires the Jacobi identity: " +
                               jr.violations.front());
    const std::size_t d = L.dim();
    std::vector<HopfGenerator> gens;
    long quad_d = 0;
    for (std::size_t i = 0; i < d; ++i)
        gens.push_back({L.names()[i], false, GenKind::skew_primitive, Word::one()});
    std::vector<RewriteRule> rules;
    for (std::uint32_t j = 1; j < d; ++j)
        for (std::uint32_t i = 0; i < j; ++i) {
            // e_j e_i = e_i e_j + [e_j, e_i]
            NcPoly rhs(Scalar(1), cat({w_gen(i), w_gen(j)}));
            const ScalarVec br = L.basis_bracket(j, i);
            for (std::size_t k = 0; k < d; ++k) {
                rhs.add_term(w_gen(static_cast<std::uint32_t>(k)), br[k]);
                if (!br[k].is_rational()) quad_d = br[k].quad_d();
            }
            rules.push_back({cat({w_gen(j), w_gen(i)}), std::move(rhs)});
        }
    std::string name = "env:";
    for (std::size_t i = 0; i < d; ++i) name += (i ? "," : "") + L.names()[i];
    return validated(HopfPresentation(std::move(name), std::move(gens),
                                      RewriteSystem(std::move(rules),
                                                    WordOrder::default_for(d)),
                                      FieldDesc{quad_d}));
}

std::string PresetId::label() const {
    switch (tag) {
        case Tag::F: return "F:t=" + std::to_string(t);
        case Tag::A: return "A:b=" + std::to_string(b) + ",xi=" + xi.str();
        case Tag::C: return "C:m=" + std::to_string(m);
        case Tag::E: return "E:n=" + std::to_string(n);
        case Tag::GroupZ: return "Zn:n=" + std::to_string(n);
        case Tag::Heisenberg: return "heis";
        case Tag::ZxZ2: return "zxz2";
        case Tag::Env: return "env";
    }
    return "?";
}

HopfPresentation build(const PresetId& id) {
    switch (id.tag) {
        case PresetId::Tag::F: return preset_F(id.t);
        case PresetId::Tag::A: return preset_A(id.b, id.xi);
        case PresetId::Tag::C: return preset_C(id.m);
        case PresetId::Tag::E: return preset_E(id.n);
        case PresetId::Tag::GroupZ: return preset_group_z(id.n);
        case PresetId::Tag::Heisenberg: return preset_heisenberg();
        case PresetId::Tag::ZxZ2: return preset_z_cross_z2();
        case PresetId::Tag::Env:
            if (!id.lie) throw InvalidParameter("Env preset requires a Lie algebra");
            return preset_env(*id.lie);
    }
    throw InvalidParameter("unknown preset");
}

std::optional<std::pair<Word, Word>> is_skew_primitive(const NcPoly& p,
                                                       const HopfPresentation& H) {
    if (p.is_zero()) throw InvalidParameter("is_skew_primitive requires a nonzero element");
    const Tensor2 d = coproduct(p, H);
    const Word& lead = p.terms().rbegin()->first;  // structurally largest term

    std::vector<Word> u_cands, v_cands;
    for (const auto& [k, c] : d.terms()) {
        if (k[0] == lead && H.is_group_like_word(k[1])) u_cands.push_back(k[1]);
        if (k[1] == lead && H.is_group_like_word(k[0])) v_cands.push_back(k[0]);
    }
    for (const Word& u : u_cands) {
        for (const Word& v : v_cands) {
            Tensor2 expect;
            for (const auto& [w, c] : p.terms()) {
                expect.add_term({w, u}, c);
                expect.add_term({v, w}, c);
            }
            if (expect == d) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

}  // namespace hopf
