#include "hopf/rewrite.hpp"

namespace hopf {

RewriteSystem::RewriteSystem(std::vector<RewriteRule> rules, WordOrder order,
                             std::size_t step_cap)
    : rules_(std::move(rules)), order_(std::move(order)), step_cap_(step_cap) {
    for (const auto& r : rules_) {
        if (r.lhs.is_unit()) throw InvalidParameter("rewrite rule with unit left-hand side");
        for (const auto& [w, c] : r.rhs.terms()) {
            if (!order_.less(w, r.lhs))
                throw InvalidParameter("rule is not oriented by the word order: rhs word not below lhs");
        }
        max_lhs_len_ = std::max(max_lhs_len_, r.lhs.degree());
    }
}

bool RewriteSystem::find_redex(const Word& w, std::size_t& pos, std::size_t& rule) const {
    if (rules_.empty()) return false;
    const std::size_t n = w.degree();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            if (w.matches_at(rules_[r].lhs, p)) {
                pos = p;
                rule = r;
                return true;
            }
        }
    }
    return false;
}

NcPoly normal_form(const Word& w, const RewriteSystem& rw) {
    NcPoly out;
    std::vector<std::pair<Word, Scalar>> agenda{{w, Scalar(1)}};
    std::size_t steps = 0;
    while (!agenda.empty()) {
        auto [u, c] = std::move(agenda.back());
        agenda.pop_back();
        std::size_t pos, ri;
        if (!rw.find_redex(u, pos, ri)) {
            out.add_term(u, c);
            continue;
        }
        if (++steps > rw.step_cap())
            throw StepLimitExceeded("rewrite step cap exceeded (" +
                                    std::to_string(rw.step_cap()) + ")");
        const RewriteRule& rule = rw.rules()[ri];
        const Word prefix = u.subword(0, pos);
        const Word suffix = u.subword(pos + rule.lhs.degree(),
                                      u.degree() - pos - rule.lhs.degree());
        for (const auto& [t, tc] : rule.rhs.terms())
            agenda.emplace_back(word_mul(word_mul(prefix, t), suffix), c * tc);
    }
    return out;
}

NcPoly normal_form(const NcPoly& p, const RewriteSystem& rw) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) out += normal_form(w, rw).scale(c);
    return out;
}

NcPoly poly_mul(const NcPoly& p, const NcPoly& q, const RewriteSystem& rw) {
    NcPoly raw;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) raw.add_term(word_mul(u, v), cu * cv);
    return normal_form(raw, rw);
}

ConfluenceReport critical_pair_check(const RewriteSystem& rw, std::size_t max_len) {
    ConfluenceReport report;
    const auto& rules = rw.rules();
    auto check = [&](const Word& w, std::size_t pos1, std::size_t r1, std::size_t pos2,
                     std::size_t r2) {
        auto resolve = [&](std::size_t pos, std::size_t r) {
            const RewriteRule& rule = rules[r];
            const Word prefix = w.subword(0, pos);
            const Word suffix =
                w.subword(pos + rule.lhs.degree(), w.degree() - pos - rule.lhs.degree());
            NcPoly step;
            for (const auto& [t, tc] : rule.rhs.terms())
                step.add_term(word_mul(word_mul(prefix, t), suffix), tc);
            return normal_form(step, rw);
        };
        ++report.overlaps_checked;
        NcPoly a = resolve(pos1, r1);
        NcPoly b = resolve(pos2, r2);
        if (!(a == b)) report.disagreements.push_back({w, a, b});
    };

    for (std::size_t i = 0; i < rules.size(); ++i) {
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& li = rules[i].lhs;
            const Word& lj = rules[j].lhs;
            // overlap: a proper suffix of li is a prefix of lj
            for (std::size_t k = 1; k < std::min(li.degree(), lj.degree()); ++k) {
                if (li.degree() + lj.degree() - k > max_len) continue;
                bool match = true;
                for (std::size_t t = 0; t < k; ++t)
                    if (!(li.atoms()[li.degree() - k + t] == lj.atoms()[t])) {
                        match = false;
                        break;
                    }
                if (!match) continue;
                Word w = word_mul(li, lj.subword(k, lj.degree() - k));
                if (w.degree() != li.degree() + lj.degree() - k) continue;  // cancelled seam
                check(w, 0, i, li.degree() - k, j);
            }
            // containment: lj occurs strictly inside li
            if (i != j && lj.degree() < li.degree() && li.degree() <= max_len) {
                for (std::size_t pos = 0; pos + lj.degree() <= li.degree(); ++pos) {
                    if (li.matches_at(lj, pos)) check(li, 0, i, pos, j);
                }
            }
        }
    }
    return report;
}

}  // namespace hopf
