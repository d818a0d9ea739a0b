#include "hopf/echelon.hpp"

namespace hopf {

bool SpanEchelon::find_pivot_hit(const NcPoly& p, Word& w, Scalar& c) const {
    bool found = false;
    for (const auto& [word, coeff] : p.terms()) {
        if (!lead_.contains(word)) continue;
        if (!found || order_->less(w, word)) {
            w = word;
            c = coeff;
            found = true;
        }
    }
    return found;
}

NcPoly SpanEchelon::reduce(NcPoly p) const {
    Word w;
    Scalar c;
    while (!p.is_zero() && find_pivot_hit(p, w, c))
        p -= entries_[lead_.at(w)].scale(c);
    return p;
}

bool SpanEchelon::insert(NcPoly p) {
    p = reduce(std::move(p));
    if (p.is_zero()) return false;
    const Word lead = p.leading_word(*order_);
    p = p.monic(*order_);
    lead_.emplace(lead, entries_.size());
    entries_.push_back(std::move(p));
    return true;
}

void SpanEchelon::interreduce() {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        NcPoly rest = entries_[i];
        const Word lead = rest.leading_word(*order_);
        rest.add_term(lead, Scalar(-1));  // entries are monic
        Word w;
        Scalar c;
        while (!rest.is_zero() && find_pivot_hit(rest, w, c)) {
            if (w == lead) throw Error("echelon invariant broken");
            rest -= entries_[lead_.at(w)].scale(c);
        }
        rest.add_term(lead, Scalar(1));
        entries_[i] = std::move(rest);
    }
}

}  // namespace hopf
