#include "hopf/ncpoly.hpp"

namespace hopf {

const Word& NcPoly::leading_word(const WordOrder& order) const {
    if (terms_.empty()) throw Error("leading word of the zero polynomial");
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
        if (order.less(*best, w)) best = &w;
    return *best;
}

long NcPoly::max_gen_count(const std::vector<bool>& flag) const {
    long best = 0;
    for (const auto& [w, c] : terms_) best = std::max(best, w.count_where(flag));
    return best;
}

NcPoly NcPoly::component_where(const std::vector<bool>& flag, long count) const {
    NcPoly r;
    for (const auto& [w, c] : terms_)
        if (w.count_where(flag) == count) r.add_term(w, c);
    return r;
}

}  // namespace hopf
