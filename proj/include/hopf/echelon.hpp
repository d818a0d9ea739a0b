#pragma once

#include <unordered_map>
#include <vector>

#include "hopf/ncpoly.hpp"

namespace hopf {

// Exact echelon of a word-span: monic entries with pairwise distinct leading
// words under the given order. reduce() eliminates leading-word hits until
// the remainder contains none, which decides membership exactly.
class SpanEchelon {
public:
    explicit SpanEchelon(const WordOrder& order) : order_(&order) {}

    std::size_t size() const { return entries_.size(); }
    const std::vector<NcPoly>& entries() const { return entries_; }

    NcPoly reduce(NcPoly p) const;

    // reduce and, when the remainder is nonzero, store it monic;
    // returns whether the span grew
    bool insert(NcPoly p);

    bool contains(const NcPoly& p) const { return reduce(p).is_zero(); }

    // back-eliminate every entry against the others (full reduced echelon)
    void interreduce();

private:
    const WordOrder* order_;
    std::vector<NcPoly> entries_;
    std::unordered_map<Word, std::size_t> lead_;

    // order-largest term of p whose word is a stored lead, if any
    bool find_pivot_hit(const NcPoly& p, Word& w, Scalar& c) const;
};

}  // namespace hopf
