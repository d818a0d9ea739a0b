#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopf/ncpoly.hpp"

namespace hopf {

// Oriented relation lhs -> rhs: every word of rhs is strictly below lhs in
// the word order, so each application shrinks the term multiset.
struct RewriteRule {
    Word lhs;
    NcPoly rhs;
};

class StepLimitExceeded : public Error {
public:
    using Error::Error;
};

// Rule list plus the orienting order. Rewriting picks the leftmost matching
// position; ties at one position go to the earliest declared rule.
class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(std::vector<RewriteRule> rules, WordOrder order,
                  std::size_t step_cap = 1000000);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const WordOrder& order() const { return order_; }
    std::size_t step_cap() const { return step_cap_; }
    void set_step_cap(std::size_t cap) { step_cap_ = cap; }

    // (position, rule index) of the leftmost redex, or false
    bool find_redex(const Word& w, std::size_t& pos, std::size_t& rule) const;
    bool is_irreducible(const Word& w) const {
        std::size_t p, r;
        return !find_redex(w, p, r);
    }

private:
    std::vector<RewriteRule> rules_;
    WordOrder order_;
    std::size_t step_cap_ = 1000000;
    std::size_t max_lhs_len_ = 0;
};

NcPoly normal_form(const Word& w, const RewriteSystem& rw);
NcPoly normal_form(const NcPoly& p, const RewriteSystem& rw);
NcPoly poly_mul(const NcPoly& p, const NcPoly& q, const RewriteSystem& rw);

struct CriticalPair {
    Word overlap;     // the ambiguous word
    NcPoly left_nf;   // resolving with the first rule
    NcPoly right_nf;  // resolving with the second rule
};

struct ConfluenceReport {
    std::vector<CriticalPair> disagreements;
    std::size_t overlaps_checked = 0;
    bool locally_confluent() const { return disagreements.empty(); }
};

// Reduces both resolutions of every overlap of two rule left-hand sides with
// combined length <= max_len and reports the ones that disagree.
ConfluenceReport critical_pair_check(const RewriteSystem& rw, std::size_t max_len);

}  // namespace hopf
