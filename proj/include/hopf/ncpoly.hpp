#pragma once

#include <map>
#include <optional>

#include "hopf/scalar.hpp"
#include "hopf/word.hpp"

namespace hopf {

// Finite scalar-linear combination of words. No zero coefficients are stored;
// equality is exact term-by-term equality. Terms iterate in the structural
// word order, so everything downstream is deterministic.
class NcPoly {
public:
    using TermMap = std::map<Word, Scalar>;

    NcPoly() = default;
    NcPoly(const Scalar& c, const Word& w) { add_term(w, c); }
    static NcPoly one() { return NcPoly(Scalar(1), Word::one()); }
    static NcPoly zero() { return NcPoly(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    NcPoly operator+(const NcPoly& o) const {
        NcPoly r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    NcPoly operator-(const NcPoly& o) const {
        NcPoly r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    NcPoly operator-() const { return scale(Scalar(-1)); }
    NcPoly scale(const Scalar& s) const {
        NcPoly r;
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
        return r;
    }
    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    bool operator==(const NcPoly&) const = default;

    // single word with coefficient 1?
    std::optional<Word> as_unit_monomial() const {
        if (terms_.size() == 1 && terms_.begin()->second.is_one()) return terms_.begin()->first;
        return std::nullopt;
    }
    std::optional<std::pair<Word, Scalar>> as_monomial() const {
        if (terms_.size() == 1) return *terms_.begin();
        return std::nullopt;
    }

    // maximal word under the given order; poly must be nonzero
    const Word& leading_word(const WordOrder& order) const;
    const Scalar& leading_coeff(const WordOrder& order) const {
        return terms_.at(leading_word(order));
    }
    NcPoly monic(const WordOrder& order) const {
        return scale(leading_coeff(order).inverse());
    }

    // y-degree style filters
    long max_gen_count(const std::vector<bool>& flag) const;
    NcPoly component_where(const std::vector<bool>& flag, long count) const;

private:
    TermMap terms_;
};

inline NcPoly operator*(const Scalar& s, const NcPoly& p) { return p.scale(s); }

}  // namespace hopf
