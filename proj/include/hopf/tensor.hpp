#pragma once

#include <array>
#include <map>

#include "hopf/ncpoly.hpp"

namespace hopf {

// Scalar-linear combination of R-tuples of words (elements of H^{(x)R}).
// Component words are kept in normal form by the operations that build these.
template <std::size_t R>
class TensorPoly {
public:
    using Key = std::array<Word, R>;
    using TermMap = std::map<Key, Scalar>;

    TensorPoly() = default;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorPoly operator+(const TensorPoly& o) const {
        TensorPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    TensorPoly operator-(const TensorPoly& o) const {
        TensorPoly r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
        return r;
    }
    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    TensorPoly scale(const Scalar& s) const {
        TensorPoly r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }

    bool operator==(const TensorPoly&) const = default;

private:
    TermMap terms_;
};

using Tensor2 = TensorPoly<2>;
using Tensor3 = TensorPoly<3>;

inline Tensor2 tensor(const NcPoly& p, const NcPoly& q) {
    Tensor2 r;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) r.add_term({u, v}, cu * cv);
    return r;
}

}  // namespace hopf
