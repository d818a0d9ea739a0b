#include "hopf/render.hpp"

#include <algorithm>
#include <sstream>

namespace hopf {

std::string render_word(const Word& w, const HopfPresentation& H) {
    if (w.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : w.runs()) {
        if (!first) os << "*";
        os << H.gen(g).name;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

namespace {

// magnitude is printable without a sign for rationals; quadratic scalars are
// parenthesized whole and never split
struct TermCoeff {
    bool negative;
    std::string body;  // "", "3/2*" or "(..)*" prefix for a non-unit word
    std::string alone; // rendering when the word is 1
};

TermCoeff term_coeff(const Scalar& c) {
    if (c.is_rational()) {
        const Rational& r = c.as_rational();
        const Rational mag = r.abs();
        TermCoeff t;
        t.negative = r.sign() < 0;
        t.body = mag.is_one() ? "" : mag.str() + "*";
        t.alone = mag.str();
        return t;
    }
    return TermCoeff{false, "(" + c.str() + ")*", "(" + c.str() + ")"};
}

}  // namespace

std::string render_element(const NcPoly& p, const HopfPresentation& H) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Word, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        return H.order().less(b.first, a.first);  // descending
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        const TermCoeff t = term_coeff(c);
        if (first) {
            if (t.negative) os << "-";
        } else {
            os << (t.negative ? " - " : " + ");
        }
        os << (w.is_unit() ? t.alone : t.body + render_word(w, H));
        first = false;
    }
    return os.str();
}

namespace {

template <std::size_t R>
std::string render_tensor_impl(const TensorPoly<R>& t, const HopfPresentation& H) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t.terms()) {
        if (!first) os << " + ";
        os << c.str() << " * ";
        for (std::size_t i = 0; i < R; ++i) {
            if (i) os << " (x) ";
            os << render_word(k[i], H);
        }
        first = false;
    }
    return os.str();
}

}  // namespace

std::string render_tensor(const Tensor2& t, const HopfPresentation& H) {
    return render_tensor_impl(t, H);
}

std::string render_tensor(const Tensor3& t, const HopfPresentation& H) {
    return render_tensor_impl(t, H);
}

}  // namespace hopf
