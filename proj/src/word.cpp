#include "hopf/word.hpp"

namespace hopf {

Word Word::power(std::uint32_t g, long e) {
    std::vector<Atom> a;
    const std::int8_t sign = e >= 0 ? 1 : -1;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) a.push_back(Atom{g, sign});
    return Word(std::move(a));
}

std::vector<std::pair<std::uint32_t, long>> Word::runs() const {
    std::vector<std::pair<std::uint32_t, long>> out;
    for (const Atom& a : atoms_) {
        if (!out.empty() && out.back().first == a.gen) {
            out.back().second += a.sign;
        } else {
            out.emplace_back(a.gen, a.sign);
        }
    }
    return out;
}

Word word_mul(const Word& u, const Word& v) {
    std::vector<Atom> r = u.atoms_;
    for (const Atom& a : v.atoms_) {
        if (!r.empty() && r.back().cancels(a)) {
            r.pop_back();
        } else {
            r.push_back(a);
        }
    }
    return Word(std::move(r));
}

Word word_pow(const Word& u, long e) {
    Word base = e >= 0 ? u : u.inverse();
    long k = e >= 0 ? e : -e;
    Word acc;
    for (long i = 0; i < k; ++i) acc = word_mul(acc, base);
    return acc;
}

Word Word::inverse() const {
    std::vector<Atom> r(atoms_.rbegin(), atoms_.rend());
    for (Atom& a : r) a.sign = static_cast<std::int8_t>(-a.sign);
    return Word(std::move(r));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(std::vector<Atom>(atoms_.begin() + pos, atoms_.begin() + pos + len));
}

bool Word::matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.atoms_.size() > atoms_.size()) return false;
    for (std::size_t i = 0; i < pattern.atoms_.size(); ++i)
        if (!(atoms_[pos + i] == pattern.atoms_[i])) return false;
    return true;
}

long Word::count_gen(std::uint32_t g) const {
    long c = 0;
    for (const Atom& a : atoms_)
        if (a.gen == g) c += a.sign;
    return c;
}

long Word::count_where(const std::vector<bool>& flag) const {
    long c = 0;
    for (const Atom& a : atoms_)
        if (a.gen < flag.size() && flag[a.gen]) ++c;
    return c;
}

long Word::max_run_magnitude() const {
    long best = 0;
    for (const auto& [g, e] : runs()) best = std::max(best, e >= 0 ? e : -e);
    return best;
}

std::size_t Word::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const Atom& a : atoms_) {
        h ^= (static_cast<std::size_t>(a.gen) << 1) | (a.sign < 0 ? 1u : 0u);
        h *= 1099511628211ull;
    }
    return h;
}

WordOrder WordOrder::default_for(std::size_t gen_count) {
    std::vector<int> rank(gen_count);
    for (std::size_t i = 0; i < gen_count; ++i) rank[i] = static_cast<int>(i);
    return WordOrder(std::move(rank), std::vector<long>(gen_count, 1));
}

long WordOrder::weighted_degree(const Word& w) const {
    long d = 0;
    for (const Atom& a : w.atoms()) d += weight_[a.gen];
    return d;
}

std::strong_ordering WordOrder::compare(const Word& u, const Word& v) const {
    if (auto c = weighted_degree(u) <=> weighted_degree(v); c != 0) return c;
    const auto& ua = u.atoms();
    const auto& va = v.atoms();
    const std::size_t n = std::min(ua.size(), va.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = rank_[ua[i].gen] <=> rank_[va[i].gen]; c != 0) return c;
        // positive exponent before negative
        if (auto c = (ua[i].sign < 0) <=> (va[i].sign < 0); c != 0) return c;
    }
    return ua.size() <=> va.size();
}

}  // namespace hopf
