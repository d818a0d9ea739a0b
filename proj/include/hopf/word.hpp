#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hopf/error.hpp"

namespace hopf {

struct Generator {
    std::string name;
    bool invertible = false;
};

// One letter of a word: a generator with exponent +1 or -1. Words store flat
// atom sequences; exponent runs are merged only for display and parsing.
struct Atom {
    std::uint32_t gen = 0;
    std::int8_t sign = 1;  // +1 or -1

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
    Atom inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
    bool cancels(const Atom& o) const { return gen == o.gen && sign == -o.sign; }
};

// Monomial in the free monoid with built-in cancellation of x*x^-1 for
// invertible generators. Adjacent atoms of one generator always share a sign.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

    static Word one() { return Word(); }
    static Word gen(std::uint32_t g, int sign = 1) {
        return Word({Atom{g, static_cast<std::int8_t>(sign)}});
    }
    // g^e as a run of |e| atoms; e may be negative (caller guarantees
    // invertibility, the parser enforces it)
    static Word power(std::uint32_t g, long e);

    bool is_unit() const { return atoms_.empty(); }
    std::size_t degree() const { return atoms_.size(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // (generator, exponent) runs, exponents nonzero with merged signs
    std::vector<std::pair<std::uint32_t, long>> runs() const;

    // free product with boundary cancellation
    friend Word word_mul(const Word& u, const Word& v);

    // reversed word with all signs flipped; only meaningful when every atom's
    // generator is invertible
    Word inverse() const;

    Word subword(std::size_t pos, std::size_t len) const;
    bool matches_at(const Word& pattern, std::size_t pos) const;

    long count_gen(std::uint32_t g) const;       // signed exponent sum
    long count_where(const std::vector<bool>& flag) const;  // atoms with flag[gen]
    long max_run_magnitude() const;

    bool operator==(const Word&) const = default;
    // structural order (length, then atoms); independent of any WordOrder,
    // used for deterministic container keys
    std::strong_ordering operator<=>(const Word& o) const {
        if (auto c = atoms_.size() <=> o.atoms_.size(); c != 0) return c;
        for (std::size_t i = 0; i < atoms_.size(); ++i)
            if (auto c = atoms_[i] <=> o.atoms_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    std::vector<Atom> atoms_;
};

Word word_mul(const Word& u, const Word& v);
Word word_pow(const Word& u, long e);

// Total order on words: weighted degree, then lexicographic on atoms ranked
// by generator precedence (positive exponent before negative), prefixes
// first. The unit word is minimal. Rule orientation and echelon pivoting
// both run through this.
class WordOrder {
public:
    WordOrder() = default;
    WordOrder(std::vector<int> rank, std::vector<long> weight)
        : rank_(std::move(rank)), weight_(std::move(weight)) {}

    static WordOrder default_for(std::size_t gen_count);

    long weighted_degree(const Word& w) const;
    std::strong_ordering compare(const Word& u, const Word& v) const;
    bool less(const Word& u, const Word& v) const {
        return compare(u, v) == std::strong_ordering::less;
    }

    const std::vector<int>& rank() const { return rank_; }
    const std::vector<long>& weight() const { return weight_; }

private:
    std::vector<int> rank_;     // rank_[gen] = precedence position
    std::vector<long> weight_;  // weight_[gen] >= 0
};

}  // namespace hopf

template <>
struct std::hash<hopf::Word> {
    std::size_t operator()(const hopf::Word& w) const { return w.hash(); }
};
