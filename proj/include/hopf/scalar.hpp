#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hopf/error.hpp"

namespace hopf {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);

    static Rational from_mpq(const mpq_class& q);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_mpq(-v_); }
    Rational operator+(const Rational& o) const { return from_mpq(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return from_mpq(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return from_mpq(v_ * o.v_); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const;
    Rational abs() const { return from_mpq(::abs(v_)); }
    Rational pow(long e) const;

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // max(|num|, den); used to order root candidates deterministically
    mpz_class height() const;

    double to_double() const { return v_.get_d(); }
    std::string str() const;

private:
    mpq_class v_;  // kept canonical
};

// Element of Q or of a quadratic extension Q(sqrt(d)): a + b*sqrt(d) with d a
// squarefree integer, d != 0, 1. A value with b == 0 normalizes to the
// rational form (d == 0 internally). Mixing distinct extensions throws.
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(long n) : d_(0), a_(n) {}  // NOLINT: implicit by design
    Scalar(const Rational& r) : d_(0), a_(r) {}  // NOLINT: implicit by design
    static Scalar quad(long d, const Rational& a, const Rational& b);

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return d_ == 0 && a_.is_one(); }
    long quad_d() const { return d_; }
    const Rational& rat_a() const { return a_; }
    const Rational& rat_b() const { return b_; }

    // Throws FieldMismatch when the value is irrational.
    const Rational& as_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar inverse() const;
    Scalar conjugate() const { return is_rational() ? *this : quad(d_, a_, -b_); }

    bool operator==(const Scalar& o) const {
        return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
    }
    // structural order, used only for deterministic containers and tie-breaks
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string str() const;

private:
    long d_;      // 0 => rational
    Rational a_;
    Rational b_;  // zero when rational
};

inline Scalar operator*(long n, const Scalar& s) { return Scalar(n) * s; }

// Univariate polynomial over Q, coefficients in ascending degree with the
// leading coefficient nonzero (empty vector = zero polynomial).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Scalar eval(const Scalar& x) const;
    Rational eval(const Rational& x) const;

    UniPoly derivative() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // exact division; throws Error if the remainder is nonzero
    UniPoly div_exact(const UniPoly& divisor) const;
    UniPoly monic() const;

    std::string str() const;  // e.g. "1 - 2*s + s^2"

private:
    std::vector<Rational> c_;
};

UniPoly uni_gcd(UniPoly a, UniPoly b);      // monic gcd
UniPoly squarefree_part(const UniPoly& p);  // p / gcd(p, p'), monic

class NotARoot : public Error {
public:
    using Error::Error;
};

// After stripping every rational root, a factor of degree >= 3 remained.
class ResidualDegreeTooHigh : public Error {
public:
    ResidualDegreeTooHigh(const std::string& msg, UniPoly residual,
                          std::vector<Scalar> found)
        : Error(msg), residual(std::move(residual)), roots_found(std::move(found)) {}
    UniPoly residual;
    std::vector<Scalar> roots_found;
};

// All roots of p in Q or a single quadratic extension, multiplicity stripped.
// Rational roots come first (ascending height, positive before negative on
// ties), then the quadratic pair (+sqrt before -sqrt).
std::vector<Scalar> find_roots(const UniPoly& p);

// Coefficients of p / (s - r) in ascending degree; p(r) must vanish exactly.
std::vector<Scalar> deflate(const UniPoly& p, const Scalar& r);

// n = s^2 * d with d squarefree (sign carried by d). Throws Error when the
// part below the trial-division bound cannot be certified.
long squarefree_decompose(const mpz_class& n, mpz_class& square_part);

}  // namespace hopf
