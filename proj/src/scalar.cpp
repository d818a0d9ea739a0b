#include "hopf/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "hopf/parallel.hpp"

namespace hopf {

namespace {

void require_nonzero_den(const mpz_class& d) {
    if (sgn(d) == 0) throw DivisionByZero("rational with zero denominator");
}

}  // namespace

Rational::Rational(long n, long d) {
    require_nonzero_den(mpz_class(d));
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    require_nonzero_den(d);
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_mpq(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    r.v_.canonicalize();
    return r;
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    return from_mpq(v_ / o.v_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return from_mpq(1 / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    long k = e > 0 ? e : -e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

mpz_class Rational::height() const {
    mpz_class n = ::abs(num());
    return std::max(n, den());
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

namespace {

constexpr long kTrialDivisionBound = 1000000;

bool is_squarefree_small(long d) {
    long n = d < 0 ? -d : d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

long squarefree_decompose(const mpz_class& n, mpz_class& square_part) {
    if (sgn(n) == 0) throw Error("squarefree decomposition of zero");
    square_part = 1;
    mpz_class rest = ::abs(n);
    mpz_class d = 1;
    for (long p = 2; p <= kTrialDivisionBound && mpz_class(p) * p <= rest; ++p) {
        unsigned mult = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++mult;
        }
        for (unsigned i = 0; i + 1 < mult; i += 2) square_part *= p;
        if (mult % 2 == 1) d *= p;
    }
    if (rest > 1) {
        // leftover is prime or a product of primes above the bound
        mpz_class root, rem;
        mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), rest.get_mpz_t());
        if (sgn(rem) == 0) {
            square_part *= root;
        } else if (rest <= mpz_class(kTrialDivisionBound) * kTrialDivisionBound) {
            d *= rest;  // below bound^2 with no small factor: prime
        } else {
            throw Error("cannot certify squarefree part of " + n.get_str());
        }
    }
    if (sgn(n) < 0) d = -d;
    if (!d.fits_slong_p()) throw Error("squarefree part too large: " + d.get_str());
    return d.get_si();
}

Scalar Scalar::quad(long d, const Rational& a, const Rational& b) {
    if (b.is_zero()) return Scalar(a);
    if (d == 0 || d == 1 || !is_squarefree_small(d))
        throw InvalidParameter("quadratic extension requires a squarefree d != 0, 1");
    Scalar s;
    s.d_ = d;
    s.a_ = a;
    s.b_ = b;
    return s;
}

const Rational& Scalar::as_rational() const {
    if (!is_rational()) throw FieldMismatch("scalar is not rational: " + str());
    return a_;
}

namespace {

// Common extension of two scalars; throws on a genuine clash.
long join_field(const Scalar& x, const Scalar& y) {
    if (x.quad_d() == 0) return y.quad_d();
    if (y.quad_d() == 0 || y.quad_d() == x.quad_d()) return x.quad_d();
    throw FieldMismatch("mixing sqrt(" + std::to_string(x.quad_d()) + ") with sqrt(" +
                        std::to_string(y.quad_d()) + ")");
}

}  // namespace

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    const long d = join_field(*this, o);
    const Rational a = a_ + o.a_;
    const Rational b = b_ + o.b_;
    return d == 0 ? Scalar(a) : quad(d, a, b);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    const long d = join_field(*this, o);
    if (d == 0) return Scalar(a_ * o.a_);
    // (a1 + b1*r)(a2 + b2*r) = a1*a2 + b1*b2*d + (a1*b2 + a2*b1)*r
    const Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    const Rational b = a_ * o.b_ + o.a_ * b_;
    return quad(d, a, b);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    if (is_rational()) return Scalar(a_.inverse());
    // 1/(a + b*r) = (a - b*r) / (a^2 - b^2*d); the norm is nonzero since d is
    // not a perfect square
    const Rational norm = a_ * a_ - b_ * b_ * Rational(d_);
    return quad(d_, a_ / norm, -(b_ / norm));
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    if (auto c = d_ <=> o.d_; c != 0) return c;
    if (auto c = a_ <=> o.a_; c != 0) return c;
    return b_ <=> o.b_;
}

std::string Scalar::str() const {
    if (is_rational()) return a_.str();
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    std::string bs;
    if (b_.is_one()) {
        bs = root;
    } else if (b_ == Rational(-1)) {
        bs = "-" + root;
    } else {
        bs = b_.str() + "*" + root;
    }
    if (a_.is_zero()) return bs;
    if (b_.sign() > 0) return a_.str() + "+" + bs;
    return a_.str() + bs;  // bs carries its own minus sign
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scale(Rational(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scale(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::div_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(rem.size() > divisor.c_.size() - 1
                                   ? rem.size() - divisor.c_.size() + 1
                                   : 0,
                               Rational(0));
    const Rational lead = divisor.c_.back();
    while (rem.size() >= divisor.c_.size() && !rem.empty()) {
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if (rem.size() < divisor.c_.size()) break;
        const std::size_t shift = rem.size() - divisor.c_.size();
        const Rational q = rem.back() / lead;
        quot[shift] = q;
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            rem[shift + i] -= q * divisor.c_[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw Error("inexact polynomial division");
    return UniPoly(std::move(quot));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(c_.back().inverse());
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.sign() < 0) os << "-", v = -v;
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (i == 0) {
            os << v.str();
        } else {
            if (!v.is_one()) os << v.str() << "*";
            os << "s";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        // remainder of a by b
        std::vector<Rational> rem = a.coeffs();
        const auto& d = b.coeffs();
        const Rational lead = d.back();
        while (rem.size() >= d.size()) {
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
            if (rem.size() < d.size()) break;
            const std::size_t shift = rem.size() - d.size();
            const Rational q = rem.back() / lead;
            for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= q * d[i];
        }
        a = b;
        b = UniPoly(std::move(rem));
    }
    return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 1) return p.monic();
    const UniPoly g = uni_gcd(p, p.derivative());
    if (g.degree() < 1) return p.monic();
    return p.div_exact(g).monic();
}

namespace {

// divisors of |n|, ascending; n small at desk scale
std::vector<mpz_class> divisors(const mpz_class& n) {
    mpz_class a = ::abs(n);
    if (sgn(a) == 0) throw Error("divisors of zero");
    if (a > mpz_class(kTrialDivisionBound) * kTrialDivisionBound)
        throw Error("rational root search: constant term too large");
    std::vector<mpz_class> small, big;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            if (d * d != a) big.push_back(a / d);
        }
    }
    small.insert(small.end(), big.rbegin(), big.rend());
    return small;
}

// Smallest rational root of q (height, then positive first), or nothing.
// q must have a nonzero constant term.
bool smallest_rational_root(const UniPoly& q, Rational& out) {
    // integerize: multiply by the lcm of denominators
    mpz_class lcm_den = 1;
    for (const auto& c : q.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : q.coeffs()) z.push_back(c.num() * (lcm_den / c.den()));
    const auto ds0 = divisors(z.front());
    const auto dsl = divisors(z.back());

    bool have = false;
    Rational best;
    mpz_class best_height;
    for (const auto& u : ds0) {
        for (const auto& v : dsl) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
            if (g != 1) continue;
            for (int s = 0; s < 2; ++s) {
                const Rational cand = Rational(s == 0 ? u : -u, v);
                if (!q.eval(cand).is_zero()) continue;
                const mpz_class h = cand.height();
                if (!have || h < best_height ||
                    (h == best_height && cand.sign() > best.sign())) {
                    have = true;
                    best = cand;
                    best_height = h;
                }
            }
        }
    }
    if (have) out = best;
    return have;
}

UniPoly deflate_rational(const UniPoly& p, const Rational& r) {
    // synthetic division by (s - r), exact
    const auto& a = p.coeffs();
    std::vector<Rational> b(a.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = a.size(); i-- > 1;) {
        carry = a[i] + r * carry;
        b[i - 1] = carry;
    }
    if (!(a[0] + r * b[0]).is_zero()) throw NotARoot("deflation remainder nonzero");
    return UniPoly(std::move(b));
}

}  // namespace

std::vector<Scalar> find_roots(const UniPoly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw InvalidParameter("find_roots requires a nonzero polynomial of degree >= 1");
    std::vector<Scalar> roots;
    UniPoly q = squarefree_part(p);

    // strip the root at zero
    if (q.coeff(0).is_zero()) {
        roots.emplace_back(Rational(0));
        std::vector<Rational> shifted(q.coeffs().begin() + 1, q.coeffs().end());
        q = UniPoly(std::move(shifted));
    }

    std::vector<Scalar> rational_roots;
    while (q.degree() >= 1) {
        if (q.degree() == 1) {
            rational_roots.emplace_back(-(q.coeff(0) / q.coeff(1)));
            q = UniPoly();
            break;
        }
        Rational r;
        if (smallest_rational_root(q, r)) {
            rational_roots.emplace_back(r);
            q = deflate_rational(q, r);
            continue;
        }
        break;  // no rational root left
    }
    roots.insert(roots.end(), rational_roots.begin(), rational_roots.end());

    if (q.degree() == 2) {
        // quadratic formula over Q(sqrt(d))
        const Rational A = q.coeff(2), B = q.coeff(1), C = q.coeff(0);
        const Rational disc = B * B - Rational(4) * A * C;
        // sqrt(p/q) = sqrt(p*q)/q
        const mpz_class n = disc.num() * disc.den();
        mpz_class sq;
        const long d = squarefree_decompose(n, sq);
        const Rational half = Rational(1) / (Rational(2) * A);
        const Rational a0 = -B * half;
        const Rational b0 = Rational(sq, disc.den()) * half;
        if (d == 1) {
            // square discriminant: genuinely rational (only reachable when the
            // rational-root search was skipped upstream)
            roots.emplace_back(a0 + b0);
            roots.emplace_back(a0 - b0);
        } else {
            roots.push_back(Scalar::quad(d, a0, b0));
            roots.push_back(Scalar::quad(d, a0, -b0));
        }
        q = UniPoly();
    } else if (q.degree() >= 3) {
        throw ResidualDegreeTooHigh(
            "irreducible-over-Q residual of degree " + std::to_string(q.degree()) + ": " + q.str(),
            q, roots);
    }
    return roots;
}

std::vector<Scalar> deflate(const UniPoly& p, const Scalar& r) {
    if (p.is_zero() || p.degree() < 1) throw InvalidParameter("deflate requires degree >= 1");
    const auto& a = p.coeffs();
    std::vector<Scalar> b(a.size() - 1, Scalar(0));
    Scalar carry(0);
    for (std::size_t i = a.size(); i-- > 1;) {
        carry = Scalar(a[i]) + r * carry;
        b[i - 1] = carry;
    }
    if (!(Scalar(a[0]) + r * b[0]).is_zero()) throw NotARoot("p(r) != 0");
    return b;
}

namespace {
Exec g_default_exec = Exec::parallel;
}

Exec default_exec() { return g_default_exec; }
void set_default_exec(Exec mode) { g_default_exec = mode; }

int hardware_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hopf
