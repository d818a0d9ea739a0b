#include "hopf/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hopf {

Word f_monomial(const MultiIndex& alpha) {
    if (alpha.size() < 2) throw InvalidParameter("multi-index needs length >= 2");
    Word w;
    for (std::size_t s = 0; s < alpha.size(); ++s) {
        if (s > 0) w = word_mul(w, Word::gen(1));  // y
        w = word_mul(w, Word::power(0, alpha[s])); // x^{i_s}
    }
    return w;
}

long t_sum(const MultiIndex& alpha) {
    long s = 0;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i) s += alpha[i];
    return s;
}

MultiIndex sigma_map(const MultiIndex& alpha, long t) {
    const std::size_t len = alpha.size();
    MultiIndex out(len);
    for (std::size_t k = 0; k + 1 < len; ++k) out[k] = -alpha[len - 1 - k] - t;
    out[len - 1] = -alpha[0];
    return out;
}

MultiIndex tau_map(const MultiIndex& alpha, long b) {
    MultiIndex out = alpha;
    out[0] -= b;
    return out;
}

MultiIndex tau_inv_map(const MultiIndex& alpha, long b) {
    MultiIndex out = alpha;
    out[0] += b;
    return out;
}

bool antipode_monomial_identity(const MultiIndex& alpha, const HopfPresentation& Ft) {
    const long t = Ft.gen(1).pair.count_gen(0);
    const long n = static_cast<long>(alpha.size()) - 1;
    const NcPoly lhs = antipode(f_monomial(alpha), Ft);
    const NcPoly rhs(Scalar(n % 2 == 0 ? 1 : -1), f_monomial(sigma_map(alpha, t)));
    return lhs == rhs;
}

bool antipode_monomial_identity(const MultiIndex& alpha, long t) {
    return antipode_monomial_identity(alpha, preset_F(t));
}

OrbitReport orbit_check(const MultiIndex& beta, long t, long s_max) {
    const long n = static_cast<long>(beta.size()) - 1;
    if (t == 0) throw InvalidParameter("orbit_check requires t != 0");
    if (n < 2) throw InvalidParameter("orbit_check requires n >= 2");
    if (s_max < 1) throw InvalidParameter("orbit_check requires s_max >= 1");
    const long b = n * t;

    OrbitReport report;
    report.even_images.push_back(beta);
    MultiIndex cur = beta;
    for (long s = 1; s <= s_max; ++s) {
        cur = tau_inv_map(sigma_map(cur, t), b);
        cur = tau_inv_map(sigma_map(cur, t), b);
        MultiIndex closed = beta;
        closed[0] += s * (n - 1) * t;
        closed[beta.size() - 1] -= s * (n - 1) * t;
        if (cur != closed) report.closed_form_matches = false;
        report.even_images.push_back(cur);
    }
    std::set<MultiIndex> distinct(report.even_images.begin(), report.even_images.end());
    report.images_distinct = distinct.size() == report.even_images.size();
    return report;
}

std::vector<Word> window_words(const HopfPresentation& H, const Window& win) {
    const auto fits = [&](const Word& w) {
        if (H.y_degree(w) > win.max_y_degree) return false;
        for (const auto& [g, e] : w.runs()) {
            if (H.gen(g).invertible && std::abs(e) > win.exponent_bound) return false;
        }
        return true;
    };

    std::set<Word> seen{Word::one()};
    std::deque<Word> queue{Word::one()};
    while (!queue.empty()) {
        const Word w = queue.front();
        queue.pop_front();
        for (std::uint32_t g = 0; g < H.gen_count(); ++g) {
            for (int sign : {1, -1}) {
                if (sign < 0 && !H.gen(g).invertible) continue;
                const Word next = word_mul(w, Word::gen(g, sign));
                if (!fits(next) || !H.rw().is_irreducible(next)) continue;
                if (!seen.insert(next).second) continue;
                if (seen.size() > win.candidate_cap)
                    throw WindowTooLarge("window candidate count exceeds cap (" +
                                         std::to_string(win.candidate_cap) + ")");
                queue.push_back(next);
            }
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(),
              [&](const Word& a, const Word& b) { return H.order().less(a, b); });
    return out;
}

namespace {

// echelon of rank-2 tensors with dependence tracking over the inserted
// candidates; leads are the structurally largest keys, which is enough since
// combinations inherit the largest lead among their supports
class TensorEchelon {
public:
    struct Dependence {
        std::map<std::size_t, Scalar> combo;  // over original indices
    };

    // reduces t; records it when independent, otherwise returns how the
    // original decomposes over earlier originals (incoming has coefficient 1)
    std::optional<Dependence> insert(Tensor2 t, std::size_t orig) {
        std::map<std::size_t, Scalar> combo{{orig, Scalar(1)}};
        while (!t.is_zero()) {
            const auto& key = t.terms().rbegin()->first;
            const auto hit = lead_.find(key);
            if (hit == lead_.end()) break;
            const Scalar c = t.terms().rbegin()->second;
            const Entry& e = entries_[hit->second];
            t -= e.value.scale(c);
            for (const auto& [idx, ec] : e.combo) {
                auto [it, fresh] = combo.emplace(idx, -(c * ec));
                if (!fresh) {
                    it->second -= c * ec;
                    if (it->second.is_zero()) combo.erase(it);
                }
            }
        }
        if (t.is_zero()) return Dependence{std::move(combo)};
        const Scalar inv = t.terms().rbegin()->second.inverse();
        Entry e;
        e.value = t.scale(inv);
        for (auto& [idx, c] : combo) e.combo.emplace(idx, c * inv);
        lead_.emplace(e.value.terms().rbegin()->first, entries_.size());
        entries_.push_back(std::move(e));
        return std::nullopt;
    }

private:
    struct Entry {
        Tensor2 value;  // monic at its largest key
        std::map<std::size_t, Scalar> combo;
    };
    std::vector<Entry> entries_;
    std::map<Tensor2::Key, std::size_t> lead_;
};

Tensor2 skew_defect(const Word& w, const NcPoly& u_nf, const NcPoly& v_nf,
                    const HopfPresentation& H) {
    // Delta(w) - w (x) u - v (x) w
    Tensor2 t = coproduct(w, H);
    for (const auto& [uw, uc] : u_nf.terms()) t.add_term({w, uw}, -uc);
    for (const auto& [vw, vc] : v_nf.terms()) t.add_term({vw, w}, -vc);
    return t;
}

}  // namespace

SkewPrimSpace skew_primitive_space(const HopfPresentation& H, const Word& u,
                                   const Word& v, const Window& win, Exec mode) {
    if (!H.is_group_like_word(u) || !H.is_group_like_word(v))
        throw InvalidParameter("skew_primitive_space requires group-like pair words");
    const NcPoly u_nf = H.nf(u);
    const NcPoly v_nf = H.nf(v);

    const std::vector<Word> cands = window_words(H, win);
    const auto defects = parallel_map<Tensor2>(cands.size(), mode, [&](std::size_t i) {
        return skew_defect(cands[i], u_nf, v_nf, H);
    });

    // c is a solution iff sum_j c_j defect_j = 0; dependences of the defect
    // sequence are exactly the solution space, and sorting candidates in
    // ascending word order makes each dependence monic at its largest word
    TensorEchelon ech;
    SkewPrimSpace space{u, v, win, {}};
    for (std::size_t j = 0; j < cands.size(); ++j) {
        auto dep = ech.insert(defects[j], j);
        if (!dep) continue;
        NcPoly f;
        for (const auto& [idx, c] : dep->combo) f.add_term(cands[idx], c);
        space.basis.push_back(std::move(f));
    }

    // independent re-verification of the defining equation
    for (const auto& f : space.basis) {
        Tensor2 t = coproduct(f, H);
        for (const auto& [w, c] : f.terms()) {
            for (const auto& [uw, uc] : u_nf.terms()) t.add_term({w, uw}, -(c * uc));
            for (const auto& [vw, vc] : v_nf.terms()) t.add_term({vw, w}, -(c * vc));
        }
        if (!t.is_zero()) throw Error("solver produced a non-solution (internal error)");
    }
    return space;
}

std::vector<Word> group_like_space(const HopfPresentation& H, const Window& win,
                                   Exec mode) {
    const std::vector<Word> cands = window_words(H, win);
    const auto flags = parallel_map<char>(cands.size(), mode, [&](std::size_t i) {
        Tensor2 expect;
        expect.add_term({cands[i], cands[i]}, Scalar(1));
        return coproduct(cands[i], H) == expect ? char(1) : char(0);
    });
    std::vector<Word> out;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (flags[i]) out.push_back(cands[i]);
    return out;
}

namespace {

// F(t) shape: generator 0 an invertible group-like x, generator 1 a
// skew-primitive y with pair x^t
long f_parameter(const HopfPresentation& H) {
    if (H.gen_count() != 2 || H.gen(0).kind != GenKind::group_like ||
        H.gen(1).kind != GenKind::skew_primitive || !H.rw().rules().empty())
        throw InvalidParameter("classification expects an F(t) presentation");
    return H.gen(1).pair.count_gen(0);
}

// pure power of x? returns the exponent
bool x_power(const Word& w, long& e) {
    e = 0;
    for (const Atom& a : w.atoms()) {
        if (a.gen != 0) return false;
        e += a.sign;
    }
    return true;
}

}  // namespace

SkewPrimClassification classify_skew_primitive(const HopfPresentation& Ft,
                                               const NcPoly& f) {
    const long t = f_parameter(Ft);
    if (t == 0) throw InvalidParameter("classification requires t != 0");
    if (f.is_zero()) throw NotSkewPrimitive("zero element");
    if (!is_skew_primitive(f, Ft))
        throw NotSkewPrimitive("Delta(f) does not have skew-primitive shape");

    const auto& flags = Ft.skew_flags();
    const long ydeg = f.max_gen_count(flags);
    if (ydeg > 1)
        throw ClassificationFailure("verified skew-primitive of y-degree " +
                                    std::to_string(ydeg));

    SkewPrimClassification out;
    const NcPoly part0 = f.component_where(flags, 0);

    if (ydeg == 0) {
        // f = lambda x^a (x^m - 1)
        if (part0.term_count() != 2)
            throw ClassificationFailure("y-degree 0 support is not two x-powers");
        auto it = part0.terms().begin();
        long e1, e2;
        if (!x_power(it->first, e1)) throw ClassificationFailure("non-x-power support");
        const Scalar c1 = it->second;
        ++it;
        if (!x_power(it->first, e2)) throw ClassificationFailure("non-x-power support");
        const Scalar c2 = it->second;
        const long hi = std::max(e1, e2), lo = std::min(e1, e2);
        const Scalar chi = e1 > e2 ? c1 : c2;
        const Scalar clo = e1 > e2 ? c2 : c1;
        if (!(chi == -clo)) throw ClassificationFailure("coefficients are not opposite");
        out.y_degree = 0;
        out.lambda = chi;
        out.a = lo;
        out.m = hi - lo;
        return out;
    }

    const NcPoly part1 = f.component_where(flags, 1);
    long a = 0;
    bool first = true;
    for (const auto& [w, c] : part1.terms()) {
        const long xdeg = w.count_gen(0);
        if (first) {
            a = xdeg;
            first = false;
        } else if (xdeg != a) {
            throw ClassificationFailure("y-degree 1 part is not x-homogeneous");
        }
    }
    out.y_degree = 1;
    out.a = a;
    out.homogeneous_part = part1;
    if (part0.is_zero()) {
        out.lambda = Scalar(0);
        return out;
    }
    // remaining part must be lambda x^a (x^t - 1)
    const Scalar chi = part0.coeff(Word::power(0, a + t));
    const Scalar clo = part0.coeff(Word::power(0, a));
    if (part0.term_count() != 2 || chi.is_zero() || !(chi == -clo))
        throw ClassificationFailure("group-like tail is not lambda x^a (x^t - 1)");
    out.lambda = chi;
    return out;
}

NcPoly reconstruct_skew_primitive(const SkewPrimClassification& c, long t) {
    NcPoly f = c.homogeneous_part;
    const long m = c.y_degree == 0 ? c.m : t;
    f.add_term(Word::power(0, c.a + m), c.lambda);
    f.add_term(Word::power(0, c.a), -c.lambda);
    return f;
}

namespace {

// echelon of NcPoly with dependence tracking, leads under the word order
class TrackedSpan {
public:
    explicit TrackedSpan(const WordOrder& order) : order_(&order) {}

    std::optional<std::map<std::size_t, Scalar>> insert(NcPoly p, std::size_t orig) {
        std::map<std::size_t, Scalar> combo{{orig, Scalar(1)}};
        while (!p.is_zero()) {
            const Word lead = p.leading_word(*order_);
            const auto hit = lead_.find(lead);
            if (hit == lead_.end()) break;
            const Scalar c = p.coeff(lead);
            const Entry& e = entries_[hit->second];
            p -= e.value.scale(c);
            for (const auto& [idx, ec] : e.combo) {
                auto [it, fresh] = combo.emplace(idx, -(c * ec));
                if (!fresh) {
                    it->second -= c * ec;
                    if (it->second.is_zero()) combo.erase(it);
                }
            }
        }
        if (p.is_zero()) return combo;
        const Scalar inv = p.leading_coeff(*order_).inverse();
        Entry e{p.scale(inv), {}};
        for (auto& [idx, c] : combo) e.combo.emplace(idx, c * inv);
        lead_.emplace(e.value.leading_word(*order_), entries_.size());
        entries_.push_back(std::move(e));
        return std::nullopt;
    }

private:
    struct Entry {
        NcPoly value;
        std::map<std::size_t, Scalar> combo;
    };
    const WordOrder* order_;
    std::vector<Entry> entries_;
    std::map<Word, std::size_t> lead_;
};

struct ConjugateSetup {
    long b = 0;
    NcPoly w;                      // nf(g^b - 1)
    std::vector<NcPoly> conjugates;  // u_i = nf(g^i y g^-i), i = 0..cap
};

ConjugateSetup conjugate_setup(const HopfPresentation& H, const Word& g,
                               const NcPoly& y, long cap) {
    if (!H.is_group_like_word(g) || g.is_unit())
        throw InvalidParameter("g must be a nontrivial group-like word");
    const auto pair = is_skew_primitive(y, H);
    if (!pair || !pair->first.is_unit())
        throw InvalidParameter("y must be a (1, g^b)-primitive element");

    ConjugateSetup setup;
    // recover b from the pair word
    const Word& v = pair->second;
    bool found = false;
    for (long b = -64; b <= 64 && !found; ++b) {
        if (H.nf(word_pow(g, b)).as_unit_monomial() == std::optional<Word>(v)) {
            setup.b = b;
            found = true;
        }
    }
    if (!found) throw InvalidParameter("pair of y is not a power of g");

    setup.w = H.nf(word_pow(g, setup.b));
    setup.w.add_term(Word::one(), Scalar(-1));

    const NcPoly gp(Scalar(1), g);
    const NcPoly gi(Scalar(1), g.inverse());
    NcPoly cur = H.nf(y);
    setup.conjugates.push_back(cur);
    for (long i = 1; i <= cap; ++i) {
        cur = H.mul(H.mul(gp, cur), gi);
        setup.conjugates.push_back(cur);
    }
    return setup;
}

bool all_rational(const std::vector<Scalar>& xs, const Scalar& extra) {
    for (const auto& x : xs)
        if (!x.is_rational()) return false;
    return extra.is_rational();
}

}  // namespace

std::optional<ConjugateRelation> find_conjugate_relation(const HopfPresentation& H,
                                                         const Word& g, const NcPoly& y,
                                                         long cap) {
    if (cap < 1) throw InvalidParameter("cap must be >= 1");
    const ConjugateSetup setup = conjugate_setup(H, g, y, cap);
    const std::size_t w_index = static_cast<std::size_t>(cap) + 1;

    TrackedSpan span(H.order());
    if (span.insert(setup.conjugates[0], 0))
        throw InvalidParameter("y lies in the span of g^b - 1");
    if (!setup.w.is_zero()) span.insert(setup.w, w_index);

    for (long i = 1; i <= cap; ++i) {
        auto dep = span.insert(setup.conjugates[i], static_cast<std::size_t>(i));
        if (!dep) continue;

        std::vector<Scalar> a(static_cast<std::size_t>(i) + 1, Scalar(0));
        Scalar lambda(0);
        for (const auto& [idx, c] : *dep) {
            if (idx == w_index)
                lambda = c;
            else
                a[idx] = c;
        }
        // conjugating by g^-1 shifts indices down and fixes g^b - 1, so a
        // relation with a_0 = 0 yields one of lower degree
        std::size_t shift = 0;
        while (shift < a.size() && a[shift].is_zero()) ++shift;
        a.erase(a.begin(), a.begin() + static_cast<long>(shift));

        // normalization: integral coprime coefficients with a_0 > 0 when the
        // relation is rational, else monic at a_0
        Scalar scale = a[0].inverse();
        if (all_rational(a, lambda)) {
            mpz_class lcm_den = 1, gcd_num = 0;
            auto absorb = [&](const Scalar& s) {
                const Rational& r = s.as_rational();
                if (r.is_zero()) return;
                mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r.den().get_mpz_t());
                mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), r.num().get_mpz_t());
            };
            for (const auto& s : a) absorb(s);
            absorb(lambda);
            Rational factor(lcm_den, gcd_num);
            if ((Scalar(factor) * a[0]).as_rational().sign() < 0) factor = -factor;
            scale = Scalar(factor);
        }
        for (auto& s : a) s *= scale;
        lambda *= scale;

        // re-verify the shifted, rescaled relation exactly
        NcPoly check;
        for (std::size_t j = 0; j < a.size(); ++j)
            check += setup.conjugates[j].scale(a[j]);
        check += setup.w.scale(lambda);
        if (!check.is_zero()) throw Error("conjugate relation verification failed");

        return ConjugateRelation{std::move(a), lambda, setup.b};
    }
    return std::nullopt;
}

SubalgebraData find_subalgebra_data(const HopfPresentation& H, const Word& g,
                                    const NcPoly& y, long cap) {
    auto rel = find_conjugate_relation(H, g, y, cap);
    if (!rel)
        throw NoRelation("conjugates of y independent up to cap " + std::to_string(cap));

    std::vector<Rational> pc;
    for (const auto& s : rel->coeffs) pc.push_back(s.as_rational());
    const UniPoly p{std::vector<Rational>(pc)};

    const ConjugateSetup setup = conjugate_setup(H, g, y, rel->n());
    const NcPoly gp(Scalar(1), g);

    for (const Scalar& xi : find_roots(p)) {
        const std::vector<Scalar> q = deflate(p, xi);
        NcPoly f;
        for (std::size_t i = 0; i < q.size(); ++i)
            f += setup.conjugates[i].scale(q[i]);
        if (f.is_zero()) continue;
        // degenerate when f falls into k (g^b - 1), i.e. into K_0
        if (!setup.w.is_zero()) {
            const Word lead = setup.w.leading_word(H.order());
            const NcPoly diff = f - setup.w.scale(f.coeff(lead) / setup.w.coeff(lead));
            if (diff.is_zero()) continue;
        }
        f = f.monic(H.order());

        const NcPoly residue = H.mul(gp, f) - H.mul(f, gp).scale(xi);
        const NcPoly target = H.mul(gp, setup.w);  // g (g^b - 1)
        Scalar beta(0);
        if (!residue.is_zero()) {
            if (target.is_zero())
                throw Error("g f - xi f g nonzero with g^b = 1 (falsifies the construction)");
            const Word lead = target.leading_word(H.order());
            beta = residue.coeff(lead) / target.coeff(lead);
            if (!(residue == target.scale(beta)))
                throw Error("g f - xi f g is not a multiple of g (g^b - 1) "
                            "(falsifies the construction)");
        }

        // f must still be a (1, g^b)-primitive
        const auto pair = is_skew_primitive(f, H);
        const Word vb = H.nf(word_pow(g, rel->b)).as_unit_monomial().value();
        if (!pair || !pair->first.is_unit() || !(pair->second == vb))
            throw Error("constructed f lost skew-primitivity (internal error)");

        return SubalgebraData{std::move(f), xi, beta, rel->b, *rel};
    }
    throw DegenerateF("every root yields f in k(g^b - 1)");
}

}  // namespace hopf
