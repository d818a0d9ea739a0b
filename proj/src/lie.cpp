#include "hopf/lie.hpp"

#include <algorithm>

namespace hopf {

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       const std::vector<BracketEntry>& brackets)
    : names_(std::move(names)) {
    const std::size_t d = names_.size();
    if (d == 0) throw InvalidParameter("Lie algebra must have dimension >= 1");
    c_.resize(d);
    for (std::size_t i = 0; i < d; ++i)
        c_[i].assign(d > i + 1 ? d - i - 1 : 0, ScalarVec(d, Scalar(0)));
    for (const auto& b : brackets) {
        if (b.i >= b.j || b.j >= d)
            throw InvalidParameter("bracket entry must have i < j < dim");
        if (b.coeffs.size() != d)
            throw InvalidParameter("bracket coefficient vector has wrong length");
        c_[b.i][b.j - b.i - 1] = b.coeffs;
    }
}

LieAlgebra LieAlgebra::sl2() {
    // basis (h, e, f)
    return LieAlgebra({"h", "e", "f"},
                      {{0, 1, {Scalar(0), Scalar(2), Scalar(0)}},
                       {0, 2, {Scalar(0), Scalar(0), Scalar(-2)}},
                       {1, 2, {Scalar(1), Scalar(0), Scalar(0)}}});
}

LieAlgebra LieAlgebra::heisenberg() {
    return LieAlgebra({"x", "y", "z"}, {{0, 1, {Scalar(0), Scalar(0), Scalar(1)}}});
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(std::move(names), {});
}

ScalarVec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    const std::size_t d = dim();
    if (i == j) return ScalarVec(d, Scalar(0));
    if (i < j) return c_[i][j - i - 1];
    ScalarVec r = c_[j][i - j - 1];
    for (auto& x : r) x = -x;
    return r;
}

ScalarVec LieAlgebra::bracket(const ScalarVec& u, const ScalarVec& v) const {
    const std::size_t d = dim();
    ScalarVec r(d, Scalar(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (v[j].is_zero() || i == j) continue;
            const ScalarVec b = basis_bracket(i, j);
            const Scalar s = u[i] * v[j];
            for (std::size_t k = 0; k < d; ++k) r[k] += s * b[k];
        }
    }
    return r;
}

ScalarMat LieAlgebra::ad_matrix(const ScalarVec& x) const {
    const std::size_t d = dim();
    ScalarMat m(d, ScalarVec(d, Scalar(0)));
    for (std::size_t j = 0; j < d; ++j) {
        ScalarVec ej(d, Scalar(0));
        ej[j] = Scalar(1);
        const ScalarVec col = bracket(x, ej);
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
}

JacobiReport jacobi_check(const LieAlgebra& L) {
    JacobiReport report;
    const std::size_t d = L.dim();
    auto add = [&](const ScalarVec& a, const ScalarVec& b, ScalarVec& acc) {
        const ScalarVec v = L.bracket(a, b);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += v[k];
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                ScalarVec ei(d, Scalar(0)), ej(d, Scalar(0)), ek(d, Scalar(0));
                ei[i] = ej[j] = ek[k] = Scalar(1);
                ScalarVec acc(d, Scalar(0));
                add(ei, L.bracket(ej, ek), acc);
                add(ej, L.bracket(ek, ei), acc);
                add(ek, L.bracket(ei, ej), acc);
                if (std::any_of(acc.begin(), acc.end(),
                                [](const Scalar& s) { return !s.is_zero(); }))
                    report.violations.push_back(
                        "Jacobi identity fails on basis triple (" + L.names()[i] + ", " +
                        L.names()[j] + ", " + L.names()[k] + ")");
            }
    return report;
}

std::vector<std::size_t> rref(ScalarMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t ncols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        const Scalar inv = m[rank][col].inverse();
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            const Scalar f = m[r][col];
            for (std::size_t c = 0; c < ncols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank, ScalarVec(ncols, Scalar(0)));
    return pivots;
}

std::size_t mat_rank(ScalarMat m) { return rref(m).size(); }

std::vector<ScalarVec> kernel_basis(const ScalarMat& m, std::size_t ncols) {
    ScalarMat r = m;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<ScalarVec> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        ScalarVec v(ncols, Scalar(0));
        v[f] = Scalar(1);
        for (std::size_t row = 0; row < pivots.size(); ++row)
            v[pivots[row]] = -r[row][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const ScalarMat& rows, const ScalarVec& target) {
    ScalarMat r = rows;
    const auto pivots = rref(r);
    ScalarVec t = target;
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        const Scalar f = t[pivots[row]];
        if (f.is_zero()) continue;
        for (std::size_t c = 0; c < t.size(); ++c) t[c] -= f * r[row][c];
    }
    return std::all_of(t.begin(), t.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

// span of pairwise brackets of two echelonized subspaces
ScalarMat bracket_span(const LieAlgebra& L, const ScalarMat& a, const ScalarMat& b) {
    ScalarMat out;
    for (const auto& u : a)
        for (const auto& v : b) out.push_back(L.bracket(u, v));
    rref(out);
    return out;
}

ScalarMat full_space(std::size_t d) {
    ScalarMat m(d, ScalarVec(d, Scalar(0)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = Scalar(1);
    return m;
}

}  // namespace

std::vector<std::size_t> lower_central_series(const LieAlgebra& L) {
    const std::size_t d = L.dim();
    std::vector<std::size_t> dims{d};
    ScalarMat whole = full_space(d);
    ScalarMat cur = whole;
    while (true) {
        ScalarMat next = bracket_span(L, whole, cur);
        const std::size_t nd = next.size();
        dims.push_back(nd);
        if (nd == 0 || nd == cur.size()) break;  // reached zero or stabilized
        cur = std::move(next);
    }
    return dims;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back() == 0; }

UniPoly char_poly(const ScalarMat& m) {
    // Faddeev-LeVerrier; exact over Q
    const std::size_t n = m.size();
    ScalarMat a(n, ScalarVec(n, Scalar(0)));
    std::vector<Rational> coeff(n + 1, Rational(0));
    coeff[n] = Rational(1);
    ScalarMat mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            // mk = m * (mk_prev + c_{n-k+1} I)
            ScalarMat tmp = a;
            ScalarMat prod(n, ScalarVec(n, Scalar(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Scalar s(0);
                    for (std::size_t t = 0; t < n; ++t) s += m[i][t] * tmp[t][j];
                    prod[i][j] = s;
                }
            mk = std::move(prod);
        }
        Scalar tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk[i][i];
        const Rational ck = -(tr.as_rational() / Rational(static_cast<long>(k)));
        coeff[n - k] = ck;
        a = mk;
        for (std::size_t i = 0; i < n; ++i) a[i][i] += Scalar(ck);
    }
    return UniPoly(std::move(coeff));
}

namespace {

bool is_zero_matrix(const ScalarMat& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

ScalarMat mat_mul(const ScalarMat& a, const ScalarMat& b) {
    const std::size_t n = a.size();
    ScalarMat r(n, ScalarVec(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s(0);
            for (std::size_t t = 0; t < n; ++t) s += a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

bool ad_nilpotent(const ScalarMat& ad) {
    ScalarMat p = ad;
    for (std::size_t k = 1; k <= ad.size(); ++k) {
        if (is_zero_matrix(p)) return true;
        p = mat_mul(p, ad);
    }
    return is_zero_matrix(p);
}

}  // namespace

TwoDimSubalgebra two_dim_subalgebra(const LieAlgebra& L) {
    const std::size_t d = L.dim();
    if (d < 2) throw InvalidParameter("two_dim_subalgebra requires dim >= 2");
    if (!jacobi_check(L).pass()) throw InvalidParameter("Jacobi identity fails");

    auto finish = [&](ScalarVec u, ScalarVec v) {
        // express [u, v] in the (u, v) basis, exactly
        const ScalarVec w = L.bracket(u, v);
        ScalarMat sys(d, ScalarVec(3, Scalar(0)));
        for (std::size_t i = 0; i < d; ++i) {
            sys[i][0] = u[i];
            sys[i][1] = v[i];
            sys[i][2] = w[i];
        }
        rref(sys);
        Scalar alpha(0), beta(0);
        for (const auto& row : sys) {
            if (!row[0].is_zero())
                alpha = row[2];
            else if (!row[1].is_zero())
                beta = row[2];
            else if (!row[2].is_zero())
                throw Error("bracket escaped the claimed 2-dim subalgebra");
        }
        return TwoDimSubalgebra{std::move(u), std::move(v), alpha, beta};
    };

    if (is_nilpotent(L)) {
        // center is nonzero: kernel of all ad(e_i) stacked
        ScalarMat sys;
        for (std::size_t i = 0; i < d; ++i) {
            ScalarVec ei(d, Scalar(0));
            ei[i] = Scalar(1);
            const ScalarMat ad = L.ad_matrix(ei);
            sys.insert(sys.end(), ad.begin(), ad.end());
        }
        const auto ker = kernel_basis(sys, d);
        if (ker.empty()) throw Error("nilpotent Lie algebra with trivial center");
        const ScalarVec u = ker.front();
        for (std::size_t i = 0; i < d; ++i) {
            ScalarVec v(d, Scalar(0));
            v[i] = Scalar(1);
            if (mat_rank({u, v}) == 2) return finish(u, v);
        }
        throw Error("no complement to the central element");
    }

    // witness search: basis vectors, then pairwise sums and differences
    std::vector<ScalarVec> candidates;
    for (std::size_t i = 0; i < d; ++i) {
        ScalarVec e(d, Scalar(0));
        e[i] = Scalar(1);
        candidates.push_back(e);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (int sign = 0; sign < 2; ++sign) {
                ScalarVec e(d, Scalar(0));
                e[i] = Scalar(1);
                e[j] = Scalar(sign == 0 ? 1 : -1);
                candidates.push_back(e);
            }

    for (const auto& x : candidates) {
        const ScalarMat ad = L.ad_matrix(x);
        if (ad_nilpotent(ad)) continue;
        const UniPoly cp = char_poly(ad);
        for (const Scalar& lam : find_roots(cp)) {
            if (lam.is_zero()) continue;
            // eigenvector: kernel of (ad - lam I)
            ScalarMat shifted = ad;
            for (std::size_t i = 0; i < d; ++i) shifted[i][i] -= lam;
            const auto ker = kernel_basis(shifted, d);
            if (ker.empty()) continue;
            return finish(x, ker.front());
        }
    }
    throw NoWitness("no non-nilpotent element among basis vectors and pairwise sums");
}

}  // namespace hopf
