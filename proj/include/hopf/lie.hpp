#pragma once

#include <string>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row major

// One declared bracket [e_i, e_j] = sum_k coeffs[k] e_k, for i < j.
struct BracketEntry {
    std::size_t i, j;
    ScalarVec coeffs;
};

// Finite-dimensional Lie algebra by structure constants; brackets are stored
// for i < j and antisymmetry fills the rest. Undeclared pairs commute.
class LieAlgebra {
public:
    LieAlgebra(std::vector<std::string> names, const std::vector<BracketEntry>& brackets);

    static LieAlgebra sl2();         // [h,e]=2e, [h,f]=-2f, [e,f]=h
    static LieAlgebra heisenberg();  // [x,y]=z, z central
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    // [e_i, e_j] for any i, j
    ScalarVec basis_bracket(std::size_t i, std::size_t j) const;
    ScalarVec bracket(const ScalarVec& u, const ScalarVec& v) const;

    ScalarMat ad_matrix(const ScalarVec& x) const;  // column j = [x, e_j]

private:
    std::vector<std::string> names_;
    std::vector<std::vector<ScalarVec>> c_;  // c_[i][j-i-1] for i < j
};

struct JacobiReport {
    std::vector<std::string> violations;  // one per failing basis triple
    bool pass() const { return violations.empty(); }
};

JacobiReport jacobi_check(const LieAlgebra& L);

// dim L >= dim [L,L] >= dim [L,[L,L]] >= ... until 0 or stabilization
std::vector<std::size_t> lower_central_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

class NoWitness : public Error {
public:
    using Error::Error;
};

struct TwoDimSubalgebra {
    ScalarVec u, v;
    // [u, v] = alpha*u + beta*v, verified exactly
    Scalar alpha, beta;
};

// Bracket-closed 2-dimensional subalgebra: center + complement in the
// nilpotent case, eigenpair of a non-nilpotent ad otherwise. The witness
// search covers basis vectors and their pairwise sums/differences.
TwoDimSubalgebra two_dim_subalgebra(const LieAlgebra& L);

// --- exact linear algebra helpers (shared with the solver) ----------------

// reduced row echelon form in place; returns pivot column per row
std::vector<std::size_t> rref(ScalarMat& m);
std::size_t mat_rank(ScalarMat m);
std::vector<ScalarVec> kernel_basis(const ScalarMat& m, std::size_t ncols);
// expresses target in the span of the rows, if possible
bool in_row_span(const ScalarMat& rows, const ScalarVec& target);

// characteristic polynomial det(sI - M); requires rational entries
UniPoly char_poly(const ScalarMat& m);

}  // namespace hopf
