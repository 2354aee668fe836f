#pragma once

#include "pluecker/exterior.hpp"
#include "pluecker/matrix.hpp"
#include "pluecker/maya.hpp"

namespace plk {

/// Skew-symmetric matrix; symmetry and the zero diagonal are enforced at
/// construction.
class SkewMatrix {
public:
    explicit SkewMatrix(const Matrix& m);
    /// Build from the strict upper triangle, row by row:
    /// (a_{1,2}, ..., a_{1,n}, a_{2,3}, ..., a_{n-1,n}).
    static SkewMatrix from_upper(std::size_t n, const Field& field,
                                 const std::vector<Scalar>& upper);

    std::size_t size() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const Scalar& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

private:
    Matrix m_;
};

/// Pfaffian by first-row expansion with memoization on index subsets. Integer
/// coefficients, so it is valid in every characteristic; odd sizes return 0.
/// Satisfies Pf(A)^2 = det(A).
Scalar pfaffian(const SkewMatrix& a);

/// Rank of a 2-form: half the rank of its coefficient matrix
/// ((x_i ^ x_j)(omega))_{ij}, computed by exact elimination.
int two_form_rank(const AltTensor& omega);

/// The symbolic Pfaffian Pf_r: the Pfaffian of (x_{i,j}) over the labels
/// {-2(r-1), ..., -1, 1, 2}, as a polynomial in the charge-0 variables
/// x_{i,j} = x_{{i,j} ∪ {3,4,...}}. Pf_1 = x_{1,2}.
MayaPoly pf_poly(int r, const Field& field = Field());

/// The dual Pfaffian Pf*_s on the codegree-2 instance (2, 2(s-1)): the
/// pullback of Pf_s under the Hodge dual and the order-preserving label swap,
/// scaled so the recursion coefficient is exactly Pf*_{s-1}. Pf*_1 = x_{1,2}.
MayaPoly pf_star_poly(int s, const Field& field = Field());

/// The smallest variable of Pf_{r+1} / Pf*_{s+1} in the partial order.
MayaIndex pf_min_variable(int r);
MayaIndex pf_star_min_variable(int s);

struct RecursionCheck {
    MayaPoly q;        // Pf_{r+1} - x_min Pf_r (resp. the dual difference)
    MayaIndex minimal; // the expected minimal variable
    bool ok = false;   // minimal variable is the unique minimum and q dominates it
};

/// Verifies Pf_{r+1} = x_{-2r,-2r+1} Pf_r + Q_{r+1} with every variable of
/// Q_{r+1} strictly above the minimal variable.
RecursionCheck check_recursion(int r);
/// Dual statement for Pf*_{s+1}.
RecursionCheck check_recursion_star(int s);

/// The derivation word D with D x_min = x_I used to solve for a non-good
/// coordinate (exposed for tests).
DerivationWord reconstruction_word(const MayaIndex& I, int r, int s);

/// For a non-good charge-0 index I, the polynomial D Pf_{r+1} (primal case)
/// or D Pf*_{s+1} (dual case): it vanishes identically on Y^{r,s}, is linear
/// in x_I, and its x_I-coefficient is exactly +-Pf_r (resp. +-Pf*_s).
MayaPoly reconstruction_equation(const MayaIndex& I, int r, int s);

} // namespace plk
