#pragma once

#include <map>
#include <string>
#include <vector>

#include "pluecker/matrix.hpp"
#include "pluecker/scalar.hpp"

namespace plk {

/// Basis labels are nonzero integers: -n..-1 and 1..p for the space V_{n,p}.
/// Zero is skipped so the setup is symmetric around the origin.
using IndexSet = std::vector<int>; // strictly ascending nonzero labels

enum class Basis { Primal, Dual }; // x_i vectors vs the dual e_i functionals

struct SpaceSpec {
    int neg = 0; // count of negative labels
    int pos = 0; // count of positive labels
    Basis basis = Basis::Primal;

    int dim() const { return neg + pos; }
    bool contains_label(int l) const { return l != 0 && l >= -neg && l <= pos; }
    std::vector<int> labels() const;
    int index_of(int label) const;  // 0-based position in ascending label order
    int label_at(int index) const;
    SpaceSpec dual() const { return {neg, pos, basis == Basis::Primal ? Basis::Dual : Basis::Primal}; }

    friend bool operator==(const SpaceSpec& a, const SpaceSpec& b) {
        return a.neg == b.neg && a.pos == b.pos && a.basis == b.basis;
    }
};

/// Sparse alternating tensor: finite map from ascending index sets to nonzero
/// coefficients. Zero coefficients are never stored; iteration order is the
/// lexicographic order on label sequences, so output is reproducible.
class AltTensor {
public:
    AltTensor() = default;
    AltTensor(int degree, const SpaceSpec& space, const Field& field);
    static AltTensor basis_tensor(const SpaceSpec& space, const IndexSet& labels, const Field& field);

    int degree() const { return degree_; }
    const SpaceSpec& space() const { return space_; }
    const Field& field() const { return field_; }
    const std::map<IndexSet, Scalar>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Scalar coefficient(const IndexSet& labels) const;
    void add_coefficient(const IndexSet& labels, const Scalar& c);
    void set_coefficient(const IndexSet& labels, const Scalar& c);

    AltTensor& operator+=(const AltTensor& o);
    AltTensor& operator-=(const AltTensor& o);
    friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
    friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
    AltTensor scaled(const Scalar& c) const;
    friend bool operator==(const AltTensor& a, const AltTensor& b);

private:
    void check_index_set(const IndexSet& labels) const;

    int degree_ = 0;
    SpaceSpec space_{};
    Field field_{};
    std::map<IndexSet, Scalar> c_;
};

/// Sign of sorting the concatenation a ++ b, or 0 if they share a label.
/// This is the coefficient rule for wedging basis tensors.
int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet* merged);

AltTensor wedge(const AltTensor& a, const AltTensor& b);

/// Pure tensor v_1 ^ ... ^ v_p from coordinate vectors (entries in ascending
/// label order of `space`).
AltTensor wedge_vectors(const SpaceSpec& space, const Field& field,
                        const std::vector<std::vector<Scalar>>& vectors);

struct LinearMap {
    SpaceSpec domain{};
    SpaceSpec codomain{};
    Matrix m{}; // (codomain label index, domain label index)

    static LinearMap identity(const SpaceSpec& s, const Field& field);
    LinearMap compose(const LinearMap& inner) const; // this o inner
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const { return m.apply(v); }
};

/// The p-th exterior power of phi applied to omega: on a pure tensor it is
/// phi(v_1) ^ ... ^ phi(v_p); coefficients are p x p minors of the matrix.
AltTensor apply_exterior_power(const LinearMap& phi, const AltTensor& omega);

/// Dual pairing <xi, omega> with the sum-over-permutations convention, which
/// makes <e_I, x_I> = 1 (not p!) in every characteristic.
Scalar pairing(const AltTensor& xi, const AltTensor& omega);

/// Hodge dual for psi = (coefficient at the full label set) * normalization:
/// on basis tensors, star(x_I) = sgn(I, I^c) * normalization * e_{I^c}.
AltTensor hodge_dual(const AltTensor& omega, const Scalar& normalization);

/// omega ^ w for a new basis vector w with the given label, in the space
/// extended by that label (label must be pos+1 or -(neg+1)).
AltTensor tensor_up(const AltTensor& omega, int new_label);

/// The contraction map dual to tensoring with the top basis vector w:
/// x_1 ^ ... ^ x_{p+1} -> sum_i (-1)^{p+1-i} x_i(w) (x_1 ^ ... x_i-hat ... ^ x_{p+1})
/// restricted to the subspace without the top label.
AltTensor contract_last(const AltTensor& xi);

/// Interior product iota_xi(omega), contracting a dual-basis q-form into a
/// p-form (q <= p). Contracting e_i removes label i with the sign of its
/// position; factors of xi act smallest label first.
AltTensor interior_product(const AltTensor& omega, const AltTensor& xi);

} // namespace plk
