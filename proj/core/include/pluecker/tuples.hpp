#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pluecker/matrix.hpp"

namespace plk {

/// A p-tuple of matrices of identical shape.
struct MatrixTuple {
    std::vector<Matrix> mats;

    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<Matrix> m);
    std::size_t p() const { return mats.size(); }
    std::size_t rows() const { return mats.at(0).rows(); }
    std::size_t cols() const { return mats.at(0).cols(); }
    const Field& field() const { return mats.at(0).field(); }
};

/// A point of the truncated total space: N x N tuple, pinned column and row
/// blocks, and a free vector.
struct TotPoint {
    MatrixTuple ma;        // p matrices, N x N
    Matrix col;            // N x n
    Matrix row;            // m x N
    std::vector<Scalar> t; // length d

    std::size_t N() const { return ma.rows(); }
    std::size_t n() const { return col.cols(); }
    std::size_t m() const { return row.rows(); }
};

struct TupleRank {
    int value = 0;
    bool exact = false;                                // false: upper bound from sampling
    std::optional<std::pair<Scalar, Scalar>> witness_c; // pencil point attaining the value
};

/// Exact tuple rank min_c rank(sum c_i M_i) over the base field. For p = 2
/// this is the smallest r such that the (r+1)-minors of the pencil share a
/// projective rational zero; limited to p <= 2 and N <= 8.
TupleRank tuple_rank_exact(const MatrixTuple& m);

/// Minimum of rank(sum c_i M_i) over sampled c: an upper bound for the true
/// tuple rank that matches it with high probability.
TupleRank tuple_rank_randomized(const MatrixTuple& m, int trials, std::uint64_t seed,
                                long sample_bound = 1000);

/// A vector v with M_1 v, ..., M_p v linearly independent, verified exactly
/// before returning. Success is searched for, never inferred from a rank
/// hypothesis.
std::vector<Scalar> find_independent_vector(const MatrixTuple& m, std::uint64_t seed,
                                            int max_attempts = 200);

/// Basis (as columns) of an l-dimensional V with dim(M_1 V + ... + M_p V)
/// equal to p*l, built by the quotient recursion and verified exactly.
Matrix find_subspace(const MatrixTuple& m, int l, std::uint64_t seed);

struct NormalForm {
    TotPoint point;
    Matrix left;  // invertible N x N
    Matrix right; // invertible N x N
};

/// GL x GL normal form: transforms x so that col = [0; I_n], row = [0 I_m],
/// and the first l columns of the tuple carry stacked identity blocks with
/// zeros below. left/right are returned for audit; everything verified.
NormalForm normal_form(const TotPoint& x, int l, std::uint64_t seed);

/// The block pattern the normal form must satisfy.
bool normal_form_pattern_ok(const TotPoint& x, int l);

} // namespace plk
