#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pluecker/matrix.hpp"
#include "pluecker/rng.hpp"

using namespace plk;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, const Field& f, SplitMix64& rng, long bound = 9) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.sample(rng, bound);
    return m;
}

// cofactor-expansion determinant, an independent route for small sizes
Scalar det_oracle(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return m.field().one();
    if (n == 1) return m.at(0, 0);
    Scalar acc = m.field().zero();
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        cols.clear();
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) cols.push_back(k);
        Scalar term = m.at(0, j) * det_oracle(m.submatrix(rows, cols));
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion over Q and F_p") {
    SplitMix64 rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(1000003)}) {
        for (int it = 0; it < 30; ++it) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
            Matrix m = random_matrix(n, n, f, rng);
            CHECK(m.det() == det_oracle(m));
        }
    }
}

TEST_CASE("rank via fraction-free elimination") {
    Field q;
    Matrix m(3, 3, q);
    // rows: (1,2,3), (2,4,6), (1,0,1) -> rank 2
    long vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Scalar::rational(vals[i][j]);
    CHECK(m.rank() == 2);
    CHECK(Matrix::identity(4, q).rank() == 4);
    CHECK(Matrix(2, 5, q).rank() == 0);
}

TEST_CASE("rank with rational entries") {
    Field q;
    Matrix m(2, 2, q);
    m.at(0, 0) = Scalar::rational(1, 2);
    m.at(0, 1) = Scalar::rational(1, 3);
    m.at(1, 0) = Scalar::rational(3, 2);
    m.at(1, 1) = Scalar::rational(1, 1);
    CHECK(m.det() == Scalar::rational(0)); // rows proportional
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel really spans the null space") {
    SplitMix64 rng(21);
    Field q;
    for (int it = 0; it < 25; ++it) {
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        Matrix m = random_matrix(r, c, q, rng, 4);
        auto ker = m.kernel();
        CHECK(ker.size() == c - m.rank());
        for (const auto& v : ker) {
            auto img = m.apply(v);
            for (const auto& x : img) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("inverse") {
    SplitMix64 rng(5);
    Field q;
    for (int it = 0; it < 20; ++it) {
        Matrix m = random_matrix(4, 4, q, rng);
        auto inv = m.inverse();
        if (m.det().is_zero()) {
            CHECK_FALSE(inv.has_value());
        } else {
            REQUIRE(inv.has_value());
            CHECK(*inv * m == Matrix::identity(4, q));
        }
    }
}

TEST_CASE("complete_to_basis keeps the prefix and is invertible") {
    Field q;
    SplitMix64 rng(33);
    for (int it = 0; it < 20; ++it) {
        Matrix cols = random_matrix(5, 2, q, rng, 5);
        if (cols.rank() != 2) continue;
        Matrix b = complete_to_basis(cols);
        CHECK(b.rows() == 5);
        CHECK(b.cols() == 5);
        CHECK_FALSE(b.det().is_zero());
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(b.at(i, j) == cols.at(i, j));
    }
}
