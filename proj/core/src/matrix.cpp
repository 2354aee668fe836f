#include "pluecker/matrix.hpp"

#include <algorithm>

namespace plk {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw Precondition("matrix product shape/field mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw Precondition("matrix sum shape/field mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
        throw Precondition("matrix difference shape/field mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

// Bareiss elimination on a denominator-cleared integer copy. Returns rank and,
// for square input, the determinant of the integer matrix along with the
// product of the row-clearing factors so the rational determinant can be
// recovered.
struct BareissResult {
    std::size_t rank;
    mpz_class det;     // determinant of the cleared integer matrix (square case)
    mpq_class scale;   // product of clearing factors, det_Q = det / scale
    int sign;
};

BareissResult bareiss(const Matrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpz_class> a(rows * cols);
    mpq_class scale = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            l = lcm(l, m.at(i, j).rat().get_den());
        scale *= l;
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class v = m.at(i, j).rat() * l;
            a[i * cols + j] = v.get_num();
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };
    mpz_class prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class num = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = q;
                detail::op_counter += 4; // two mul, one sub, one exact div
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    BareissResult res;
    res.rank = r;
    res.sign = sign;
    res.scale = scale;
    if (rows == cols) res.det = (r == rows) ? prev : mpz_class(0);
    return res;
}

} // namespace

std::size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.is_rationals()) return bareiss(*this).rank;
    // over F_p: plain elimination, division is exact
    Matrix w(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && w.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(r, j));
        Scalar inv = w.at(r, c).inverse();
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw Precondition("determinant of non-square matrix");
    if (rows_ == 0) return field_.one();
    if (field_.is_rationals()) {
        BareissResult b = bareiss(*this);
        mpq_class d(b.det);
        d = d * b.sign / b.scale;
        return Scalar::rational(d);
    }
    Matrix w(*this);
    Scalar d = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t piv = c;
        while (piv < rows_ && w.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) return field_.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(c, j));
            d = -d;
        }
        d *= w.at(c, c);
        Scalar inv = w.at(c, c).inverse();
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) w.at(i, j) -= f * w.at(c, j);
        }
    }
    return d;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
    Matrix w(*this);
    if (pivots) pivots->clear();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && w.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(r, j));
        Scalar inv = w.at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) w.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) w.at(i, j) -= f * w.at(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return w;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
    std::vector<std::size_t> pivots;
    Matrix e = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Scalar> v(cols_, field_.zero());
        v[c] = field_.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -e.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw Precondition("inverse of non-square matrix");
    Matrix aug = hcat(*this, identity(rows_, field_));
    std::vector<std::size_t> pivots;
    Matrix e = aug.rref(&pivots);
    if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= rows_)) return std::nullopt;
    Matrix inv(rows_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = e.at(i, rows_ + j);
    return inv;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
    Matrix s(rows.size(), cols.size(), field_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s.at(i, j) = at(rows[i], cols[j]);
    return s;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw Precondition("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] += at(i, j) * v[j];
        }
    return r;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix c(rows_, 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size()) throw Precondition("minor must be square");
    std::size_t n = rows.size();
    auto e = [&](std::size_t i, std::size_t j) -> const Scalar& { return m.at(rows[i], cols[j]); };
    switch (n) {
        case 0:
            return m.field().one();
        case 1:
            return e(0, 0);
        case 2:
            return e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
        case 3:
            return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
                   e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
                   e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        default:
            return m.submatrix(rows, cols).det();
    }
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.field() != b.field())
        throw Precondition("hcat shape/field mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, const Field& field) {
    if (cols.empty()) return Matrix(0, 0, field);
    Matrix m(cols[0].size(), cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw Precondition("ragged column list");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix complete_to_basis(const Matrix& cols) {
    std::size_t n = cols.rows(), k = cols.cols();
    if (cols.rank() != k) throw Precondition("columns to complete are dependent");
    Matrix result = cols;
    for (std::size_t i = 0; i < n && result.cols() < n; ++i) {
        Matrix e(n, 1, cols.field());
        e.at(i, 0) = cols.field().one();
        Matrix cand = hcat(result, e);
        if (cand.rank() == result.cols() + 1) result = cand;
    }
    if (result.cols() != n) throw Error("basis completion failed");
    return result;
}

} // namespace plk
