#include "pluecker/tuples.hpp"

#include <algorithm>

#include "pluecker/rng.hpp"

namespace plk {

MatrixTuple::MatrixTuple(std::vector<Matrix> m) : mats(std::move(m)) {
    if (mats.empty()) throw Precondition("empty matrix tuple");
    for (const Matrix& a : mats)
        if (a.rows() != mats[0].rows() || a.cols() != mats[0].cols() || a.field() != mats[0].field())
            throw Precondition("tuple matrices must share shape and field");
}

namespace {

using QPoly = std::vector<mpq_class>; // univariate, index = degree

QPoly trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

mpq_class eval_qpoly(const QPoly& p, const mpq_class& t) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

QPoly qpoly_mod(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    while (r.size() >= b.size() && !b.empty()) {
        mpq_class f = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
        r = trim(std::move(r));
        if (r.empty()) break;
    }
    return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        QPoly r = qpoly_mod(a, b);
        a = std::move(b);
        b = trim(std::move(r));
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

std::vector<std::uint64_t> factor_u64(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= n && d < 3000000; ++d) {
        while (n % d == 0) {
            if (primes.empty() || primes.back() != d) primes.push_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        if (!is_prime_u64(n)) throw SizeCapExceeded("root search constant too hard to factor");
        primes.push_back(n);
    }
    return primes;
}

void divisors_from(const std::vector<std::pair<std::uint64_t, int>>& pf, std::size_t i,
                   std::uint64_t cur, std::vector<std::uint64_t>& out) {
    if (i == pf.size()) {
        out.push_back(cur);
        return;
    }
    std::uint64_t v = 1;
    for (int e = 0; e <= pf[i].second; ++e) {
        divisors_from(pf, i + 1, cur * v, out);
        if (e < pf[i].second) v *= pf[i].first;
    }
}

std::vector<std::uint64_t> divisors_u64(const mpz_class& z) {
    mpz_class a = abs(z);
    if (a == 0) return {};
    if (!a.fits_ulong_p()) throw SizeCapExceeded("root search constant exceeds 64 bits");
    std::uint64_t n = a.get_ui();
    std::vector<std::pair<std::uint64_t, int>> pf;
    for (std::uint64_t p : factor_u64(n)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        pf.emplace_back(p, e);
    }
    std::vector<std::uint64_t> out;
    divisors_from(pf, 0, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// A rational root of p, if one exists.
std::optional<mpq_class> rational_root(const QPoly& p_in) {
    QPoly p = trim(p_in);
    if (p.empty()) return mpq_class(0); // zero polynomial: everything is a root
    // strip powers of t
    std::size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) return mpq_class(0);
    if (p.size() == 1) return std::nullopt; // nonzero constant
    // clear denominators to a primitive integer polynomial
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, c.get_den());
    std::vector<mpz_class> z;
    z.reserve(p.size());
    for (const auto& c : p) z.push_back(mpq_class(c * l).get_num());
    if (z.size() == 2) { // linear
        mpq_class root(-z[0], z[1]);
        root.canonicalize();
        return root;
    }
    if (z.size() == 3) { // quadratic: rational root iff the discriminant is a square
        mpz_class disc = z[1] * z[1] - 4 * z[2] * z[0];
        if (disc < 0) return std::nullopt;
        if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) return std::nullopt;
        mpq_class root(-z[1] + sqrt(disc), 2 * z[2]);
        root.canonicalize();
        return root;
    }
    for (std::uint64_t num : divisors_u64(z[0]))
        for (std::uint64_t den : divisors_u64(z.back())) {
            for (int sign : {1, -1}) {
                mpq_class cand(mpz_class(static_cast<unsigned long>(num)) * sign,
                               mpz_class(static_cast<unsigned long>(den)));
                cand.canonicalize();
                if (eval_qpoly(p, cand) == 0) return cand;
            }
        }
    return std::nullopt;
}

Matrix pencil_at(const MatrixTuple& m, const Scalar& c1, const Scalar& c2) {
    return m.mats[0].scaled(c1) + m.mats[1].scaled(c2);
}

/// Minor as a binary form, recovered by interpolation: f(t) = det of the
/// pencil minor at (t, 1), with the t^{d}-coefficient equal to the pure
/// M1-minor.
QPoly pencil_minor_form(const MatrixTuple& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    std::size_t d = rows.size();
    const Field field = Field::rationals();
    // d+1 sample points recover a degree-d polynomial
    std::vector<mpq_class> xs, ys;
    for (std::size_t i = 0; i <= d; ++i) {
        mpq_class t(static_cast<long>(i));
        Matrix pm = pencil_at(m, Scalar::rational(t), field.one());
        ys.push_back(pm.submatrix(rows, cols).det().rat());
        xs.push_back(t);
    }
    // Lagrange interpolation
    QPoly acc(d + 1, mpq_class(0));
    for (std::size_t i = 0; i <= d; ++i) {
        QPoly basis{mpq_class(1)};
        mpq_class denom = 1;
        for (std::size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            QPoly next(basis.size() + 1, mpq_class(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * ys[i] / denom;
    }
    return trim(std::move(acc));
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    if (k == 0) {
        visit(c);
        return;
    }
    while (true) {
        if (!visit(c)) return;
        std::size_t i = k - 1;
        while (c[i] == n - k + i) {
            if (i == 0) return;
            --i;
        }
        ++c[i];
        for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

TupleRank tuple_rank_exact(const MatrixTuple& m) {
    std::size_t p = m.p();
    if (p > 2 || std::max(m.rows(), m.cols()) > 8)
        throw SizeCapExceeded("exact tuple rank limited to p <= 2, N <= 8");
    const Field& field = m.field();
    if (!field.is_rationals()) throw Precondition("exact tuple rank runs over the rationals");
    if (p == 1) {
        TupleRank tr;
        tr.value = static_cast<int>(m.mats[0].rank());
        tr.exact = true;
        tr.witness_c = std::make_pair(field.one(), field.zero());
        return tr;
    }
    std::size_t full = std::min(m.rows(), m.cols());
    for (std::size_t r = 0; r < full; ++r) {
        // common projective rational zero of all (r+1)-minors?
        bool all_zero_forms = true;
        bool at_infinity = true; // (1 : 0) kills every form
        QPoly g;                 // gcd of the dehomogenized nonzero forms
        bool gcd_constant = false;
        for_each_subset(m.rows(), r + 1, [&](const std::vector<std::size_t>& rows) {
            bool keep_going = true;
            for_each_subset(m.cols(), r + 1, [&](const std::vector<std::size_t>& cols) {
                QPoly f = pencil_minor_form(m, rows, cols);
                if (f.empty()) return true; // identically zero minor constrains nothing
                all_zero_forms = false;
                if (static_cast<std::size_t>(trim(f).size()) == r + 2) at_infinity = false;
                // at (1:0) the form value is the coefficient of t^{r+1}
                g = g.empty() ? qpoly_gcd(f, f) : qpoly_gcd(g, f);
                if (g.size() <= 1 && at_infinity == false) {
                    gcd_constant = true;
                    keep_going = false;
                    return false;
                }
                return true;
            });
            return keep_going;
        });
        if (all_zero_forms) {
            TupleRank tr;
            tr.value = static_cast<int>(r);
            tr.exact = true;
            tr.witness_c = std::make_pair(field.one(), field.zero());
            return tr;
        }
        if (gcd_constant) continue;
        if (at_infinity) {
            TupleRank tr;
            tr.value = static_cast<int>(r);
            tr.exact = true;
            tr.witness_c = std::make_pair(field.one(), field.zero());
            return tr;
        }
        if (g.size() > 1) {
            if (auto root = rational_root(g)) {
                TupleRank tr;
                tr.value = static_cast<int>(r);
                tr.exact = true;
                tr.witness_c = std::make_pair(Scalar::rational(*root), field.one());
                return tr;
            }
        }
    }
    TupleRank tr;
    tr.value = static_cast<int>(full);
    tr.exact = true;
    return tr;
}

TupleRank tuple_rank_randomized(const MatrixTuple& m, int trials, std::uint64_t seed,
                                long sample_bound) {
    if (trials < 1) throw Precondition("at least one trial required");
    const Field& field = m.field();
    SplitMix64 rng(seed);
    int best = static_cast<int>(std::min(m.rows(), m.cols()));
    std::optional<std::pair<Scalar, Scalar>> witness;
    for (int t = 0; t < trials; ++t) {
        std::vector<Scalar> c;
        for (std::size_t i = 0; i < m.p(); ++i) c.push_back(field.sample(rng, sample_bound));
        Matrix sum(m.rows(), m.cols(), field);
        for (std::size_t i = 0; i < m.p(); ++i) sum = sum + m.mats[i].scaled(c[i]);
        int r = static_cast<int>(sum.rank());
        if (r < best || !witness) {
            best = r;
            witness = std::make_pair(c[0], m.p() > 1 ? c[1] : field.zero());
        }
    }
    TupleRank tr;
    tr.value = best;
    tr.exact = false;
    tr.witness_c = witness;
    return tr;
}

std::vector<Scalar> find_independent_vector(const MatrixTuple& m, std::uint64_t seed,
                                            int max_attempts) {
    const Field& field = m.field();
    SplitMix64 rng(seed);
    long bound = 9;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        if (attempt > 0 && attempt % 32 == 0) bound *= 2;
        std::vector<Scalar> v;
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(field.sample(rng, bound));
        std::vector<std::vector<Scalar>> images;
        for (const Matrix& a : m.mats) images.push_back(a.apply(v));
        Matrix img = from_columns(images, field);
        if (img.rank() == m.p()) return v;
    }
    throw GenericityFailure("no vector with independent images found; "
                            "the tuple rank hypothesis may fail");
}

namespace {

/// Surjection with kernel exactly the column span of `basis`: rows are a
/// basis of the functionals vanishing on it.
Matrix quotient_map(const Matrix& basis) {
    std::vector<std::vector<Scalar>> rows = basis.transpose().kernel();
    Matrix q(rows.size(), basis.rows(), basis.field());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < basis.rows(); ++j) q.at(i, j) = rows[i][j];
    return q;
}

} // namespace

Matrix find_subspace(const MatrixTuple& m, int l, std::uint64_t seed) {
    const Field& field = m.field();
    if (l < 1) throw Precondition("subspace dimension must be positive");
    SplitMix64 rng(seed);
    std::vector<Scalar> v = find_independent_vector(m, rng.next());
    Matrix vcol = from_columns({v}, field);
    if (l == 1) return vcol;

    // quotient both sides: K^{N2}/<v> and K^{N1}/W with W the image span
    std::vector<std::vector<Scalar>> images;
    for (const Matrix& a : m.mats) images.push_back(a.apply(v));
    Matrix w = from_columns(images, field);
    Matrix qv = quotient_map(vcol); // (N2-1) x N2
    Matrix qw = quotient_map(w);    // (N1-p) x N1
    // a right inverse of qv: solve qv * s = I (columns are preimages)
    Matrix s = [&] {
        Matrix aug = hcat(qv, Matrix::identity(qv.rows(), field));
        // solve via rref of [qv | I]: qv has full row rank
        std::vector<std::size_t> piv;
        Matrix e = aug.rref(&piv);
        Matrix sec(qv.cols(), qv.rows(), field);
        for (std::size_t r = 0; r < piv.size(); ++r) {
            if (piv[r] >= qv.cols()) throw Error("quotient section failed");
            for (std::size_t j = 0; j < qv.rows(); ++j)
                sec.at(piv[r], j) = e.at(r, qv.cols() + j);
        }
        return sec;
    }();
    std::vector<Matrix> reduced;
    for (const Matrix& a : m.mats) reduced.push_back(qw * (a * s));
    Matrix sub = find_subspace(MatrixTuple(std::move(reduced)), l - 1, rng.next());
    // pull back: columns s * sub plus v
    Matrix lifted = s * sub;
    Matrix basis = hcat(vcol, lifted);
    // exact certificate: dim(sum M_i V) == p * l
    std::vector<Matrix> blocks;
    for (const Matrix& a : m.mats) blocks.push_back(a * basis);
    Matrix all = blocks[0];
    for (std::size_t i = 1; i < blocks.size(); ++i) all = hcat(all, blocks[i]);
    if (all.rank() != m.p() * static_cast<std::size_t>(l))
        throw GenericityFailure("subspace certificate failed");
    return basis;
}

NormalForm normal_form(const TotPoint& x, int l, std::uint64_t seed) {
    const Field& field = x.ma.field();
    std::size_t N = x.N(), n = x.n(), mm = x.m(), p = x.ma.p();
    if (l < 1) throw Precondition("block size must be positive");
    if (N < n + mm + p * static_cast<std::size_t>(l))
        throw Precondition("N must be at least n + m + p*l");
    if (x.col.rank() != n || x.row.rank() != mm) throw Precondition("pinned blocks must have full rank");

    SplitMix64 rng(seed);
    Matrix left = Matrix::identity(N, field);
    Matrix right = Matrix::identity(N, field);
    auto apply_left = [&](const Matrix& t) { left = t * left; };
    auto apply_right = [&](const Matrix& t) { right = right * t; };

    // step 1: col -> [0; I_n] by row operations
    if (n > 0) {
        // find an invertible T with T * col = [0; I_n]: complete col's columns
        // to a basis, order the completion first
        Matrix fullb = complete_to_basis(x.col); // N x N, first n columns = col
        // reorder columns: completion (n..N-1) first, then col
        Matrix perm(N, N, field);
        for (std::size_t j = n; j < N; ++j) perm.at(j - n, j) = field.one();
        for (std::size_t j = 0; j < n; ++j) perm.at(N - n + j, j) = field.one();
        Matrix arranged = fullb * perm.transpose(); // columns: completion, then col
        Matrix inv = *arranged.inverse();
        apply_left(inv);
    }
    // step 2: row -> [0 I_m] by column operations (does not move col)
    if (mm > 0) {
        Matrix cur_row = x.row;
        Matrix rowsb = complete_to_basis(cur_row.transpose()); // N x N, first m cols = row^T
        Matrix perm(N, N, field);
        for (std::size_t j = mm; j < N; ++j) perm.at(j - mm, j) = field.one();
        for (std::size_t j = 0; j < mm; ++j) perm.at(N - mm + j, j) = field.one();
        Matrix arranged = rowsb * perm.transpose();
        Matrix rinv = arranged.transpose().inverse().value();
        // row * rinv^T? — we need row * T = [0 I_m]; arranged^T has rows:
        // completion^T then row; (arranged^T)^{-1} works from the right
        apply_right(rinv);
    }
    auto current = [&]() {
        TotPoint c;
        std::vector<Matrix> mats;
        for (const Matrix& a : x.ma.mats) mats.push_back(left * (a * right));
        c.ma = MatrixTuple(std::move(mats));
        c.col = left * x.col;
        c.row = x.row * right;
        c.t = x.t;
        return c;
    };
    TotPoint cur = current();

    // step 3: find V and W on the projected tuple (first N-n rows, N-m cols)
    std::vector<std::size_t> proj_rows, proj_cols;
    for (std::size_t i = 0; i < N - n; ++i) proj_rows.push_back(i);
    for (std::size_t j = 0; j < N - mm; ++j) proj_cols.push_back(j);
    std::vector<Matrix> projected;
    for (const Matrix& a : cur.ma.mats) projected.push_back(a.submatrix(proj_rows, proj_cols));
    Matrix v_basis = find_subspace(MatrixTuple(projected), l, rng.next()); // (N-m) x l
    std::vector<Matrix> wcols;
    for (const Matrix& a : projected) wcols.push_back(a * v_basis);
    Matrix w_basis = wcols[0];
    for (std::size_t i = 1; i < wcols.size(); ++i) w_basis = hcat(w_basis, wcols[i]); // (N-n) x pl

    // step 4: column ops on the first N-m columns bring V to <e_1..e_l>
    {
        Matrix vb = complete_to_basis(v_basis); // (N-m) x (N-m), first l cols = V
        Matrix t = Matrix::identity(N, field);
        for (std::size_t i = 0; i < N - mm; ++i)
            for (std::size_t j = 0; j < N - mm; ++j) t.at(i, j) = vb.at(i, j);
        apply_right(t);
        cur = current();
    }
    // step 5: row ops on the first N-n rows bring W to <e_1..e_pl>
    {
        Matrix wb = complete_to_basis(w_basis); // (N-n) x (N-n), first pl cols = W
        Matrix winv = *wb.inverse();
        Matrix t = Matrix::identity(N, field);
        for (std::size_t i = 0; i < N - n; ++i)
            for (std::size_t j = 0; j < N - n; ++j) t.at(i, j) = winv.at(i, j);
        apply_left(t);
        cur = current();
    }
    std::size_t pl = p * static_cast<std::size_t>(l);
    // step 6: row ops on the first pl rows make the stacked blocks the identity
    {
        Matrix stacked(pl, pl, field);
        for (std::size_t hi = 0; hi < p; ++hi)
            for (std::size_t i = 0; i < pl; ++i)
                for (std::size_t j = 0; j < static_cast<std::size_t>(l); ++j)
                    stacked.at(i, hi * l + j) = cur.ma.mats[hi].at(i, j);
        Matrix sinv = *stacked.inverse();
        Matrix t = Matrix::identity(N, field);
        for (std::size_t i = 0; i < pl; ++i)
            for (std::size_t j = 0; j < pl; ++j) t.at(i, j) = sinv.at(i, j);
        apply_left(t);
        cur = current();
    }
    // step 7: clear everything below the identity blocks with the first pl rows
    {
        Matrix t = Matrix::identity(N, field);
        for (std::size_t q = pl; q < N; ++q)
            for (std::size_t hi = 0; hi < p; ++hi)
                for (std::size_t c = 0; c < static_cast<std::size_t>(l); ++c)
                    t.at(q, hi * l + c) = -cur.ma.mats[hi].at(q, c);
        apply_left(t);
        cur = current();
    }
    NormalForm nf{cur, left, right};
    if (!normal_form_pattern_ok(nf.point, l)) throw Error("normal form pattern check failed");
    if (left.det().is_zero() || right.det().is_zero()) throw Error("normal form transform singular");
    return nf;
}

bool normal_form_pattern_ok(const TotPoint& x, int l) {
    std::size_t N = x.N(), n = x.n(), mm = x.m(), p = x.ma.p();
    std::size_t pl = p * static_cast<std::size_t>(l);
    const Field& field = x.ma.field();
    // col = [0; I_n]
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar expect = (i >= N - n && i - (N - n) == j) ? field.one() : field.zero();
            if (!(x.col.at(i, j) == expect)) return false;
        }
    // row = [0 I_m]
    for (std::size_t i = 0; i < mm; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Scalar expect = (j >= N - mm && j - (N - mm) == i) ? field.one() : field.zero();
            if (!(x.row.at(i, j) == expect)) return false;
        }
    // first l columns of component h: identity in row block h, zero elsewhere
    for (std::size_t h = 0; h < p; ++h)
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(l); ++j) {
                bool in_block = i >= h * l && i < (h + 1) * l;
                Scalar expect = (in_block && i - h * l == j) ? field.one() : field.zero();
                if (i >= pl) expect = field.zero();
                if (!(x.ma.mats[h].at(i, j) == expect)) return false;
            }
    return true;
}

} // namespace plk
