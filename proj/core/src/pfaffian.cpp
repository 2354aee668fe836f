#include "pluecker/pfaffian.hpp"

#include <algorithm>
#include <unordered_map>

namespace plk {

SkewMatrix::SkewMatrix(const Matrix& m) : m_(m) {
    if (m.rows() != m.cols()) throw Precondition("skew matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m.at(i, i).is_zero()) throw Precondition("skew matrix has nonzero diagonal");
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m.at(i, j) == -m.at(j, i))) throw Precondition("matrix is not skew-symmetric");
    }
}

SkewMatrix SkewMatrix::from_upper(std::size_t n, const Field& field,
                                  const std::vector<Scalar>& upper) {
    if (upper.size() != n * (n - 1) / 2) throw Precondition("wrong strict-upper-triangle length");
    Matrix m(n, n, field);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = upper[k];
            m.at(j, i) = -upper[k];
            ++k;
        }
    return SkewMatrix(m);
}

namespace {

Scalar pfaffian_subset(const SkewMatrix& a, std::uint32_t mask,
                       std::unordered_map<std::uint32_t, Scalar>& memo, const Field& field) {
    if (mask == 0) return field.one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    // expansion along the smallest remaining row:
    // Pf(S) = sum_t (-1)^t a_{s_1 s_t} Pf(S \ {s_1, s_t})
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (mask & (1u << i)) idx.push_back(i);
    Scalar acc = field.zero();
    for (std::size_t t = 1; t < idx.size(); ++t) {
        const Scalar& entry = a.at(idx[0], idx[t]);
        if (entry.is_zero()) continue;
        std::uint32_t sub = mask & ~(1u << idx[0]) & ~(1u << idx[t]);
        Scalar term = entry * pfaffian_subset(a, sub, memo, field);
        if (t % 2 == 0) term = -term; // positions are 1-based in the formula
        acc += term;
    }
    memo.emplace(mask, acc);
    return acc;
}

} // namespace

Scalar pfaffian(const SkewMatrix& a) {
    const Field& field = a.matrix().field();
    if (a.size() % 2 == 1) return field.zero();
    if (a.size() > 30) throw SizeCapExceeded("pfaffian limited to size 30");
    std::unordered_map<std::uint32_t, Scalar> memo;
    std::uint32_t mask = a.size() == 32 ? ~0u : ((1u << a.size()) - 1);
    return pfaffian_subset(a, mask, memo, field);
}

int two_form_rank(const AltTensor& omega) {
    if (omega.degree() != 2) throw Precondition("two_form_rank needs a 2-form");
    const SpaceSpec& s = omega.space();
    Matrix g(s.dim(), s.dim(), omega.field());
    for (const auto& [k, c] : omega.terms()) {
        std::size_t i = static_cast<std::size_t>(s.index_of(k[0]));
        std::size_t j = static_cast<std::size_t>(s.index_of(k[1]));
        g.at(i, j) = c;
        g.at(j, i) = -c;
    }
    std::size_t r = g.rank();
    return static_cast<int>(r / 2);
}

namespace {

/// Perfect matchings of `labels` with the permutation sign of the flattened
/// pair sequence; calls out(pairs, sign) for each matching.
void for_each_matching(std::vector<int> labels,
                       const std::function<void(const std::vector<std::pair<int, int>>&, int)>& out) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> flat;
    std::sort(labels.begin(), labels.end());
    const std::vector<int> sorted = labels;

    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& rest) {
        if (rest.empty()) {
            // sign of the permutation taking sorted to flat
            int inv = 0;
            for (std::size_t a = 0; a < flat.size(); ++a)
                for (std::size_t b = a + 1; b < flat.size(); ++b)
                    if (flat[a] > flat[b]) ++inv;
            out(pairs, inv % 2 == 0 ? 1 : -1);
            return;
        }
        int first = rest[0];
        for (std::size_t j = 1; j < rest.size(); ++j) {
            int second = rest[j];
            std::vector<int> next;
            for (std::size_t t = 1; t < rest.size(); ++t)
                if (t != j) next.push_back(rest[t]);
            pairs.emplace_back(first, second);
            flat.push_back(first);
            flat.push_back(second);
            rec(next);
            flat.pop_back();
            flat.pop_back();
            pairs.pop_back();
        }
    };
    rec(labels);
    (void)sorted;
}

MayaIndex pair_variable(int i, int j, int tail_start) {
    return MayaIndex::from_head({i, j}, tail_start);
}

} // namespace

MayaPoly pf_poly(int r, const Field& field) {
    if (r < 1) throw Precondition("pf_poly needs r >= 1");
    std::vector<int> labels;
    for (int v = -2 * (r - 1); v <= 2; ++v)
        if (v != 0) labels.push_back(v);
    MayaPoly p(field);
    for_each_matching(labels, [&](const std::vector<std::pair<int, int>>& pairs, int sign) {
        MayaPoly::Monomial m;
        for (auto [i, j] : pairs) m.push_back(pair_variable(i, j, 3));
        p.add_term(std::move(m), sign > 0 ? field.one() : -field.one());
    });
    return p;
}

MayaIndex pf_min_variable(int r) {
    if (r < 1) throw Precondition("needs r >= 1");
    return MayaIndex::from_head({-2 * r, -2 * r + 1}, 3);
}

MayaIndex pf_star_min_variable(int s) {
    if (s < 1) throw Precondition("needs s >= 1");
    std::vector<int> head{-2, -1};
    for (int v = 1; v <= 2 * s - 2; ++v) head.push_back(v);
    return MayaIndex::from_head(head, 2 * s + 1);
}

MayaPoly pf_star_poly(int s, const Field& field) {
    if (s < 1) throw Precondition("pf_star_poly needs s >= 1");
    if (s == 1) return MayaPoly::variable(MayaIndex::from_head({1, 2}, 3), field);

    // pull Pf_s back along the Hodge dual of \wedge^{2(s-1)} V_{2(s-1),2} and
    // the order-preserving relabeling from V*_{2,2(s-1)}
    int n = 2 * (s - 1); // primal instance (n, 2); dual instance (2, n)
    std::vector<int> primal_labels;
    for (int v = -n; v <= 2; ++v)
        if (v != 0) primal_labels.push_back(v);
    std::vector<int> dual_labels;
    for (int v = -2; v <= n; ++v)
        if (v != 0) dual_labels.push_back(v);
    // sigma: dual label -> primal label, order preserving
    std::map<int, int> sigma_inv; // primal -> dual
    for (std::size_t i = 0; i < primal_labels.size(); ++i)
        sigma_inv[primal_labels[i]] = dual_labels[i];

    MayaPoly raw(field);
    MayaPoly pfs = pf_poly(s, field);
    for (const auto& [m, c] : pfs.terms()) {
        MayaPoly::Monomial nm;
        int sign = 1;
        for (const MayaIndex& var : m) {
            // var is x_{i,j}: read off its head {i, j}
            std::vector<int> ij = var.neg_members();
            for (int v = 1; v <= 2; ++v)
                if (var.contains(v)) ij.push_back(v);
            IndexSet pair(ij.begin(), ij.end());
            IndexSet comp;
            for (int v : primal_labels)
                if (!std::binary_search(pair.begin(), pair.end(), v)) comp.push_back(v);
            IndexSet merged;
            sign *= merge_sign(comp, pair, &merged); // x_comp ^ x_pair = sign * top
            std::vector<int> head;
            for (int v : comp) head.push_back(sigma_inv.at(v));
            nm.push_back(MayaIndex::from_head(head, n + 1));
        }
        Scalar coeff = c;
        if (sign < 0) coeff = -coeff;
        raw.add_term(std::move(nm), coeff);
    }
    // fix the overall sign so the recursion coefficient is exactly Pf*_{s-1}
    MayaPoly prev = pf_star_poly(s - 1, field);
    MayaPoly coeff = raw.coefficient_of_variable(pf_star_min_variable(s - 1));
    if (coeff == prev) return raw;
    if (coeff == -prev) return -raw;
    throw Error("dual Pfaffian recursion anchor failed");
}

namespace {

RecursionCheck recursion_check_impl(const MayaPoly& big, const MayaPoly& small,
                                    const MayaIndex& minimal) {
    RecursionCheck rc{MayaPoly(big.field()), minimal, false};
    rc.q = big - MayaPoly::variable(minimal, big.field()) * small;
    bool ok = true;
    // the minimal variable occurs in big and lies weakly below every variable
    auto vars = big.variables();
    if (vars.find(minimal) == vars.end()) ok = false;
    for (const MayaIndex& v : vars)
        if (!leq(minimal, v)) ok = false;
    // every variable of q sits strictly above the minimal one
    for (const MayaIndex& v : rc.q.variables())
        if (!(leq(minimal, v) && !(v == minimal))) ok = false;
    rc.ok = ok;
    return rc;
}

} // namespace

RecursionCheck check_recursion(int r) {
    if (r < 1) throw Precondition("check_recursion needs r >= 1");
    return recursion_check_impl(pf_poly(r + 1), pf_poly(r), pf_min_variable(r));
}

RecursionCheck check_recursion_star(int s) {
    if (s < 1) throw Precondition("check_recursion_star needs s >= 1");
    return recursion_check_impl(pf_star_poly(s + 1), pf_star_poly(s), pf_star_min_variable(s));
}

DerivationWord reconstruction_word(const MayaIndex& I, int r, int s) {
    if (I.charge() != 0) throw Precondition("reconstruction needs charge 0");
    if (is_good(I, r, s)) throw Precondition("index is good; nothing to reconstruct");
    // charge-0 indices have i_k <= k, so {k : i_k != k} is the prefix of
    // length len(partition_of(I))
    int len = static_cast<int>(partition_of(I).parts.size());
    std::vector<int> elems = I.enumerate(std::max(len, 2 * s));
    DerivationWord word; // built source-first, applied right to left
    int low = 0;
    for (int v : I.neg_members())
        if (v <= -2 * r + 1) ++low;
    if (low > 1) {
        // primal case: targets are the elements -2r, -2r+1, 3, 4, ... of the
        // minimal variable of Pf_{r+1}
        int k = std::max(len, 2);
        for (int j = 1; j <= k; ++j) {
            int target = j == 1 ? -2 * r : (j == 2 ? -2 * r + 1 : j);
            word.emplace_back(elems[j - 1], target);
        }
    } else {
        // dual case: targets are the elements -2, -1, 1, ..., 2s-2, 2s+1, ...
        // of the minimal variable of Pf*_{s+1}
        int k = std::max(len, 2 * s);
        for (int j = 1; j <= k; ++j) {
            int target;
            if (j == 1)
                target = -2;
            else if (j == 2)
                target = -1;
            else if (j <= 2 * s)
                target = j - 2;
            else
                target = j;
            word.emplace_back(elems[j - 1], target);
        }
    }
    std::reverse(word.begin(), word.end()); // rightmost factor acts first
    return word;
}

MayaPoly reconstruction_equation(const MayaIndex& I, int r, int s) {
    if (r < 1 || s < 1) throw Precondition("reconstruction needs r, s >= 1");
    DerivationWord word = reconstruction_word(I, r, s);
    int low = 0;
    for (int v : I.neg_members())
        if (v <= -2 * r + 1) ++low;
    MayaPoly base = low > 1 ? pf_poly(r + 1) : pf_star_poly(s + 1);
    return derive_poly(word, base);
}

} // namespace plk
