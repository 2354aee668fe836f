#include "pluecker/membership.hpp"

#include <algorithm>

#include "pluecker/pfaffian.hpp"

namespace plk {

VarietySpec VarietySpec::grassmannian(const Field& field) {
    VarietySpec s;
    s.kind = Kind::Grassmannian;
    s.polys.push_back({pf_poly(2, field), 2, 2, "klein_quadric"});
    return s;
}

VarietySpec VarietySpec::pfaffian_variety(int r, int s_, const Field& field) {
    if (r < 0 || s_ < 0) throw Precondition("pfaffian variety needs r, s >= 0");
    VarietySpec s;
    s.kind = Kind::Pfaffian;
    s.r = r;
    s.s = s_;
    s.polys.push_back({pf_poly(r + 1, field), 2 * r, 2, "pf_" + std::to_string(r + 1)});
    s.polys.push_back({pf_star_poly(s_ + 1, field), 2, 2 * s_, "pf_star_" + std::to_string(s_ + 1)});
    return s;
}

std::string VarietySpec::describe() const {
    if (kind == Kind::Grassmannian) return "gr";
    return "pf " + std::to_string(r) + " " + std::to_string(s);
}

PureDecomposition decompose_pure(const AltTensor& omega) {
    PureDecomposition out;
    const Field& field = omega.field();
    out.scale = field.zero();
    if (omega.is_zero()) {
        out.zero = true;
        return out;
    }
    int p = omega.degree();
    const SpaceSpec& s = omega.space();
    int d = s.dim();
    if (p == 0) {
        out.pure = true;
        out.scale = omega.coefficient({});
        return out;
    }
    // U = {v : v ^ omega = 0}: rows indexed by (p+1)-sets, columns by labels
    std::vector<IndexSet> rows;
    std::map<IndexSet, std::size_t> row_of;
    Matrix mat(0, 0, field);
    {
        // collect candidate (p+1)-sets touching a term of omega
        std::set<IndexSet> row_set;
        for (const auto& [k, c] : omega.terms()) {
            (void)c;
            for (int label : s.labels()) {
                IndexSet merged;
                if (merge_sign(k, {label}, &merged) != 0) row_set.insert(merged);
            }
        }
        rows.assign(row_set.begin(), row_set.end());
        for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
        mat = Matrix(rows.size(), static_cast<std::size_t>(d), field);
        for (const auto& [k, c] : omega.terms()) {
            for (int label : s.labels()) {
                IndexSet merged;
                int sgn = merge_sign({label}, k, &merged);
                if (sgn == 0) continue;
                Scalar v = c;
                if (sgn < 0) v = -v;
                mat.at(row_of.at(merged), static_cast<std::size_t>(s.index_of(label))) += v;
            }
        }
    }
    std::vector<std::vector<Scalar>> ker = mat.kernel();
    if (static_cast<int>(ker.size()) != p) return out; // not pure
    AltTensor rewedged = wedge_vectors(s, field, ker);
    // omega = scale * rewedged for one scalar: find it at the first term
    const auto& [k0, c0] = *rewedged.terms().begin();
    out.scale = omega.coefficient(k0) / c0;
    if (!(rewedged.scaled(out.scale) == omega)) throw Error("pure decomposition mismatch");
    out.pure = true;
    out.factors = std::move(ker);
    return out;
}

MembershipVerdict grassmannian_deterministic(const AltTensor& omega) {
    PureDecomposition d = decompose_pure(omega);
    if (d.zero || d.pure) return {true, std::nullopt};
    // find a violated flattening iota_xi(omega) ^ omega != 0 as the witness
    const SpaceSpec& s = omega.space();
    const Field& field = omega.field();
    int p = omega.degree();
    std::vector<int> labels = s.labels();
    std::vector<int> choice(static_cast<std::size_t>(p - 1));
    for (int i = 0; i < p - 1; ++i) choice[i] = i;
    while (true) {
        IndexSet q(static_cast<std::size_t>(p - 1));
        for (int i = 0; i < p - 1; ++i) q[i] = labels[choice[i]];
        AltTensor xi = AltTensor::basis_tensor(s.dual(), q, field);
        AltTensor t = wedge(interior_product(omega, xi), omega);
        if (!t.is_zero()) {
            const auto& [k, v] = *t.terms().begin();
            Witness w;
            w.g = LinearMap::identity(s, field);
            w.poly_index = -1;
            w.value = v;
            std::string ks;
            for (std::size_t i = 0; i < k.size(); ++i)
                ks += (i ? "," : "") + std::to_string(k[i]);
            w.detail = "flattening xi={";
            for (std::size_t i = 0; i < q.size(); ++i)
                w.detail += (i ? "," : "") + std::to_string(q[i]);
            w.detail += "} coefficient at {" + ks + "}";
            return {false, w};
        }
        int i = p - 2;
        while (i >= 0 && choice[i] == static_cast<int>(labels.size()) - (p - 1) + i) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < p - 1; ++j) choice[j] = choice[j - 1] + 1;
    }
    throw Error("non-pure tensor with no violated flattening");
}

AltTensor act(const LinearMap& g, const AltTensor& omega) {
    AltTensor lifted = omega;
    if (!(omega.space() == g.domain)) {
        if (omega.space().basis != g.domain.basis)
            throw Precondition("action basis mismatch");
        lifted = lift_instance(omega, g.domain.neg, g.domain.pos);
    }
    return apply_exterior_power(g, lifted);
}

Scalar coordinate_after(const LinearMap& g, const AltTensor& omega, const MayaIndex& I) {
    const Field& field = omega.field();
    const SpaceSpec& target = g.codomain;
    int p = target.pos;
    if (!I.pos_absent().empty() && I.pos_absent().back() > p) return field.zero();
    IndexSet head;
    for (int v : I.neg_members()) {
        if (v < -target.neg) return field.zero();
        head.push_back(v);
    }
    for (int v = 1; v <= p; ++v)
        if (I.contains(v)) head.push_back(v);
    if (static_cast<int>(head.size()) != p) return field.zero();

    AltTensor lifted = omega;
    if (!(omega.space() == g.domain)) lifted = lift_instance(omega, g.domain.neg, g.domain.pos);

    std::vector<std::size_t> rows(head.size());
    for (std::size_t i = 0; i < head.size(); ++i)
        rows[i] = static_cast<std::size_t>(target.index_of(head[i]));
    Scalar acc = field.zero();
    std::vector<std::size_t> cols;
    for (const auto& [J, c] : lifted.terms()) {
        cols.resize(J.size());
        for (std::size_t i = 0; i < J.size(); ++i)
            cols[i] = static_cast<std::size_t>(g.domain.index_of(J[i]));
        Scalar det = minor_det(g.m, rows, cols);
        if (!det.is_zero()) acc += c * det;
    }
    return acc;
}

Scalar evaluate_defining(const LinearMap& g, const AltTensor& omega, const DefiningPoly& f) {
    const Field& field = omega.field();
    return f.poly.evaluate(field, [&](const MayaIndex& I) { return coordinate_after(g, omega, I); });
}

MembershipVerdict randomized_membership(const AltTensor& omega, const VarietySpec& spec,
                                        int trials, std::uint64_t seed, long sample_bound,
                                        bool allow_small_field) {
    if (trials < 1) throw Precondition("at least one trial required");
    const Field& field = omega.field();
    if (!field.is_rationals() && field.modulus() < (1ull << 31) && !allow_small_field)
        throw Precondition("field too small for a meaningful failure bound; "
                           "p >= 2^31 required (or allow_small_field)");
    const SpaceSpec& s = omega.space();
    if (s.pos != omega.degree()) throw Precondition("membership input must satisfy degree == pos");
    int d = s.dim();
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        // random isomorphism onto the dual instance space
        LinearMap g;
        g.domain = s;
        g.codomain = SpaceSpec{s.neg, s.pos, Basis::Dual};
        for (int attempt = 0;; ++attempt) {
            Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d), field);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                        field.sample(rng, sample_bound);
            if (!m.det().is_zero()) {
                g.m = std::move(m);
                break;
            }
            if (attempt > 64) throw GenericityFailure("cannot sample an invertible map");
        }
        for (std::size_t k = 0; k < spec.polys.size(); ++k) {
            Scalar v = evaluate_defining(g, omega, spec.polys[k]);
            if (!v.is_zero()) {
                Witness w;
                w.g = g;
                w.poly_index = static_cast<int>(k);
                w.value = v;
                w.detail = spec.polys[k].name;
                return {false, w};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

/// Determinant of a matrix of polynomials by Laplace-free permutation
/// expansion; the minors here are small (p <= dim_cap).
Polynomial det_poly(const std::vector<std::vector<Polynomial>>& m, const Field& field) {
    std::size_t n = m.size();
    Polynomial acc(field);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        int inv = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        Polynomial t = Polynomial::constant(inv % 2 == 0 ? field.one() : -field.one(), field);
        for (std::size_t i = 0; i < n; ++i) t = t * m[i][perm[i]];
        acc += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

MembershipVerdict symbolic_membership(const AltTensor& omega, const VarietySpec& spec, int dim_cap) {
    const Field& field = omega.field();
    const SpaceSpec& s = omega.space();
    if (s.pos != omega.degree()) throw Precondition("membership input must satisfy degree == pos");
    int d = s.dim();
    if (d > dim_cap) throw SizeCapExceeded("symbolic membership capped at dimension " + std::to_string(dim_cap));
    int p = s.pos;
    auto gvar = [&](int i, int j) { return Polynomial::variable(i * d + j, field); };

    for (std::size_t k = 0; k < spec.polys.size(); ++k) {
        const DefiningPoly& f = spec.polys[k];
        // coordinate polynomial for each variable of f
        std::map<MayaIndex, Polynomial> coord;
        for (const MayaIndex& I : f.poly.variables()) {
            Polynomial c(field);
            bool valid = I.pos_absent().empty() || I.pos_absent().back() <= p;
            IndexSet head;
            if (valid) {
                for (int v : I.neg_members()) {
                    if (v < -s.neg) {
                        valid = false;
                        break;
                    }
                    head.push_back(v);
                }
            }
            if (valid) {
                for (int v = 1; v <= p; ++v)
                    if (I.contains(v)) head.push_back(v);
                valid = static_cast<int>(head.size()) == p;
            }
            if (valid) {
                for (const auto& [J, co] : omega.terms()) {
                    std::vector<std::vector<Polynomial>> minor(
                        head.size(), std::vector<Polynomial>(J.size(), Polynomial(field)));
                    for (std::size_t a = 0; a < head.size(); ++a)
                        for (std::size_t b = 0; b < J.size(); ++b)
                            minor[a][b] = gvar(s.index_of(head[a]), s.index_of(J[b]));
                    c += det_poly(minor, field).scaled(reduce_to(co, field));
                }
            }
            coord.emplace(I, std::move(c));
        }
        Polynomial pullback = f.poly.evaluate_in<Polynomial>(
            [&](const Scalar& co) { return Polynomial::constant(reduce_to(co, field), field); },
            [&](const MayaIndex& I) { return coord.at(I); });
        if (!pullback.is_zero()) {
            Witness w;
            w.g = LinearMap::identity(s, field);
            w.poly_index = static_cast<int>(k);
            w.value = pullback.terms().begin()->second;
            w.detail = f.name + ": nonzero pullback with " +
                       std::to_string(pullback.terms().size()) + " monomials";
            return {false, w};
        }
    }
    return {true, std::nullopt};
}

AltTensor secant_sample(int k, int p, int d, std::uint64_t seed, const Field& field,
                        long coord_bound) {
    if (p > d) throw Precondition("degree exceeds dimension");
    if (k < 0) throw Precondition("negative number of summands");
    SpaceSpec s{d - p, p, Basis::Primal};
    SplitMix64 rng(seed);
    AltTensor acc(p, s, field);
    for (int t = 0; t < k; ++t) {
        std::vector<std::vector<Scalar>> vecs;
        for (int i = 0; i < p; ++i) {
            std::vector<Scalar> v;
            v.reserve(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) v.push_back(field.sample(rng, coord_bound));
            vecs.push_back(std::move(v));
        }
        acc += wedge_vectors(s, field, vecs);
    }
    return acc;
}

std::optional<Witness> find_witness_in(const AltTensor& omega, const VarietySpec& spec,
                                       int n_prime, int p_prime, int trials, std::uint64_t seed,
                                       long sample_bound) {
    const Field& field = omega.field();
    const SpaceSpec& s = omega.space();
    if (s.basis != Basis::Dual) throw Precondition("witness search expects a dual-space tensor");
    if (n_prime < s.neg || p_prime < s.pos) throw Precondition("witness group too small");
    SpaceSpec big{n_prime, p_prime, Basis::Dual};
    int d = big.dim();
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        LinearMap g;
        g.domain = big;
        g.codomain = big;
        Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d), field);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    field.sample(rng, sample_bound);
        if (m.det().is_zero()) continue;
        g.m = std::move(m);
        for (std::size_t k = 0; k < spec.polys.size(); ++k) {
            Scalar v = evaluate_defining(g, omega, spec.polys[k]);
            if (!v.is_zero()) {
                Witness w;
                w.g = g;
                w.poly_index = static_cast<int>(k);
                w.value = v;
                w.detail = spec.polys[k].name;
                return w;
            }
        }
    }
    return std::nullopt;
}

Witness reduce_witness_step(const AltTensor& omega, const Witness& w, const VarietySpec& spec) {
    const Field& field = omega.field();
    const SpaceSpec& small = omega.space();
    const SpaceSpec& big = w.g.codomain;
    if (w.poly_index < 0) throw Precondition("cannot reduce a flattening witness");
    const DefiningPoly& f = spec.polys[static_cast<std::size_t>(w.poly_index)];
    int n_prime = big.neg, p_prime = big.pos;
    bool lower_p = p_prime > small.pos;
    bool lower_n = n_prime > small.neg;
    if (!lower_p && !lower_n) throw Precondition("witness already lives in G_{n,p}");

    int pivot_label = lower_p ? p_prime : -n_prime;
    std::size_t pivot_idx = static_cast<std::size_t>(big.index_of(pivot_label));
    Scalar beta = w.g.m.at(pivot_idx, pivot_idx);
    // g e_t must have a nonzero x_t coordinate; otherwise re-randomize
    if (beta.is_zero()) throw GenericityFailure("pivot coordinate vanished");

    SpaceSpec next = big;
    if (lower_p)
        next.pos -= 1;
    else
        next.neg -= 1;
    LinearMap g2;
    g2.domain = next;
    g2.codomain = next;
    g2.m = Matrix(static_cast<std::size_t>(next.dim()), static_cast<std::size_t>(next.dim()), field);
    for (int col = 0; col < next.dim(); ++col) {
        int dom_label = next.label_at(col);
        std::size_t big_col = static_cast<std::size_t>(big.index_of(dom_label));
        Scalar alpha = w.g.m.at(pivot_idx, big_col);
        Scalar factor = alpha / beta;
        for (int row = 0; row < next.dim(); ++row) {
            int cod_label = next.label_at(row);
            std::size_t big_row = static_cast<std::size_t>(big.index_of(cod_label));
            g2.m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
                w.g.m.at(big_row, big_col) - factor * w.g.m.at(big_row, pivot_idx);
        }
    }
    Scalar v = evaluate_defining(g2, omega, f);
    if (v.is_zero()) throw GenericityFailure("certificate lost in reduction step");
    Witness out = w;
    out.g = g2;
    out.value = v;
    return out;
}

Witness reduce_witness(const AltTensor& omega, Witness w, const VarietySpec& spec) {
    const SpaceSpec& small = omega.space();
    while (w.g.codomain.pos > small.pos || w.g.codomain.neg > small.neg)
        w = reduce_witness_step(omega, w, spec);
    return w;
}

} // namespace plk
