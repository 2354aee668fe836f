#include "pluecker/exterior.hpp"

#include <algorithm>

namespace plk {

std::vector<int> SpaceSpec::labels() const {
    std::vector<int> l;
    l.reserve(dim());
    for (int i = -neg; i <= pos; ++i)
        if (i != 0) l.push_back(i);
    return l;
}

int SpaceSpec::index_of(int label) const {
    if (!contains_label(label)) throw Precondition("label outside space");
    return label < 0 ? label + neg : neg + label - 1;
}

int SpaceSpec::label_at(int index) const {
    if (index < 0 || index >= dim()) throw Precondition("label index out of range");
    return index < neg ? index - neg : index - neg + 1;
}

AltTensor::AltTensor(int degree, const SpaceSpec& space, const Field& field)
    : degree_(degree), space_(space), field_(field) {
    if (degree < 0 || degree > space.dim()) throw Precondition("tensor degree outside [0, dim]");
}

AltTensor AltTensor::basis_tensor(const SpaceSpec& space, const IndexSet& labels, const Field& field) {
    AltTensor t(static_cast<int>(labels.size()), space, field);
    t.set_coefficient(labels, field.one());
    return t;
}

void AltTensor::check_index_set(const IndexSet& labels) const {
    if (static_cast<int>(labels.size()) != degree_) throw Precondition("index set size != degree");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!space_.contains_label(labels[i])) throw Precondition("index set label outside space");
        if (i > 0 && labels[i - 1] >= labels[i]) throw Precondition("index set not strictly ascending");
    }
}

Scalar AltTensor::coefficient(const IndexSet& labels) const {
    auto it = c_.find(labels);
    return it == c_.end() ? field_.zero() : it->second;
}

void AltTensor::add_coefficient(const IndexSet& labels, const Scalar& c) {
    check_index_set(labels);
    if (c.is_zero()) return;
    auto it = c_.find(labels);
    if (it == c_.end()) {
        c_.emplace(labels, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

void AltTensor::set_coefficient(const IndexSet& labels, const Scalar& c) {
    check_index_set(labels);
    if (c.is_zero())
        c_.erase(labels);
    else
        c_[labels] = c;
}

AltTensor& AltTensor::operator+=(const AltTensor& o) {
    if (!(space_ == o.space_) || degree_ != o.degree_) throw Precondition("tensor sum space/degree mismatch");
    for (const auto& [k, v] : o.c_) add_coefficient(k, v);
    return *this;
}

AltTensor& AltTensor::operator-=(const AltTensor& o) {
    if (!(space_ == o.space_) || degree_ != o.degree_) throw Precondition("tensor difference space/degree mismatch");
    for (const auto& [k, v] : o.c_) add_coefficient(k, -v);
    return *this;
}

AltTensor AltTensor::scaled(const Scalar& c) const {
    AltTensor r(degree_, space_, field_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : c_) r.c_[k] = v * c;
    return r;
}

bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.degree_ == b.degree_ && a.space_ == b.space_ && a.c_ == b.c_;
}

int merge_sign(const IndexSet& a, const IndexSet& b, IndexSet* merged) {
    // inversions between the blocks: for each element of b, count larger
    // elements of a that must move past it
    int inv = 0;
    if (merged) {
        merged->clear();
        merged->reserve(a.size() + b.size());
    }
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            if (merged) merged->push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            inv += static_cast<int>(a.size() - i);
            if (merged) merged->push_back(b[j]);
            ++j;
        } else {
            return 0; // repeated label
        }
    }
    return inv % 2 == 0 ? 1 : -1;
}

AltTensor wedge(const AltTensor& a, const AltTensor& b) {
    if (!(a.space() == b.space())) throw Precondition("wedge space mismatch");
    int deg = a.degree() + b.degree();
    if (deg > a.space().dim()) throw Precondition("wedge degree exceeds dimension");
    AltTensor r(deg, a.space(), a.field());
    IndexSet merged;
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms()) {
            int s = merge_sign(ka, kb, &merged);
            if (s == 0) continue;
            Scalar c = va * vb;
            if (s < 0) c = -c;
            r.add_coefficient(merged, c);
        }
    return r;
}

AltTensor wedge_vectors(const SpaceSpec& space, const Field& field,
                        const std::vector<std::vector<Scalar>>& vectors) {
    AltTensor acc(0, space, field);
    acc.set_coefficient({}, field.one());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != space.dim()) throw Precondition("vector dimension mismatch");
        AltTensor one_form(1, space, field);
        for (int i = 0; i < space.dim(); ++i)
            one_form.add_coefficient({space.label_at(i)}, v[i]);
        acc = wedge(acc, one_form);
    }
    return acc;
}

LinearMap LinearMap::identity(const SpaceSpec& s, const Field& field) {
    return {s, s, Matrix::identity(s.dim(), field)};
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    if (!(inner.codomain == domain)) throw Precondition("composition domain mismatch");
    return {inner.domain, codomain, m * inner.m};
}

AltTensor apply_exterior_power(const LinearMap& phi, const AltTensor& omega) {
    if (!(omega.space() == phi.domain)) throw Precondition("tensor not in map domain");
    int p = omega.degree();
    if (p > phi.codomain.dim()) throw Precondition("degree exceeds codomain dimension");
    AltTensor r(p, phi.codomain, omega.field());
    if (p == 0) {
        for (const auto& [k, v] : omega.terms()) r.add_coefficient({}, v);
        return r;
    }
    // coefficient at L is sum_J omega_J det(phi[L, J])
    std::vector<int> cod_labels = phi.codomain.labels();
    int n = static_cast<int>(cod_labels.size());
    std::vector<std::size_t> sel(p);
    std::vector<int> choice(p);
    // iterate over all p-subsets of codomain labels
    for (int i = 0; i < p; ++i) choice[i] = i;
    while (true) {
        IndexSet L(p);
        std::vector<std::size_t> rows(p);
        for (int i = 0; i < p; ++i) {
            L[i] = cod_labels[choice[i]];
            rows[i] = static_cast<std::size_t>(choice[i]);
        }
        Scalar acc = omega.field().zero();
        std::vector<std::size_t> cols(p);
        for (const auto& [J, c] : omega.terms()) {
            for (int i = 0; i < p; ++i) cols[i] = static_cast<std::size_t>(phi.domain.index_of(J[i]));
            Scalar d = minor_det(phi.m, rows, cols);
            if (!d.is_zero()) acc += c * d;
        }
        r.add_coefficient(L, acc);
        // next combination
        int i = p - 1;
        while (i >= 0 && choice[i] == n - p + i) --i;
        if (i < 0) break;
        ++choice[i];
        for (int j = i + 1; j < p; ++j) choice[j] = choice[j - 1] + 1;
    }
    return r;
}

Scalar pairing(const AltTensor& xi, const AltTensor& omega) {
    if (xi.degree() != omega.degree()) throw Precondition("pairing degree mismatch");
    if (!(xi.space() == omega.space().dual())) throw Precondition("pairing needs dual spaces");
    Scalar acc = omega.field().zero();
    for (const auto& [k, v] : xi.terms()) {
        Scalar w = omega.coefficient(k);
        if (!w.is_zero()) acc += v * w;
    }
    return acc;
}

AltTensor hodge_dual(const AltTensor& omega, const Scalar& normalization) {
    if (normalization.is_zero()) throw Precondition("hodge normalization must be nonzero");
    const SpaceSpec& s = omega.space();
    std::vector<int> all = s.labels();
    AltTensor r(s.dim() - omega.degree(), s.dual(), omega.field());
    for (const auto& [k, v] : omega.terms()) {
        IndexSet comp;
        comp.reserve(all.size() - k.size());
        std::set_difference(all.begin(), all.end(), k.begin(), k.end(), std::back_inserter(comp));
        IndexSet merged;
        int sgn = merge_sign(k, comp, &merged);
        Scalar c = v * normalization;
        if (sgn < 0) c = -c;
        r.add_coefficient(comp, c);
    }
    return r;
}

AltTensor tensor_up(const AltTensor& omega, int new_label) {
    const SpaceSpec& s = omega.space();
    if (s.contains_label(new_label)) throw Precondition("label already present in space");
    SpaceSpec ext = s;
    if (new_label == s.pos + 1)
        ext.pos += 1;
    else if (new_label == -(s.neg + 1))
        ext.neg += 1;
    else
        throw Precondition("tensor_up label must extend the space by one");
    AltTensor r(omega.degree() + 1, ext, omega.field());
    for (const auto& [k, v] : omega.terms()) {
        IndexSet merged;
        int sgn = merge_sign(k, {new_label}, &merged);
        Scalar c = v;
        if (sgn < 0) c = -c;
        r.add_coefficient(merged, c);
    }
    return r;
}

AltTensor contract_last(const AltTensor& xi) {
    const SpaceSpec& s = xi.space();
    if (s.pos < 1) throw Precondition("space has no top positive label");
    if (xi.degree() < 1) throw Precondition("contracting a degree-0 tensor");
    int top = s.pos;
    SpaceSpec small = s;
    small.pos -= 1;
    AltTensor r(xi.degree() - 1, small, xi.field());
    for (const auto& [k, v] : xi.terms()) {
        if (k.back() != top) continue; // only the summand with x_i(w) = 1 survives
        IndexSet rest(k.begin(), k.end() - 1);
        // the surviving factor sits in the last slot: sign (-1)^{(p+1)-(p+1)} = +1
        r.add_coefficient(rest, v);
    }
    return r;
}

AltTensor interior_product(const AltTensor& omega, const AltTensor& xi) {
    if (!(xi.space() == omega.space().dual())) throw Precondition("interior product needs dual spaces");
    if (xi.degree() > omega.degree()) throw Precondition("contraction degree exceeds form degree");
    AltTensor r(omega.degree() - xi.degree(), omega.space(), omega.field());
    for (const auto& [q, d] : xi.terms()) {
        for (const auto& [k, c] : omega.terms()) {
            if (!std::includes(k.begin(), k.end(), q.begin(), q.end())) continue;
            // remove the labels of q from k, smallest first, tracking position signs
            IndexSet cur = k;
            int sgn = 1;
            for (int label : q) {
                auto it = std::lower_bound(cur.begin(), cur.end(), label);
                int pos = static_cast<int>(it - cur.begin()); // 0-based
                if (pos % 2 == 1) sgn = -sgn;
                cur.erase(it);
            }
            Scalar t = c * d;
            if (sgn < 0) t = -t;
            r.add_coefficient(cur, t);
        }
    }
    return r;
}

} // namespace plk
