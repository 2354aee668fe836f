#include "pluecker/maya.hpp"

#include <algorithm>
#include <sstream>

namespace plk {

namespace {

bool ascending_unique(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

} // namespace

MayaIndex::MayaIndex(std::vector<int> neg_members, std::vector<int> pos_absent)
    : neg_(std::move(neg_members)), absent_(std::move(pos_absent)) {
    if (!ascending_unique(neg_) || !ascending_unique(absent_))
        throw Precondition("maya index parts must be strictly ascending");
    for (int v : neg_)
        if (v >= 0) throw Precondition("negative member list contains a non-negative label");
    for (int v : absent_)
        if (v <= 0) throw Precondition("absent list contains a non-positive label");
}

MayaIndex MayaIndex::from_head(const std::vector<int>& head, int tail_start) {
    if (tail_start < 1) throw Precondition("tail must start at a positive label");
    std::vector<int> neg, present_pos;
    for (int v : head) {
        if (v == 0) throw Precondition("zero label");
        if (v >= tail_start) throw Precondition("head element reaches into the tail");
        if (v < 0)
            neg.push_back(v);
        else
            present_pos.push_back(v);
    }
    std::sort(neg.begin(), neg.end());
    std::sort(present_pos.begin(), present_pos.end());
    std::vector<int> absent;
    std::size_t idx = 0;
    for (int v = 1; v < tail_start; ++v) {
        if (idx < present_pos.size() && present_pos[idx] == v)
            ++idx;
        else
            absent.push_back(v);
    }
    if (idx != present_pos.size()) throw Precondition("duplicate head element");
    return MayaIndex(std::move(neg), std::move(absent));
}

bool MayaIndex::contains(int label) const {
    if (label == 0) return false;
    if (label < 0) return std::binary_search(neg_.begin(), neg_.end(), label);
    return !std::binary_search(absent_.begin(), absent_.end(), label);
}

std::vector<int> MayaIndex::enumerate(int count) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int v : neg_) {
        if (static_cast<int>(out.size()) == count) return out;
        out.push_back(v);
    }
    int v = 1;
    std::size_t idx = 0;
    while (static_cast<int>(out.size()) < count) {
        while (idx < absent_.size() && absent_[idx] < v) ++idx;
        if (idx < absent_.size() && absent_[idx] == v) {
            ++v;
            continue;
        }
        out.push_back(v);
        ++v;
    }
    return out;
}

int MayaIndex::element(int k) const {
    if (k < 1) throw Precondition("element index is 1-based");
    return enumerate(k).back();
}

int MayaIndex::tail_start() const {
    return absent_.empty() ? 1 : absent_.back() + 1;
}

MayaIndex MayaIndex::without(int member) const {
    if (!contains(member)) throw Precondition("removing a non-member");
    MayaIndex r(*this);
    if (member < 0) {
        r.neg_.erase(std::find(r.neg_.begin(), r.neg_.end(), member));
    } else {
        r.absent_.insert(std::upper_bound(r.absent_.begin(), r.absent_.end(), member), member);
    }
    return r;
}

MayaIndex MayaIndex::with(int non_member) const {
    if (non_member == 0 || contains(non_member)) throw Precondition("adding a member or zero");
    MayaIndex r(*this);
    if (non_member < 0) {
        r.neg_.insert(std::upper_bound(r.neg_.begin(), r.neg_.end(), non_member), non_member);
    } else {
        r.absent_.erase(std::find(r.absent_.begin(), r.absent_.end(), non_member));
    }
    return r;
}

std::strong_ordering MayaIndex::operator<=>(const MayaIndex& o) const {
    int ca = charge(), cb = o.charge();
    if (ca != cb) return ca <=> cb;
    int settle_a = static_cast<int>(neg_.size()) + (absent_.empty() ? 0 : absent_.back());
    int settle_b = static_cast<int>(o.neg_.size()) + (o.absent_.empty() ? 0 : o.absent_.back());
    int K = std::max({settle_a, settle_b, 1}) + 1;
    std::vector<int> ia = enumerate(K), ib = o.enumerate(K);
    for (int k = 0; k < K; ++k) {
        int la = k + 1 - ia[k], lb = k + 1 - ib[k]; // offset sequences
        if (la != lb) return la <=> lb;
    }
    return std::strong_ordering::equal;
}

std::string MayaIndex::str() const {
    std::string out = "neg=[";
    for (std::size_t i = 0; i < neg_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(neg_[i]);
    }
    out += "] absent=[";
    for (std::size_t i = 0; i < absent_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(absent_[i]);
    }
    return out + "]";
}

MayaIndex MayaIndex::parse(const std::string& text) {
    auto read_list = [&](const std::string& key) {
        auto pos = text.find(key + "=[");
        if (pos == std::string::npos) throw ParseError("maya index missing " + key + "=[...]");
        pos += key.size() + 2;
        auto end = text.find(']', pos);
        if (end == std::string::npos) throw ParseError("maya index missing ]");
        std::vector<int> vals;
        std::string body = text.substr(pos, end - pos);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            vals.push_back(std::stoi(item));
        }
        return vals;
    };
    return MayaIndex(read_list("neg"), read_list("absent"));
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Precondition("partition entries must be positive");
        if (i > 0 && parts[i - 1] < parts[i]) throw Precondition("partition must be weakly decreasing");
    }
}

bool Partition::contains(const Partition& other) const {
    if (other.parts.size() > parts.size()) return false;
    for (std::size_t i = 0; i < other.parts.size(); ++i)
        if (parts[i] < other.parts[i]) return false;
    return true;
}

std::string Partition::str() const {
    if (parts.empty()) return "";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

Partition partition_of(const MayaIndex& I) {
    if (I.charge() != 0) throw Precondition("partition_of needs charge 0");
    int settle = static_cast<int>(I.neg_members().size()) +
                 (I.pos_absent().empty() ? 0 : I.pos_absent().back());
    std::vector<int> i = I.enumerate(std::max(settle, 0) + 1);
    std::vector<int> parts;
    for (std::size_t k = 0; k < i.size(); ++k) {
        int l = static_cast<int>(k) + 1 - i[k];
        if (l == 0) break;
        parts.push_back(l);
    }
    return Partition(std::move(parts));
}

MayaIndex maya_from_partition(const Partition& lambda) {
    std::vector<int> neg;
    std::vector<int> present_pos;
    int max_pos = 0;
    for (std::size_t k = 0; k < lambda.parts.size(); ++k) {
        int i = static_cast<int>(k) + 1 - lambda.parts[k];
        if (i == 0) throw Precondition("partition not realizable over zero-skipping labels");
        if (i < 0)
            neg.push_back(i);
        else {
            present_pos.push_back(i);
            max_pos = std::max(max_pos, i);
        }
    }
    std::sort(neg.begin(), neg.end());
    int tail = static_cast<int>(lambda.parts.size()) + 1;
    std::vector<int> head = neg;
    head.insert(head.end(), present_pos.begin(), present_pos.end());
    // elements from position |parts|+1 on are tail, tail values start at that index
    MayaIndex I = MayaIndex::from_head(head, tail);
    if (!(partition_of(I) == lambda)) throw Precondition("partition not realizable");
    return I;
}

Partition cell_partition(const MayaIndex& I) {
    if (I.charge() != 0) throw Precondition("cell_partition needs charge 0");
    int settle = static_cast<int>(I.neg_members().size()) +
                 (I.pos_absent().empty() ? 0 : I.pos_absent().back());
    std::vector<int> i = I.enumerate(std::max(settle, 0) + 1);
    std::vector<int> parts;
    for (std::size_t k = 0; k < i.size(); ++k) {
        int l = static_cast<int>(k) + 1 - i[k] - (i[k] < 0 ? 1 : 0);
        if (l == 0) break;
        parts.push_back(l);
    }
    return Partition(std::move(parts));
}

bool leq(const MayaIndex& I, const MayaIndex& J) {
    if (I.charge() != 0 || J.charge() != 0) throw Precondition("leq needs charge 0");
    int settle_i = static_cast<int>(I.neg_members().size()) +
                   (I.pos_absent().empty() ? 0 : I.pos_absent().back());
    int settle_j = static_cast<int>(J.neg_members().size()) +
                   (J.pos_absent().empty() ? 0 : J.pos_absent().back());
    int K = std::max({settle_i, settle_j, 1});
    std::vector<int> a = I.enumerate(K), b = J.enumerate(K);
    for (int k = 0; k < K; ++k)
        if (a[k] > b[k]) return false;
    return true;
}

FinitaryPermutation::FinitaryPermutation(const std::map<int, int>& moves) : moves_(moves) {
    // a finitary permutation maps its finite support bijectively onto itself
    std::set<int> targets;
    for (const auto& [from, to] : moves_) {
        if (from == 0 || to == 0) throw Precondition("permutation touches label zero");
        if (!targets.insert(to).second) throw Precondition("permutation not injective");
    }
    for (const auto& [from, to] : moves_) {
        (void)from;
        if (moves_.find(to) == moves_.end()) throw Precondition("permutation support is not closed");
    }
    for (auto it = moves_.begin(); it != moves_.end();) {
        if (it->first == it->second)
            it = moves_.erase(it);
        else
            ++it;
    }
}

FinitaryPermutation FinitaryPermutation::transposition(int a, int b) {
    if (a == b) return FinitaryPermutation();
    return FinitaryPermutation({{a, b}, {b, a}});
}

int FinitaryPermutation::apply(int label) const {
    auto it = moves_.find(label);
    return it == moves_.end() ? label : it->second;
}

std::pair<int, MayaIndex> permute(const FinitaryPermutation& pi, const MayaIndex& I) {
    if (pi.moves().empty()) return {1, I};
    int lo = 0, hi = 0;
    for (const auto& [from, to] : pi.moves()) {
        lo = std::min({lo, from, to});
        hi = std::max({hi, from, to});
    }
    // members of I in the support hull; only pairs meeting the hull can invert
    std::vector<int> members;
    for (int v = lo; v <= hi; ++v)
        if (v != 0 && I.contains(v)) members.push_back(v);
    std::vector<int> images;
    images.reserve(members.size());
    for (int v : members) images.push_back(pi.apply(v));
    int inversions = 0;
    for (std::size_t a = 0; a < images.size(); ++a)
        for (std::size_t b = a + 1; b < images.size(); ++b)
            if (images[a] > images[b]) ++inversions;
    MayaIndex J = I;
    for (int v : members) J = J.without(v);
    for (int v : images) {
        if (J.contains(v)) throw Precondition("permutation image collides with fixed members");
        J = J.with(v);
    }
    return {inversions % 2 == 0 ? 1 : -1, J};
}

DeriveResult derive_variable(int k, int l, const MayaIndex& I) {
    if (k == 0 || l == 0) throw Precondition("derivation labels must be nonzero");
    if (k == l)
        return I.contains(k) ? DeriveResult{1, I} : DeriveResult{};
    if (I.contains(k) || !I.contains(l)) return {};
    int lo = std::min(k, l), hi = std::max(k, l);
    int between = 0;
    for (int v = lo + 1; v < hi; ++v)
        if (v != 0 && I.contains(v)) ++between;
    return {between % 2 == 0 ? 1 : -1, I.without(l).with(k)};
}

MayaPoly MayaPoly::variable(const MayaIndex& I, const Field& field) {
    if (I.charge() != 0) throw Precondition("polynomial variables must have charge 0");
    MayaPoly p(field);
    p.terms_[{I}] = field.one();
    return p;
}

MayaPoly MayaPoly::constant(const Scalar& c, const Field& field) {
    MayaPoly p(field);
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

int MayaPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return static_cast<int>(d);
}

std::set<MayaIndex> MayaPoly::variables() const {
    std::set<MayaIndex> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& v : m) vars.insert(v);
    return vars;
}

void MayaPoly::add_term(Monomial m, const Scalar& c) {
    if (c.is_zero()) return;
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MayaPoly& MayaPoly::operator+=(const MayaPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MayaPoly& MayaPoly::operator-=(const MayaPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MayaPoly operator*(const MayaPoly& a, const MayaPoly& b) {
    MayaPoly r(a.field());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            MayaPoly::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

MayaPoly MayaPoly::scaled(const Scalar& c) const {
    MayaPoly r(field_);
    if (c.is_zero()) return r;
    for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
    return r;
}

MayaPoly MayaPoly::coefficient_of_variable(const MayaIndex& I) const {
    MayaPoly r(field_);
    for (const auto& [m, c] : terms_) {
        int mult = static_cast<int>(std::count(m.begin(), m.end(), I));
        if (mult == 0) continue;
        if (mult > 1) throw Precondition("variable occurs with multiplicity > 1");
        Monomial rest;
        bool removed = false;
        for (const auto& v : m) {
            if (!removed && v == I) {
                removed = true;
                continue;
            }
            rest.push_back(v);
        }
        r.add_term(std::move(rest), c);
    }
    return r;
}

Scalar MayaPoly::evaluate(const Field& field,
                          const std::function<Scalar(const MayaIndex&)>& value_of) const {
    Scalar acc = field.zero();
    for (const auto& [m, c] : terms_) {
        Scalar t = reduce_to(c, field);
        for (const MayaIndex& v : m) {
            if (t.is_zero()) break;
            t *= value_of(v);
        }
        acc += t;
    }
    return acc;
}

std::string MayaPoly::str(int tail_start) const {
    if (terms_.empty()) return "0";
    if (tail_start < 0) {
        tail_start = 1;
        for (const auto& [m, c] : terms_)
            for (const MayaIndex& v : m) tail_start = std::max(tail_start, v.tail_start());
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        if (!first) out += cs[0] == '-' ? " - " : " + ";
        if (!first && cs[0] == '-') cs = cs.substr(1);
        first = false;
        bool unit = (cs == "1" || cs == "-1") && !m.empty();
        if (!unit)
            out += cs;
        else if (cs == "-1")
            out += "-";
        bool star = !unit;
        for (auto it = m.rbegin(); it != m.rend(); ++it) { // smaller variables first
            const MayaIndex& v = *it;
            if (star) out += "*";
            star = true;
            out += "x[";
            bool comma = false;
            for (int member : v.neg_members()) {
                if (comma) out += ",";
                comma = true;
                out += std::to_string(member);
            }
            for (int p = 1; p < tail_start; ++p) {
                if (!v.contains(p)) continue;
                if (comma) out += ",";
                comma = true;
                out += std::to_string(p);
            }
            out += "]";
        }
    }
    return out;
}

MayaPoly derive_poly(const DerivationWord& word, const MayaPoly& f) {
    MayaPoly cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto [k, l] = *it;
        MayaPoly next(cur.field());
        for (const auto& [m, c] : cur.terms()) {
            for (std::size_t pos = 0; pos < m.size(); ++pos) {
                DeriveResult d = derive_variable(k, l, m[pos]);
                if (d.sign == 0) continue;
                MayaPoly::Monomial nm = m;
                nm[pos] = d.index;
                Scalar nc = c;
                if (d.sign < 0) nc = -nc;
                next.add_term(std::move(nm), nc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

MayaPoly plucker_relation(const MayaIndex& I, const MayaIndex& J, const Field& field) {
    if (I.charge() != 1) throw Precondition("first index must have charge +1");
    if (J.charge() != -1) throw Precondition("second index must have charge -1");
    MayaPoly rel(field);
    int ts = J.tail_start();
    for (int k = 1;; ++k) {
        int ik = I.element(k);
        if (ik >= ts) break; // from here on i_k lies in J and the term vanishes
        if (J.contains(ik)) continue;
        // count of J-members below i_k: negative members plus positives < i_k
        int below = 0;
        for (int v : J.neg_members())
            if (v < ik) ++below;
        if (ik > 0) {
            int pos_present = ik - 1; // candidates 1..ik-1
            for (int a : J.pos_absent())
                if (a < ik) --pos_present;
            below += pos_present;
        }
        int sign = ((k % 2 == 0 ? 1 : -1) * (below % 2 == 0 ? 1 : -1));
        MayaPoly::Monomial m{I.without(ik), J.with(ik)};
        rel.add_term(std::move(m), sign > 0 ? field.one() : -field.one());
    }
    return rel;
}

AltTensor project_instance(const AltTensor& omega, int n0, int p0) {
    const SpaceSpec& s = omega.space();
    int p = omega.degree();
    if (p != s.pos) throw Precondition("instance tensors must have degree == positive label count");
    if (n0 > s.neg || p0 > p || n0 < 0 || p0 < 0) throw Precondition("projection target out of bounds");
    SpaceSpec target{n0, p0, s.basis};
    AltTensor r(p0, target, omega.field());
    for (const auto& [K, c] : omega.terms()) {
        bool keep = true;
        IndexSet head;
        for (int v : K) {
            if (v > p0) {
                continue; // must be exactly the tail p0+1..p; checked below
            }
            if (v < -n0) {
                keep = false;
                break;
            }
            head.push_back(v);
        }
        if (!keep) continue;
        if (static_cast<int>(head.size()) != p0) continue; // some tail label missing
        // verify the remaining labels are exactly p0+1..p
        bool tail_ok = true;
        int expect = p0 + 1;
        for (int v : K) {
            if (v <= p0) continue;
            if (v != expect++) {
                tail_ok = false;
                break;
            }
        }
        if (!tail_ok || expect != p + 1) continue;
        r.add_coefficient(head, c);
    }
    return r;
}

AltTensor lift_instance(const AltTensor& omega, int n, int p) {
    const SpaceSpec& s = omega.space();
    int p0 = omega.degree();
    if (p0 != s.pos) throw Precondition("instance tensors must have degree == positive label count");
    if (n < s.neg || p < p0) throw Precondition("lift target out of bounds");
    SpaceSpec target{n, p, s.basis};
    AltTensor r(p, target, omega.field());
    for (const auto& [K, c] : omega.terms()) {
        IndexSet full = K;
        for (int v = p0 + 1; v <= p; ++v) full.push_back(v);
        r.add_coefficient(full, c);
    }
    return r;
}

Scalar coordinate_of(const AltTensor& omega, const MayaIndex& I) {
    const SpaceSpec& s = omega.space();
    int p = omega.degree();
    if (p != s.pos) throw Precondition("instance tensors must have degree == positive label count");
    // the lift wedges e_{p+1}, e_{p+2}, ...: I must contain every label > p
    if (!I.pos_absent().empty() && I.pos_absent().back() > p) return omega.field().zero();
    IndexSet head;
    for (int v : I.neg_members()) {
        if (v < -s.neg) return omega.field().zero();
        head.push_back(v);
    }
    for (int v = 1; v <= p; ++v)
        if (I.contains(v)) head.push_back(v);
    if (static_cast<int>(head.size()) != p) return omega.field().zero(); // nonzero charge
    return omega.coefficient(head);
}

bool is_good(const MayaIndex& I, int r, int s) {
    if (I.charge() != 0) throw Precondition("goodness needs charge 0");
    if (r < 1 || s < 1) throw Precondition("goodness needs r, s >= 1");
    int low = 0;
    for (int v : I.neg_members())
        if (v <= -2 * r + 1) ++low;
    int high = 0;
    for (int v : I.pos_absent())
        if (v > 2 * s - 1) ++high;
    return low <= 1 && high <= 1;
}

} // namespace plk
