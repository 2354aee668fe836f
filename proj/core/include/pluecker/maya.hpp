#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pluecker/exterior.hpp"
#include "pluecker/scalar.hpp"

namespace plk {

/// Cocompact subset I of the nonzero integers with i_k = k for k >> 0 up to a
/// constant (the charge). Stored as the finite data that distinguishes I from
/// {1,2,3,...}: its negative members and its absent positives.
class MayaIndex {
public:
    MayaIndex() = default; // I = {1,2,3,...}
    MayaIndex(std::vector<int> neg_members, std::vector<int> pos_absent);
    /// I = head ∪ {tail_start, tail_start+1, ...}; head must lie below tail_start.
    static MayaIndex from_head(const std::vector<int>& head, int tail_start);

    const std::vector<int>& neg_members() const { return neg_; }
    const std::vector<int>& pos_absent() const { return absent_; }

    int charge() const { return static_cast<int>(neg_.size()) - static_cast<int>(absent_.size()); }
    bool contains(int label) const;
    /// The k smallest elements i_1 < ... < i_k.
    std::vector<int> enumerate(int count) const;
    int element(int k) const; // i_k, 1-based
    /// Smallest t >= 1 with {t, t+1, ...} contained in I.
    int tail_start() const;

    MayaIndex without(int member) const;
    MayaIndex with(int non_member) const;

    /// Total order: by charge, then lexicographically on the offset sequence
    /// (k - i_k)_k. On charge-0 indices this is the lexicographic order on
    /// partition_of, which has no ties.
    std::strong_ordering operator<=>(const MayaIndex& o) const;
    bool operator==(const MayaIndex& o) const { return neg_ == o.neg_ && absent_ == o.absent_; }

    std::string str() const; // "neg=[-3,-2] absent=[3,5]"
    static MayaIndex parse(const std::string& text);

private:
    std::vector<int> neg_;    // ascending, all < 0
    std::vector<int> absent_; // ascending, all > 0
};

struct Partition {
    std::vector<int> parts; // weakly decreasing positive entries

    Partition() = default;
    explicit Partition(std::vector<int> p);
    bool contains(const Partition& other) const; // componentwise
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const; // "4,4,2,2,1"
};

/// Young diagram with row lengths k - i_k (charge 0 only). Injective, with
/// maya_from_partition as left inverse on its image.
Partition partition_of(const MayaIndex& I);
MayaIndex maya_from_partition(const Partition& lambda);

/// Cells of the Maya lattice path: row k has k - i_k - 1 cells when i_k < 0
/// and k - i_k cells otherwise. This is the classical bijection with all
/// Young diagrams; the minimal Pfaffian variables are exact rectangles here.
Partition cell_partition(const MayaIndex& I);

/// x_I <= x_J iff i_k <= j_k for all k; equivalently partition containment.
bool leq(const MayaIndex& I, const MayaIndex& J);

/// Finitary permutation of the nonzero integers, given by its finite support.
class FinitaryPermutation {
public:
    FinitaryPermutation() = default;
    explicit FinitaryPermutation(const std::map<int, int>& moves); // validated bijection
    static FinitaryPermutation transposition(int a, int b);
    int apply(int label) const;
    const std::map<int, int>& moves() const { return moves_; }

private:
    std::map<int, int> moves_;
};

/// Image of I under pi together with the sign (-1)^{#inverted member pairs}.
std::pair<int, MayaIndex> permute(const FinitaryPermutation& pi, const MayaIndex& I);

/// Result of a derivation step on a basis variable: sign 0 means annihilated.
struct DeriveResult {
    int sign = 0;
    MayaIndex index{};
};

/// The derivation d_{kl} = x_k d/dx_l on a basis vector x_I:
///   x_I           if k = l and k in I,
///   +- x_{I\l+k}  if k not in I and l in I,
///   0             otherwise,
/// with sign (-1)^{#elements of I strictly between k and l}.
DeriveResult derive_variable(int k, int l, const MayaIndex& I);

/// Ordered derivation word, applied right to left.
using DerivationWord = std::vector<std::pair<int, int>>;

/// Polynomial in charge-0 variables x_I.
class MayaPoly {
public:
    using Monomial = std::vector<MayaIndex>; // sorted, duplicates allowed

    explicit MayaPoly(const Field& field = Field()) : field_(field) {}
    static MayaPoly variable(const MayaIndex& I, const Field& field = Field());
    static MayaPoly constant(const Scalar& c, const Field& field = Field());

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    int degree() const;
    std::set<MayaIndex> variables() const;

    void add_term(Monomial m, const Scalar& c); // sorts m
    MayaPoly& operator+=(const MayaPoly& o);
    MayaPoly& operator-=(const MayaPoly& o);
    friend MayaPoly operator+(MayaPoly a, const MayaPoly& b) { return a += b; }
    friend MayaPoly operator-(MayaPoly a, const MayaPoly& b) { return a -= b; }
    friend MayaPoly operator*(const MayaPoly& a, const MayaPoly& b);
    MayaPoly scaled(const Scalar& c) const;
    MayaPoly operator-() const { return scaled(Scalar::rational(-1)); }
    bool operator==(const MayaPoly& o) const { return terms_ == o.terms_; }

    /// Writes the polynomial as c * x_I + rest with x_I-free rest and returns
    /// c; every variable occurrence must be multiplicity one.
    MayaPoly coefficient_of_variable(const MayaIndex& I) const;

    Scalar evaluate(const Field& field,
                    const std::function<Scalar(const MayaIndex&)>& value_of) const;

    /// Evaluation into any commutative ring R: needs R zero/one makers plus
    /// +,*. Used with Polynomial for the symbolic membership test.
    template <class R, class VarFn, class ConstFn>
    R evaluate_in(ConstFn&& constant_of, VarFn&& value_of) const {
        R acc = constant_of(field_.zero());
        for (const auto& [m, c] : terms_) {
            R t = constant_of(c);
            for (const MayaIndex& v : m) t = t * value_of(v);
            acc += t;
        }
        return acc;
    }

    /// Print with the x[i,j] head shorthand; tail_start < 0 picks the
    /// smallest tail that makes every variable's head finite.
    std::string str(int tail_start = -1) const;

private:
    Field field_;
    std::map<Monomial, Scalar> terms_;
};

/// Leibniz action of a derivation word (rightmost factor first).
MayaPoly derive_poly(const DerivationWord& word, const MayaPoly& f);

/// Quadratic relation sum_k (-1)^k x_{I\{i_k}} (x_{i_k} ^ x_J) for charge +1
/// index I and charge -1 index J; terms with i_k in J vanish, so the sum is
/// finite. The insertion sign is (-1)^{#elements of J below i_k}.
MayaPoly plucker_relation(const MayaIndex& I, const MayaIndex& J, const Field& field = Field());

/// Dual-wedge instance projection: coefficient at K is the coefficient of
/// omega at K ∪ {p0+1, ..., p}.
AltTensor project_instance(const AltTensor& omega, int n0, int p0);

/// Section of the projection: coefficient at K ∪ {p0+1, ..., p} is the
/// coefficient of omega at K (wedging with e_{p0+1}, ..., e_p on the right).
AltTensor lift_instance(const AltTensor& omega, int n, int p);

/// x_I evaluated on the canonical lift of omega into the dual infinite wedge.
/// Nonzero only when I is {head} ∪ {p+1, p+2, ...} with the head a legal
/// index set of omega's space; requires deg(omega) == space().pos.
Scalar coordinate_of(const AltTensor& omega, const MayaIndex& I);

/// Good coordinates: |I ∩ Z_{<= -2r+1}| <= 1 and |I^c ∩ Z_{> 2s-1}| <= 1.
bool is_good(const MayaIndex& I, int r, int s);

} // namespace plk
