#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pluecker/exterior.hpp"
#include "pluecker/maya.hpp"
#include "pluecker/poly.hpp"

namespace plk {

/// One defining equation together with the base instance it lives on.
struct DefiningPoly {
    MayaPoly poly;
    int n0 = 0;
    int p0 = 0;
    std::string name;
};

/// A membership target with explicit defining equations. Only the two
/// families with known finite equation sets are constructible: Grassmannians
/// (pullbacks of the Klein quadric) and the Pfaffian varieties Y^{r,s}.
struct VarietySpec {
    enum class Kind { Grassmannian, Pfaffian };
    Kind kind = Kind::Grassmannian;
    int r = 0, s = 0;
    std::vector<DefiningPoly> polys;

    static VarietySpec grassmannian(const Field& field = Field());
    static VarietySpec pfaffian_variety(int r, int s, const Field& field = Field());
    std::string describe() const;
};

struct Witness {
    LinearMap g;        // certifying linear map (identity for non-randomized tests)
    int poly_index = 0; // index into spec.polys, or -1 for a flattening witness
    Scalar value;       // the nonzero evaluation; re-checkable
    std::string detail; // extra context (flattening index sets, symbolic monomial)
};

struct MembershipVerdict {
    bool in = false;
    std::optional<Witness> witness; // always present on Out
};

struct PureDecomposition {
    bool zero = false;
    bool pure = false;
    Scalar scale;                             // omega = scale * v_1 ^ ... ^ v_p
    std::vector<std::vector<Scalar>> factors; // basis of the divisor space U
};

/// Kernel method: U = {v : v ^ omega = 0} has dimension p exactly when omega
/// is pure, and then a basis of U recovers the factors.
PureDecomposition decompose_pure(const AltTensor& omega);

/// In iff omega is zero or pure. An Out verdict carries a violated flattening
/// iota_xi(omega) ^ omega != 0 as its witness.
MembershipVerdict grassmannian_deterministic(const AltTensor& omega);

/// Group action with the implicit instance identifications: omega is lifted
/// into g's domain and the exterior power applied.
AltTensor act(const LinearMap& g, const AltTensor& omega);

/// x_I coordinate of g(omega) without materializing the full image tensor:
/// sum over terms of omega of the matching p x p minor of g.
Scalar coordinate_after(const LinearMap& g, const AltTensor& omega, const MayaIndex& I);

/// Value of one defining polynomial at the projected image of g(omega).
Scalar evaluate_defining(const LinearMap& g, const AltTensor& omega, const DefiningPoly& f);

/// One-sided randomized membership test. Samples g with integer entries in
/// [-sample_bound, sample_bound] (uniform residues over F_p) and evaluates
/// every defining polynomial at the projected image; any nonzero value is a
/// certified Out. Over F_p the Schwartz-Zippel failure bound is meaningless
/// for small p, so p >= 2^31 is required unless allow_small_field is set.
MembershipVerdict randomized_membership(const AltTensor& omega, const VarietySpec& spec,
                                        int trials, std::uint64_t seed,
                                        long sample_bound = 1000000,
                                        bool allow_small_field = false);

/// Deterministic variant: the entries of g become polynomial variables and
/// the test asks whether every pullback is the zero polynomial. Exponential
/// in p, so the ambient dimension is capped.
MembershipVerdict symbolic_membership(const AltTensor& omega, const VarietySpec& spec,
                                      int dim_cap = 8);

/// Sum of k pure tensors in degree p over K^d with integer factor
/// coordinates in [-coord_bound, coord_bound]; deterministic per seed.
AltTensor secant_sample(int k, int p, int d, std::uint64_t seed,
                        const Field& field = Field(), long coord_bound = 9);

/// Searches for an Out-certificate with g sampled from the dual-space group
/// G_{n', p'} (used to exercise witness reduction).
std::optional<Witness> find_witness_in(const AltTensor& omega, const VarietySpec& spec,
                                       int n_prime, int p_prime, int trials,
                                       std::uint64_t seed, long sample_bound = 1000000);

/// One reduction step of the witness group: lowers p' (or n') by one via
/// g'v = gv - (x_t(gv)/x_t(ge_t)) ge_t at the top (resp. bottom) label, and
/// re-verifies the certificate. Throws GenericityFailure when the pivot
/// coordinate vanishes; the caller re-randomizes g.
Witness reduce_witness_step(const AltTensor& omega, const Witness& w, const VarietySpec& spec);

/// Iterates reduction until g lies in G_{n,p} for omega in wedge^p V*_{n,p}.
Witness reduce_witness(const AltTensor& omega, Witness w, const VarietySpec& spec);

} // namespace plk
