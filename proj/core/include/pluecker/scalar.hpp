#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pluecker/errors.hpp"
#include "pluecker/rng.hpp"

namespace plk {

/// Count of field operations performed since the last reset. Used by the
/// complexity smoke tests; single-threaded by contract.
std::uint64_t scalar_op_count();
void reset_scalar_op_count();

namespace detail {
extern std::uint64_t op_counter;
inline void count_op() { ++op_counter; }
} // namespace detail

/// An exact field element: either an arbitrary-precision rational in lowest
/// terms, or a canonical residue modulo a prime. The field is part of the
/// value; mixing fields throws FieldMismatch. No operation ever rounds.
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& q);
    static Scalar residue(std::uint64_t value, std::uint64_t prime);

    bool is_rational_field() const { return mod_ == 0; }
    std::uint64_t modulus() const { return mod_; }
    const mpq_class& rat() const { return q_; }
    std::uint64_t res() const { return r_; }

    bool is_zero() const;
    bool is_one() const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    void check_same_field(const Scalar& o) const {
        if (mod_ != o.mod_) throw FieldMismatch();
    }

    mpq_class q_{};
    std::uint64_t r_ = 0;
    std::uint64_t mod_ = 0; // 0 means the rational field
};

/// Field descriptor: the rationals (modulus 0) or F_p.
class Field {
public:
    Field() = default; // rationals
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    std::uint64_t modulus() const { return mod_; }
    bool is_rationals() const { return mod_ == 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    /// Uniform sample: integer in [-bound, bound] over Q, residue in [0, p) over F_p.
    Scalar sample(SplitMix64& rng, long bound) const;
    Scalar parse(const std::string& text) const;

    friend bool operator==(const Field& a, const Field& b) { return a.mod_ == b.mod_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    std::uint64_t mod_ = 0;
};

/// Map a scalar into the given field. Rational -> F_p reduces num * den^{-1}
/// and requires the denominator to be invertible mod p.
Scalar reduce_to(const Scalar& a, const Field& f);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

} // namespace plk
