#include "pluecker/scalar.hpp"

namespace plk {

namespace detail {
std::uint64_t op_counter = 0;
}

std::uint64_t scalar_op_count() { return detail::op_counter; }
void reset_scalar_op_count() { detail::op_counter = 0; }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero();
    // extended Euclid over signed 128-bit intermediates
    __int128 t = 0, newt = 1;
    __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw Error("modulus is not prime: no inverse");
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint64_t prime) {
    if (prime < 2) throw Error("prime modulus must be at least 2");
    Scalar s;
    s.mod_ = prime;
    s.r_ = value % prime;
    return s;
}

bool Scalar::is_zero() const {
    return mod_ == 0 ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return mod_ == 0 ? q_ == 1 : r_ == 1 % mod_;
}

Scalar Scalar::operator-() const {
    detail::count_op();
    Scalar s(*this);
    if (mod_ == 0) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : mod_ - r_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    detail::count_op();
    if (is_zero()) throw DivisionByZero();
    Scalar s(*this);
    if (mod_ == 0) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = invmod(r_, mod_);
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    detail::count_op();
    if (mod_ == 0) {
        q_ += o.q_;
    } else {
        std::uint64_t v = r_ + o.r_; // mod_ < 2^63 in practice; guard anyway
        if (v < r_ || v >= mod_) v -= mod_;
        r_ = v;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    detail::count_op();
    if (mod_ == 0) {
        q_ -= o.q_;
    } else {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + (mod_ - o.r_);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    detail::count_op();
    if (mod_ == 0) {
        q_ *= o.q_;
    } else {
        r_ = mulmod(r_, o.r_, mod_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero();
    detail::count_op();
    if (mod_ == 0) {
        q_ /= o.q_;
    } else {
        r_ = mulmod(r_, invmod(o.r_, mod_), mod_);
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mod_ != b.mod_) throw FieldMismatch();
    return a.mod_ == 0 ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::str() const {
    if (mod_ == 0) return q_.get_str();
    return std::to_string(r_);
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.mod_ = p;
    return f;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
    if (mod_ == 0) return Scalar::rational(v);
    if (v >= 0) return Scalar::residue(static_cast<std::uint64_t>(v), mod_);
    std::uint64_t a = static_cast<std::uint64_t>(-(v + 1)) + 1; // |v| without UB
    return -Scalar::residue(a % mod_, mod_);
}

Scalar Field::sample(SplitMix64& rng, long bound) const {
    if (mod_ == 0) return Scalar::rational(rng.uniform(-bound, bound));
    return Scalar::residue(static_cast<std::uint64_t>(
                               rng.uniform(0, static_cast<std::int64_t>(mod_ - 1))),
                           mod_);
}

Scalar Field::parse(const std::string& text) const {
    if (text.empty()) throw ParseError("empty scalar");
    if (mod_ == 0) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("bad rational: " + text);
        if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
        q.canonicalize();
        return Scalar::rational(q);
    }
    // residue: optional sign, decimal digits
    mpz_class z;
    if (z.set_str(text, 10) != 0) throw ParseError("bad residue: " + text);
    mpz_class m = mpz_class(static_cast<unsigned long>(mod_));
    mpz_class r = ((z % m) + m) % m;
    return Scalar::residue(r.get_ui(), mod_);
}

Scalar reduce_to(const Scalar& a, const Field& f) {
    if (a.modulus() == f.modulus()) return a;
    if (!a.is_rational_field()) throw FieldMismatch();
    if (f.is_rationals()) return a;
    std::uint64_t p = f.modulus();
    mpz_class m = mpz_class(static_cast<unsigned long>(p));
    mpz_class num = ((a.rat().get_num() % m) + m) % m;
    mpz_class den = ((a.rat().get_den() % m) + m) % m;
    if (den == 0) throw Error("denominator not invertible mod " + std::to_string(p));
    Scalar n = Scalar::residue(num.get_ui(), p);
    Scalar d = Scalar::residue(den.get_ui(), p);
    return n / d;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace plk
