#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pluecker/scalar.hpp"

using namespace plk;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a == Scalar::rational(1, 2));
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::rational(3, -6);
    CHECK(b.str() == "-1/2");
    CHECK(Scalar::rational(-7).str() == "-7");
}

TEST_CASE("exact rational arithmetic") {
    Scalar third = Scalar::rational(1, 3);
    Scalar sixth = Scalar::rational(1, 6);
    CHECK(third + sixth == Scalar::rational(1, 2));
    CHECK(third - sixth == sixth);
    CHECK(third * sixth == Scalar::rational(1, 18));
    CHECK(third / sixth == Scalar::rational(2));
    CHECK((-third).str() == "-1/3");
}

TEST_CASE("prime field arithmetic") {
    Field f7 = Field::prime(7);
    CHECK(f7.from_int(3) * f7.from_int(5) == f7.one()); // 15 mod 7 = 1
    CHECK(f7.from_int(-1) == f7.from_int(6));
    CHECK(f7.from_int(3).inverse() == f7.from_int(5));
    CHECK_THROWS_AS(f7.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(f7.one() / f7.zero(), DivisionByZero);
}

TEST_CASE("field mismatch is rejected") {
    Field f7 = Field::prime(7);
    CHECK_THROWS_AS(f7.one() + Scalar::rational(1), FieldMismatch);
    Field f11 = Field::prime(11);
    CHECK_THROWS_AS(f7.one() * f11.one(), FieldMismatch);
}

TEST_CASE("field axioms hold exactly on random rationals") {
    SplitMix64 rng(12345);
    Field q;
    for (int i = 0; i < 200; ++i) {
        Scalar a = Scalar::rational(rng.uniform(-50, 50), rng.uniform(1, 30));
        Scalar b = Scalar::rational(rng.uniform(-50, 50), rng.uniform(1, 30));
        Scalar c = Scalar::rational(rng.uniform(-50, 50), rng.uniform(1, 30));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == q.one());
    }
}

TEST_CASE("prime field agrees with rationals reduced mod p") {
    Field fp = Field::prime(1000003);
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        Scalar a = Scalar::rational(rng.uniform(-900, 900), rng.uniform(1, 50));
        Scalar b = Scalar::rational(rng.uniform(-900, 900), rng.uniform(1, 50));
        CHECK(reduce_to(a + b, fp) == reduce_to(a, fp) + reduce_to(b, fp));
        CHECK(reduce_to(a * b, fp) == reduce_to(a, fp) * reduce_to(b, fp));
        if (!b.is_zero()) CHECK(reduce_to(a / b, fp) == reduce_to(a, fp) / reduce_to(b, fp));
    }
}

TEST_CASE("parsing") {
    Field q;
    CHECK(q.parse("5/2") == Scalar::rational(5, 2));
    CHECK(q.parse("-3") == Scalar::rational(-3));
    CHECK_THROWS_AS(q.parse("x"), ParseError);
    Field fp = Field::prime(97);
    CHECK(fp.parse("100") == fp.from_int(3));
    CHECK(fp.parse("-1") == fp.from_int(96));
}

TEST_CASE("primality checker") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK(is_prime_u64((1ull << 31) + 11));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(1000001)); // 101 * 9901
    CHECK_THROWS(Field::prime(1000001));
}

TEST_CASE("operation counter advances") {
    reset_scalar_op_count();
    Scalar a = Scalar::rational(3), b = Scalar::rational(4);
    Scalar c = a * b + a;
    (void)c;
    CHECK(scalar_op_count() >= 2);
}
