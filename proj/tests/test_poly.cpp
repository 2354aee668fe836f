#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pluecker/poly.hpp"
#include "pluecker/rng.hpp"

using namespace plk;

namespace {

const Field q;

Polynomial random_poly(SplitMix64& rng, int vars, int terms) {
    Polynomial p(q);
    for (int t = 0; t < terms; ++t) {
        Polynomial m = Polynomial::constant(q.sample(rng, 9), q);
        int deg = static_cast<int>(rng.uniform(0, 3));
        for (int i = 0; i < deg; ++i)
            m = m * Polynomial::variable(static_cast<int>(rng.uniform(0, vars - 1)), q);
        p += m;
    }
    return p;
}

} // namespace

TEST_CASE("ring operations and evaluation commute") {
    SplitMix64 rng(13);
    for (int it = 0; it < 60; ++it) {
        Polynomial a = random_poly(rng, 4, 3);
        Polynomial b = random_poly(rng, 4, 3);
        Polynomial c = random_poly(rng, 4, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        std::vector<Scalar> point;
        for (int i = 0; i < 4; ++i) point.push_back(q.sample(rng, 5));
        auto value = [&](int v) { return point[static_cast<std::size_t>(v)]; };
        CHECK((a * b).evaluate(value) == a.evaluate(value) * b.evaluate(value));
        CHECK((a + b).evaluate(value) == a.evaluate(value) + b.evaluate(value));
    }
}

TEST_CASE("zero handling and degrees") {
    Polynomial zero(q);
    Polynomial x = Polynomial::variable(0, q);
    CHECK(zero.is_zero());
    CHECK((x - x).is_zero());
    CHECK((x * x * x).degree() == 3);
    CHECK(Polynomial::constant(q.zero(), q).is_zero());
    CHECK(zero.degree() == 0);
}

TEST_CASE("printing") {
    Polynomial x = Polynomial::variable(0, q);
    Polynomial y = Polynomial::variable(1, q);
    Polynomial p = x * x - y.scaled(Scalar::rational(2));
    CHECK(p.str([](int v) { return v == 0 ? "x" : "y"; }) == "x^2 - 2*y");
}
