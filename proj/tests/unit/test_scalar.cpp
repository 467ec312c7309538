#include <random>

#include "doctest.h"

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/scalar.hpp"

using namespace skewcliff;

namespace {

Scalar rnd_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Scalar(Rat(num(rng), den(rng)));
}

IntPoly rnd_intpoly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    IntPoly p;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) p = p + IntPoly::monomial(Int(coeff(rng)), i);
    return p;
}

Scalar rnd_ratfun(std::mt19937_64& rng) {
    IntPoly num = rnd_intpoly(rng);
    IntPoly den;
    do {
        den = rnd_intpoly(rng);
    } while (den.is_zero());
    return Scalar::ratfun(num, den);
}

} // namespace

TEST_CASE("intpoly basics") {
    IntPoly q = IntPoly::var();
    IntPoly one(Int(1));
    CHECK((q * q - one).degree() == 2);
    CHECK(IntPoly().is_zero());
    CHECK((q - q).is_zero());
    CHECK((q * q).eval(Rat(3)) == Rat(9));
    CHECK(gcd(q * q - one, q - one) == (q - one));
    CHECK((q * q - one).divexact(q + one) == (q - one));
    IntPoly c = IntPoly::monomial(Int(6), 2) + IntPoly::monomial(Int(-4), 0);
    CHECK(c.content() == Int(2));
}

TEST_CASE("ratfun canonical form") {
    Scalar q = Scalar::q();
    Scalar one = Scalar::one_like(q);
    // (q^2 - 1)/(q - 1) reduces to q + 1
    Scalar r = (q * q - one) / (q - one);
    CHECK(r == q + one);
    CHECK(r.fun().den == IntPoly(Int(1)));
    CHECK(q / q == one);
    // denominator lead normalized positive
    Scalar s = one / -q;
    CHECK(s.fun().den.lead() > 0);
    CHECK((s * (-q)).is_one());
}

TEST_CASE("field axioms on random scalars") {
    std::mt19937_64 rng(12345);
    for (int kind = 0; kind < 2; ++kind) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = kind ? rnd_ratfun(rng) : rnd_rational(rng);
            Scalar b = kind ? rnd_ratfun(rng) : rnd_rational(rng);
            Scalar c = kind ? rnd_ratfun(rng) : rnd_rational(rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + Scalar::zero_like(a) == a);
            CHECK(a * Scalar::one_like(a) == a);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK((a * a.inv()).is_one());
                CHECK(a / a == Scalar::one_like(a));
            }
        }
    }
}

TEST_CASE("scalar compare is a total order") {
    std::mt19937_64 rng(99);
    std::vector<Scalar> xs;
    for (int i = 0; i < 30; ++i) xs.push_back(rnd_rational(rng));
    for (const auto& a : xs)
        for (const auto& b : xs) {
            CHECK(compare(a, b) == -compare(b, a));
            if (compare(a, b) == 0) CHECK(a == b);
            for (const auto& c : xs)
                if (compare(a, b) < 0 && compare(b, c) < 0) CHECK(compare(a, c) < 0);
        }
}

TEST_CASE("mixed kinds refuse implicit arithmetic") {
    Scalar r = Scalar::integer(2);
    Scalar q = Scalar::q();
    CHECK_THROWS_AS((void)(r + q), MixedVariant);
    CHECK_THROWS_AS((void)(r * q), MixedVariant);
    CHECK((r.promote() + q).is_function_kind());
}

TEST_CASE("specialization") {
    Scalar q = Scalar::q();
    Scalar one = Scalar::one_like(q);
    // q - 1/q at q = 3 is 8/3
    Scalar v = q - one / q;
    CHECK(v.specialize(Rat(3)) == Scalar(Rat(8, 3)));
    CHECK(v.specialize(Rat(3)).is_rational_kind());
    // rational scalars pass through untouched
    Scalar r(Rat(5, 7));
    CHECK(r.specialize(Rat(3)) == r);
    // pole raises
    Scalar pole = one / (q - Scalar::integer(1).promote());
    CHECK_THROWS_AS((void)pole.specialize(Rat(1)), PoleAtValue);
}

TEST_CASE("scalar strings round trip through the parser") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Scalar a = rnd_rational(rng);
        CHECK(parse_scalar(a.to_string(), false) == a);
        Scalar f = rnd_ratfun(rng);
        CHECK(parse_scalar(f.to_string(), true) == f);
    }
    CHECK(parse_scalar("(q - 1/q)", true) == Scalar::q() - Scalar::q().inv());
    CHECK(parse_scalar("-3/4", false) == Scalar(Rat(-3, 4)));
}

TEST_CASE("prime field arithmetic") {
    const std::int64_t p = 101;
    CHECK(is_odd_prime(10007));
    CHECK(!is_odd_prime(2));
    CHECK(!is_odd_prime(10005));
    for (std::int64_t v = 1; v < p; ++v) {
        PrimeScalar x{v, p};
        CHECK((x * x.inv()).v == 1);
        CHECK((x + (-x)).is_zero());
    }
    CHECK(reduce_mod_p(Scalar(Rat(1, 2)), 7).v == 4);
}

TEST_CASE("rational reconstruction recovers small fractions") {
    const Int p(10007);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 40);
    for (int i = 0; i < 200; ++i) {
        Rat r(num(rng), den(rng));
        PrimeScalar m = reduce_mod_p(Scalar(r), 10007);
        auto back = rational_reconstruct(Int(m.v), p);
        REQUIRE(back.has_value());
        CHECK(*back == r);
    }
}
