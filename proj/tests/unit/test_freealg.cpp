#include <random>

#include "doctest.h"

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/freealg.hpp"

using namespace skewcliff;

namespace {

const std::vector<std::string> kXYZ{"x1", "x2", "x3"};

Word rnd_word(std::mt19937_64& rng, int n, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> gen(0, n - 1);
    Word w(size_t(len(rng)));
    for (auto& g : w) g = gen(rng);
    return w;
}

NCPoly rnd_poly(std::mt19937_64& rng, int n, int maxlen, int terms) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    NCPoly f;
    for (int t = 0; t < terms; ++t)
        f.add_term(rnd_word(rng, n, maxlen), Scalar::integer(coeff(rng)));
    return f;
}

std::vector<Word> all_words(int n, int maxlen) {
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int l = 1; l <= maxlen; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g = 0; g < n; ++g) {
                Word v = w;
                v.push_back(g);
                next.push_back(v);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("structural order is length first") {
    WordDegLex lt;
    CHECK(lt(Word{}, Word{0}));
    CHECK(lt(Word{2}, Word{0, 0}));
    CHECK(lt(Word{0, 1}, Word{0, 2}));
    CHECK(!lt(Word{0, 1}, Word{0, 1}));
}

TEST_CASE("monomial order axioms") {
    auto words = all_words(3, 3);
    for (const auto& order :
         {MonomialOrder::standard(3), MonomialOrder::with_precedence({2, 0, 1})}) {
        // total and antisymmetric
        for (const auto& a : words)
            for (const auto& b : words) {
                CHECK(order.compare(a, b) == -order.compare(b, a));
                if (order.compare(a, b) == 0) CHECK(a == b);
            }
        // degree dominates, so the empty word is minimal
        for (const auto& a : words)
            if (!a.empty()) CHECK(order.compare(Word{}, a) < 0);
        // multiplicative: a < b implies uav < ubv
        std::mt19937_64 rng(5);
        for (int t = 0; t < 2000; ++t) {
            const Word& a = words[rng() % words.size()];
            const Word& b = words[rng() % words.size()];
            if (order.compare(a, b) >= 0) continue;
            Word u = rnd_word(rng, 3, 2), v = rnd_word(rng, 3, 2);
            Word ua = u, ub = u;
            ua.insert(ua.end(), a.begin(), a.end());
            ub.insert(ub.end(), b.begin(), b.end());
            ua.insert(ua.end(), v.begin(), v.end());
            ub.insert(ub.end(), v.begin(), v.end());
            CHECK(order.compare(ua, ub) < 0);
        }
    }
}

TEST_CASE("precedence reranks generators") {
    MonomialOrder o = MonomialOrder::with_precedence({2, 0, 1}); // x3 < x1 < x2
    CHECK(o.compare(Word{2}, Word{0}) < 0);
    CHECK(o.compare(Word{0}, Word{1}) < 0);
    CHECK(o.compare(Word{1, 0}, Word{0, 1}) > 0);
}

TEST_CASE("ncpoly ring identities on random inputs") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 150; ++i) {
        NCPoly a = rnd_poly(rng, 3, 3, 3);
        NCPoly b = rnd_poly(rng, 3, 3, 3);
        NCPoly c = rnd_poly(rng, 3, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
    // noncommutativity witness
    NCPoly x = NCPoly::generator(0, Scalar::integer(1));
    NCPoly y = NCPoly::generator(1, Scalar::integer(1));
    CHECK(x * y != y * x);
}

TEST_CASE("homogeneity and degrees") {
    NCPoly f = parse_ncpoly("x1*x2 + x2*x1 - x3^2", kXYZ, false);
    CHECK(f.is_homogeneous({1, 1, 1}));
    CHECK(f.degree() == 2);
    NCPoly g = parse_ncpoly("x1 + x2^2", kXYZ, false);
    CHECK(!g.is_homogeneous({1, 1, 1}));
    // weighted degrees: y generators of weight 2
    NCPoly h = parse_ncpoly("x*x - y", {"x", "y"}, false);
    CHECK(h.is_homogeneous({1, 2}));
}

TEST_CASE("leading data and monic") {
    MonomialOrder o = MonomialOrder::standard(3);
    NCPoly f = parse_ncpoly("2*x1*x2 + x2*x1 - 4*x3^2", kXYZ, false);
    CHECK(f.leading_word(o) == Word{2, 2});
    CHECK(f.leading_coeff(o) == Scalar::integer(-4));
    CHECK(f.monic(o).leading_coeff(o).is_one());
}

TEST_CASE("multilinearization evaluates on point sequences") {
    NCPoly f = parse_ncpoly("(x + y)^2", {"x", "y"}, false);
    CHECK(f.term_count() == 4);
    MultiPoly m = multilinearize(f, 2);
    CHECK(m.slots == 2);
    auto S = [](long long v) { return Scalar::integer(v); };
    // ((1,1),(1,-1)): xx + xy + yx + yy -> 1 - 1 + 1 - 1 = 0
    CHECK(m.evaluate_scalar({{S(1), S(1)}, {S(1), S(-1)}}).is_zero());
    CHECK(m.evaluate_scalar({{S(1), S(1)}, {S(1), S(1)}}) == S(4));
}

TEST_CASE("expression parse round trip") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
        NCPoly f = rnd_poly(rng, 3, 4, 4);
        CHECK(parse_ncpoly(f.to_string(kXYZ), kXYZ, false) == f);
    }
    NCPoly f = parse_ncpoly("x1^2*x2 - 3*x3*(x1 + x2)*x3", kXYZ, false);
    CHECK(parse_ncpoly(f.to_string(kXYZ), kXYZ, false) == f);
}

TEST_CASE("expression grammar rejections") {
    CHECK_THROWS_AS((void)parse_ncpoly("x1 +", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("x4", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("q*x1", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("x1^-2", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("x1/x2", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("(x1", kXYZ, false), ExpressionParseError);
    CHECK_THROWS_AS((void)parse_ncpoly("", kXYZ, false), ExpressionParseError);
    // scalar division is allowed when the divisor is a nonzero constant
    NCPoly ok = parse_ncpoly("x1/2", kXYZ, false);
    CHECK(ok.coeff(Word{0}) == Scalar(Rat(1, 2)));
    CHECK_THROWS_AS((void)parse_ncpoly("x1/0", kXYZ, false), ExpressionParseError);
    // q needs the function field
    NCPoly qf = parse_ncpoly("q*x1 - x2*x1", kXYZ, true);
    CHECK(qf.coeff(Word{0}) == Scalar::q());
}

TEST_CASE("bipoly parsing and evaluation") {
    BiPoly f = parse_bipoly("2*a^2 - b^2", false);
    CHECK(f.is_homogeneous());
    CHECK(f.degree() == 2);
    CHECK(f.eval(Scalar::integer(2), Scalar::integer(1)) == Scalar::integer(7));
    CHECK(parse_bipoly(f.to_string(), false) == f);
    CHECK(f.swap_ab() == parse_bipoly("2*b^2 - a^2", false));
    BiPoly mixed = parse_bipoly("a + b^2", false);
    CHECK(!mixed.is_homogeneous());
}

TEST_CASE("word rendering uses powers") {
    CHECK(word_to_string(Word{0, 0, 1}, kXYZ) == "x1^2*x2");
    CHECK(word_to_string(Word{}, kXYZ) == "1");
}
