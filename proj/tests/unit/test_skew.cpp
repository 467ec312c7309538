#include <random>

#include "doctest.h"

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/skew.hpp"

using namespace skewcliff;

namespace {

std::vector<std::vector<Scalar>> ones_mu(int n) {
    return std::vector<std::vector<Scalar>>(size_t(n),
                                            std::vector<Scalar>(size_t(n), Scalar::integer(1)));
}

MuData rnd_mu(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(1, 5);
    std::uniform_int_distribution<int> sign(0, 1);
    auto entries = ones_mu(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v(num(rng), num(rng));
            if (sign(rng)) v = -v;
            entries[size_t(i)][size_t(j)] = Scalar(v);
            entries[size_t(j)][size_t(i)] = Scalar(Rat(1) / v);
        }
    return validate_mu(entries);
}

std::vector<std::vector<Scalar>> rnd_mu_symmetric(std::mt19937_64& rng, const MuData& mu) {
    std::uniform_int_distribution<int> val(-4, 4);
    int n = mu.n;
    std::vector<std::vector<Scalar>> m(size_t(n), std::vector<Scalar>(size_t(n), Scalar(Rat(0))));
    for (int i = 0; i < n; ++i) {
        m[size_t(i)][size_t(i)] = Scalar::integer(val(rng));
        for (int j = i + 1; j < n; ++j) {
            Scalar v = Scalar::integer(val(rng));
            m[size_t(j)][size_t(i)] = v;
            m[size_t(i)][size_t(j)] = mu.mu[size_t(i)][size_t(j)] * v;
        }
    }
    return m;
}

bool proportional(const std::vector<std::vector<Scalar>>& a,
                  const std::vector<std::vector<Scalar>>& b) {
    Scalar lambda = Scalar::integer(0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            if (b[i][j].is_zero()) {
                if (!a[i][j].is_zero()) return false;
                continue;
            }
            Scalar r = a[i][j] / b[i][j];
            if (lambda.is_zero())
                lambda = r;
            else if (!(r == lambda))
                return false;
        }
    return !lambda.is_zero();
}

} // namespace

TEST_CASE("mu validation enforces the axioms") {
    CHECK(validate_mu(ones_mu(3)).n == 3);

    auto bad_diag = ones_mu(2);
    bad_diag[0][0] = Scalar::integer(2);
    CHECK_THROWS_AS((void)validate_mu(bad_diag), MuAxiomViolation);

    auto bad_pair = ones_mu(2);
    bad_pair[0][1] = Scalar::integer(2); // mu12 * mu21 = 2
    try {
        (void)validate_mu(bad_pair);
        FAIL("expected MuAxiomViolation");
    } catch (const MuAxiomViolation& e) {
        CHECK(e.i == 1);
        CHECK(e.j == 2);
    }

    auto zero_entry = ones_mu(2);
    zero_entry[0][1] = Scalar::integer(0);
    CHECK_THROWS_AS((void)validate_mu(zero_entry), MuAxiomViolation);
}

TEST_CASE("mu symmetry validation") {
    std::mt19937_64 rng(11);
    MuData mu = rnd_mu(rng, 3);
    auto m = rnd_mu_symmetric(rng, mu);
    CHECK(validate_mu_symmetric(m, mu).n == 3);

    m[0][1] = m[0][1] + Scalar::integer(1);
    if (!(m[0][1] == mu.mu[0][1] * m[1][0])) {
        try {
            (void)validate_mu_symmetric(m, mu);
            FAIL("expected NotMuSymmetric");
        } catch (const NotMuSymmetric& e) {
            CHECK(e.i == 1);
            CHECK(e.j == 2);
        }
    }
}

TEST_CASE("skew presentation and canonical lift") {
    std::mt19937_64 rng(21);
    MuData mu = rnd_mu(rng, 3);
    Presentation s = skew_presentation(mu);
    CHECK(s.n == 3);
    CHECK(s.relations.size() == 3);
    CHECK(s.names == std::vector<std::string>{"z1", "z2", "z3"});

    // z2 z1 lifts to mu12 z1 z2
    NCPoly f = NCPoly::term(Word{1, 0}, mu.one);
    NCPoly lifted = canonical_lift(f, mu);
    CHECK(lifted == NCPoly::term(Word{0, 1}, mu.mu[0][1]));
    CHECK(canonical_lift(lifted, mu) == lifted);
}

TEST_CASE("matrix quadric round trip on random mu symmetric matrices") {
    std::mt19937_64 rng(3001);
    int done = 0;
    while (done < 100) {
        std::uniform_int_distribution<int> dim(2, 4);
        MuData mu = rnd_mu(rng, dim(rng));
        auto entries = rnd_mu_symmetric(rng, mu);
        bool zero = true;
        for (const auto& row : entries)
            for (const auto& c : row) zero = zero && c.is_zero();
        if (zero) continue;
        MuSymMatrix M = validate_mu_symmetric(entries, mu);
        NCPoly q = quadric_of_matrix(M, mu);
        MuSymMatrix back = matrix_of_quadric(q, mu);
        // monic normalization rescales, so recovery is up to one global factor
        CHECK(proportional(entries, back.m));
        CHECK(quadric_of_matrix(back, mu) == q);
        ++done;
    }
}

TEST_CASE("normality of elements") {
    std::vector<std::string> names{"x1", "x2", "x3"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, false); };
    Presentation amb = Presentation::make(
        names, {P("x1*x2 + x2*x1 - x3^2"), P("x1*x3 + x3*x1"), P("x2*x3 + x3*x2")});
    RewriteSystem rs = complete_truncated(amb, 10, MonomialOrder::standard(3));

    NormalityReport n1 = is_normal(P("x1^4"), rs);
    CHECK(n1.normal);
    CHECK(n1.exact);
    CHECK(n1.checked_degree == 5);

    // x1 alone is not normal here: x1 x2 is no left multiple of x1
    NormalityReport n2 = is_normal(P("x1"), rs);
    CHECK(!n2.normal);
    CHECK(n2.witness.has_value());

    // x1 in the skew ring is normal
    MuData mu = validate_mu(ones_mu(2));
    RewriteSystem srs =
        complete_truncated(skew_presentation(mu), 6, MonomialOrder::standard(2));
    CHECK(is_normal(NCPoly::generator(0, mu.one), srs).normal);
}

TEST_CASE("normalizing sequence checks run in order") {
    std::vector<std::string> names{"a", "b", "c", "d"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, true); };
    Presentation amb = Presentation::make(
        names,
        {P("a*b - q*b*a"), P("a*c - q*c*a"), P("b*c - c*b"), P("b*d - q*d*b"),
         P("c*d - q*d*c"), P("a*d - d*a - (q - 1/q)*b*c")},
        Scalar::one_like(Scalar::q()));

    auto good = is_normalizing_sequence({P("b*c"), P("b^2"), P("c^2"), P("a*d")}, amb, 10,
                                        MonomialOrder::standard(4));
    CHECK(good.size() == 4);
    for (const auto& r : good) CHECK(r.normal);

    // a*d is normal only modulo b*c, so it cannot lead the sequence
    auto bad = is_normalizing_sequence({P("a*d"), P("b*c")}, amb, 10,
                                       MonomialOrder::standard(4));
    CHECK(!bad[0].normal);
    CHECK(bad[0].witness.has_value());
}

TEST_CASE("base point freeness decisions") {
    // eg1 quadrics: free with dimension 8
    MuData mu3 = validate_mu(ones_mu(3));
    auto Z = [](const char* s) {
        return parse_ncpoly(s, {"z1", "z2", "z3"}, false);
    };
    QuadricSystem sys{mu3, {Z("z1^2"), Z("z2^2"), Z("z1*z2 + z3^2")}, {"z1", "z2", "z3"}};
    BasePointReport free_rep = base_point_free(sys, 10, ProbeOptions{});
    CHECK(free_rep.kind == BasePointKind::Free);
    CHECK(free_rep.dimension == Int(8));

    // the 2x2 Clifford quadrics meet at ((1,1),(1,1))
    MuData mu2 = validate_mu(ones_mu(2));
    auto W = [](const char* s) { return parse_ncpoly(s, {"z1", "z2"}, false); };
    QuadricSystem bad{mu2, {W("z1^2 - z1*z2"), W("z1*z2 - z2^2")}, {"z1", "z2"}};
    BasePointReport not_free = base_point_free(bad, 10, ProbeOptions{});
    CHECK(not_free.kind == BasePointKind::NotFree);
    REQUIRE(not_free.witness.has_value());
    const PointPair& w = *not_free.witness;
    CHECK(w.first == std::vector<Scalar>{Scalar::integer(1), Scalar::integer(1)});
    CHECK(w.second == std::vector<Scalar>{Scalar::integer(1), Scalar::integer(1)});

    // a quadric that is not normal modulo its predecessors is rejected
    auto skew_entries = ones_mu(2);
    skew_entries[0][1] = Scalar::integer(2);
    skew_entries[1][0] = Scalar(Rat(1, 2));
    MuData mu_skew = validate_mu(skew_entries);
    QuadricSystem nn{mu_skew, {W("z1^2 + z2^2"), W("z1*z2")}, {"z1", "z2"}};
    try {
        (void)base_point_free(nn, 10, ProbeOptions{});
        FAIL("expected NotNormalizing");
    } catch (const NotNormalizing& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("witness search is deterministic for a fixed seed") {
    MuData mu2 = validate_mu(ones_mu(2));
    auto W = [](const char* s) { return parse_ncpoly(s, {"z1", "z2"}, false); };
    QuadricSystem bad{mu2, {W("z1^2 - z1*z2"), W("z1*z2 - z2^2")}, {"z1", "z2"}};
    ProbeOptions opts;
    opts.seed = 17;
    auto a = probe_point_pair_search(bad, opts);
    auto b = probe_point_pair_search(bad, opts);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->first == b->first);
    CHECK(a->second == b->second);
}
