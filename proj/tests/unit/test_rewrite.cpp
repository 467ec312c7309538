#include <map>
#include <random>

#include "doctest.h"

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/linalg.hpp"
#include "skewcliff/rewrite.hpp"

using namespace skewcliff;

namespace {

const std::vector<std::string> kXYZ{"x1", "x2", "x3"};

Presentation eg1_ambient() {
    auto P = [](const char* s) { return parse_ncpoly(s, kXYZ, false); };
    return Presentation::make(kXYZ, {P("x1*x2 + x2*x1 - x3^2"), P("x1*x3 + x3*x1"),
                                     P("x2*x3 + x3*x2")});
}

Presentation clifford2_ambient() {
    std::vector<std::string> names{"x", "y"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, false); };
    return Presentation::make(names, {P("x*y + y*x + x^2 + y^2"), P("x^2*y - y*x^2")});
}

std::vector<Word> words_of_length(int n, int len) {
    std::vector<Word> layer{Word{}};
    for (int l = 0; l < len; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int g = 0; g < n; ++g) {
                Word v = w;
                v.push_back(g);
                next.push_back(v);
            }
        layer = std::move(next);
    }
    return layer;
}

// slice dimension by brute-force linear algebra over all words of one degree
Int brute_force_slice(const Presentation& p, int m) {
    auto words = words_of_length(p.n, m);
    std::map<Word, int> col;
    for (size_t i = 0; i < words.size(); ++i) col[words[i]] = int(i);
    std::vector<std::vector<Scalar>> rows;
    const Scalar zero = Scalar::zero_like(p.one);
    for (const auto& r : p.relations) {
        int d = r.degree();
        if (d > m) continue;
        // u r v over every split of the cofactor degree
        for (int k = 0; k <= m - d; ++k)
            for (const auto& u : words_of_length(p.n, k))
                for (const auto& v : words_of_length(p.n, m - d - k)) {
                    std::vector<Scalar> row(words.size(), zero);
                    for (const auto& [w, c] : r.terms()) {
                        Word full = u;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), v.begin(), v.end());
                        row[size_t(col.at(full))] = row[size_t(col.at(full))] + c;
                    }
                    rows.push_back(std::move(row));
                }
    }
    Mat<Scalar> M(int(rows.size()), int(words.size()), zero);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) M(int(i), int(j)) = rows[i][j];
    return Int(words.size()) - rank(std::move(M));
}

NCPoly rnd_poly(std::mt19937_64& rng, int n, int maxlen, int terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> gen(0, n - 1);
    NCPoly f;
    for (int t = 0; t < terms; ++t) {
        Word w(size_t(len(rng)));
        for (auto& g : w) g = gen(rng);
        f.add_term(w, Scalar::integer(coeff(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("two generator skew ring completes to a single rule") {
    std::vector<std::string> names{"z1", "z2"};
    NCPoly rel = parse_ncpoly("z2*z1 - 2*z1*z2", names, false);
    Presentation p = Presentation::make(names, {rel});
    RewriteSystem rs = complete_truncated(p, 6, MonomialOrder::standard(2));
    CHECK(rs.certified_complete);
    CHECK(rs.rules.size() == 1);
    CHECK(rs.max_rule_degree == 2);
    auto h = hilbert_function(rs, 6);
    for (int m = 0; m <= 6; ++m) CHECK(h[size_t(m)] == Int(m + 1)); // PBW basis
    CHECK(normal_form(parse_ncpoly("z2*z1", names, false), rs) ==
          parse_ncpoly("2*z1*z2", names, false));
}

TEST_CASE("eg1 ambient basis") {
    RewriteSystem rs = complete_truncated(eg1_ambient(), 12, MonomialOrder::standard(3));
    CHECK(rs.certified_complete);
    CHECK(rs.max_rule_degree == 3);
    CHECK(rs.rules.size() == 5);
    auto h = hilbert_function(rs, 12);
    for (int m = 0; m <= 12; ++m)
        CHECK(h[size_t(m)] == Int((m + 1) * (m + 2) / 2)); // 1/(1-t)^3
    CHECK(normal_words(rs, 2).size() == 6);
}

TEST_CASE("truncation below the relation degree is refused") {
    CHECK_THROWS_AS((void)complete_truncated(eg1_ambient(), 1, MonomialOrder::standard(3)),
                    TruncationTooLow);
}

TEST_CASE("eg2 chain: certification depends on the order, values do not") {
    Presentation p = eg1_ambient();
    auto P = [](const char* s) { return parse_ncpoly(s, kXYZ, false); };
    Presentation chain = p.extended({P("x1^4"), P("x2^4"), P("x2^2*x1^2")});

    RewriteSystem good = complete_truncated(chain, 12, MonomialOrder::with_precedence({2, 0, 1}));
    CHECK(good.certified_complete);
    CHECK(good.rules.size() == 6);
    CHECK(good.max_rule_degree == 4);

    RewriteSystem trunc = complete_truncated(chain, 12, MonomialOrder::standard(3));
    CHECK(!trunc.certified_complete); // infinite rule family in this order

    auto ha = hilbert_function(good, 12);
    auto hb = hilbert_function(trunc, 12);
    CHECK(ha == hb); // exact below truncation either way
    CHECK(ha[4] == Int(12));
    CHECK(ha[11] == Int(12));
}

TEST_CASE("normal form is idempotent, linear, and kills the ideal") {
    std::mt19937_64 rng(4242);
    for (const Presentation& p : {eg1_ambient(), clifford2_ambient()}) {
        RewriteSystem rs = complete_truncated(p, 8, MonomialOrder::standard(p.n));
        for (int i = 0; i < 100; ++i) {
            NCPoly f = rnd_poly(rng, p.n, 4, 3);
            NCPoly g = rnd_poly(rng, p.n, 4, 3);
            NCPoly nf = normal_form(f, rs);
            CHECK(normal_form(nf, rs) == nf);
            CHECK(normal_form(f + g, rs) == nf + normal_form(g, rs));
            const NCPoly& r = p.relations[rng() % p.relations.size()];
            NCPoly u = rnd_poly(rng, p.n, 2, 2);
            NCPoly v = rnd_poly(rng, p.n, 2, 2);
            CHECK(normal_form(f + u * r * v, rs) == nf);
        }
    }
}

TEST_CASE("hilbert matches brute force linear algebra") {
    for (const Presentation& p : {eg1_ambient(), clifford2_ambient()}) {
        RewriteSystem rs = complete_truncated(p, 8, MonomialOrder::standard(p.n));
        auto h = hilbert_function(rs, 5);
        for (int m = 0; m <= 5; ++m) CHECK(h[size_t(m)] == brute_force_slice(p, m));
    }
}

TEST_CASE("growth classification") {
    // free algebra on two generators grows exponentially
    Presentation free2 = Presentation::make({"x", "y"}, {});
    RewriteSystem frs = complete_truncated(free2, 8, MonomialOrder::standard(2));
    CHECK(classify_growth(frs).kind == GrowthKind::Exponential);

    // eg1 ambient has polynomial growth of degree 3
    RewriteSystem ars = complete_truncated(eg1_ambient(), 12, MonomialOrder::standard(3));
    GrowthReport ag = classify_growth(ars);
    CHECK(ag.kind == GrowthKind::PolynomialGrowth);
    CHECK(ag.gk == 3);

    // quotient by the three squares is eight dimensional
    auto P = [](const char* s) { return parse_ncpoly(s, kXYZ, false); };
    Presentation q = eg1_ambient().extended({P("x1^2"), P("x2^2"), P("x3^2")});
    RewriteSystem qrs = complete_truncated(q, 12, MonomialOrder::standard(3));
    GrowthReport qg = classify_growth(qrs);
    CHECK(qg.kind == GrowthKind::FiniteDimensional);
    CHECK(qg.dimension == Int(8));
    CHECK(qg.hilbert[0] == Int(1));
    CHECK(qg.hilbert[1] == Int(3));
    CHECK(qg.hilbert[2] == Int(3));
    CHECK(qg.hilbert[3] == Int(1));
}

TEST_CASE("a zero slice makes finiteness exact even without certification") {
    // x^2, xy, yx, y^2 all zero: slices vanish from degree 2 on
    std::vector<std::string> names{"x", "y"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, false); };
    Presentation p = Presentation::make(names, {P("x^2"), P("x*y"), P("y*x"), P("y^2")});
    RewriteSystem rs = complete_truncated(p, 2, MonomialOrder::standard(2));
    GrowthReport g = classify_growth(rs);
    CHECK(g.kind == GrowthKind::FiniteDimensional);
    CHECK(g.dimension == Int(3));
}

TEST_CASE("ufnarovski graph shape") {
    RewriteSystem rs = complete_truncated(eg1_ambient(), 12, MonomialOrder::standard(3));
    UfnGraph g = ufnarovski_graph(rs);
    CHECK(g.ell == 2);
    CHECK(g.vertices.size() == 6);
    // edge count equals the number of normal words of length 3
    size_t edges = 0;
    for (const auto& adj : g.adj) edges += adj.size();
    CHECK(edges == normal_words(rs, 3).size());
}
