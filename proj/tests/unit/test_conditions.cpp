#include "doctest.h"

#include "skewcliff/conditions.hpp"
#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"

using namespace skewcliff;

namespace {

const std::vector<std::string> kXYZ{"x1", "x2", "x3"};

Presentation eg1_ambient() {
    auto P = [](const char* s) { return parse_ncpoly(s, kXYZ, false); };
    return Presentation::make(kXYZ, {P("x1*x2 + x2*x1 - x3^2"), P("x1*x3 + x3*x1"),
                                     P("x2*x3 + x3*x2")});
}

NCPoly X(const char* s) { return parse_ncpoly(s, kXYZ, false); }

Presentation eg4_ambient() {
    std::vector<std::string> names{"a", "b", "c", "d"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, true); };
    std::vector<NCPoly> rels{P("a*b - q*b*a"),  P("a*c - q*c*a"), P("b*c - c*b"),
                             P("b*d - q*d*b"),  P("c*d - q*d*c"),
                             P("a*d - d*a - (q - 1/q)*b*c")};
    std::vector<NCPoly> spec;
    for (const auto& r : rels) {
        NCPoly s;
        for (const auto& [w, c] : r.terms()) s.add_term(w, c.specialize(Rat(3)));
        spec.push_back(std::move(s));
    }
    return Presentation::make(names, spec);
}

NCPoly Q4(const Presentation& p, const char* s) {
    return parse_ncpoly(s, p.names, false);
}

ParametricPointFamily eg2_family(bool quadratic) {
    auto B = [](const char* s) { return parse_bipoly(s, false); };
    ParametricPointFamily fam;
    fam.period = 2;
    fam.exhaustive = true;
    if (quadratic)
        fam.points = {{B("2*a^2"), B("-b^2"), B("2*a*b")},
                      {B("2*a^2"), B("-b^2"), B("-2*a*b")}};
    else
        fam.points = {{B("a"), B("b"), B("0")}, {B("a"), B("-b"), B("0")}};
    return fam;
}

} // namespace

TEST_CASE("eg3 satisfies all four conditions") {
    CheckOptions opts;
    opts.truncation = 12;
    ConditionReport rep =
        check_conditions(eg1_ambient(), {X("x1^2"), X("x2^2"), X("x3^2")}, opts);

    CHECK(rep.one.status == Status::Holds);
    CHECK(rep.one.exact);
    for (const auto& st : rep.one.stages) {
        CHECK(st.status == Status::Holds);
        CHECK(st.exact);
    }
    CHECK(rep.two.status == Status::Holds);
    CHECK(rep.two.exact);
    CHECK(rep.two.growth.dimension == Int(8));
    CHECK(rep.three.status == Status::Holds);
    CHECK(rep.three.exact);
    CHECK(rep.three.prefix_gk == std::vector<int>{3, 2, 1, 0});
    CHECK(rep.four.status == Status::Holds);
    CHECK(rep.four.method == "skew-equivalence");
    REQUIRE(rep.four.dimension.has_value());
    CHECK(*rep.four.dimension == Int(8));

    // quotient Hilbert series is (1+t)^3
    CHECK(rep.quotient_hilbert[0] == Int(1));
    CHECK(rep.quotient_hilbert[1] == Int(3));
    CHECK(rep.quotient_hilbert[2] == Int(3));
    CHECK(rep.quotient_hilbert[3] == Int(1));
    CHECK(rep.quotient_hilbert[4] == Int(0));

    // the factorization H_A(t) (1 - t^2)^3 = H_{A/F}(t) holds coefficientwise
    const auto& h = rep.ambient_hilbert;
    auto at = [&](int m) { return m < 0 ? Int(0) : h[size_t(m)]; };
    for (int m = 0; m <= rep.truncation; ++m) {
        Int lhs = at(m) - 3 * at(m - 2) + 3 * at(m - 4) - at(m - 6);
        CHECK(lhs == rep.quotient_hilbert[size_t(m)]);
    }

    VerdictReport v = complete_intersection_verdict(rep, false);
    CHECK(v.verdict == CIVerdict::CompleteIntersection);
    CHECK(!v.iv_required);
    CHECK(!v.consistency_alarm);
}

TEST_CASE("eg2 fails I through III and passes IV by families") {
    CheckOptions opts;
    opts.truncation = 12;
    opts.order = MonomialOrder::with_precedence({2, 0, 1});
    opts.families = {eg2_family(false), eg2_family(true)};
    std::vector<NCPoly> F{X("x1^4"), X("x2^4"), X("x2^2*x1^2")};
    ConditionReport rep = check_conditions(eg1_ambient(), F, opts);

    CHECK(rep.one.status == Status::Fails);
    CHECK(rep.one.exact);
    CHECK(rep.one.stages[0].status == Status::Holds);
    CHECK(rep.one.stages[1].status == Status::Holds);
    const StageReport& bad = rep.one.stages[2];
    CHECK(bad.status == Status::Fails);
    CHECK(bad.exact);
    CHECK(bad.first_defect_degree == 6);
    CHECK(bad.witness_degree == 2);
    CHECK(!bad.witness.empty());

    CHECK(rep.two.status == Status::Fails);
    CHECK(rep.two.exact);
    CHECK(rep.two.growth.kind == GrowthKind::PolynomialGrowth);
    CHECK(rep.two.growth.gk == 1);

    CHECK(rep.three.status == Status::Fails);
    CHECK(rep.three.exact);
    CHECK(rep.three.failing_prefix == 3);
    CHECK(rep.three.prefix_gk == std::vector<int>{3, 2, 1, 1});

    CHECK(rep.four.status == Status::Holds);
    CHECK(rep.four.method == "family-certificates");

    VerdictReport v = complete_intersection_verdict(rep, false);
    CHECK(v.verdict == CIVerdict::Not);
    CHECK(!v.consistency_alarm);
}

TEST_CASE("eg2 kernel facts behind the stage three failure") {
    auto order = MonomialOrder::standard(3);
    Presentation amb = eg1_ambient();
    RewriteSystem rs2 =
        complete_truncated(amb.extended({X("x1^4"), X("x2^4")}), 12, order);
    NCPoly f3bar = normal_form(X("x2^2*x1^2"), rs2);
    CHECK(!f3bar.is_zero());

    // the identity x2^2 f3 = f2 x1^2 makes x2^2 a kernel element, and x1^2
    // lands in the kernel the same way
    CHECK(X("x2^2") * X("x2^2*x1^2") == X("x2^4") * X("x1^2"));
    CHECK(normal_form(X("x2^2") * f3bar, rs2).is_zero());
    CHECK(normal_form(X("x1^2") * f3bar, rs2).is_zero());
    // but multiplication by f3bar is not identically zero on degree two
    CHECK(!normal_form(X("x3^2") * f3bar, rs2).is_zero());
}

TEST_CASE("eg4 fails everything with exact witnesses") {
    Presentation p = eg4_ambient();
    std::vector<NCPoly> F{Q4(p, "b*c"), Q4(p, "b^2"), Q4(p, "c^2"), Q4(p, "a*d")};
    CheckOptions opts;
    opts.truncation = 12;
    ConditionReport rep = check_conditions(p, F, opts);

    CHECK(rep.one.status == Status::Fails);
    CHECK(rep.one.exact);
    CHECK(rep.one.stages[0].status == Status::Holds);
    const StageReport& st2 = rep.one.stages[1];
    CHECK(st2.status == Status::Fails);
    CHECK(st2.witness == "c");
    CHECK(st2.first_defect_degree == 3);

    CHECK(rep.two.status == Status::Fails);
    CHECK(rep.two.growth.gk == 1);
    CHECK(rep.three.status == Status::Fails);
    CHECK(rep.three.failing_prefix == 2);
    CHECK(rep.three.prefix_gk == std::vector<int>{4, 3, 3, 2, 1});

    CHECK(rep.four.status == Status::Fails);
    CHECK(rep.four.method == "skew-equivalence");
    CHECK(rep.four.witness == "((1, 0, 0, 0), (1, 0, 0, 0))");

    VerdictReport v = complete_intersection_verdict(rep, false);
    CHECK(v.verdict == CIVerdict::Not);
    CHECK(!v.consistency_alarm);

    // the kernel fact behind stage two: c b^2 lies in the ideal of b*c
    RewriteSystem rs1 = complete_truncated(p.extended({Q4(p, "b*c")}), 8,
                                           MonomialOrder::standard(4));
    CHECK(normal_form(Q4(p, "c") * normal_form(Q4(p, "b^2"), rs1), rs1).is_zero());
}

TEST_CASE("a sequence in the wrong order is rejected as not normalizing") {
    Presentation p = eg4_ambient();
    std::vector<NCPoly> F{Q4(p, "a*d"), Q4(p, "b*c"), Q4(p, "b^2"), Q4(p, "c^2")};
    CheckOptions opts;
    opts.truncation = 10;
    try {
        (void)check_conditions(p, F, opts);
        FAIL("expected NotNormalizing");
    } catch (const NotNormalizing& e) {
        CHECK(e.index == 1);
    }
}

TEST_CASE("sequence length must match the generator count") {
    CheckOptions opts;
    CHECK_THROWS_AS((void)check_conditions(eg1_ambient(), {X("x1^2")}, opts), SchemaError);
}

TEST_CASE("condition four can be skipped") {
    CheckOptions opts;
    opts.truncation = 12;
    opts.run_iv = false;
    ConditionReport rep =
        check_conditions(eg1_ambient(), {X("x1^2"), X("x2^2"), X("x3^2")}, opts);
    CHECK(rep.four.status == Status::Inconclusive);
    CHECK(rep.four.method == "not-requested");
    // verdict without a declared skew ambient ignores IV
    CHECK(complete_intersection_verdict(rep, false).verdict ==
          CIVerdict::CompleteIntersection);
    // with a declared skew ambient the missing IV blocks the verdict
    CHECK(complete_intersection_verdict(rep, true).verdict == CIVerdict::Inconclusive);
}

TEST_CASE("declared skew ambient requires IV") {
    std::vector<std::string> names{"x1", "x2", "x3"};
    auto P = [&](const char* s) { return parse_ncpoly(s, names, false); };
    Presentation s = Presentation::make(
        names, {P("x2*x1 - 2*x1*x2"), P("x3*x1 - 3*x1*x3"), P("x3*x2 - x2*x3")});
    CheckOptions opts;
    opts.truncation = 12;
    opts.ambient_skew = true;
    ConditionReport rep =
        check_conditions(s, {P("x1^2"), P("x2^2"), P("x3^2")}, opts);
    for (Status st : {rep.one.status, rep.two.status, rep.three.status, rep.four.status})
        CHECK(st == Status::Holds);
    CHECK(rep.two.growth.dimension == Int(8));
    VerdictReport v = complete_intersection_verdict(rep, true);
    CHECK(v.verdict == CIVerdict::CompleteIntersection);
    CHECK(v.iv_required);
    CHECK(!v.consistency_alarm);
}

TEST_CASE("exact disagreement raises the consistency alarm") {
    ConditionReport rep;
    rep.one.status = Status::Holds;
    rep.one.exact = true;
    rep.two.status = Status::Fails;
    rep.two.exact = true;
    rep.three.status = Status::Inconclusive;
    VerdictReport v = complete_intersection_verdict(rep, false);
    CHECK(v.consistency_alarm);
    CHECK(!v.alarm_detail.empty());

    // no alarm when one side is only truncation-qualified
    rep.two.exact = false;
    VerdictReport calm = complete_intersection_verdict(rep, false);
    CHECK(!calm.consistency_alarm);
}

TEST_CASE("inconclusive statuses propagate to the verdict") {
    ConditionReport rep;
    rep.one.status = Status::Holds;
    rep.two.status = Status::Inconclusive;
    rep.three.status = Status::Holds;
    rep.four.status = Status::Holds;
    CHECK(complete_intersection_verdict(rep, false).verdict == CIVerdict::Inconclusive);
    rep.two.status = Status::Fails;
    CHECK(complete_intersection_verdict(rep, false).verdict == CIVerdict::Not);
}
