#include "skewcliff/conditions.hpp"

#include <algorithm>
#include <map>

#include "skewcliff/errors.hpp"
#include "skewcliff/linalg.hpp"

namespace skewcliff {

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::Inconclusive: return "inconclusive";
    }
    return "";
}

std::string verdict_name(CIVerdict v) {
    switch (v) {
        case CIVerdict::CompleteIntersection: return "complete-intersection";
        case CIVerdict::Not: return "not-complete-intersection";
        case CIVerdict::Inconclusive: return "inconclusive";
    }
    return "";
}

namespace {

std::string render_point(const std::vector<Scalar>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

std::string render_sequence(const PointSequence& seq) {
    std::string out = "period " + std::to_string(seq.period) + ":";
    for (const auto& pt : seq.points) out += " " + render_point(pt);
    return out;
}

// first degree <= bound where h_cur differs from (1 - t^d) h_prev
int first_defect(const std::vector<Int>& hprev, const std::vector<Int>& hcur, int d, int bound) {
    auto at = [](const std::vector<Int>& h, int m) {
        return (m >= 0 && m < static_cast<int>(h.size())) ? h[size_t(m)] : Int(0);
    };
    for (int m = 0; m <= bound; ++m)
        if (at(hcur, m) != at(hprev, m) - at(hprev, m - d)) return m;
    return -1;
}

struct KernelWitness {
    NCPoly element;
    std::string side;
};

// nonzero element of degree m killed by f under one-sided multiplication
std::optional<KernelWitness> kernel_witness(const RewriteSystem& rs, const NCPoly& fbar, int m) {
    const int d = fbar.degree();
    auto wm = normal_words(rs, m);
    auto wj = normal_words(rs, m + d);
    std::map<Word, int, WordDegLex> col;
    for (size_t i = 0; i < wj.size(); ++i) col.emplace(wj[i], static_cast<int>(i));
    const Scalar zero = Scalar::zero_like(rs.one);
    for (int side = 0; side < 2; ++side) {
        Mat<Scalar> M(static_cast<int>(wj.size()), static_cast<int>(wm.size()), zero);
        for (size_t i = 0; i < wm.size(); ++i) {
            NCPoly w = NCPoly::term(wm[i], rs.one);
            NCPoly img = normal_form(side == 0 ? w * fbar : fbar * w, rs);
            for (const auto& [word, c] : img.terms()) M(col.at(word), static_cast<int>(i)) = c;
        }
        auto ns = nullspace(M, zero, rs.one);
        if (ns.empty()) continue;
        NCPoly elem;
        for (size_t i = 0; i < wm.size(); ++i)
            if (!ns[0][i].is_zero()) elem.add_term(wm[i], ns[0][i]);
        return KernelWitness{elem, side == 0 ? "right" : "left"};
    }
    return std::nullopt;
}

StageReport check_stage(int k, const RewriteSystem& prev, const RewriteSystem& cur,
                        const NCPoly& fbar, const std::vector<std::string>& names) {
    StageReport st;
    st.stage = k;
    if (fbar.is_zero()) {
        st.status = Status::Fails;
        st.exact = true;
        st.witness = "1";
        st.witness_degree = 0;
        st.witness_side = "right";
        st.detail = "the element already lies in the ideal of its predecessors";
        return st;
    }
    const int d = fbar.degree();
    const bool cert = prev.certified_complete && cur.certified_complete;
    int bound;
    if (cert) {
        UfnGraph ga = ufnarovski_graph(prev);
        UfnGraph gb = ufnarovski_graph(cur);
        bound = static_cast<int>(ga.vertices.size() + gb.vertices.size()) +
                std::max(ga.ell + d, gb.ell) + 2;
    } else {
        bound = std::min(prev.truncation, cur.truncation);
    }
    auto hp = hilbert_function(prev, bound);
    auto hc = hilbert_function(cur, bound);
    const int j = first_defect(hp, hc, d, bound);
    if (j < 0) {
        st.status = Status::Holds;
        st.exact = cert;
        st.detail = cert ? "factorization certified at every degree (recurrence bound " +
                               std::to_string(bound) + ")"
                         : "no defect up to degree " + std::to_string(bound) +
                               "; basis not certified";
        return st;
    }
    st.status = Status::Fails;
    st.exact = true;
    st.first_defect_degree = j;
    st.detail = "slice dimension at degree " + std::to_string(j) + " exceeds the regular count";
    if (auto kw = kernel_witness(prev, fbar, j - d)) {
        st.witness = kw->element.to_string(names);
        st.witness_degree = j - d;
        st.witness_side = kw->side;
    }
    return st;
}

bool all_quadratic(const std::vector<NCPoly>& polys) {
    for (const auto& f : polys) {
        if (f.is_zero()) return false;
        for (const auto& [w, c] : f.terms())
            if (w.size() != 2) return false;
    }
    return true;
}

// The degree-2 span of relations + F decomposed as skew commutators plus F:
// then the quotient equals a skew polynomial ring modulo the lifted sequence.
struct SkewEquivalence {
    MuData mu;
    std::vector<NCPoly> lifted;
};

std::optional<SkewEquivalence> discover_skew_equivalence(const Presentation& p,
                                                         const std::vector<NCPoly>& F) {
    const int n = p.n;
    if (static_cast<int>(F.size()) != n) return std::nullopt;
    if (!all_quadratic(p.relations) || !all_quadratic(F)) return std::nullopt;
    const Scalar one = p.one;
    const Scalar zero = Scalar::zero_like(one);
    const int nn = n * n;
    auto widx = [n](const Word& w) { return w[0] * n + w[1]; };

    std::vector<const NCPoly*> gens;
    for (const auto& r : p.relations) gens.push_back(&r);
    for (const auto& f : F) gens.push_back(&f);
    Mat<Scalar> V(static_cast<int>(gens.size()), nn, zero);
    for (size_t i = 0; i < gens.size(); ++i)
        for (const auto& [w, c] : gens[i]->terms()) V(static_cast<int>(i), widx(w)) = c;
    auto pivots = rref(V);

    auto residual = [&](int idx) {
        std::vector<Scalar> v(size_t(nn), zero);
        v[size_t(idx)] = one;
        for (size_t r = 0; r < pivots.size(); ++r) {
            Scalar c = v[size_t(pivots[r])];
            if (c.is_zero()) continue;
            for (int j = 0; j < nn; ++j) v[size_t(j)] = v[size_t(j)] - c * V(static_cast<int>(r), j);
        }
        return v;
    };
    auto vanishes = [&](const std::vector<Scalar>& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    };

    std::vector<std::vector<Scalar>> mu(size_t(n), std::vector<Scalar>(size_t(n), one));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto r1 = residual(j * n + i);
            auto r2 = residual(i * n + j);
            const bool z1 = vanishes(r1), z2 = vanishes(r2);
            Scalar lambda = one;
            if (!z1 && !z2) {
                int c = -1;
                for (int t = 0; t < nn; ++t)
                    if (!r2[size_t(t)].is_zero()) { c = t; break; }
                lambda = r1[size_t(c)] / r2[size_t(c)];
                if (lambda.is_zero()) return std::nullopt;
                for (int t = 0; t < nn; ++t)
                    if (!(r1[size_t(t)] - lambda * r2[size_t(t)]).is_zero()) return std::nullopt;
            } else if (z1 != z2) {
                return std::nullopt; // only one of the two monomials lies in the span
            }
            mu[size_t(i)][size_t(j)] = lambda;
            mu[size_t(j)][size_t(i)] = lambda.inv();
        }

    // containment: every relation reduces against commutators + F
    std::vector<NCPoly> comm;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            NCPoly c = NCPoly::term(Word{j, i}, one) - NCPoly::term(Word{i, j}, mu[size_t(i)][size_t(j)]);
            comm.push_back(c);
        }
    auto fill = [&](Mat<Scalar>& M, const std::vector<const NCPoly*>& rows) {
        for (size_t i = 0; i < rows.size(); ++i)
            for (const auto& [w, c] : rows[i]->terms()) M(static_cast<int>(i), widx(w)) = c;
    };
    std::vector<const NCPoly*> small;
    for (const auto& c : comm) small.push_back(&c);
    for (const auto& f : F) small.push_back(&f);
    std::vector<const NCPoly*> big = small;
    for (const auto& r : p.relations) big.push_back(&r);
    Mat<Scalar> Ms(static_cast<int>(small.size()), nn, zero);
    Mat<Scalar> Mb(static_cast<int>(big.size()), nn, zero);
    fill(Ms, small);
    fill(Mb, big);
    if (rank(std::move(Ms)) != rank(std::move(Mb))) return std::nullopt;

    SkewEquivalence eq;
    eq.mu = MuData{n, mu, one};
    eq.lifted.reserve(F.size());
    for (const auto& f : F) {
        NCPoly lift = canonical_lift(f, eq.mu);
        if (lift.is_zero()) return std::nullopt;
        eq.lifted.push_back(std::move(lift));
    }
    return eq;
}

ConditionIV check_four(const Presentation& p, const std::vector<NCPoly>& F,
                       const CheckOptions& opts, const GrowthReport& full_growth) {
    ConditionIV out;
    std::vector<std::string> notes;
    const bool quadratic = all_quadratic(p.relations);

    // user-supplied families: refutation on any member, proof when exhaustive
    if (!opts.families.empty()) {
        if (!quadratic) {
            out.status = Status::Inconclusive;
            out.method = "family-certificates";
            out.detail = "families supplied but the ambient presentation is not quadratic";
            return out;
        }
        bool cover = true;
        for (size_t i = 0; i < opts.families.size(); ++i) {
            FamilyCheck chk = verify_family(opts.families[i], p);
            if (!chk.ok) {
                out.status = Status::Inconclusive;
                out.method = "family-certificates";
                out.detail = "family " + std::to_string(i + 1) + " fails relation " +
                             std::to_string(chk.relation + 1) + " at window " +
                             std::to_string(chk.window) + " with residue " + chk.residue;
                return out;
            }
            cover = cover && opts.families[i].exhaustive;
        }
        for (size_t i = 0; i < opts.families.size(); ++i) {
            AnnihilationReport ann = annihilates(opts.families[i], F, 0);
            if (ann.kind != AnnihilationKind::NowhereAnnihilated) {
                out.status = Status::Fails;
                out.method = "family-certificates";
                out.witness = ann.member;
                out.detail = "family " + std::to_string(i + 1) + " is " +
                             annihilation_kind_name(ann.kind) +
                             (ann.conditions.empty() ? "" : " on " + ann.conditions);
                return out;
            }
        }
        if (cover) {
            out.status = Status::Holds;
            out.method = "family-certificates";
            out.detail = "no member of the exhaustive point-module families is annihilated";
            return out;
        }
        notes.push_back("supplied families show no annihilated member but are not exhaustive");
    }

    // declared skew polynomial ring: equivalent to finite dimensionality
    if (opts.ambient_skew) {
        out.method = "skew-equivalence";
        switch (full_growth.kind) {
            case GrowthKind::FiniteDimensional:
                out.status = Status::Holds;
                out.dimension = full_growth.dimension;
                out.detail = "ambient is a skew polynomial ring, so the condition is equivalent "
                             "to finite dimensionality of the quotient";
                return out;
            case GrowthKind::PolynomialGrowth:
            case GrowthKind::Exponential:
                out.status = Status::Fails;
                out.detail = "ambient is a skew polynomial ring and the quotient is "
                             "infinite-dimensional";
                if (auto seq = search_annihilated_point(p, F, opts.probes))
                    out.witness = render_sequence(*seq);
                return out;
            case GrowthKind::InconclusiveTruncated:
                notes.push_back("quotient growth not certified at this truncation");
                break;
        }
    }

    // degree-2 sequence in a quadratic algebra equal to a skew ring modulo a
    // normalizing quadric system: base-point-freeness decides the condition
    if (auto eq = discover_skew_equivalence(p, F)) {
        try {
            QuadricSystem qs{eq->mu, eq->lifted, p.names};
            BasePointReport bp = base_point_free(qs, opts.truncation, opts.probes);
            if (bp.kind == BasePointKind::Free) {
                out.status = Status::Holds;
                out.method = "skew-equivalence";
                out.dimension = bp.dimension;
                out.detail = "the quotient is a skew polynomial ring modulo the lifted "
                             "sequence, which is base point free";
                return out;
            }
            if (bp.kind == BasePointKind::NotFree) {
                out.status = Status::Fails;
                out.method = "skew-equivalence";
                if (bp.witness)
                    out.witness = "(" + render_point(bp.witness->first) + ", " +
                                  render_point(bp.witness->second) + ")";
                out.detail = "the lifted sequence has a base point in the equivalent skew "
                             "polynomial ring";
                return out;
            }
            notes.push_back("skew equivalence found but base-point-freeness is inconclusive");
        } catch (const NotNormalizing&) {
            notes.push_back("skew equivalence declined: lifted sequence is not normalizing");
        }
    }

    // witness search: only an exactly verified cyclic sequence counts
    if (quadratic) {
        if (auto seq = search_annihilated_point(p, F, opts.probes)) {
            out.status = Status::Fails;
            out.method = "witness-search";
            out.witness = render_sequence(*seq);
            out.detail = "exactly verified cyclic point sequence annihilated by the sequence";
            return out;
        }
        notes.push_back("no witness found within the probe budget (absence is not a proof)");
    } else {
        notes.push_back("ambient presentation is not quadratic; point-module methods unavailable");
    }

    out.status = Status::Inconclusive;
    out.method = notes.empty() ? "unavailable" : "witness-search";
    if (!quadratic) out.method = "unavailable";
    std::string detail;
    for (const auto& s : notes) detail += (detail.empty() ? "" : "; ") + s;
    out.detail = detail;
    return out;
}

} // namespace

ConditionReport check_conditions(const Presentation& p, const std::vector<NCPoly>& F,
                                 const CheckOptions& opts) {
    if (static_cast<int>(F.size()) != p.n)
        throw SchemaError("the sequence must have exactly one element per generator");
    const MonomialOrder order = opts.order ? *opts.order : MonomialOrder::standard(p.n);
    const int D = opts.truncation;

    ConditionReport rep;
    rep.truncation = D;

    std::vector<RewriteSystem> chain;
    chain.reserve(size_t(p.n) + 1);
    chain.push_back(complete_truncated(p, D, order));
    std::vector<NCPoly> fbars;
    std::vector<NCPoly> prefix;
    for (int k = 0; k < p.n; ++k) {
        NCPoly fbar = normal_form(F[size_t(k)], chain.back());
        if (!fbar.is_zero()) {
            NormalityReport nr = is_normal(fbar, chain.back());
            if (!nr.normal)
                throw NotNormalizing("element " + std::to_string(k + 1) +
                                         " is not normal modulo its predecessors",
                                     k + 1);
        }
        fbars.push_back(std::move(fbar));
        prefix.push_back(F[size_t(k)]);
        chain.push_back(complete_truncated(p.extended(prefix), D, order));
    }

    rep.ambient_hilbert = hilbert_function(chain[0], D);
    rep.quotient_hilbert = hilbert_function(chain[size_t(p.n)], D);

    rep.one.exact = true;
    rep.one.status = Status::Holds;
    for (int k = 0; k < p.n; ++k) {
        StageReport st =
            check_stage(k + 1, chain[size_t(k)], chain[size_t(k) + 1], fbars[size_t(k)], p.names);
        if (st.status == Status::Fails) {
            rep.one.status = Status::Fails;
            rep.one.exact = true;
        } else if (rep.one.status == Status::Holds) {
            rep.one.exact = rep.one.exact && st.exact;
        }
        rep.one.stages.push_back(std::move(st));
    }

    std::vector<GrowthReport> growths;
    growths.reserve(size_t(p.n) + 1);
    for (int k = 0; k <= p.n; ++k) growths.push_back(classify_growth(chain[size_t(k)]));

    rep.two.growth = growths[size_t(p.n)];
    switch (rep.two.growth.kind) {
        case GrowthKind::FiniteDimensional:
            rep.two.status = Status::Holds;
            rep.two.exact = true;
            break;
        case GrowthKind::PolynomialGrowth:
        case GrowthKind::Exponential:
            rep.two.status = Status::Fails;
            rep.two.exact = true;
            break;
        case GrowthKind::InconclusiveTruncated:
            rep.two.status = Status::Inconclusive;
            break;
    }

    rep.three.prefix_gk.assign(size_t(p.n) + 1, -1);
    rep.three.targets.assign(size_t(p.n) + 1, 0);
    rep.three.prefix_exact.assign(size_t(p.n) + 1, false);
    bool all_exact = true;
    for (int k = 0; k <= p.n; ++k) {
        rep.three.targets[size_t(k)] = p.n - k;
        const GrowthReport& g = growths[size_t(k)];
        int gk = -1;
        bool exact = false;
        switch (g.kind) {
            case GrowthKind::FiniteDimensional: gk = 0; exact = true; break;
            case GrowthKind::PolynomialGrowth: gk = g.gk; exact = true; break;
            case GrowthKind::Exponential: gk = -2; exact = true; break;
            case GrowthKind::InconclusiveTruncated: break;
        }
        rep.three.prefix_gk[size_t(k)] = gk;
        rep.three.prefix_exact[size_t(k)] = exact;
        if (k == 0) {
            if (exact && gk != p.n)
                rep.three.detail = "ambient GK dimension differs from the generator count";
            continue;
        }
        if (!exact) {
            all_exact = false;
            continue;
        }
        if (gk != p.n - k && rep.three.failing_prefix < 0) rep.three.failing_prefix = k;
    }
    if (rep.three.failing_prefix > 0) {
        rep.three.status = Status::Fails;
        rep.three.exact = true;
    } else if (all_exact) {
        rep.three.status = Status::Holds;
        rep.three.exact = true;
    } else {
        rep.three.status = Status::Inconclusive;
    }

    if (opts.run_iv) {
        rep.four = check_four(p, F, opts, rep.two.growth);
    } else {
        rep.four.status = Status::Inconclusive;
        rep.four.method = "not-requested";
    }
    return rep;
}

VerdictReport complete_intersection_verdict(const ConditionReport& rep, bool ambient_skew) {
    VerdictReport v;
    v.iv_required = ambient_skew;

    struct Entry {
        const char* name;
        Status s;
        bool exact;
    };
    const Entry entries[] = {{"I", rep.one.status, rep.one.exact},
                             {"II", rep.two.status, rep.two.exact},
                             {"III", rep.three.status, rep.three.exact}};
    for (const auto& a : entries)
        for (const auto& b : entries) {
            if (&a == &b || !a.exact || !b.exact) continue;
            if (a.s == Status::Holds && b.s == Status::Fails) {
                v.consistency_alarm = true;
                v.alarm_detail = std::string("condition ") + a.name +
                                 " holds exactly while condition " + b.name + " fails exactly";
            }
        }

    std::vector<Status> needed = {rep.one.status, rep.two.status, rep.three.status};
    if (ambient_skew) needed.push_back(rep.four.status);
    bool any_fail = false, any_inconclusive = false;
    for (Status s : needed) {
        any_fail = any_fail || s == Status::Fails;
        any_inconclusive = any_inconclusive || s == Status::Inconclusive;
    }
    if (any_fail)
        v.verdict = CIVerdict::Not;
    else if (any_inconclusive)
        v.verdict = CIVerdict::Inconclusive;
    else
        v.verdict = CIVerdict::CompleteIntersection;
    return v;
}

} // namespace skewcliff
