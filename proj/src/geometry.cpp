#include "skewcliff/geometry.hpp"

#include <functional>

#include "skewcliff/errors.hpp"
#include "skewcliff/linalg.hpp"

namespace skewcliff {
namespace {

const std::vector<BiPoly>& family_point(const ParametricPointFamily& fam, int t) {
    return fam.points[t % fam.period];
}

BiPoly eval_on_window(const MultiPoly& mp, const ParametricPointFamily& fam, int start) {
    std::vector<std::vector<BiPoly>> pts;
    pts.reserve(mp.slots);
    for (int s = 0; s < mp.slots; ++s) pts.push_back(family_point(fam, start + s));
    return mp.evaluate(pts, BiPoly(), [](const Scalar& c) { return BiPoly::constant(c); });
}

bool is_constant(const FieldPoly& f) { return f.degree() <= 0; }

FieldPoly multiply(const FieldPoly& x, const FieldPoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    FieldPoly out;
    out.c.assign(x.c.size() + y.c.size() - 1, Scalar::zero_like(x.c[0]));
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t j = 0; j < y.c.size(); ++j) out.c[i + j] = out.c[i + j] + x.c[i] * y.c[j];
    out.normalize();
    return out;
}

// exact long division, remainder discarded; used with den dividing num
FieldPoly divide_exact(const FieldPoly& num, const FieldPoly& den) {
    FieldPoly r = num;
    FieldPoly q;
    if (num.degree() < den.degree()) return q;
    q.c.assign(size_t(num.degree() - den.degree() + 1), Scalar::zero_like(den.c.back()));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        Scalar f = r.c.back() / den.c.back();
        int shift = r.degree() - den.degree();
        q.c[size_t(shift)] = f;
        for (int i = 0; i <= den.degree(); ++i) {
            Scalar next = r.c[size_t(i + shift)] - f * den.c[size_t(i)];
            r.c[size_t(i + shift)] = next;
        }
        r.normalize();
    }
    q.normalize();
    return q;
}

Scalar make_const(long long k, const Scalar& one) {
    Scalar s = Scalar::integer(k);
    return one.is_function_kind() ? s.promote() : s;
}

Scalar field_one(const ParametricPointFamily& fam, const std::vector<NCPoly>& F) {
    for (const auto& f : F)
        if (!f.is_zero()) return Scalar::one_like(f.terms().begin()->second);
    for (const auto& pt : fam.points)
        for (const auto& c : pt)
            if (!c.is_zero()) return Scalar::one_like(c.terms().begin()->second);
    return Scalar::integer(1);
}

// parameter values degenerating some family point to the zero vector
struct Degeneracy {
    FieldPoly finite; // roots cover all degenerating finite parameters
    bool at_infinity = false;
};

Degeneracy degeneracy_locus(const ParametricPointFamily& fam, const Scalar& one) {
    Degeneracy out;
    out.finite.c = {one};
    for (const auto& pt : fam.points) {
        FieldPoly g;
        bool inf = true;
        bool any = false;
        for (const BiPoly& coord : pt) {
            if (coord.is_zero()) continue;
            any = true;
            FieldPoly d = dehomogenize(coord);
            g = g.is_zero() ? d : gcd(g, d);
            inf = inf && vanishes_at_infinity(coord);
        }
        if (any && !is_constant(g)) out.finite = multiply(out.finite, g);
        out.at_infinity = out.at_infinity || !any || inf;
    }
    return out;
}

std::string render_locus(const FieldPoly& good, bool inf_member, const Scalar& one) {
    BiPoly h;
    int d = good.degree();
    if (d >= 1) {
        for (int i = 0; i <= d; ++i)
            if (!good.c[size_t(i)].is_zero()) h.add_term(i, d - i, good.c[size_t(i)]);
    } else {
        h = BiPoly::constant(one);
    }
    if (inf_member) h = h * BiPoly::var_b(one);
    return h.to_string();
}

std::string pick_member(const ParametricPointFamily& fam, const Scalar& one) {
    const long long cand[][2] = {{1, 1}, {1, -1}, {2, 1},  {1, 2}, {1, 0},
                                 {0, 1}, {3, 1},  {1, 3},  {2, 3}, {3, 2}};
    for (const auto& ab : cand) {
        Scalar a = make_const(ab[0], one), b = make_const(ab[1], one);
        bool ok = true;
        for (const auto& pt : fam.points) {
            bool nz = false;
            for (const auto& c : pt) nz = nz || !c.eval(a, b).is_zero();
            ok = ok && nz;
        }
        if (ok) return "(" + a.to_string() + " : " + b.to_string() + ")";
    }
    return "";
}

} // namespace

std::vector<MultiPoly> point_conditions(const Presentation& p) {
    std::vector<MultiPoly> out;
    out.reserve(p.relations.size());
    for (const auto& r : p.relations) {
        if (r.is_zero()) throw NotQuadratic("zero relation has no bilinear form");
        for (const auto& [w, c] : r.terms())
            if (w.size() != 2) throw NotQuadratic("relation is not of degree two");
        out.push_back(multilinearize(r, p.n));
    }
    return out;
}

FamilyCheck verify_family(const ParametricPointFamily& fam, const Presentation& p) {
    auto conds = point_conditions(p);
    for (int s = 0; s < fam.period; ++s)
        for (size_t r = 0; r < conds.size(); ++r) {
            BiPoly res = eval_on_window(conds[r], fam, s);
            if (!res.is_zero())
                return FamilyCheck{false, static_cast<int>(r), s, res.to_string()};
        }
    return FamilyCheck{};
}

AnnihilationReport annihilates(const ParametricPointFamily& fam, const std::vector<NCPoly>& F,
                               int window_count) {
    const int n = fam.points.empty() ? 0 : static_cast<int>(fam.points[0].size());
    const Scalar one = field_one(fam, F);
    int maxdeg = 1;
    for (const auto& f : F) maxdeg = std::max(maxdeg, f.degree());
    const int L = window_count > 0 ? window_count : fam.period * maxdeg;

    std::vector<BiPoly> forms;
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        MultiPoly mp = multilinearize(f, n);
        for (int s = 0; s < L; ++s) {
            BiPoly val = eval_on_window(mp, fam, s);
            if (!val.is_zero()) forms.push_back(std::move(val));
        }
    }

    AnnihilationReport rep;
    if (forms.empty()) {
        rep.kind = AnnihilationKind::IdenticallyAnnihilated;
        rep.member = pick_member(fam, one);
        return rep;
    }

    FieldPoly g;
    bool inf_zero = true;
    for (const BiPoly& w : forms) {
        FieldPoly d = dehomogenize(w);
        g = g.is_zero() ? d : gcd(g, d);
        inf_zero = inf_zero && vanishes_at_infinity(w);
    }

    Degeneracy bad = degeneracy_locus(fam, one);
    FieldPoly good = g;
    while (!is_constant(good)) {
        FieldPoly h = gcd(good, bad.finite);
        if (is_constant(h)) break;
        good = divide_exact(good, h);
    }
    const bool inf_member = inf_zero && !bad.at_infinity;

    if (is_constant(good) && !inf_member) {
        rep.kind = AnnihilationKind::NowhereAnnihilated;
        return rep;
    }
    rep.kind = AnnihilationKind::AnnihilatedOnSubfamily;
    rep.conditions = render_locus(good, inf_member, one);
    if (inf_member) {
        rep.member = "(1 : 0)";
    } else if (good.degree() == 1) {
        Scalar root = -(good.c[0] / good.c[1]);
        rep.member = "(" + root.to_string() + " : 1)";
    }
    return rep;
}

AnnihilationReport annihilates(const ParametricPointFamily& fam, const NCPoly& f,
                               int window_count) {
    return annihilates(fam, std::vector<NCPoly>{f}, window_count);
}

std::string annihilation_kind_name(AnnihilationKind k) {
    switch (k) {
        case AnnihilationKind::IdenticallyAnnihilated: return "identically-annihilated";
        case AnnihilationKind::NowhereAnnihilated: return "nowhere-annihilated";
        case AnnihilationKind::AnnihilatedOnSubfamily: return "annihilated-on-subfamily";
    }
    return "";
}

namespace {

std::vector<Scalar> canonical_integer_point(const std::vector<Scalar>& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x.rat()));
    std::vector<Int> w;
    w.reserve(v.size());
    Int g = 0;
    for (const auto& x : v) {
        Rat r = x.rat() * Rat(l);
        w.push_back(boost::multiprecision::numerator(r));
        g = boost::multiprecision::gcd(g, w.back());
    }
    if (g == 0) return v;
    Int lead = 0;
    for (const auto& x : w)
        if (x != 0) { lead = x; break; }
    if (lead < 0) g = -g;
    std::vector<Scalar> out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(Scalar(Rat(x / g)));
    return out;
}

} // namespace

std::optional<PointSequence> search_annihilated_point(const Presentation& p,
                                                      const std::vector<NCPoly>& F,
                                                      const ProbeOptions& opts) {
    const int n = p.n;
    std::vector<MultiPoly> forms = point_conditions(p);
    for (const auto& f : F) {
        if (f.is_zero()) continue;
        forms.push_back(multilinearize(f, n));
    }

    const bool funckind = p.one.is_function_kind();
    std::optional<Rat> q0;
    if (funckind) {
        for (long long cand : {2LL, 3LL, 5LL, 7LL, 11LL}) {
            bool ok = true;
            try {
                for (const auto& mp : forms)
                    for (const auto& [w, c] : mp.terms) (void)c.specialize(Rat(cand));
            } catch (const PoleAtValue&) {
                ok = false;
            }
            if (ok) {
                q0 = Rat(cand);
                break;
            }
        }
        if (!q0) return std::nullopt;
    }

    auto to_prime = [&](const Scalar& c, std::int64_t pr) {
        return reduce_mod_p(funckind ? c.specialize(*q0) : c, pr);
    };

    auto verify_exact = [&](const std::vector<std::vector<Scalar>>& pts) {
        const int L = static_cast<int>(pts.size());
        for (const auto& mp : forms)
            for (int s = 0; s < L; ++s) {
                std::vector<std::vector<Scalar>> window;
                window.reserve(mp.slots);
                for (int j = 0; j < mp.slots; ++j) window.push_back(pts[size_t((s + j) % L)]);
                if (!mp.evaluate_scalar(window).is_zero()) return false;
            }
        return true;
    };

    auto verify_modp = [&](const std::vector<std::vector<PrimeScalar>>& pts, std::int64_t pr) {
        const int L = static_cast<int>(pts.size());
        PrimeScalar zero{0, pr};
        for (const auto& mp : forms)
            for (int s = 0; s < L; ++s) {
                std::vector<std::vector<PrimeScalar>> window;
                window.reserve(mp.slots);
                for (int j = 0; j < mp.slots; ++j) window.push_back(pts[size_t((s + j) % L)]);
                PrimeScalar v =
                    mp.evaluate(window, zero, [&](const Scalar& c) { return to_prime(c, pr); });
                if (!v.is_zero()) return false;
            }
        return true;
    };

    // linear constraints on the point following `chain`: every form whose
    // window ends at the candidate position
    auto extension_rows = [&](const std::vector<std::vector<PrimeScalar>>& chain,
                              std::int64_t pr) {
        PrimeScalar zero{0, pr};
        std::vector<std::vector<PrimeScalar>> rows;
        const int next = static_cast<int>(chain.size());
        for (const auto& mp : forms) {
            const int d = mp.slots;
            const int start = next - (d - 1);
            if (start < 0) continue;
            std::vector<PrimeScalar> row(size_t(n), zero);
            for (const auto& [w, c] : mp.terms) {
                PrimeScalar t = to_prime(c, pr);
                for (int s = 0; s < d - 1; ++s) t = t * chain[size_t(start + s)][size_t(w[size_t(s)])];
                size_t v = size_t(w[size_t(d - 1)]);
                row[v] = row[v] + t;
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };

    auto satisfies = [&](const std::vector<std::vector<PrimeScalar>>& rows,
                         const std::vector<PrimeScalar>& v, std::int64_t pr) {
        for (const auto& row : rows) {
            PrimeScalar acc{0, pr};
            for (int i = 0; i < n; ++i) acc = acc + row[size_t(i)] * v[size_t(i)];
            if (!acc.is_zero()) return false;
        }
        return true;
    };

    auto try_close = [&](const std::vector<std::vector<PrimeScalar>>& chain,
                         std::int64_t pr) -> std::optional<PointSequence> {
        if (!verify_modp(chain, pr)) return std::nullopt;
        std::vector<std::vector<Scalar>> exact;
        exact.reserve(chain.size());
        for (auto pt : chain) {
            if (!normalize_projective(pt)) return std::nullopt;
            auto lifted = lift_point(pt);
            if (!lifted) return std::nullopt;
            exact.push_back(canonical_integer_point(*lifted));
        }
        if (funckind)
            for (auto& pt : exact)
                for (auto& x : pt) x = x.promote();
        if (!verify_exact(exact)) return std::nullopt;
        PointSequence seq;
        seq.points = std::move(exact);
        seq.cyclic = true;
        seq.period = static_cast<int>(seq.points.size());
        return seq;
    };

    std::function<std::optional<PointSequence>(std::vector<std::vector<PrimeScalar>>&,
                                               std::int64_t, int&)>
        dfs = [&](std::vector<std::vector<PrimeScalar>>& chain, std::int64_t pr,
                  int& budget) -> std::optional<PointSequence> {
        if (budget <= 0 || static_cast<int>(chain.size()) > opts.max_chain_length)
            return std::nullopt;
        --budget;
        auto rows = extension_rows(chain, pr);
        PrimeScalar zero{0, pr}, pone{1, pr};

        std::vector<std::vector<PrimeScalar>> cands;
        if (satisfies(rows, chain[0], pr)) cands.push_back(chain[0]);
        Mat<PrimeScalar> m(static_cast<int>(rows.size()), n, zero);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][size_t(j)];
        auto basis = nullspace(m, zero, pone);
        for (auto& v : basis)
            if (normalize_projective(v)) cands.push_back(v);
        if (basis.size() > 1) {
            std::vector<PrimeScalar> sum(size_t(n), zero);
            for (const auto& v : basis)
                for (int i = 0; i < n; ++i) sum[size_t(i)] = sum[size_t(i)] + v[size_t(i)];
            if (normalize_projective(sum)) cands.push_back(sum);
        }

        std::vector<std::vector<PrimeScalar>> seen;
        for (auto& c : cands) {
            bool dup = false;
            for (const auto& s : seen) dup = dup || s == c;
            if (dup) continue;
            seen.push_back(c);
            if (c == chain[0]) {
                if (auto hit = try_close(chain, pr)) return hit;
                continue;
            }
            chain.push_back(c);
            if (auto hit = dfs(chain, pr, budget)) return hit;
            chain.pop_back();
        }
        return std::nullopt;
    };

    auto run_start = [&](std::vector<PrimeScalar> c0, std::int64_t pr)
        -> std::optional<PointSequence> {
        if (!normalize_projective(c0)) return std::nullopt;
        std::vector<std::vector<PrimeScalar>> chain{std::move(c0)};
        int budget = 256;
        return dfs(chain, pr, budget);
    };

    for (std::int64_t pr : opts.primes) {
        if (!is_odd_prime(pr)) continue;
        try {
            HeightEnumerator he(n);
            while (auto iv = he.next(opts.enumeration_budget)) {
                std::vector<PrimeScalar> c0(static_cast<size_t>(n));
                bool nz = false;
                for (int i = 0; i < n; ++i) {
                    std::int64_t r = (((*iv)[size_t(i)] % pr) + pr) % pr;
                    c0[size_t(i)] = PrimeScalar{r, pr};
                    nz = nz || r != 0;
                }
                if (!nz) continue;
                if (auto hit = run_start(std::move(c0), pr)) return hit;
            }
            std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(pr));
            for (int t = 0; t < opts.random_trials; ++t)
                if (auto hit = run_start(random_point(n, pr, rng), pr)) return hit;
        } catch (const DenominatorVanishes&) {
            continue;
        } catch (const BadPrime&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace skewcliff
