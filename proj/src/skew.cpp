#include "skewcliff/skew.hpp"

#include <algorithm>

#include "skewcliff/linalg.hpp"

namespace skewcliff {

MuData validate_mu(const std::vector<std::vector<Scalar>>& entries) {
    MuData d;
    d.n = static_cast<int>(entries.size());
    if (d.n == 0) throw MuAxiomViolation("mu matrix is empty", 0, 0);
    for (int i = 0; i < d.n; ++i)
        if (static_cast<int>(entries[i].size()) != d.n)
            throw MuAxiomViolation("mu matrix is not square", i + 1, 0);
    d.one = Scalar::one_like(entries[0][0]);
    for (int i = 0; i < d.n; ++i) {
        for (int j = 0; j < d.n; ++j) {
            if (entries[i][j].is_zero())
                throw MuAxiomViolation("mu entry is zero", i + 1, j + 1);
            if (i == j && !entries[i][j].is_one())
                throw MuAxiomViolation("mu diagonal entry is not 1", i + 1, j + 1);
            if (!(entries[i][j] * entries[j][i]).is_one())
                throw MuAxiomViolation("mu[i][j]*mu[j][i] is not 1", i + 1, j + 1);
        }
    }
    d.mu = entries;
    return d;
}

MuSymMatrix validate_mu_symmetric(const std::vector<std::vector<Scalar>>& entries,
                                  const MuData& mu) {
    MuSymMatrix m;
    m.n = mu.n;
    if (static_cast<int>(entries.size()) != mu.n)
        throw NotMuSymmetric("matrix size does not match mu", 0, 0);
    for (int i = 0; i < mu.n; ++i)
        if (static_cast<int>(entries[i].size()) != mu.n)
            throw NotMuSymmetric("matrix is not square", i + 1, 0);
    for (int i = 0; i < mu.n; ++i)
        for (int j = 0; j < mu.n; ++j)
            if (!(entries[i][j] - mu.mu[i][j] * entries[j][i]).is_zero())
                throw NotMuSymmetric("entry (i,j) != mu[i][j] * entry (j,i)", i + 1, j + 1);
    m.m = entries;
    return m;
}

Presentation skew_presentation(const MuData& mu, std::vector<std::string> names) {
    if (names.empty())
        for (int i = 1; i <= mu.n; ++i) names.push_back("z" + std::to_string(i));
    std::vector<NCPoly> rels;
    for (int i = 0; i < mu.n; ++i) {
        for (int j = i + 1; j < mu.n; ++j) {
            NCPoly r = NCPoly::term(Word{j, i}, mu.one) -
                       NCPoly::term(Word{i, j}, mu.mu[i][j]);
            rels.push_back(std::move(r));
        }
    }
    return Presentation::make(std::move(names), std::move(rels), mu.one);
}

NCPoly canonical_lift(const NCPoly& q, const MuData& mu) {
    NCPoly out;
    for (const auto& [w, c] : q.terms()) {
        if (w.size() != 2)
            throw NotQuadratic("quadric must be homogeneous of degree 2");
        if (w[0] >= mu.n || w[1] >= mu.n)
            throw SchemaError("quadric references an unknown generator");
        if (w[0] > w[1])
            out.add_term(Word{w[1], w[0]}, c * mu.mu[w[1]][w[0]]);
        else
            out.add_term(w, c);
    }
    return out;
}

NCPoly quadric_of_matrix(const MuSymMatrix& M, const MuData& mu) {
    NCPoly q;
    for (int i = 0; i < mu.n; ++i)
        for (int j = 0; j < mu.n; ++j) q.add_term(Word{i, j}, M.m[i][j]);
    q = canonical_lift(q, mu);
    if (q.is_zero()) return q;
    return q.monic(MonomialOrder::standard(mu.n));
}

MuSymMatrix matrix_of_quadric(const NCPoly& q, const MuData& mu) {
    if (q.is_zero() || !q.is_homogeneous(std::vector<int>(mu.n, 1)) || q.degree() != 2)
        throw NotQuadratic("expected a nonzero homogeneous quadric");
    NCPoly lift = canonical_lift(q, mu);
    MuSymMatrix M;
    M.n = mu.n;
    Scalar zero = Scalar::zero_like(mu.one);
    Scalar two = mu.one + mu.one;
    M.m.assign(mu.n, std::vector<Scalar>(mu.n, zero));
    for (const auto& [w, c] : lift.terms()) {
        int i = w[0], j = w[1];
        if (i == j) {
            M.m[i][i] = two * c;
        } else {
            M.m[i][j] = c;
            M.m[j][i] = mu.mu[j][i] * c;
        }
    }
    return M;
}

NormalityReport is_normal(const NCPoly& f, const RewriteSystem& rs) {
    NormalityReport rep;
    rep.exact = rs.certified_complete;
    NCPoly fbar = normal_form(f, rs);
    if (fbar.is_zero()) {
        rep.normal = true;
        rep.element_degree = f.degree();
        rep.detail = "zero in the quotient";
        return rep;
    }
    int d = fbar.degree();
    rep.element_degree = d;
    rep.checked_degree = d + 1;
    if (d + 1 > rs.truncation)
        throw DegreeExceedsTruncation("normality check needs degree " + std::to_string(d + 1));
    std::vector<Word> basis = normal_words(rs, d + 1);
    std::map<Word, int, WordDegLex> col;
    for (size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], static_cast<int>(i));
    Scalar zero = Scalar::zero_like(rs.one);
    auto row_of = [&](const NCPoly& g) {
        std::vector<Scalar> row(basis.size(), zero);
        for (const auto& [w, c] : g.terms()) row[col.at(w)] = c;
        return row;
    };
    std::vector<NCPoly> left, right;
    Scalar one = Scalar::one_like(rs.one);
    for (int i = 0; i < rs.n; ++i) {
        left.push_back(normal_form(NCPoly::generator(i, one) * fbar, rs));
        right.push_back(normal_form(fbar * NCPoly::generator(i, one), rs));
    }
    auto build = [&](const std::vector<NCPoly>& v) {
        Mat<Scalar> m(static_cast<int>(v.size()), static_cast<int>(basis.size()), zero);
        for (size_t i = 0; i < v.size(); ++i) {
            auto row = row_of(v[i]);
            for (size_t j = 0; j < row.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = row[j];
        }
        return m;
    };
    Mat<Scalar> lmat = build(left), rmat = build(right);
    Mat<Scalar> lred = lmat, rred = rmat;
    auto lpiv = rref(lred);
    auto rpiv = rref(rred);
    for (int i = 0; i < rs.n; ++i) {
        if (!in_rowspace(rred, rpiv, row_of(left[i]))) {
            rep.normal = false;
            rep.witness = NCPoly::generator(i, one) * fbar;
            rep.detail = "left multiple not in the span of right multiples";
            return rep;
        }
    }
    for (int i = 0; i < rs.n; ++i) {
        if (!in_rowspace(lred, lpiv, row_of(right[i]))) {
            rep.normal = false;
            rep.witness = fbar * NCPoly::generator(i, one);
            rep.detail = "right multiple not in the span of left multiples";
            return rep;
        }
    }
    rep.normal = true;
    return rep;
}

std::vector<NormalityReport> is_normalizing_sequence(const std::vector<NCPoly>& F,
                                                     const Presentation& p, int truncation,
                                                     const MonomialOrder& order) {
    std::vector<NormalityReport> out;
    std::vector<NCPoly> prefix;
    for (const auto& f : F) {
        RewriteSystem rs = complete_truncated(p.extended(prefix), truncation, order);
        out.push_back(is_normal(f, rs));
        prefix.push_back(f);
    }
    return out;
}

namespace {

bool field_is_rational(const QuadricSystem& Q) {
    for (const auto& row : Q.mu.mu)
        for (const auto& s : row)
            if (!s.is_rational_kind()) return false;
    for (const auto& q : Q.quadrics)
        for (const auto& [w, c] : q.terms())
            if (!c.is_rational_kind()) return false;
    return true;
}

std::vector<MultiPoly> pair_forms(const QuadricSystem& Q) {
    std::vector<MultiPoly> forms;
    for (int i = 0; i < Q.mu.n; ++i)
        for (int j = i + 1; j < Q.mu.n; ++j)
            forms.push_back(multilinearize(NCPoly::term(Word{j, i}, Q.mu.one) -
                                               NCPoly::term(Word{i, j}, Q.mu.mu[i][j]),
                                           Q.mu.n));
    for (const auto& q : Q.quadrics)
        if (!q.is_zero()) forms.push_back(multilinearize(canonical_lift(q, Q.mu), Q.mu.n));
    return forms;
}

bool verify_pair_exact(const std::vector<MultiPoly>& forms, const std::vector<Scalar>& P,
                       const std::vector<Scalar>& Pp) {
    for (const auto& f : forms)
        if (!f.evaluate_scalar({P, Pp}).is_zero()) return false;
    return true;
}

} // namespace

std::optional<PointPair> probe_point_pair_search(const QuadricSystem& Q,
                                                 const ProbeOptions& opts) {
    if (!field_is_rational(Q)) return std::nullopt;
    auto forms = pair_forms(Q);
    if (forms.empty()) return std::nullopt;
    int n = Q.mu.n;
    for (std::int64_t p : opts.primes) {
        if (!is_odd_prime(p)) throw BadPrime("probe modulus must be an odd prime");
        // coefficient matrices of the bilinear forms mod p
        std::vector<Mat<PrimeScalar>> coeff;
        bool ok = true;
        PrimeScalar zero{0, p};
        for (const auto& f : forms) {
            Mat<PrimeScalar> c(n, n, zero);
            try {
                for (const auto& [w, s] : f.terms) c(w[0], w[1]) = reduce_mod_p(s, p);
            } catch (const DenominatorVanishes&) {
                ok = false;
                break;
            }
            coeff.push_back(std::move(c));
        }
        if (!ok) continue;

        auto try_first = [&](const std::vector<PrimeScalar>& P,
                             const std::vector<Scalar>& P_exact) -> std::optional<PointPair> {
            Mat<PrimeScalar> rows(static_cast<int>(coeff.size()), n, zero);
            for (size_t f = 0; f < coeff.size(); ++f)
                for (int v = 0; v < n; ++v) {
                    PrimeScalar acc = zero;
                    for (int u = 0; u < n; ++u) acc = acc + P[u] * coeff[f](u, v);
                    rows(static_cast<int>(f), v) = acc;
                }
            auto null = nullspace(rows, zero, PrimeScalar{1, p});
            for (auto& v : null) {
                if (!normalize_projective(v)) continue;
                auto lifted = lift_point(v);
                if (!lifted) continue;
                if (verify_pair_exact(forms, P_exact, *lifted))
                    return PointPair{P_exact, *lifted};
            }
            return std::nullopt;
        };

        HeightEnumerator he(n);
        while (auto cand = he.next(opts.enumeration_budget)) {
            std::vector<PrimeScalar> P(n);
            std::vector<Scalar> P_exact(n);
            bool zero_mod_p = true;
            for (int i = 0; i < n; ++i) {
                std::int64_t r = (*cand)[i] % p;
                if (r < 0) r += p;
                P[i] = PrimeScalar{r, p};
                P_exact[i] = Scalar(Rat((*cand)[i]));
                zero_mod_p = zero_mod_p && P[i].is_zero();
            }
            if (zero_mod_p) continue;
            if (auto hit = try_first(P, P_exact)) return hit;
        }
        std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(p));
        for (int t = 0; t < opts.random_trials; ++t) {
            auto P = random_point(n, p, rng);
            if (!normalize_projective(P)) continue;
            auto lifted = lift_point(P);
            if (!lifted) continue;
            if (auto hit = try_first(P, *lifted)) return hit;
        }
    }
    return std::nullopt;
}

BasePointReport base_point_free(const QuadricSystem& Q, int truncation,
                                const ProbeOptions& opts) {
    BasePointReport rep;
    Presentation S = skew_presentation(Q.mu, Q.names);
    MonomialOrder order = MonomialOrder::standard(Q.mu.n);
    rep.normality = is_normalizing_sequence(Q.quadrics, S, truncation, order);
    for (size_t k = 0; k < rep.normality.size(); ++k)
        if (!rep.normality[k].normal)
            throw NotNormalizing("quadric is not normal modulo its predecessors",
                                 static_cast<int>(k) + 1);
    RewriteSystem rs = complete_truncated(S.extended(Q.quadrics), truncation, order);
    GrowthReport growth = classify_growth(rs);
    rep.hilbert = growth.hilbert;
    switch (growth.kind) {
        case GrowthKind::FiniteDimensional:
            rep.kind = BasePointKind::Free;
            rep.dimension = growth.dimension;
            rep.detail = "quotient of the skew ring is finite dimensional";
            break;
        case GrowthKind::PolynomialGrowth:
        case GrowthKind::Exponential:
            rep.kind = BasePointKind::NotFree;
            rep.witness = probe_point_pair_search(Q, opts);
            rep.detail = rep.witness ? "quotient is infinite dimensional; witness pair verified exactly"
                                     : "quotient is infinite dimensional; no small rational witness found";
            break;
        default:
            rep.kind = BasePointKind::Inconclusive;
            rep.detail = "basis not certified at this truncation";
            break;
    }
    return rep;
}

std::string base_point_kind_name(BasePointKind k) {
    switch (k) {
        case BasePointKind::Free: return "free";
        case BasePointKind::NotFree: return "not-free";
        default: return "inconclusive";
    }
}

} // namespace skewcliff
