#include "skewcliff/gsca.hpp"

#include "skewcliff/linalg.hpp"

namespace skewcliff {

GscaInput make_gsca_input(MuData mu,
                          const std::vector<std::vector<std::vector<Scalar>>>& raw,
                          std::vector<std::string> xnames) {
    GscaInput in;
    if (static_cast<int>(raw.size()) != mu.n)
        throw SchemaError("need exactly one matrix per generator");
    for (const auto& m : raw) in.matrices.push_back(validate_mu_symmetric(m, mu));
    if (xnames.empty())
        for (int i = 1; i <= mu.n; ++i) xnames.push_back("x" + std::to_string(i));
    in.xnames = std::move(xnames);
    in.mu = std::move(mu);
    return in;
}

Presentation build_gsca_relations(const GscaInput& in) {
    int n = in.mu.n;
    Presentation p;
    p.n = 2 * n;
    p.names = in.xnames;
    for (int k = 1; k <= n; ++k) p.names.push_back("y" + std::to_string(k));
    p.gen_degrees.assign(n, 1);
    p.gen_degrees.resize(2 * n, 2);
    p.one = in.mu.one;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            NCPoly r = NCPoly::term(Word{i, j}, in.mu.one) +
                       NCPoly::term(Word{j, i}, in.mu.mu[i][j]);
            for (int k = 0; k < n; ++k)
                r = r - NCPoly::term(Word{n + k}, in.matrices[k].m[i][j]);
            p.relations.push_back(std::move(r));
        }
    }
    return p;
}

Elimination eliminate_y(const GscaInput& in) {
    int n = in.mu.n;
    Scalar zero = Scalar::zero_like(in.mu.one);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) pairs.push_back({i, j});
    int N = static_cast<int>(pairs.size());

    // x-side of each defining relation
    std::vector<NCPoly> qx(N);
    for (int t = 0; t < N; ++t) {
        auto [i, j] = pairs[t];
        qx[t] = NCPoly::term(Word{i, j}, in.mu.one) +
                NCPoly::term(Word{j, i}, in.mu.mu[i][j]);
    }

    // augmented [C | I]: C[t][k] = (M_k)[i_t][j_t]
    Mat<Scalar> aug(N, n + N, zero);
    for (int t = 0; t < N; ++t) {
        auto [i, j] = pairs[t];
        for (int k = 0; k < n; ++k) aug(t, k) = in.matrices[k].m[i][j];
        aug(t, n + t) = in.mu.one;
    }
    auto pivots = rref(aug);
    int r = 0;
    for (int c : pivots)
        if (c < n) ++r;
    if (r < n)
        throw MatricesDependent("matrices span only rank " + std::to_string(r) +
                                " of the " + std::to_string(n) + " y-coordinates");

    Elimination out;
    out.y_in_x.assign(n, NCPoly());
    std::vector<NCPoly> xrels;
    for (int row = 0; row < N; ++row) {
        bool c_zero = true;
        for (int k = 0; k < n; ++k) c_zero = c_zero && aug(row, k).is_zero();
        NCPoly combo;
        for (int t = 0; t < N; ++t) {
            const Scalar& c = aug(row, n + t);
            if (!c.is_zero()) combo = combo + qx[t].scaled(c);
        }
        if (c_zero) {
            if (!combo.is_zero())
                xrels.push_back(combo.monic(MonomialOrder::standard(n)));
        } else {
            // full-rank C: pivot rows read off y_k = combo
            int k = -1;
            for (int c = 0; c < n; ++c)
                if (!aug(row, c).is_zero()) { k = c; break; }
            out.y_in_x[k] = combo;
        }
    }
    out.quadratic = Presentation::make(in.xnames, std::move(xrels), in.mu.one);
    return out;
}

RegularityCertificate certify_regular(const GscaInput& in, int truncation,
                                      const ProbeOptions& opts) {
    RegularityCertificate cert;
    QuadricSystem Q;
    Q.mu = in.mu;
    for (const auto& m : in.matrices) Q.quadrics.push_back(quadric_of_matrix(m, in.mu));
    cert.quadrics = Q.quadrics;

    try {
        cert.elimination = eliminate_y(in);
    } catch (const MatricesDependent& e) {
        cert.elimination_error = e.what();
    }

    try {
        cert.base_point = base_point_free(Q, truncation, opts);
        cert.normality = cert.base_point.normality;
    } catch (const NotNormalizing& e) {
        Presentation S = skew_presentation(in.mu);
        cert.normality = is_normalizing_sequence(Q.quadrics, S, truncation,
                                                 MonomialOrder::standard(in.mu.n));
        cert.conclusion = RegularityConclusion::NotRegular;
        cert.reason = std::string("quadric system is not normalizing: ") + e.what();
        return cert;
    }

    switch (cert.base_point.kind) {
        case BasePointKind::Free: {
            if (!cert.elimination) {
                // cannot happen for a free system; report honestly if it does
                cert.conclusion = RegularityConclusion::Inconclusive;
                cert.reason = "base point free but y-elimination failed: " + cert.elimination_error;
                return cert;
            }
            RewriteSystem rs =
                complete_truncated(cert.elimination->quadratic, truncation,
                                   MonomialOrder::standard(in.mu.n));
            cert.hilbert = hilbert_function(rs, truncation);
            cert.hilbert_checked = rs.certified_complete;
            // expected: binomial(m + n - 1, n - 1)
            for (int m = 0; m <= truncation; ++m) {
                Int num(1), den(1);
                for (int i = 1; i <= in.mu.n - 1; ++i) {
                    num *= m + i;
                    den *= i;
                }
                cert.expected_hilbert.push_back(num / den);
            }
            cert.hilbert_match = cert.hilbert == cert.expected_hilbert;
            if (cert.hilbert_checked && !cert.hilbert_match) {
                cert.conclusion = RegularityConclusion::Inconclusive;
                cert.reason = "criterion holds but the Hilbert function disagrees";
                return cert;
            }
            cert.conclusion = RegularityConclusion::CertifiedRegular;
            cert.reason = "quadric system is normalizing and base point free";
            return cert;
        }
        case BasePointKind::NotFree:
            cert.conclusion = RegularityConclusion::NotRegular;
            cert.reason = "quadric system has a base point";
            return cert;
        default:
            cert.conclusion = RegularityConclusion::Inconclusive;
            cert.reason = "base-point decision not certified at this truncation";
            return cert;
    }
}

std::string regularity_conclusion_name(RegularityConclusion c) {
    switch (c) {
        case RegularityConclusion::CertifiedRegular: return "certified-regular";
        case RegularityConclusion::NotRegular: return "not-regular";
        default: return "inconclusive";
    }
}

} // namespace skewcliff
