#pragma once
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/skew.hpp"

namespace skewcliff {

struct GscaInput {
    MuData mu;
    std::vector<MuSymMatrix> matrices; // M_1..M_n, one per generator
    std::vector<std::string> xnames;   // defaults x1..xn
};

GscaInput make_gsca_input(MuData mu,
                          const std::vector<std::vector<std::vector<Scalar>>>& raw,
                          std::vector<std::string> xnames = {});

// Presentation on x_1..x_n (degree 1) and y_1..y_n (degree 2) with the
// defining relations x_i x_j + mu[i][j] x_j x_i - sum_k (M_k)[i][j] y_k for
// i <= j.
Presentation build_gsca_relations(const GscaInput& in);

struct Elimination {
    Presentation quadratic;       // x generators only
    std::vector<NCPoly> y_in_x;   // y_k expressed as a quadratic x-polynomial
};

// Solves the defining relations for the y's; requires the span of the M_k to
// have full rank n over the pair space, else raises MatricesDependent. The
// leftover row dependencies become the quadratic x-relations.
Elimination eliminate_y(const GscaInput& in);

enum class RegularityConclusion { CertifiedRegular, NotRegular, Inconclusive };

struct RegularityCertificate {
    RegularityConclusion conclusion = RegularityConclusion::Inconclusive;
    std::string reason;
    std::vector<NCPoly> quadrics;          // monic quadric system of the M_k
    std::vector<NormalityReport> normality;
    BasePointReport base_point;
    std::optional<Elimination> elimination;
    std::string elimination_error;
    std::vector<Int> hilbert;              // of the quadratic x-presentation
    std::vector<Int> expected_hilbert;     // binomial coefficients
    bool hilbert_checked = false;
    bool hilbert_match = false;
};

// Certifies regularity via the quadric-system criterion: the algebra is
// regular exactly when the quadrics form a normalizing, base-point-free
// system.
RegularityCertificate certify_regular(const GscaInput& in, int truncation,
                                      const ProbeOptions& opts);

std::string regularity_conclusion_name(RegularityConclusion c);

} // namespace skewcliff
