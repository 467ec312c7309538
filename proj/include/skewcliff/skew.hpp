#pragma once
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/probes.hpp"
#include "skewcliff/rewrite.hpp"

namespace skewcliff {

// Multiplicative antisymmetry data: mu[i][j] nonzero, mu[i][i] = 1 and
// mu[i][j] * mu[j][i] = 1.
struct MuData {
    int n = 0;
    std::vector<std::vector<Scalar>> mu;
    Scalar one = Scalar::integer(1);
};

MuData validate_mu(const std::vector<std::vector<Scalar>>& entries);

// Matrix M with M[i][j] = mu[i][j] * M[j][i] for all i, j.
struct MuSymMatrix {
    int n = 0;
    std::vector<std::vector<Scalar>> m;
};

MuSymMatrix validate_mu_symmetric(const std::vector<std::vector<Scalar>>& entries,
                                  const MuData& mu);

// The skew polynomial ring on z_1..z_n: z_j z_i = mu[i][j] z_i z_j for i < j.
Presentation skew_presentation(const MuData& mu, std::vector<std::string> names = {});

// Rewrites every word z_j z_i with j > i to mu[i][j] z_i z_j; the canonical
// basis-ordered representative of a quadric in the skew ring.
NCPoly canonical_lift(const NCPoly& q, const MuData& mu);

// Sum over i, j of M[i][j] z_i z_j, canonically lifted and made monic.
NCPoly quadric_of_matrix(const MuSymMatrix& M, const MuData& mu);

// Section of quadric_of_matrix: diagonal entries twice the z_i^2 coefficient,
// upper entries the mixed coefficients, lower entries filled mu-symmetrically.
MuSymMatrix matrix_of_quadric(const NCPoly& q, const MuData& mu);

struct NormalityReport {
    bool normal = false;
    bool exact = false;          // quotient basis was certified complete
    int element_degree = 0;
    int checked_degree = 0;
    std::optional<NCPoly> witness; // a product f*x_j or x_i*f outside the other span
    std::string detail;
};

// Whether span{nf(f x_j)} equals span{nf(x_i f)} one degree above f; for a
// degree-one-generated graded algebra this propagates to all degrees.
NormalityReport is_normal(const NCPoly& f, const RewriteSystem& rs);

// Checks f_k normal in the quotient by f_1..f_{k-1}, in order.
std::vector<NormalityReport> is_normalizing_sequence(const std::vector<NCPoly>& F,
                                                     const Presentation& p, int truncation,
                                                     const MonomialOrder& order);

struct QuadricSystem {
    MuData mu;
    std::vector<NCPoly> quadrics; // in the z generators
    std::vector<std::string> names;
};

struct PointPair {
    std::vector<Scalar> first, second;
};

enum class BasePointKind { Free, NotFree, Inconclusive };

struct BasePointReport {
    BasePointKind kind = BasePointKind::Inconclusive;
    Int dimension = 0; // dim of S/<Q> when finite
    std::optional<PointPair> witness;
    std::vector<NormalityReport> normality;
    std::vector<Int> hilbert;
    std::string detail;
};

// Decides base-point-freeness of a normalizing quadric system through the
// finite-dimensionality of S/<Q>; throws NotNormalizing if some quadric is
// not normal modulo its predecessors.
BasePointReport base_point_free(const QuadricSystem& Q, int truncation,
                                const ProbeOptions& opts);

// Finite-field probe search for a point pair killed by all multilinearized
// relations and quadrics, lifted and verified exactly; no result is evidence,
// not proof.
std::optional<PointPair> probe_point_pair_search(const QuadricSystem& Q,
                                                 const ProbeOptions& opts);

std::string base_point_kind_name(BasePointKind k);

} // namespace skewcliff
