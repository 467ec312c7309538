#pragma once
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/bipoly.hpp"
#include "skewcliff/freealg.hpp"
#include "skewcliff/probes.hpp"
#include "skewcliff/rewrite.hpp"

namespace skewcliff {

// Bilinear forms on consecutive point pairs cutting out the point variety of
// a quadratic presentation, one per relation.
std::vector<MultiPoly> point_conditions(const Presentation& p);

// Periodic family of parametrized projective points: row t of points is the
// coordinate vector of the t-th point, each entry a binary form in (a, b) of
// a common degree per row. The sequence continues with the given period.
struct ParametricPointFamily {
    int period = 1;
    std::vector<std::vector<BiPoly>> points;
    bool exhaustive = false;
};

struct FamilyCheck {
    bool ok = true;
    int relation = -1;
    int window = -1;
    std::string residue;
};

// Substitutes every cyclic window of consecutive points into every bilinear
// condition; ok iff all residues vanish identically in (a, b).
FamilyCheck verify_family(const ParametricPointFamily& fam, const Presentation& p);

enum class AnnihilationKind { IdenticallyAnnihilated, NowhereAnnihilated, AnnihilatedOnSubfamily };

struct AnnihilationReport {
    AnnihilationKind kind = AnnihilationKind::NowhereAnnihilated;
    // Binary form in (a, b) whose zero locus is the annihilated subfamily,
    // degenerate parameter values excluded. Empty unless AnnihilatedOnSubfamily.
    std::string conditions;
    // A rational annihilated member "(a : b)" when one is readily extractable.
    std::string member;
};

// Evaluates each f on every length-deg(f) window of the cyclic family for L
// shifts and analyses the common zero locus of the collected binary forms.
// Parameter values where some family point degenerates to the zero vector are
// excluded from the locus.
AnnihilationReport annihilates(const ParametricPointFamily& fam, const NCPoly& f, int window_count);
AnnihilationReport annihilates(const ParametricPointFamily& fam, const std::vector<NCPoly>& F,
                               int window_count);

std::string annihilation_kind_name(AnnihilationKind k);

// Cyclic sequence of exact projective points: the infinite sequence repeats
// with the given period and satisfies all bilinear pair conditions and all
// window conditions of the searched sequence.
struct PointSequence {
    std::vector<std::vector<Scalar>> points;
    bool cyclic = false;
    int period = 0;
};

// Finite-field search for a point module annihilated by every element of F:
// probes cyclic point sequences over F_p, lifts hits to exact coordinates and
// re-verifies every condition exactly. Absence of a witness proves nothing.
std::optional<PointSequence> search_annihilated_point(const Presentation& p,
                                                      const std::vector<NCPoly>& F,
                                                      const ProbeOptions& opts);

} // namespace skewcliff
