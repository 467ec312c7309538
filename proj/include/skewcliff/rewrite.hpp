#pragma once
#include <string>
#include <vector>

#include "skewcliff/freealg.hpp"

namespace skewcliff {

// Homogeneous presentation of a graded algebra by generators and relations.
// gen_degrees allows weighted gradings (degree-2 auxiliary generators); the
// rewriting engine itself only accepts presentations with all degrees 1.
struct Presentation {
    int n = 0;
    std::vector<std::string> names;
    std::vector<int> gen_degrees;
    std::vector<NCPoly> relations;
    Scalar one = Scalar::integer(1); // carries the coefficient field kind

    static Presentation make(std::vector<std::string> names,
                             std::vector<NCPoly> relations,
                             Scalar one = Scalar::integer(1));
    Presentation extended(const std::vector<NCPoly>& extra) const;
};

// Validates a user-supplied presentation: relations homogeneous, nonzero, of
// weighted degree >= 2.
void validate_presentation(const Presentation& p);

struct Rule {
    Word lhs;     // monic leading word
    NCPoly rhs;   // order-smaller reduction of lhs
};

// Degree-truncated rewriting system produced by two-sided completion.
// certified_complete means every overlap ambiguity was processed and the
// truncation dominates 2 * max_rule_degree - 1, so the system is a full
// noncommutative Groebner basis and all derived counts are exact.
struct RewriteSystem {
    int n = 0;
    MonomialOrder order;
    int truncation = 0;
    int max_rule_degree = 0;
    bool certified_complete = false;
    std::vector<Rule> rules; // sorted by lhs in structural order
    Scalar one = Scalar::integer(1);
};

RewriteSystem complete_truncated(const Presentation& p, int truncation,
                                 const MonomialOrder& order);
RewriteSystem complete_truncated(const Presentation& p, int truncation);

NCPoly normal_form(const NCPoly& f, const RewriteSystem& rs);

// Normal words of exactly the given length, in structural order.
std::vector<Word> normal_words(const RewriteSystem& rs, int length);

// Dimensions of the graded slices 0..maxdeg by forbidden-factor counting.
// Exact for certified systems at every degree; for uncertified systems the
// values are upper bounds, sound only up to the truncation degree.
std::vector<Int> hilbert_function(const RewriteSystem& rs, int maxdeg);
Int hilbert_value(const RewriteSystem& rs, int m);

struct UfnGraph {
    int ell = 0;                        // window length: max rule degree - 1
    std::vector<Word> vertices;         // normal words of length ell
    std::vector<std::vector<int>> adj;  // sorted successor lists
};

UfnGraph ufnarovski_graph(const RewriteSystem& rs);

enum class GrowthKind { FiniteDimensional, PolynomialGrowth, Exponential, InconclusiveTruncated };

struct GrowthReport {
    GrowthKind kind = GrowthKind::InconclusiveTruncated;
    int gk = -1;          // Gelfand-Kirillov dimension when polynomial (0 when finite)
    Int dimension = 0;    // total dimension when finite
    std::vector<Int> hilbert;
};

GrowthReport classify_growth(const RewriteSystem& rs);

std::string growth_kind_name(GrowthKind k);

} // namespace skewcliff
