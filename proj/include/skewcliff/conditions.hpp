#pragma once
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/geometry.hpp"
#include "skewcliff/rewrite.hpp"
#include "skewcliff/skew.hpp"

namespace skewcliff {

enum class Status { Holds, Fails, Inconclusive };

std::string status_name(Status s);

// Condition I, stage k: regularity of f_k modulo its predecessors, decided
// through the Hilbert factorization H_k = (1 - t^{deg f_k}) H_{k-1}. For
// certified bases agreement up to the recurrence bound proves the identity at
// every degree; otherwise the check is truncation-qualified.
struct StageReport {
    int stage = 0;
    Status status = Status::Inconclusive;
    bool exact = false;
    int first_defect_degree = -1;
    std::string witness; // kernel element annihilating f_k when the stage fails
    int witness_degree = -1;
    std::string witness_side; // "right" or "left"
    std::string detail;
};

struct ConditionI {
    Status status = Status::Inconclusive;
    bool exact = false;
    std::vector<StageReport> stages;
};

struct ConditionII {
    Status status = Status::Inconclusive;
    bool exact = false;
    GrowthReport growth;
};

struct ConditionIII {
    Status status = Status::Inconclusive;
    bool exact = false;
    // prefix k = 0..n; k = 0 is the ambient algebra with target n, reported
    // for context but not part of the condition itself
    std::vector<int> prefix_gk; // -1 unknown, -2 exponential
    std::vector<int> targets;
    std::vector<bool> prefix_exact;
    int failing_prefix = -1;
    std::string detail;
};

struct ConditionIV {
    Status status = Status::Inconclusive;
    std::string method; // family-certificates / skew-equivalence / witness-search / unavailable
    std::string witness;
    std::string detail;
    std::optional<Int> dimension; // dim of the equivalent skew quotient
};

struct ConditionReport {
    int truncation = 0;
    ConditionI one;
    ConditionII two;
    ConditionIII three;
    ConditionIV four;
    std::vector<Int> ambient_hilbert;
    std::vector<Int> quotient_hilbert;
};

struct CheckOptions {
    int truncation = 12;
    std::optional<MonomialOrder> order;
    std::vector<ParametricPointFamily> families;
    bool ambient_skew = false;
    ProbeOptions probes;
    bool run_iv = true;
};

// Conditions I-IV for the normalizing sequence F (n elements) in the algebra
// presented by p; throws NotNormalizing when some f_k is not normal modulo
// its predecessors.
ConditionReport check_conditions(const Presentation& p, const std::vector<NCPoly>& F,
                                 const CheckOptions& opts);

enum class CIVerdict { CompleteIntersection, Not, Inconclusive };

struct VerdictReport {
    CIVerdict verdict = CIVerdict::Inconclusive;
    bool iv_required = false; // ambient declared a skew polynomial ring
    bool consistency_alarm = false;
    std::string alarm_detail;
};

// CompleteIntersection iff I-III hold (and IV when the ambient algebra is a
// declared skew polynomial ring); exact disagreement between two of I-III
// raises the consistency alarm.
VerdictReport complete_intersection_verdict(const ConditionReport& rep, bool ambient_skew);

std::string verdict_name(CIVerdict v);

} // namespace skewcliff
