#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcliff/freealg.hpp"
#include "skewcliff/geometry.hpp"
#include "skewcliff/scalar.hpp"

namespace skewcliff {

// canonical command set, in dependency order
const std::vector<std::string>& canonical_commands();

// z1..zn, the display variables of quadric systems
std::vector<std::string> quadric_names(int n);

struct ManifestOptions {
    std::optional<int> max_degree;
    std::uint64_t seed = 1;
    std::vector<std::int64_t> primes;  // empty keeps the built-in defaults
    std::vector<std::string> order; // generator names, smallest first
};

// One job description: a coefficient field, an algebra given either by
// mu-symmetric matrices or by explicit relations, an optional normalizing
// sequence, optional point-module families, and the commands to run.
struct Manifest {
    std::string name;
    std::string description;
    bool function_field = false;    // coefficient field Q(q) instead of Q
    std::optional<Rat> q_value;     // specialization of q, applied at run time
    std::vector<std::string> generators;
    std::vector<std::vector<Scalar>> mu; // empty when absent
    std::vector<std::vector<std::vector<Scalar>>> matrices;
    std::vector<NCPoly> relations;
    std::vector<NCPoly> quadrics;
    std::vector<NCPoly> sequence;
    bool ambient_skew = false;
    std::vector<ParametricPointFamily> families;
    ManifestOptions options;
    std::vector<std::string> commands;

    int n() const { return static_cast<int>(generators.size()); }
    bool gsca_route() const { return !matrices.empty(); }
};

// Parses and validates the JSON manifest text; throws SchemaError,
// ExpressionParseError, MuAxiomViolation or NotMuSymmetric with the offending
// field named in the message.
Manifest parse_manifest(const std::string& text);

std::string serialize_manifest(const Manifest& m);

// Replaces q by the declared value everywhere, yielding a plain-Q manifest.
// Identity when no q value is declared.
Manifest specialize_q(const Manifest& m);

} // namespace skewcliff
