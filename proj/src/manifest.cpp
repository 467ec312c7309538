#include "skewcliff/manifest.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "skewcliff/errors.hpp"
#include "skewcliff/expr.hpp"
#include "skewcliff/linalg.hpp"
#include "skewcliff/skew.hpp"

namespace skewcliff {

const std::vector<std::string>& canonical_commands() {
    static const std::vector<std::string> cmds = {
        "validate",  "gsca",          "hilbert",         "growth",     "normalizing",
        "certify-regular", "base-point-free", "conditions", "ci-verdict"};
    return cmds;
}

std::vector<std::string> quadric_names(int n) {
    std::vector<std::string> names;
    names.reserve(size_t(n));
    for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw SchemaError(msg); }

void expect_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) fail("unknown field '" + key + "' in " + where);
}

std::string get_string(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where + " must be a string");
    return j.get<std::string>();
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Scalar read_scalar(const Json& j, bool ff, const std::string& where) {
    std::string text = get_string(j, where);
    try {
        return parse_scalar(text, ff);
    } catch (const ExpressionParseError& e) {
        throw ExpressionParseError(where + ": " + e.what());
    }
}

NCPoly read_poly(const Json& j, const std::vector<std::string>& names, bool ff,
                 const std::string& where) {
    std::string text = get_string(j, where);
    try {
        return parse_ncpoly(text, names, ff);
    } catch (const ExpressionParseError& e) {
        throw ExpressionParseError(where + ": " + e.what());
    }
}

bool quadratic_words(const NCPoly& f) {
    for (const auto& [w, c] : f.terms())
        if (w.size() != 2) return false;
    return !f.is_zero();
}

// the declared relations must span exactly the commutator space of mu
void check_skew_declaration(const Manifest& m) {
    const int n = m.n();
    const int nn = n * n;
    const Scalar one = m.mu[0][0];
    const Scalar zero = Scalar::zero_like(one);
    std::vector<NCPoly> comm;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            comm.push_back(NCPoly::term(Word{j, i}, one) -
                           NCPoly::term(Word{i, j}, m.mu[size_t(i)][size_t(j)]));
    auto rows = [&](const std::vector<NCPoly>& polys) {
        Mat<Scalar> M(static_cast<int>(polys.size()), nn, zero);
        for (size_t r = 0; r < polys.size(); ++r)
            for (const auto& [w, c] : polys[r].terms())
                M(static_cast<int>(r), w[0] * n + w[1]) = c;
        return M;
    };
    for (const auto& r : m.relations)
        if (!quadratic_words(r))
            fail("ambient_skew_ring declared but a relation is not quadratic");
    std::vector<NCPoly> both = comm;
    both.insert(both.end(), m.relations.begin(), m.relations.end());
    int rc = rank(rows(comm));
    int rr = rank(rows(m.relations));
    int rb = rank(rows(both));
    if (rc != rr || rb != rc)
        fail("ambient_skew_ring declared but the relations do not span the commutator "
             "space of mu");
}

} // namespace

Manifest parse_manifest(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) fail("manifest must be a JSON object");
    expect_keys(j,
                {"schema", "name", "description", "field", "q", "generators", "mu", "matrices",
                 "relations", "quadrics", "sequence", "ambient_skew_ring", "families", "options",
                 "commands"},
                "manifest");

    Manifest m;
    if (j.contains("schema") && (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1))
        fail("unsupported schema version");
    if (!j.contains("name")) fail("missing field 'name'");
    m.name = get_string(j["name"], "name");
    if (m.name.empty()) fail("name must not be empty");
    if (j.contains("description")) m.description = get_string(j["description"], "description");

    if (!j.contains("field")) fail("missing field 'field'");
    std::string field = get_string(j["field"], "field");
    if (field == "Q")
        m.function_field = false;
    else if (field == "Q(q)")
        m.function_field = true;
    else
        fail("field must be \"Q\" or \"Q(q)\"");
    const bool ff = m.function_field;

    if (j.contains("q")) {
        if (!ff) fail("q specialization requires field \"Q(q)\"");
        Scalar v = read_scalar(j["q"], false, "q");
        m.q_value = v.rat();
    }

    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        fail("generators must be a non-empty array");
    std::set<std::string> seen;
    for (const auto& g : j["generators"]) {
        std::string name = get_string(g, "generator name");
        if (!is_identifier(name)) fail("generator '" + name + "' is not an identifier");
        if (name == "q") fail("generator name 'q' is reserved for the field parameter");
        if (!seen.insert(name).second) fail("duplicate generator '" + name + "'");
        m.generators.push_back(name);
    }
    const int n = m.n();

    if (j.contains("mu")) {
        const Json& mj = j["mu"];
        if (!mj.is_array() || static_cast<int>(mj.size()) != n) fail("mu must be an n x n array");
        for (int i = 0; i < n; ++i) {
            if (!mj[size_t(i)].is_array() || static_cast<int>(mj[size_t(i)].size()) != n)
                fail("mu row " + std::to_string(i + 1) + " must have n entries");
            std::vector<Scalar> row;
            for (int k = 0; k < n; ++k)
                row.push_back(read_scalar(mj[size_t(i)][size_t(k)], ff,
                                          "mu[" + std::to_string(i + 1) + "][" +
                                              std::to_string(k + 1) + "]"));
            m.mu.push_back(std::move(row));
        }
        validate_mu(m.mu);
    }

    const bool has_matrices = j.contains("matrices");
    const bool has_relations = j.contains("relations");
    if (has_matrices == has_relations)
        fail("exactly one of 'matrices' and 'relations' must be present");

    if (has_matrices) {
        if (m.mu.empty()) fail("matrices require mu");
        const Json& mm = j["matrices"];
        if (!mm.is_array() || static_cast<int>(mm.size()) != n)
            fail("matrices must list one n x n matrix per generator");
        MuData md{n, m.mu, m.mu[0][0]};
        for (int k = 0; k < n; ++k) {
            const Json& one = mm[size_t(k)];
            if (!one.is_array() || static_cast<int>(one.size()) != n)
                fail("matrix " + std::to_string(k + 1) + " must be n x n");
            std::vector<std::vector<Scalar>> entries;
            for (int i = 0; i < n; ++i) {
                if (!one[size_t(i)].is_array() || static_cast<int>(one[size_t(i)].size()) != n)
                    fail("matrix " + std::to_string(k + 1) + " must be n x n");
                std::vector<Scalar> row;
                for (int c = 0; c < n; ++c)
                    row.push_back(read_scalar(one[size_t(i)][size_t(c)], ff,
                                              "matrices[" + std::to_string(k + 1) + "][" +
                                                  std::to_string(i + 1) + "][" +
                                                  std::to_string(c + 1) + "]"));
                entries.push_back(std::move(row));
            }
            validate_mu_symmetric(entries, md);
            m.matrices.push_back(std::move(entries));
        }
    } else {
        const Json& rj = j["relations"];
        if (!rj.is_array() || rj.empty()) fail("relations must be a non-empty array");
        const std::vector<int> degs(size_t(n), 1);
        for (size_t i = 0; i < rj.size(); ++i) {
            std::string where = "relations[" + std::to_string(i + 1) + "]";
            NCPoly f = read_poly(rj[i], m.generators, ff, where);
            if (f.is_zero()) fail(where + " is zero");
            if (!f.is_homogeneous(degs))
                throw ExpressionParseError(where + " is not homogeneous");
            if (f.degree() < 2) fail(where + " must have degree at least 2");
            m.relations.push_back(std::move(f));
        }
    }

    if (j.contains("quadrics")) {
        if (m.mu.empty()) fail("quadrics require mu");
        const Json& qj = j["quadrics"];
        if (!qj.is_array() || static_cast<int>(qj.size()) != n)
            fail("quadrics must list exactly one element per generator");
        const auto znames = quadric_names(n);
        for (size_t i = 0; i < qj.size(); ++i) {
            std::string where = "quadrics[" + std::to_string(i + 1) + "]";
            NCPoly f = read_poly(qj[i], znames, ff, where);
            if (!quadratic_words(f)) fail(where + " must be a nonzero quadric");
            m.quadrics.push_back(std::move(f));
        }
    }

    if (j.contains("sequence")) {
        const Json& sj = j["sequence"];
        if (!sj.is_array() || sj.empty()) fail("sequence must be a non-empty array");
        const std::vector<int> degs(size_t(n), 1);
        for (size_t i = 0; i < sj.size(); ++i) {
            std::string where = "sequence[" + std::to_string(i + 1) + "]";
            NCPoly f = read_poly(sj[i], m.generators, ff, where);
            if (f.is_zero()) fail(where + " is zero");
            if (!f.is_homogeneous(degs))
                throw ExpressionParseError(where + " is not homogeneous");
            if (f.degree() < 1) fail(where + " must have positive degree");
            m.sequence.push_back(std::move(f));
        }
    }

    if (j.contains("ambient_skew_ring")) {
        if (!j["ambient_skew_ring"].is_boolean()) fail("ambient_skew_ring must be a boolean");
        m.ambient_skew = j["ambient_skew_ring"].get<bool>();
        if (m.ambient_skew) {
            if (m.mu.empty() || m.relations.empty())
                fail("ambient_skew_ring requires mu and explicit relations");
            check_skew_declaration(m);
        }
    }

    if (j.contains("families")) {
        const Json& fj = j["families"];
        if (!fj.is_array()) fail("families must be an array");
        for (size_t i = 0; i < fj.size(); ++i) {
            std::string where = "families[" + std::to_string(i + 1) + "]";
            const Json& one = fj[i];
            if (!one.is_object()) fail(where + " must be an object");
            expect_keys(one, {"period", "points", "exhaustive"}, where);
            ParametricPointFamily fam;
            if (!one.contains("points") || !one["points"].is_array() || one["points"].empty())
                fail(where + ".points must be a non-empty array");
            for (size_t t = 0; t < one["points"].size(); ++t) {
                const Json& pj = one["points"][t];
                std::string pw = where + ".points[" + std::to_string(t + 1) + "]";
                if (!pj.is_array() || static_cast<int>(pj.size()) != n)
                    fail(pw + " must have one coordinate per generator");
                std::vector<BiPoly> pt;
                int deg = -1;
                for (size_t c = 0; c < pj.size(); ++c) {
                    std::string cw = pw + "[" + std::to_string(c + 1) + "]";
                    std::string text = get_string(pj[c], cw);
                    BiPoly b;
                    try {
                        b = parse_bipoly(text, ff);
                    } catch (const ExpressionParseError& e) {
                        throw ExpressionParseError(cw + ": " + e.what());
                    }
                    if (!b.is_zero()) {
                        if (!b.is_homogeneous()) fail(cw + " is not homogeneous in a, b");
                        if (deg >= 0 && b.degree() != deg)
                            fail(pw + " mixes coordinate degrees");
                        deg = b.degree();
                    }
                    pt.push_back(std::move(b));
                }
                if (deg < 0) fail(pw + " is identically zero");
                fam.points.push_back(std::move(pt));
            }
            fam.period = static_cast<int>(fam.points.size());
            if (one.contains("period")) {
                if (!one["period"].is_number_integer() ||
                    one["period"].get<int>() != fam.period)
                    fail(where + ".period must equal the number of points");
            }
            if (one.contains("exhaustive")) {
                if (!one["exhaustive"].is_boolean()) fail(where + ".exhaustive must be a boolean");
                fam.exhaustive = one["exhaustive"].get<bool>();
            }
            m.families.push_back(std::move(fam));
        }
    }

    if (j.contains("options")) {
        const Json& oj = j["options"];
        if (!oj.is_object()) fail("options must be an object");
        expect_keys(oj, {"max_degree", "seed", "primes", "order"}, "options");
        if (oj.contains("max_degree")) {
            if (!oj["max_degree"].is_number_integer() || oj["max_degree"].get<int>() < 2)
                fail("options.max_degree must be an integer >= 2");
            m.options.max_degree = oj["max_degree"].get<int>();
        }
        if (oj.contains("seed")) {
            if (!oj["seed"].is_number_unsigned() && !oj["seed"].is_number_integer())
                fail("options.seed must be a non-negative integer");
            m.options.seed = oj["seed"].get<std::uint64_t>();
        }
        if (oj.contains("primes")) {
            if (!oj["primes"].is_array() || oj["primes"].empty())
                fail("options.primes must be a non-empty array");
            for (const auto& pj : oj["primes"]) {
                if (!pj.is_number_integer()) fail("options.primes entries must be integers");
                std::int64_t p = pj.get<std::int64_t>();
                if (!is_odd_prime(p)) fail("options.primes entries must be odd primes");
                m.options.primes.push_back(p);
            }
        }
        if (oj.contains("order")) {
            if (!oj["order"].is_array() || static_cast<int>(oj["order"].size()) != n)
                fail("options.order must list every generator once");
            std::set<std::string> used;
            for (const auto& gj : oj["order"]) {
                std::string name = get_string(gj, "options.order entry");
                if (std::find(m.generators.begin(), m.generators.end(), name) ==
                    m.generators.end())
                    fail("options.order names unknown generator '" + name + "'");
                if (!used.insert(name).second) fail("options.order repeats '" + name + "'");
                m.options.order.push_back(name);
            }
        }
    }

    if (j.contains("commands")) {
        const Json& cj = j["commands"];
        if (!cj.is_array() || cj.empty()) fail("commands must be a non-empty array");
        std::set<std::string> used;
        for (const auto& c : cj) {
            std::string name = get_string(c, "command");
            const auto& all = canonical_commands();
            if (std::find(all.begin(), all.end(), name) == all.end())
                fail("unknown command '" + name + "'");
            if (!used.insert(name).second) fail("duplicate command '" + name + "'");
            m.commands.push_back(name);
        }
    } else {
        m.commands = {"validate"};
    }

    for (const std::string& c : m.commands) {
        if (c == "gsca" && !m.gsca_route()) fail("command 'gsca' requires matrices");
        if (c == "certify-regular" && !m.gsca_route())
            fail("command 'certify-regular' requires matrices");
        if (c == "base-point-free" && !m.gsca_route() && m.quadrics.empty())
            fail("command 'base-point-free' requires matrices or quadrics");
        if ((c == "conditions" || c == "ci-verdict" || c == "normalizing") && m.sequence.empty())
            fail("command '" + c + "' requires a sequence");
        if (c == "ci-verdict" &&
            std::find(m.commands.begin(), m.commands.end(), "conditions") == m.commands.end())
            fail("command 'ci-verdict' requires 'conditions'");
    }
    return m;
}

std::string serialize_manifest(const Manifest& m) {
    Json j;
    j["name"] = m.name;
    if (!m.description.empty()) j["description"] = m.description;
    j["field"] = m.function_field ? "Q(q)" : "Q";
    if (m.q_value) j["q"] = m.q_value->str();
    j["generators"] = m.generators;
    auto poly_list = [&](const std::vector<NCPoly>& v) {
        Json out = Json::array();
        for (const auto& f : v) out.push_back(f.to_string(m.generators));
        return out;
    };
    if (!m.mu.empty()) {
        Json mj = Json::array();
        for (const auto& row : m.mu) {
            Json rj = Json::array();
            for (const auto& c : row) rj.push_back(c.to_string());
            mj.push_back(std::move(rj));
        }
        j["mu"] = std::move(mj);
    }
    if (!m.matrices.empty()) {
        Json mm = Json::array();
        for (const auto& mat : m.matrices) {
            Json mj = Json::array();
            for (const auto& row : mat) {
                Json rj = Json::array();
                for (const auto& c : row) rj.push_back(c.to_string());
                mj.push_back(std::move(rj));
            }
            mm.push_back(std::move(mj));
        }
        j["matrices"] = std::move(mm);
    }
    if (!m.relations.empty()) j["relations"] = poly_list(m.relations);
    if (!m.quadrics.empty()) {
        Json qj = Json::array();
        const auto znames = quadric_names(m.n());
        for (const auto& f : m.quadrics) qj.push_back(f.to_string(znames));
        j["quadrics"] = std::move(qj);
    }
    if (!m.sequence.empty()) j["sequence"] = poly_list(m.sequence);
    if (m.ambient_skew) j["ambient_skew_ring"] = true;
    if (!m.families.empty()) {
        Json fj = Json::array();
        for (const auto& fam : m.families) {
            Json one;
            one["period"] = fam.period;
            Json pts = Json::array();
            for (const auto& pt : fam.points) {
                Json pj = Json::array();
                for (const auto& b : pt) pj.push_back(b.to_string());
                pts.push_back(std::move(pj));
            }
            one["points"] = std::move(pts);
            if (fam.exhaustive) one["exhaustive"] = true;
            fj.push_back(std::move(one));
        }
        j["families"] = std::move(fj);
    }
    Json oj;
    if (m.options.max_degree) oj["max_degree"] = *m.options.max_degree;
    oj["seed"] = m.options.seed;
    if (!m.options.primes.empty()) oj["primes"] = m.options.primes;
    if (!m.options.order.empty()) oj["order"] = m.options.order;
    j["options"] = std::move(oj);
    j["commands"] = m.commands;
    return j.dump(2) + "\n";
}

Manifest specialize_q(const Manifest& m) {
    if (!m.q_value) return m;
    const Rat q = *m.q_value;
    auto sc = [&](const Scalar& s) { return s.specialize(q); };
    auto poly = [&](const NCPoly& f) {
        NCPoly out;
        for (const auto& [w, c] : f.terms()) out.add_term(w, sc(c));
        return out;
    };
    Manifest out = m;
    out.function_field = false;
    out.q_value.reset();
    for (auto& row : out.mu)
        for (auto& c : row) c = sc(c);
    for (auto& mat : out.matrices)
        for (auto& row : mat)
            for (auto& c : row) c = sc(c);
    for (auto& f : out.relations) f = poly(f);
    for (auto& f : out.quadrics) f = poly(f);
    for (auto& f : out.sequence) f = poly(f);
    for (auto& fam : out.families)
        for (auto& pt : fam.points)
            for (auto& b : pt) {
                BiPoly nb;
                for (const auto& [ij, c] : b.terms()) nb.add_term(ij.first, ij.second, sc(c));
                b = std::move(nb);
            }
    if (!out.mu.empty()) validate_mu(out.mu);
    return out;
}

} // namespace skewcliff
