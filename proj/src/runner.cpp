#include "skewcliff/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <limits>

#include "json.hpp"

#include "skewcliff/conditions.hpp"
#include "skewcliff/errors.hpp"
#include "skewcliff/gsca.hpp"

namespace skewcliff {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v) {
    static const Int lo = Int(std::numeric_limits<std::int64_t>::min());
    static const Int hi = Int(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Json json_ints(const std::vector<Int>& vs) {
    Json out = Json::array();
    for (const auto& v : vs) out.push_back(json_int(v));
    return out;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[size_t(i)] = digits[v & 0xf];
    return out;
}

std::string render_point(const std::vector<Scalar>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

Json normality_node(const NormalityReport& nr, const NCPoly& f,
                    const std::vector<std::string>& names) {
    Json node;
    node["element"] = f.to_string(names);
    node["normal"] = nr.normal;
    node["exact"] = nr.exact;
    node["checked_degree"] = nr.checked_degree;
    if (nr.witness) node["witness"] = nr.witness->to_string(names);
    if (!nr.detail.empty()) node["detail"] = nr.detail;
    return node;
}

Json growth_node(const GrowthReport& g) {
    Json node;
    node["kind"] = growth_kind_name(g.kind);
    if (g.kind == GrowthKind::PolynomialGrowth) node["gk"] = g.gk;
    if (g.kind == GrowthKind::FiniteDimensional) {
        node["gk"] = 0;
        node["dimension"] = json_int(g.dimension);
    }
    node["hilbert"] = json_ints(g.hilbert);
    return node;
}

Json base_point_node(const BasePointReport& bp) {
    Json node;
    node["kind"] = base_point_kind_name(bp.kind);
    if (bp.kind == BasePointKind::Free) node["dimension"] = json_int(bp.dimension);
    if (bp.witness)
        node["witness"] =
            "(" + render_point(bp.witness->first) + ", " + render_point(bp.witness->second) + ")";
    if (!bp.hilbert.empty()) node["hilbert"] = json_ints(bp.hilbert);
    if (!bp.detail.empty()) node["detail"] = bp.detail;
    return node;
}

Json conditions_node(const ConditionReport& rep) {
    Json node;
    node["truncation"] = rep.truncation;
    node["ambient_hilbert"] = json_ints(rep.ambient_hilbert);
    node["quotient_hilbert"] = json_ints(rep.quotient_hilbert);

    Json one;
    one["status"] = status_name(rep.one.status);
    one["exact"] = rep.one.exact;
    Json stages = Json::array();
    for (const auto& st : rep.one.stages) {
        Json sj;
        sj["stage"] = st.stage;
        sj["status"] = status_name(st.status);
        sj["exact"] = st.exact;
        if (st.first_defect_degree >= 0) sj["first_defect_degree"] = st.first_defect_degree;
        if (!st.witness.empty()) {
            sj["witness"] = st.witness;
            sj["witness_degree"] = st.witness_degree;
            sj["witness_side"] = st.witness_side;
        }
        if (!st.detail.empty()) sj["detail"] = st.detail;
        stages.push_back(std::move(sj));
    }
    one["stages"] = std::move(stages);
    node["I"] = std::move(one);

    Json two;
    two["status"] = status_name(rep.two.status);
    two["exact"] = rep.two.exact;
    two["growth"] = growth_node(rep.two.growth);
    node["II"] = std::move(two);

    Json three;
    three["status"] = status_name(rep.three.status);
    three["exact"] = rep.three.exact;
    Json prefixes = Json::array();
    for (size_t k = 0; k < rep.three.prefix_gk.size(); ++k) {
        Json pj;
        pj["k"] = static_cast<int>(k);
        int gk = rep.three.prefix_gk[k];
        if (gk == -2)
            pj["gk"] = "exponential";
        else if (gk == -1)
            pj["gk"] = "unknown";
        else
            pj["gk"] = gk;
        pj["target"] = rep.three.targets[k];
        pj["exact"] = static_cast<bool>(rep.three.prefix_exact[k]);
        prefixes.push_back(std::move(pj));
    }
    three["prefixes"] = std::move(prefixes);
    if (rep.three.failing_prefix > 0) three["failing_prefix"] = rep.three.failing_prefix;
    if (!rep.three.detail.empty()) three["detail"] = rep.three.detail;
    node["III"] = std::move(three);

    Json four;
    four["status"] = status_name(rep.four.status);
    four["method"] = rep.four.method;
    if (!rep.four.witness.empty()) four["witness"] = rep.four.witness;
    if (rep.four.dimension) four["dimension"] = json_int(*rep.four.dimension);
    if (!rep.four.detail.empty()) four["detail"] = rep.four.detail;
    node["IV"] = std::move(four);
    return node;
}

struct JobState {
    Manifest eff; // q specialized away when declared
    int truncation = 12;
    MonomialOrder order;
    ProbeOptions probes;

    std::optional<Elimination> elim;
    std::optional<Presentation> ambient;
    std::optional<RewriteSystem> ambient_rs;
    std::optional<ConditionReport> conditions;
};

MuData mu_data(const JobState& js) { return validate_mu(js.eff.mu); }

const Presentation& ambient(JobState& js) {
    if (!js.ambient) {
        if (js.eff.gsca_route()) {
            GscaInput in = make_gsca_input(mu_data(js), js.eff.matrices, js.eff.generators);
            js.elim = eliminate_y(in);
            js.ambient = js.elim->quadratic;
        } else {
            Scalar one = Scalar::integer(1);
            if (js.eff.function_field) one = one.promote();
            Presentation p = Presentation::make(js.eff.generators, js.eff.relations, one);
            validate_presentation(p);
            js.ambient = std::move(p);
        }
    }
    return *js.ambient;
}

const RewriteSystem& ambient_rs(JobState& js) {
    if (!js.ambient_rs) js.ambient_rs = complete_truncated(ambient(js), js.truncation, js.order);
    return *js.ambient_rs;
}

QuadricSystem quadric_system(JobState& js) {
    QuadricSystem qs;
    qs.mu = mu_data(js);
    qs.names = quadric_names(js.eff.n());
    const MonomialOrder zorder = MonomialOrder::standard(js.eff.n());
    if (!js.eff.quadrics.empty()) {
        for (const auto& q : js.eff.quadrics)
            qs.quadrics.push_back(canonical_lift(q, qs.mu).monic(zorder));
    } else {
        for (const auto& raw : js.eff.matrices) {
            MuSymMatrix M = validate_mu_symmetric(raw, qs.mu);
            qs.quadrics.push_back(quadric_of_matrix(M, qs.mu));
        }
    }
    return qs;
}

Json run_command(JobState& js, const std::string& cmd) {
    const Manifest& m = js.eff;
    if (cmd == "validate") {
        Json node;
        node["status"] = "ok";
        node["route"] = m.gsca_route() ? "matrices" : "relations";
        node["n"] = m.n();
        if (m.gsca_route())
            node["matrices"] = static_cast<int>(m.matrices.size());
        else
            node["relations"] = static_cast<int>(m.relations.size());
        if (!m.sequence.empty()) node["sequence"] = static_cast<int>(m.sequence.size());
        if (m.ambient_skew) node["ambient_skew_ring"] = true;
        return node;
    }
    if (cmd == "gsca") {
        ambient(js);
        Json node;
        Json rels = Json::array();
        for (const auto& r : js.elim->quadratic.relations)
            rels.push_back(r.to_string(m.generators));
        node["relations"] = std::move(rels);
        Json ys = Json::array();
        for (const auto& y : js.elim->y_in_x) ys.push_back(y.to_string(m.generators));
        node["y_in_x"] = std::move(ys);
        return node;
    }
    if (cmd == "hilbert") {
        const RewriteSystem& rs = ambient_rs(js);
        Json node;
        node["certified"] = rs.certified_complete;
        node["max_rule_degree"] = rs.max_rule_degree;
        node["values"] = json_ints(hilbert_function(rs, js.truncation));
        return node;
    }
    if (cmd == "growth") return growth_node(classify_growth(ambient_rs(js)));
    if (cmd == "normalizing") {
        auto reports = is_normalizing_sequence(m.sequence, ambient(js), js.truncation, js.order);
        Json node;
        bool all = true;
        Json elems = Json::array();
        for (size_t i = 0; i < reports.size(); ++i) {
            all = all && reports[i].normal;
            elems.push_back(normality_node(reports[i], m.sequence[i], m.generators));
        }
        node["normalizing"] = all;
        node["elements"] = std::move(elems);
        return node;
    }
    if (cmd == "certify-regular") {
        GscaInput in = make_gsca_input(mu_data(js), m.matrices, m.generators);
        RegularityCertificate cert = certify_regular(in, js.truncation, js.probes);
        Json node;
        node["conclusion"] = regularity_conclusion_name(cert.conclusion);
        if (!cert.reason.empty()) node["reason"] = cert.reason;
        const auto znames = quadric_names(m.n());
        Json quads = Json::array();
        for (const auto& q : cert.quadrics) quads.push_back(q.to_string(znames));
        node["quadrics"] = std::move(quads);
        node["base_point"] = base_point_node(cert.base_point);
        if (!cert.elimination_error.empty()) node["elimination_error"] = cert.elimination_error;
        if (cert.hilbert_checked) {
            node["hilbert"] = json_ints(cert.hilbert);
            node["expected_hilbert"] = json_ints(cert.expected_hilbert);
            node["hilbert_match"] = cert.hilbert_match;
        }
        return node;
    }
    if (cmd == "base-point-free")
        return base_point_node(base_point_free(quadric_system(js), js.truncation, js.probes));
    if (cmd == "conditions") {
        CheckOptions opts;
        opts.truncation = js.truncation;
        opts.order = js.order;
        opts.families = m.families;
        opts.ambient_skew = m.ambient_skew;
        opts.probes = js.probes;
        js.conditions = check_conditions(ambient(js), m.sequence, opts);
        return conditions_node(*js.conditions);
    }
    if (cmd == "ci-verdict") {
        if (!js.conditions) throw Error("conditions did not complete");
        VerdictReport v = complete_intersection_verdict(*js.conditions, m.ambient_skew);
        Json node;
        node["verdict"] = verdict_name(v.verdict);
        node["iv_required"] = v.iv_required;
        node["consistency_alarm"] = v.consistency_alarm;
        if (v.consistency_alarm) node["alarm_detail"] = v.alarm_detail;
        return node;
    }
    throw Error("unknown command '" + cmd + "'");
}

int resolve_truncation(const Manifest& m, const RunOverrides& o) {
    auto check = [](long long v, const std::string& from) {
        if (v < 2 || v > 1000) throw SchemaError(from + " must be an integer in [2, 1000]");
        return static_cast<int>(v);
    };
    if (o.max_degree) return check(*o.max_degree, "--max-degree");
    if (m.options.max_degree) return *m.options.max_degree;
    if (const char* env = std::getenv("SKEWCLIFF_MAX_DEGREE")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0') throw SchemaError("SKEWCLIFF_MAX_DEGREE must be an integer");
        return check(v, "SKEWCLIFF_MAX_DEGREE");
    }
    int maxdeg = 2;
    for (const auto& r : m.relations) maxdeg = std::max(maxdeg, r.degree());
    return std::max(2 * maxdeg + 6, 12);
}

RunResult input_error(const std::string& msg) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["report_schema"] = kReportSchema;
    j["error"] = msg;
    return {j.dump(2) + "\n", 2};
}

} // namespace

RunResult run_manifest(const Manifest& m, const std::string& raw_text, const RunOverrides& o) {
    JobState js;
    Json header;
    try {
        js.eff = specialize_q(m);
        js.truncation = resolve_truncation(m, o);
        if (!m.options.order.empty()) {
            std::vector<int> smallest_first;
            for (const auto& name : m.options.order)
                smallest_first.push_back(static_cast<int>(
                    std::find(m.generators.begin(), m.generators.end(), name) -
                    m.generators.begin()));
            js.order = MonomialOrder::with_precedence(smallest_first);
        } else {
            js.order = MonomialOrder::standard(m.n());
        }
        js.probes.seed = o.seed ? *o.seed : m.options.seed;
        const std::vector<std::int64_t>& primes =
            !o.primes.empty() ? o.primes : m.options.primes;
        if (!primes.empty()) {
            for (std::int64_t p : primes)
                if (!is_odd_prime(p)) throw SchemaError("probe primes must be odd primes");
            js.probes.primes = primes;
        }
    } catch (const Error& e) {
        return input_error(e.what());
    }

    header["tool"] = kToolName;
    header["version"] = kToolVersion;
    header["report_schema"] = kReportSchema;
    header["manifest_name"] = m.name;
    header["input_hash"] = "fnv1a64:" + hex64(fnv1a64(raw_text));
    header["field"] = m.function_field ? "Q(q)" : "Q";
    if (m.q_value) header["q"] = m.q_value->str();
    header["generators"] = m.generators;
    header["truncation_degree"] = js.truncation;
    header["seed"] = js.probes.seed;
    header["primes"] = js.probes.primes;

    Json commands;
    int exit_code = 0;
    for (const std::string& cmd : canonical_commands()) {
        if (std::find(m.commands.begin(), m.commands.end(), cmd) == m.commands.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        try {
            commands[cmd] = run_command(js, cmd);
            if (cmd == "ci-verdict" && commands[cmd]["consistency_alarm"].get<bool>())
                exit_code = 3;
        } catch (const Error& e) {
            commands[cmd] = Json{{"error", e.what()}};
        }
        if (o.timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::cerr << "[time] " << cmd << " " << ms << " ms\n";
        }
    }
    header["commands"] = std::move(commands);
    return {header.dump(2) + "\n", exit_code};
}

RunResult run_manifest_text(const std::string& text, const RunOverrides& o) {
    Manifest m;
    try {
        m = parse_manifest(text);
    } catch (const Error& e) {
        return input_error(e.what());
    }
    return run_manifest(m, text, o);
}

} // namespace skewcliff
