#include "skewcliff/rewrite.hpp"

#include <algorithm>
#include <map>

namespace skewcliff {

Presentation Presentation::make(std::vector<std::string> names,
                                std::vector<NCPoly> relations, Scalar one) {
    Presentation p;
    p.n = static_cast<int>(names.size());
    p.names = std::move(names);
    p.gen_degrees.assign(p.n, 1);
    p.relations = std::move(relations);
    p.one = std::move(one);
    return p;
}

Presentation Presentation::extended(const std::vector<NCPoly>& extra) const {
    Presentation p = *this;
    for (const auto& f : extra) p.relations.push_back(f);
    return p;
}

void validate_presentation(const Presentation& p) {
    if (static_cast<int>(p.names.size()) != p.n ||
        static_cast<int>(p.gen_degrees.size()) != p.n)
        throw SchemaError("presentation: names/degrees size mismatch");
    for (int d : p.gen_degrees)
        if (d < 1) throw SchemaError("presentation: generator degree must be positive");
    for (const auto& r : p.relations) {
        if (r.is_zero()) throw SchemaError("presentation: zero relation");
        if (!r.is_homogeneous(p.gen_degrees))
            throw Inhomogeneous("presentation: relation not homogeneous");
        int d = weighted_degree(r.terms().begin()->first, p.gen_degrees);
        if (d < 2) throw SchemaError("presentation: relation degree must be at least 2");
    }
}

namespace {

struct OrderLess {
    const MonomialOrder* o;
    bool operator()(const Word& a, const Word& b) const { return o->compare(a, b) < 0; }
};

using RuleMap = std::map<Word, NCPoly, WordDegLex>;

// leftmost redex position in w over all rules, or pos = -1
std::pair<int, const Word*> find_redex(const Word& w, const RuleMap& rules) {
    int best = -1;
    const Word* hit = nullptr;
    for (const auto& [lhs, rhs] : rules) {
        if (lhs.size() > w.size()) continue;
        auto it = std::search(w.begin(), w.end(), lhs.begin(), lhs.end());
        if (it == w.end()) continue;
        int pos = static_cast<int>(it - w.begin());
        if (best < 0 || pos < best) {
            best = pos;
            hit = &lhs;
        }
    }
    return {best, hit};
}

NCPoly reduce_full(const NCPoly& f, const RuleMap& rules, const MonomialOrder& order) {
    std::map<Word, Scalar, OrderLess> work{OrderLess{&order}};
    for (const auto& [w, c] : f.terms()) work.emplace(w, c);
    NCPoly out;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        Scalar c = top->second;
        work.erase(top);
        if (c.is_zero()) continue;
        auto [pos, lhs] = find_redex(w, rules);
        if (pos < 0) {
            out.add_term(w, c);
            continue;
        }
        const NCPoly& rhs = rules.at(*lhs);
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + lhs->size(), w.end());
        for (const auto& [rw, rc] : rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            Scalar nc = c * rc;
            auto [it, fresh] = work.emplace(std::move(nw), nc);
            if (!fresh) {
                it->second = it->second + nc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return out;
}

// split a reduced nonzero polynomial into a monic rule lhs -> rhs
std::pair<Word, NCPoly> to_rule(const NCPoly& g, const MonomialOrder& order) {
    NCPoly m = g.monic(order);
    Word lhs = m.leading_word(order);
    NCPoly rhs;
    for (const auto& [w, c] : m.terms())
        if (w != lhs) rhs.add_term(w, -c);
    return {std::move(lhs), std::move(rhs)};
}

// reduce every rule against the others until no rule changes
void interreduce(RuleMap& rules, const MonomialOrder& order, const Scalar& one) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = rules.begin(); it != rules.end(); ++it) {
            RuleMap others = rules;
            others.erase(it->first);
            NCPoly full = NCPoly::term(it->first, one) - it->second;
            NCPoly red = reduce_full(full, others, order);
            if (red == full) continue;
            rules.erase(it);
            if (!red.is_zero()) {
                auto [lhs, rhs] = to_rule(red, order);
                rules[std::move(lhs)] = std::move(rhs);
            }
            changed = true;
            break;
        }
    }
}

} // namespace

RewriteSystem complete_truncated(const Presentation& p, int truncation,
                                 const MonomialOrder& order) {
    for (int d : p.gen_degrees)
        if (d != 1) throw Error("completion requires all generators in degree 1");
    if (truncation < 2) throw TruncationTooLow("truncation degree must be at least 2");
    int max_rel_deg = 0;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous(p.gen_degrees)) throw Inhomogeneous("relation not homogeneous");
        max_rel_deg = std::max(max_rel_deg, r.degree());
    }
    if (truncation < max_rel_deg)
        throw TruncationTooLow("truncation below maximal relation degree");

    const Scalar one = Scalar::one_like(p.one);
    RuleMap rules;
    for (const auto& r : p.relations) {
        if (r.is_zero()) continue;
        NCPoly red = reduce_full(r, rules, order);
        if (red.is_zero()) continue;
        auto [lhs, rhs] = to_rule(red, order);
        rules[std::move(lhs)] = std::move(rhs);
    }

    // fixpoint sweep: interreduce, then resolve every overlap ambiguity of
    // degree <= truncation; repeat until no new rule appears
    bool changed = true;
    while (changed) {
        changed = false;
        interreduce(rules, order, one);
        std::vector<std::pair<Word, std::pair<Word, Word>>> overlaps;
        for (const auto& [u, ur] : rules) {
            for (const auto& [v, vr] : rules) {
                int maxt = static_cast<int>(std::min(u.size(), v.size())) - 1;
                for (int t = 1; t <= maxt; ++t) {
                    if (static_cast<int>(u.size() + v.size()) - t > truncation) continue;
                    if (!std::equal(u.end() - t, u.end(), v.begin())) continue;
                    Word w = u;
                    w.insert(w.end(), v.begin() + t, v.end());
                    overlaps.push_back({std::move(w), {u, v}});
                }
            }
        }
        std::sort(overlaps.begin(), overlaps.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            return a.first < b.first;
        });
        for (const auto& [w, uv] : overlaps) {
            auto ur = rules.find(uv.first);
            auto vr = rules.find(uv.second);
            if (ur == rules.end() || vr == rules.end()) continue;
            const Word& u = uv.first;
            const Word& v = uv.second;
            int t = static_cast<int>(u.size() + v.size() - w.size());
            Word vtail(v.begin() + t, v.end());
            Word uhead(u.begin(), u.end() - t);
            NCPoly left = ur->second * NCPoly::term(vtail, one);
            NCPoly right = NCPoly::term(uhead, one) * vr->second;
            NCPoly spoly = reduce_full(left - right, rules, order);
            if (spoly.is_zero()) continue;
            auto [lhs, rhs] = to_rule(spoly, order);
            rules[std::move(lhs)] = std::move(rhs);
            changed = true;
        }
    }

    RewriteSystem rs;
    rs.n = p.n;
    rs.order = order;
    rs.truncation = truncation;
    rs.one = p.one;
    for (auto& [lhs, rhs] : rules) {
        rs.max_rule_degree = std::max(rs.max_rule_degree, static_cast<int>(lhs.size()));
        rs.rules.push_back(Rule{lhs, rhs});
    }
    rs.certified_complete = truncation >= 2 * std::max(rs.max_rule_degree, 1) - 1;
    return rs;
}

RewriteSystem complete_truncated(const Presentation& p, int truncation) {
    return complete_truncated(p, truncation, MonomialOrder::standard(p.n));
}

NCPoly normal_form(const NCPoly& f, const RewriteSystem& rs) {
    if (f.degree() > rs.truncation)
        throw DegreeExceedsTruncation("normal form beyond truncation degree");
    RuleMap rules;
    for (const auto& r : rs.rules) rules.emplace(r.lhs, r.rhs);
    return reduce_full(f, rules, rs.order);
}

namespace {

// Deterministic automaton recognizing words that avoid every rule leading
// word as a factor. States are trie nodes of the forbidden set with
// Aho-Corasick failure links; transitions entering a forbidden word are dead.
struct Avoider {
    int n = 0;
    std::vector<std::vector<int>> next; // state x letter -> state, -1 dead

    explicit Avoider(const RewriteSystem& rs) : n(rs.n) {
        std::vector<std::map<int, int>> child(1);
        std::vector<bool> bad(1, false);
        for (const auto& r : rs.rules) {
            int s = 0;
            for (int a : r.lhs) {
                auto it = child[s].find(a);
                if (it == child[s].end()) {
                    child.push_back({});
                    bad.push_back(false);
                    it = child[s].emplace(a, static_cast<int>(child.size()) - 1).first;
                }
                s = it->second;
            }
            bad[s] = true;
        }
        int states = static_cast<int>(child.size());
        std::vector<int> fail(states, 0), bfs;
        for (const auto& [a, s] : child[0]) {
            fail[s] = 0;
            bfs.push_back(s);
        }
        for (size_t i = 0; i < bfs.size(); ++i) {
            int s = bfs[i];
            for (const auto& [a, t] : child[s]) {
                int f = fail[s];
                while (f != 0 && !child[f].count(a)) f = fail[f];
                auto it = child[f].find(a);
                fail[t] = (it != child[f].end() && it->second != t) ? it->second : 0;
                if (bad[fail[t]]) bad[t] = true;
                bfs.push_back(t);
            }
        }
        next.assign(states, std::vector<int>(n, -1));
        auto set_row = [&](int s) {
            for (int a = 0; a < n; ++a) {
                auto it = child[s].find(a);
                if (it != child[s].end()) {
                    next[s][a] = bad[it->second] ? -1 : it->second;
                } else {
                    next[s][a] = s == 0 ? 0 : next[fail[s]][a];
                }
            }
        };
        set_row(0);
        for (int s : bfs)
            if (!bad[s]) set_row(s);
    }

    std::vector<Int> count_upto(int maxdeg) const {
        std::vector<Int> out{Int(1)};
        std::vector<Int> dp(next.size(), Int(0));
        dp[0] = 1;
        for (int m = 1; m <= maxdeg; ++m) {
            std::vector<Int> nd(next.size(), Int(0));
            for (size_t s = 0; s < next.size(); ++s) {
                if (dp[s] == 0) continue;
                for (int a = 0; a < n; ++a) {
                    int t = next[s][a];
                    if (t >= 0) nd[t] += dp[s];
                }
            }
            dp = std::move(nd);
            Int total(0);
            for (const auto& x : dp) total += x;
            out.push_back(total);
        }
        return out;
    }

    int step(int state, int a) const { return state < 0 ? -1 : next[state][a]; }
};

} // namespace

std::vector<Word> normal_words(const RewriteSystem& rs, int length) {
    Avoider av(rs);
    std::vector<Word> out;
    Word cur;
    std::vector<std::pair<int, int>> stack{{0, 0}}; // (state, next letter)
    while (!stack.empty()) {
        if (static_cast<int>(cur.size()) == length) {
            out.push_back(cur);
            stack.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        auto& [state, a] = stack.back();
        if (a >= rs.n) {
            stack.pop_back();
            if (!cur.empty()) cur.pop_back();
            continue;
        }
        int t = av.step(state, a);
        ++a;
        if (t >= 0) {
            cur.push_back(a - 1);
            stack.push_back({t, 0});
        }
    }
    return out;
}

std::vector<Int> hilbert_function(const RewriteSystem& rs, int maxdeg) {
    return Avoider(rs).count_upto(maxdeg);
}

Int hilbert_value(const RewriteSystem& rs, int m) {
    return Avoider(rs).count_upto(m)[m];
}

UfnGraph ufnarovski_graph(const RewriteSystem& rs) {
    if (!rs.certified_complete)
        throw NotComplete("growth analysis requires a certified complete basis");
    UfnGraph g;
    g.ell = std::max(rs.max_rule_degree, 2) - 1;
    g.vertices = normal_words(rs, g.ell);
    std::map<Word, int, WordDegLex> index;
    for (size_t i = 0; i < g.vertices.size(); ++i)
        index.emplace(g.vertices[i], static_cast<int>(i));
    g.adj.assign(g.vertices.size(), {});
    Avoider av(rs);
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        const Word& u = g.vertices[i];
        int s = 0;
        for (int a : u) s = av.step(s, a);
        for (int a = 0; a < rs.n; ++a) {
            if (av.step(s, a) < 0) continue; // u followed by a has a forbidden factor
            Word v(u.begin() + 1, u.end());
            v.push_back(a);
            auto it = index.find(v);
            if (it != index.end()) g.adj[i].push_back(it->second);
        }
    }
    return g;
}

namespace {

// iterative Tarjan; components numbered in completion order, so condensation
// edges always point to smaller component ids
std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj, int& count) {
    int n = static_cast<int>(adj.size());
    std::vector<int> idx(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> onstack(n, false);
    int next_idx = 0;
    count = 0;
    struct Frame { int v; size_t child; };
    for (int root = 0; root < n; ++root) {
        if (idx[root] >= 0) continue;
        std::vector<Frame> frames{{root, 0}};
        idx[root] = low[root] = next_idx++;
        stack.push_back(root);
        onstack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                int w = adj[f.v][f.child++];
                if (idx[w] < 0) {
                    idx[w] = low[w] = next_idx++;
                    stack.push_back(w);
                    onstack[w] = true;
                    frames.push_back({w, 0});
                } else if (onstack[w]) {
                    low[f.v] = std::min(low[f.v], idx[w]);
                }
            } else {
                if (low[f.v] == idx[f.v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        onstack[w] = false;
                        comp[w] = count;
                        if (w == f.v) break;
                    }
                    ++count;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comp;
}

} // namespace

GrowthReport classify_growth(const RewriteSystem& rs) {
    GrowthReport rep;
    if (!rs.certified_complete) {
        rep.hilbert = hilbert_function(rs, rs.truncation);
        // truncated bases are exact below the truncation, and a degree-one
        // generated algebra vanishes above any zero slice
        for (size_t m = 0; m < rep.hilbert.size(); ++m) {
            if (rep.hilbert[m] != 0) continue;
            rep.kind = GrowthKind::FiniteDimensional;
            rep.gk = 0;
            rep.hilbert.resize(m + 1);
            rep.hilbert.resize(std::max<size_t>(m + 2, size_t(rs.truncation) + 1), Int(0));
            for (const auto& x : rep.hilbert) rep.dimension += x;
            return rep;
        }
        rep.kind = GrowthKind::InconclusiveTruncated;
        return rep;
    }
    UfnGraph g = ufnarovski_graph(rs);
    int v = static_cast<int>(g.vertices.size());
    int comp_count = 0;
    std::vector<int> comp = tarjan_scc(g.adj, comp_count);
    std::vector<int> size(comp_count, 0), inner(comp_count, 0);
    for (int i = 0; i < v; ++i) {
        ++size[comp[i]];
        for (int j : g.adj[i])
            if (comp[j] == comp[i]) ++inner[comp[i]];
    }
    bool exponential = false, any_cycle = false;
    std::vector<bool> cyclic(comp_count, false);
    for (int c = 0; c < comp_count; ++c) {
        cyclic[c] = inner[c] > 0;
        any_cycle = any_cycle || cyclic[c];
        if (inner[c] > size[c]) exponential = true;
    }
    if (exponential) {
        rep.kind = GrowthKind::Exponential;
        rep.hilbert = hilbert_function(rs, rs.truncation);
        return rep;
    }
    if (!any_cycle) {
        rep.kind = GrowthKind::FiniteDimensional;
        rep.gk = 0;
        int bound = std::max(g.ell + v + 1, rs.truncation);
        auto h = hilbert_function(rs, bound);
        int last = 0;
        for (size_t m = 0; m < h.size(); ++m)
            if (h[m] != 0) last = static_cast<int>(m);
        h.resize(std::max(last + 2, rs.truncation + 1), Int(0));
        rep.hilbert = h;
        for (const auto& x : h) rep.dimension += x;
        return rep;
    }
    // gk = max number of cyclic components met by a condensation path
    std::vector<std::vector<int>> cadj(comp_count);
    for (int i = 0; i < v; ++i)
        for (int j : g.adj[i])
            if (comp[i] != comp[j]) cadj[comp[i]].push_back(comp[j]);
    std::vector<int> best(comp_count, 0);
    int gk = 0;
    for (int c = 0; c < comp_count; ++c) {
        int m = 0;
        for (int d : cadj[c]) m = std::max(m, best[d]);
        best[c] = m + (cyclic[c] ? 1 : 0);
        gk = std::max(gk, best[c]);
    }
    rep.kind = GrowthKind::PolynomialGrowth;
    rep.gk = gk;
    rep.hilbert = hilbert_function(rs, rs.truncation);
    return rep;
}

std::string growth_kind_name(GrowthKind k) {
    switch (k) {
        case GrowthKind::FiniteDimensional: return "finite-dimensional";
        case GrowthKind::PolynomialGrowth: return "polynomial";
        case GrowthKind::Exponential: return "exponential";
        default: return "inconclusive-truncated";
    }
}

} // namespace skewcliff
