#include "skewcliff/freealg.hpp"

#include <sstream>

namespace skewcliff {

int weighted_degree(const Word& w, const std::vector<int>& gen_degrees) {
    int d = 0;
    for (int g : w) d += gen_degrees[g];
    return d;
}

bool WordDegLex::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

MonomialOrder MonomialOrder::standard(int n) {
    MonomialOrder o;
    o.n = n;
    o.rank.resize(n);
    for (int i = 0; i < n; ++i) o.rank[i] = i;
    return o;
}

MonomialOrder MonomialOrder::with_precedence(const std::vector<int>& smallest_first) {
    MonomialOrder o;
    o.n = static_cast<int>(smallest_first.size());
    o.rank.assign(o.n, 0);
    for (int r = 0; r < o.n; ++r) o.rank[smallest_first[r]] = r;
    return o;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (rank[a[i]] != rank[b[i]]) return rank[a[i]] < rank[b[i]] ? -1 : 1;
    return 0;
}

int word_compare(const Word& a, const Word& b, const MonomialOrder& order) {
    return order.compare(a, b);
}

NCPoly NCPoly::constant(Scalar c) {
    NCPoly f;
    if (!c.is_zero()) f.terms_.emplace(Word{}, std::move(c));
    return f;
}

NCPoly NCPoly::term(Word w, Scalar c) {
    NCPoly f;
    if (!c.is_zero()) f.terms_.emplace(std::move(w), std::move(c));
    return f;
}

NCPoly NCPoly::generator(int i, const Scalar& one) {
    return term(Word{i}, one);
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

int NCPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPoly::is_homogeneous(const std::vector<int>& gen_degrees) const {
    if (terms_.empty()) return true;
    int d = weighted_degree(terms_.begin()->first, gen_degrees);
    for (const auto& [w, c] : terms_)
        if (weighted_degree(w, gen_degrees) != d) return false;
    return true;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator+(const NCPoly& b) const {
    NCPoly r = *this;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& b) const { return *this + (-b); }

NCPoly NCPoly::operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& b) const {
    NCPoly r;
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

NCPoly NCPoly::scaled(const Scalar& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

const Word& NCPoly::leading_word(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error("leading word of zero polynomial");
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
        if (order.compare(w, *best) > 0) best = &w;
    return *best;
}

const Scalar& NCPoly::leading_coeff(const MonomialOrder& order) const {
    return terms_.at(leading_word(order));
}

NCPoly NCPoly::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff(order).inv());
}

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b) { return a * b; }

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) out << "*";
        out << names[w[i]];
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

std::string NCPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar a = c;
        bool neg = a.is_negative();
        if (neg) a = -a;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string cs = a.to_string();
        bool unit_coeff = a.is_one();
        if (w.empty()) {
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            out << cs;
            continue;
        }
        if (!unit_coeff) {
            if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
                cs = "(" + cs + ")";
            out << cs << "*";
        }
        out << word_to_string(w, names);
    }
    return out.str();
}

Scalar MultiPoly::evaluate_scalar(const std::vector<std::vector<Scalar>>& points) const {
    Scalar zero;
    if (!terms.empty()) zero = Scalar::zero_like(terms.begin()->second);
    return evaluate<Scalar>(points, zero, [](const Scalar& c) { return c; });
}

MultiPoly multilinearize(const NCPoly& f, int n) {
    MultiPoly m;
    m.n = n;
    if (f.is_zero()) return m;
    m.slots = static_cast<int>(f.terms().begin()->first.size());
    for (const auto& [w, c] : f.terms()) {
        if (static_cast<int>(w.size()) != m.slots)
            throw Inhomogeneous("multilinearize requires a homogeneous polynomial");
        m.terms.emplace(w, c);
    }
    return m;
}

} // namespace skewcliff
