#include "skewcliff/bipoly.hpp"

#include <sstream>

namespace skewcliff {

BiPoly BiPoly::constant(Scalar c) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::make_pair(0, 0), std::move(c));
    return p;
}

BiPoly BiPoly::var_a(const Scalar& one) { return monomial(one, 1, 0); }
BiPoly BiPoly::var_b(const Scalar& one) { return monomial(one, 0, 1); }

BiPoly BiPoly::monomial(Scalar c, int i, int j) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::make_pair(i, j), std::move(c));
    return p;
}

int BiPoly::degree() const {
    int d = -1;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.first + ij.second);
    return d;
}

bool BiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [ij, c] : terms_)
        if (ij.first + ij.second != d) return false;
    return true;
}

void BiPoly::add_term(int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly BiPoly::operator+(const BiPoly& b) const {
    BiPoly r = *this;
    for (const auto& [ij, c] : b.terms_) r.add_term(ij.first, ij.second, c);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& b) const { return *this + (-b); }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [ij, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& b) const {
    BiPoly r;
    for (const auto& [ia, ca] : terms_)
        for (const auto& [ib, cb] : b.terms_)
            r.add_term(ia.first + ib.first, ia.second + ib.second, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
    BiPoly r;
    for (const auto& [ij, x] : terms_) r.add_term(ij.first, ij.second, x * c);
    return r;
}

BiPoly BiPoly::swap_ab() const {
    BiPoly r;
    for (const auto& [ij, c] : terms_) r.add_term(ij.second, ij.first, c);
    return r;
}

Scalar BiPoly::eval(const Scalar& a, const Scalar& b) const {
    Scalar acc = Scalar::zero_like(a);
    for (const auto& [ij, c] : terms_) {
        Scalar t = c;
        for (int k = 0; k < ij.first; ++k) t = t * a;
        for (int k = 0; k < ij.second; ++k) t = t * b;
        acc = acc + t;
    }
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ij, c] : terms_) {
        Scalar x = c;
        bool neg = x.is_negative();
        if (neg) x = -x;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string cs = x.to_string();
        bool unit = x.is_one();
        auto [i, j] = ij;
        if (i == 0 && j == 0) {
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            out << cs;
            continue;
        }
        if (!unit) {
            if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos)
                cs = "(" + cs + ")";
            out << cs << "*";
        }
        bool star = false;
        if (i > 0) {
            out << "a";
            if (i > 1) out << "^" << i;
            star = true;
        }
        if (j > 0) {
            if (star) out << "*";
            out << "b";
            if (j > 1) out << "^" << j;
        }
    }
    return out.str();
}

void FieldPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FieldPoly FieldPoly::monic() const {
    FieldPoly r = *this;
    if (r.is_zero()) return r;
    Scalar inv = r.c.back().inv();
    for (auto& x : r.c) x = x * inv;
    return r;
}

FieldPoly gcd(FieldPoly a, FieldPoly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        // remainder of a by b
        while (a.degree() >= b.degree() && !a.is_zero()) {
            Scalar f = a.c.back() / b.c.back();
            size_t off = a.c.size() - b.c.size();
            for (size_t j = 0; j < b.c.size(); ++j)
                a.c[off + j] = a.c[off + j] - f * b.c[j];
            a.normalize();
        }
        std::swap(a, b);
    }
    return a.monic();
}

FieldPoly dehomogenize(const BiPoly& form) {
    if (!form.is_homogeneous()) throw Inhomogeneous("binary form expected");
    FieldPoly f;
    if (form.is_zero()) return f;
    int d = form.degree();
    f.c.assign(d + 1, Scalar::zero_like(form.terms().begin()->second));
    for (const auto& [ij, c] : form.terms()) f.c[ij.first] = c;
    f.normalize();
    return f;
}

bool vanishes_at_infinity(const BiPoly& form) {
    if (!form.is_homogeneous()) throw Inhomogeneous("binary form expected");
    if (form.is_zero()) return true;
    int d = form.degree();
    for (const auto& [ij, c] : form.terms())
        if (ij.first == d && ij.second == 0) return false;
    return true;
}

} // namespace skewcliff
