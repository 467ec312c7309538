#include "skewcliff/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace skewcliff {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntPoly::IntPoly(Int constant) {
    if (constant != 0) c.push_back(std::move(constant));
}

IntPoly IntPoly::var() {
    IntPoly p;
    p.c = {Int(0), Int(1)};
    return p;
}

IntPoly IntPoly::monomial(Int coeff, int power) {
    IntPoly p;
    if (coeff != 0) {
        p.c.assign(power + 1, Int(0));
        p.c[power] = std::move(coeff);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& IntPoly::lead() const {
    static const Int zero(0);
    return c.empty() ? zero : c.back();
}

IntPoly IntPoly::operator+(const IntPoly& b) const {
    IntPoly r;
    r.c.resize(std::max(c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& b) const { return *this + (-b); }

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& b) const {
    IntPoly r;
    if (is_zero() || b.is_zero()) return r;
    r.c.assign(c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += c[i] * b.c[j];
    r.normalize();
    return r;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& x : c) g = gcd(g, x);
    if (g != 0 && lead() < 0) g = -g;
    return g;
}

// Exact division over Z[q]; asserts the division leaves no remainder.
IntPoly IntPoly::divexact(const IntPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return IntPoly();
    std::vector<Rat> rem(c.size());
    for (size_t i = 0; i < c.size(); ++i) rem[i] = Rat(c[i]);
    int dn = degree(), dd = d.degree();
    if (dn < dd) throw Error("divexact: not divisible");
    std::vector<Rat> quo(dn - dd + 1, Rat(0));
    Rat dl(d.lead());
    for (int i = dn; i >= dd; --i) {
        Rat f = rem[i] / dl;
        quo[i - dd] = f;
        if (f != 0)
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * Rat(d.c[j]);
    }
    for (const auto& r : rem)
        if (r != 0) throw Error("divexact: not divisible");
    IntPoly q;
    q.c.resize(quo.size());
    for (size_t i = 0; i < quo.size(); ++i) {
        if (denominator(quo[i]) != 1) throw Error("divexact: non-integral quotient");
        q.c[i] = numerator(quo[i]);
    }
    q.normalize();
    return q;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rat(*it);
    return r;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c[i];
        if (a == 0) continue;
        Int m = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << m.str();
        } else {
            if (m != 1) out << m.str() << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

std::vector<Rat> to_ratvec(const IntPoly& p) {
    std::vector<Rat> v(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) v[i] = Rat(p.c[i]);
    return v;
}

void ratvec_normalize(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Remainder of Euclidean division over Q[q].
std::vector<Rat> ratvec_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        ratvec_normalize(a);
    }
    return a;
}

} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    std::vector<Rat> x = to_ratvec(a), y = to_ratvec(b);
    while (!y.empty()) {
        auto r = ratvec_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // scale the monic Q[q] gcd to a primitive Z[q] polynomial with positive lead
    Int l(1);
    for (const auto& r : x) l = l / gcd(l, denominator(r)) * denominator(r);
    IntPoly g;
    g.c.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        Rat s = x[i] * Rat(l);
        g.c[i] = numerator(s);
    }
    g.normalize();
    Int cont = g.content();
    if (cont != 0 && cont != 1) g = g.divexact(IntPoly(cont));
    return g;
}

int compare(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
    return 0;
}

namespace {

RatFun make_ratfun(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) return RatFun{IntPoly(), IntPoly(Int(1))};
    IntPoly g = gcd(num, den);
    if (g.degree() > 0 || g.lead() != 1) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    Int cn = num.content(), cd = den.content();
    Int cg = gcd(abs(cn), abs(cd));
    if (cd < 0) cg = -cg;
    if (cg != 1) {
        num = num.divexact(IntPoly(cg));
        den = den.divexact(IntPoly(cg));
    }
    return RatFun{std::move(num), std::move(den)};
}

} // namespace

Scalar Scalar::rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Scalar(Rat(num, den));
}

Scalar Scalar::q() {
    Scalar s;
    s.v_ = RatFun{IntPoly::var(), IntPoly(Int(1))};
    return s;
}

Scalar Scalar::ratfun(IntPoly num, IntPoly den) {
    Scalar s;
    s.v_ = make_ratfun(std::move(num), std::move(den));
    return s;
}

Scalar Scalar::zero_like(const Scalar& a) {
    return a.is_rational_kind() ? Scalar() : ratfun(IntPoly(), IntPoly(Int(1)));
}

Scalar Scalar::one_like(const Scalar& a) {
    return a.is_rational_kind() ? Scalar(Rat(1)) : ratfun(IntPoly(Int(1)), IntPoly(Int(1)));
}

bool Scalar::is_zero() const {
    if (is_rational_kind()) return rat() == 0;
    return fun().num.is_zero();
}

bool Scalar::is_one() const {
    if (is_rational_kind()) return rat() == 1;
    return fun().num == IntPoly(Int(1)) && fun().den == IntPoly(Int(1));
}

bool Scalar::is_negative() const {
    if (is_rational_kind()) return rat() < 0;
    return fun().num.lead() < 0;
}

const Rat& Scalar::rat() const {
    if (!is_rational_kind()) throw MixedVariant("expected rational scalar");
    return std::get<Rat>(v_);
}

const RatFun& Scalar::fun() const {
    if (is_rational_kind()) throw MixedVariant("expected rational-function scalar");
    return std::get<RatFun>(v_);
}

void Scalar::check_same_kind(const Scalar& b) const {
    if (is_rational_kind() != b.is_rational_kind())
        throw MixedVariant("mixed scalar kinds; promote explicitly");
}

Scalar Scalar::operator+(const Scalar& b) const {
    check_same_kind(b);
    if (is_rational_kind()) return Scalar(rat() + b.rat());
    const RatFun &x = fun(), &y = b.fun();
    return ratfun(x.num * y.den + y.num * x.den, x.den * y.den);
}

Scalar Scalar::operator-(const Scalar& b) const { return *this + (-b); }

Scalar Scalar::operator*(const Scalar& b) const {
    check_same_kind(b);
    if (is_rational_kind()) return Scalar(rat() * b.rat());
    const RatFun &x = fun(), &y = b.fun();
    return ratfun(x.num * y.num, x.den * y.den);
}

Scalar Scalar::operator/(const Scalar& b) const { return *this * b.inv(); }

Scalar Scalar::operator-() const {
    if (is_rational_kind()) return Scalar(-rat());
    Scalar s;
    s.v_ = RatFun{-fun().num, fun().den};
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational_kind()) return Scalar(Rat(1) / rat());
    return ratfun(fun().den, fun().num);
}

Scalar Scalar::promote() const {
    if (!is_rational_kind()) return *this;
    return ratfun(IntPoly(numerator(rat())), IntPoly(denominator(rat())));
}

Scalar Scalar::specialize(const Rat& q_value) const {
    if (is_rational_kind()) return *this;
    Rat d = fun().den.eval(q_value);
    if (d == 0) throw PoleAtValue("denominator vanishes at q = " + q_value.str());
    return Scalar(fun().num.eval(q_value) / d);
}

std::string Scalar::to_string() const {
    if (is_rational_kind()) return rat().str();
    const RatFun& f = fun();
    std::string n = f.num.to_string();
    if (f.den == IntPoly(Int(1))) return n;
    // parenthesize unless a side is a single unambiguous factor
    auto simple = [](const IntPoly& p, const std::string& s) {
        if (s.find(' ') != std::string::npos) return false;
        return p.degree() == 0 || abs(p.lead()) == 1;
    };
    std::string d = f.den.to_string();
    std::string out = simple(f.num, n) ? n : "(" + n + ")";
    out += "/";
    out += simple(f.den, d) ? d : "(" + d + ")";
    return out;
}

int compare(const Scalar& a, const Scalar& b) {
    if (a.is_rational_kind() != b.is_rational_kind())
        return a.is_rational_kind() ? -1 : 1;
    if (a.is_rational_kind()) {
        if (a.rat() == b.rat()) return 0;
        return a.rat() < b.rat() ? -1 : 1;
    }
    int c = compare(a.fun().num, b.fun().num);
    if (c != 0) return c;
    return compare(a.fun().den, b.fun().den);
}

PrimeScalar PrimeScalar::operator+(const PrimeScalar& b) const {
    if (p != b.p) throw MixedVariant("prime field mismatch");
    return {(v + b.v) % p, p};
}

PrimeScalar PrimeScalar::operator-(const PrimeScalar& b) const {
    if (p != b.p) throw MixedVariant("prime field mismatch");
    return {((v - b.v) % p + p) % p, p};
}

PrimeScalar PrimeScalar::operator*(const PrimeScalar& b) const {
    if (p != b.p) throw MixedVariant("prime field mismatch");
    return {static_cast<std::int64_t>((__int128)v * b.v % p), p};
}

PrimeScalar PrimeScalar::operator-() const { return {v == 0 ? 0 : p - v, p}; }

PrimeScalar PrimeScalar::inv() const {
    if (v == 0) throw DivisionByZero("inverse of zero in F_p");
    std::int64_t a = v, m = p, x0 = 0, x1 = 1;
    while (a > 1) {
        std::int64_t t = a / m;
        a -= t * m;
        std::swap(a, m);
        x1 -= t * x0;
        std::swap(x0, x1);
    }
    return {(x1 % p + p) % p, p};
}

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeScalar reduce_mod_p(const Scalar& a, std::int64_t p) {
    if (!is_odd_prime(p)) throw BadPrime("modulus must be an odd prime");
    if (!a.is_rational_kind())
        throw MixedVariant("reduce_mod_p requires a rational scalar; specialize q first");
    Int num = numerator(a.rat()) % p, den = denominator(a.rat()) % p;
    if (den == 0) throw DenominatorVanishes("denominator divisible by p");
    auto fold = [&](const Int& x) {
        return static_cast<std::int64_t>(((x % p) + p) % p);
    };
    PrimeScalar n{fold(num), p}, d{fold(den), p};
    return n * d.inv();
}

std::optional<Rat> rational_reconstruct(const Int& residue, const Int& p) {
    Int r0 = p, r1 = ((residue % p) + p) % p;
    Int t0(0), t1(1);
    Int bound;
    {
        Int half = p / 2, s(1);
        while (s * s <= half) ++s;
        bound = s - 1;
        if (bound < 1) bound = 1;
    }
    while (r1 > bound) {
        Int quo = r0 / r1;
        Int r2 = r0 - quo * r1, t2 = t0 - quo * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    if (gcd(r1, abs(t1)) != 1) return std::nullopt;
    if (t1 < 0) return Rat(-r1, -t1);
    return Rat(r1, t1);
}

} // namespace skewcliff
