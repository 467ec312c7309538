#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewcliff/scalar.hpp"

namespace skewcliff {

// Polynomial in two commuting parameters a, b over Scalar coefficients.
// Point families use homogeneous ones as projective coordinates.
class BiPoly {
public:
    using TermMap = std::map<std::pair<int, int>, Scalar>; // (i, j) -> coeff of a^i b^j

    BiPoly() = default;
    static BiPoly constant(Scalar c);
    static BiPoly var_a(const Scalar& one);
    static BiPoly var_b(const Scalar& one);
    static BiPoly monomial(Scalar c, int i, int j);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int degree() const; // total degree, -1 if zero
    bool is_homogeneous() const;

    BiPoly operator+(const BiPoly&) const;
    BiPoly operator-(const BiPoly&) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly&) const;
    BiPoly scaled(const Scalar& c) const;
    void add_term(int i, int j, const Scalar& c);
    bool operator==(const BiPoly&) const = default;

    BiPoly swap_ab() const;
    Scalar eval(const Scalar& a, const Scalar& b) const;
    std::string to_string() const;

private:
    TermMap terms_;
};

// Dense univariate polynomial over the Scalar field; plumbing for gcds of
// dehomogenized binary forms.
struct FieldPoly {
    std::vector<Scalar> c; // c[i] coeff of t^i, no trailing zeros

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    FieldPoly monic() const;
};

FieldPoly gcd(FieldPoly a, FieldPoly b);

// f(t) = form(a = t, b = 1); requires a homogeneous form.
FieldPoly dehomogenize(const BiPoly& form);

// Whether the form vanishes at the projective point (a, b) = (1, 0).
bool vanishes_at_infinity(const BiPoly& form);

} // namespace skewcliff
