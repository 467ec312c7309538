#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewcliff/errors.hpp"

namespace skewcliff {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Univariate integer polynomial in the parameter q.
// c[i] is the coefficient of q^i; invariant: no trailing zero coefficients.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(Int constant);
    static IntPoly var();                  // the polynomial q
    static IntPoly monomial(Int coeff, int power);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& lead() const;

    IntPoly operator+(const IntPoly&) const;
    IntPoly operator-(const IntPoly&) const;
    IntPoly operator*(const IntPoly&) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

    Int content() const;                   // gcd of coefficients, sign of lead
    IntPoly divexact(const IntPoly& d) const;
    Rat eval(const Rat& x) const;
    std::string to_string() const;
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);
int compare(const IntPoly& a, const IntPoly& b); // degree, then coefficients from top

// Rational function in q, canonical form: num/den reduced, den nonzero with
// positive leading coefficient; zero is 0/1.
struct RatFun {
    IntPoly num, den;
    bool operator==(const RatFun&) const = default;
};

// Exact coefficient: either a rational number or a rational function in q.
// The two kinds never mix implicitly; arithmetic across kinds raises
// MixedVariant and promotion to the function field is explicit.
class Scalar {
public:
    Scalar() : v_(Rat(0)) {}
    explicit Scalar(Rat r) : v_(std::move(r)) {}
    static Scalar integer(long long n) { return Scalar(Rat(n)); }
    static Scalar rational(const Int& num, const Int& den);
    static Scalar q();
    static Scalar ratfun(IntPoly num, IntPoly den);
    static Scalar zero_like(const Scalar& a);
    static Scalar one_like(const Scalar& a);

    bool is_rational_kind() const { return std::holds_alternative<Rat>(v_); }
    bool is_function_kind() const { return !is_rational_kind(); }
    bool is_zero() const;
    bool is_one() const;
    bool is_negative() const; // sign of the rational, or of the numerator's lead

    const Rat& rat() const;
    const RatFun& fun() const;

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;
    Scalar operator-() const;
    Scalar inv() const;
    bool operator==(const Scalar&) const = default;

    Scalar promote() const;                 // rational -> constant function
    Scalar specialize(const Rat& q_value) const;
    std::string to_string() const;

private:
    std::variant<Rat, RatFun> v_;
    void check_same_kind(const Scalar& b) const;
};

int compare(const Scalar& a, const Scalar& b); // canonical total order per kind

// Element of the prime field F_p for an odd prime p; value in [0, p).
struct PrimeScalar {
    std::int64_t v = 0;
    std::int64_t p = 0;

    bool is_zero() const { return v == 0; }
    PrimeScalar operator+(const PrimeScalar&) const;
    PrimeScalar operator-(const PrimeScalar&) const;
    PrimeScalar operator*(const PrimeScalar&) const;
    PrimeScalar operator-() const;
    PrimeScalar inv() const;
    bool operator==(const PrimeScalar&) const = default;
};

bool is_odd_prime(std::int64_t p);
PrimeScalar reduce_mod_p(const Scalar& a, std::int64_t p);

// Wang's rational reconstruction: the unique num/den with |num|, den <= sqrt(p/2)
// and num * den^{-1} = r mod p, if one exists.
std::optional<Rat> rational_reconstruct(const Int& residue, const Int& p);

} // namespace skewcliff
