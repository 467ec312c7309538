#pragma once
#include <map>
#include <string>
#include <vector>

#include "skewcliff/scalar.hpp"

namespace skewcliff {

// A word in the free monoid: sequence of 0-based generator indices.
using Word = std::vector<int>;

int weighted_degree(const Word& w, const std::vector<int>& gen_degrees);

// Structural order: length first, then left-to-right by generator index.
// Used for canonical term storage and printing, independent of any chosen
// monomial order.
struct WordDegLex {
    bool operator()(const Word& a, const Word& b) const;
};

// Degree-first monomial order with configurable generator precedence.
// rank[i] is the precedence of generator i; ties broken left-to-right.
struct MonomialOrder {
    int n = 0;
    std::vector<int> rank;

    static MonomialOrder standard(int n);
    static MonomialOrder with_precedence(const std::vector<int>& smallest_first);
    int compare(const Word& a, const Word& b) const; // -1, 0, 1
};

int word_compare(const Word& a, const Word& b, const MonomialOrder& order);

// Polynomial in the free associative algebra over Scalar coefficients.
// Terms are kept in structural order with no zero coefficients; all
// coefficients of one polynomial share a scalar kind.
class NCPoly {
public:
    using TermMap = std::map<Word, Scalar, WordDegLex>;

    NCPoly() = default;
    static NCPoly constant(Scalar c);
    static NCPoly term(Word w, Scalar c);
    static NCPoly generator(int i, const Scalar& one);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;
    int degree() const; // max word length in support, -1 if zero
    bool is_homogeneous(const std::vector<int>& gen_degrees) const;

    NCPoly operator+(const NCPoly&) const;
    NCPoly operator-(const NCPoly&) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly&) const; // noncommutative product
    NCPoly scaled(const Scalar& c) const;
    void add_term(const Word& w, const Scalar& c);

    const Word& leading_word(const MonomialOrder& order) const;
    const Scalar& leading_coeff(const MonomialOrder& order) const;
    NCPoly monic(const MonomialOrder& order) const;

    bool operator==(const NCPoly&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    TermMap terms_;
};

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b);

// Multilinear image of a homogeneous polynomial: slot t of each word carries
// an independent copy of the variables, so the polynomial can be evaluated on
// a sequence of points.
struct MultiPoly {
    int slots = 0;
    int n = 0;
    NCPoly::TermMap terms;

    // points[t] is the coordinate vector fed into slot t.
    template <class F, class Conv>
    F evaluate(const std::vector<std::vector<F>>& points, F zero, Conv conv) const {
        F acc = zero;
        for (const auto& [w, c] : terms) {
            F t = conv(c);
            for (int s = 0; s < slots; ++s) t = t * points[s][w[s]];
            acc = acc + t;
        }
        return acc;
    }

    Scalar evaluate_scalar(const std::vector<std::vector<Scalar>>& points) const;
};

MultiPoly multilinearize(const NCPoly& f, int n);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

} // namespace skewcliff
