#pragma once

#include <array>
#include <map>
#include <span>
#include <string>

#include "core/complex_disc.hpp"

namespace tripick {

// Sparse polynomial in up to three variables with complex coefficients.
// "Symbolic" here means exact exponent bookkeeping; coefficients are doubles
// and zero tests are tolerance-based (the parameters nu, omega are
// generically irrational, so exact rational arithmetic buys nothing).
class MultiPoly {
public:
    using Exponents = std::array<int, 3>;

    // graded lexicographic: total degree first, then z1 exponent, then z2, z3
    struct GradedLex {
        bool operator()(const Exponents& a, const Exponents& b) const {
            const int da = a[0] + a[1] + a[2];
            const int db = b[0] + b[1] + b[2];
            if (da != db) return da < db;
            return a < b;
        }
    };
    using TermMap = std::map<Exponents, Complex, GradedLex>;

    // Coefficients smaller than this times the largest coefficient are dropped.
    static constexpr double kDedupThreshold = 1e-15;

    explicit MultiPoly(int arity);
    static MultiPoly constant(int arity, Complex c);
    static MultiPoly variable(int arity, int index);

    int arity() const { return arity_; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exponents e, Complex c);

    MultiPoly scaled(Complex c) const;
    Complex eval(std::span<const Complex> point) const;
    double max_coeff_magnitude() const;  // 0 for the zero polynomial
    int total_degree() const;            // -1 for the zero polynomial

    // true iff every coefficient magnitude < tol * (max own coefficient, or 1
    // if there are no terms)
    bool is_zero(double tol) const;

    // Canonical serialization: graded-lex term order, one "(re,im) z1^i z2^j ..."
    // chunk per term, joined by " + ". The zero polynomial prints "0".
    std::string to_string() const;

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);

private:
    void prune();
    static void check_arity(const MultiPoly& p, const MultiPoly& q);

    int arity_;
    TermMap terms_;
};

} // namespace tripick
