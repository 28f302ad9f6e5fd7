#pragma once

#include <map>
#include <set>
#include <string>

#include "sl2/errors.hpp"
#include "sl2/numeric.hpp"

namespace sl2 {

/**
 * Laurent monomial: a finite map variable-name -> exponent. Exponents may
 * be negative; zero exponents are never stored. Ordered by graded
 * lexicographic order over sorted variable names (total degree first, then
 * the first differing exponent decides).
 */
class Monomial {
  public:
    Monomial() = default;

    static Monomial variable(const std::string& name, Integer exp = 1);

    const std::map<std::string, Integer>& exponents() const { return exps_; }
    bool is_unit() const { return exps_.empty(); }
    Integer degree() const;

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;
    // Componentwise exponent difference (always defined in the Laurent ring).
    Monomial div(const Monomial& other) const;
    // True when other/this has no negative exponent, i.e. this divides other
    // inside the ordinary polynomial ring.
    bool divides_poly(const Monomial& other) const;
    bool has_negative_exponent() const;

    int compare(const Monomial& other) const; // grlex
    bool operator<(const Monomial& o) const { return compare(o) < 0; }
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::map<std::string, Integer> exps_;
};

/**
 * Sparse multivariate Laurent polynomial with arbitrary-precision integer
 * coefficients. Terms are kept in a map ordered by the monomial order; no
 * zero coefficient is ever stored, so representation is canonical and
 * operator== is structural equality.
 */
class LaurentPoly {
  public:
    LaurentPoly() = default; // zero
    LaurentPoly(long value) : LaurentPoly(Integer(value)) {}
    explicit LaurentPoly(const Integer& value);

    static LaurentPoly variable(const std::string& name);
    static LaurentPoly term(const Monomial& m, const Integer& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Value of a constant polynomial (zero polynomial gives 0).
    Integer constant_value() const;
    const std::map<Monomial, Integer>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool all_coefficients_nonnegative() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly pow(unsigned long e) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Specialize every listed variable to 1.
    LaurentPoly substitute_ones(const std::set<std::string>& vars) const;
    LaurentPoly substitute_all_ones() const;

    // Per-variable minimum exponent over all terms, as a monomial m such
    // that (*this) * m.inverse() is an honest polynomial with a zero
    // minimum exponent in each of its variables.
    Monomial low_content() const;

    // Canonical text form: terms ascending in the monomial order,
    // e.g. "1 + 2*x + x^2"; negative exponents print as "x^-1".
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Integer& coeff);

    std::map<Monomial, Integer> terms_;
};

// Exact division in the Laurent ring: returns r with r*q == p or throws
// DomainError("NotDivisible"). Intermediate arithmetic runs over rationals
// in graded lex order; integrality of the result and r*q == p are verified.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Quotient of two Laurent polynomials, compared by cross-multiplication.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(LaurentPoly numerator, LaurentPoly denominator);
    RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(unsigned long e) const;
    bool equals(const RationalFunction& o) const;

    std::string str() const;

  private:
    LaurentPoly num_;
    LaurentPoly den_;
};

// The Laurent polynomial equal to f, when one exists with integer
// coefficients; throws DomainError("NotLaurent") otherwise. The denominator
// is split into monomial times honest-polynomial part and cancelled via
// exact_div.
LaurentPoly normalize_to_laurent(const RationalFunction& f);

} // namespace sl2
