#pragma once

#include "homlink/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace homlink {

/* Multivariate Laurent polynomial over Q in a fixed ordered list of named
 * variables. Terms are keyed by exponent tuples (negative exponents allowed)
 * in ascending lexicographic order, which is also the serialization order.
 * Zero coefficients are never stored. */
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const Rational& c);
    static LaurentPoly variable(std::vector<std::string> vars, const std::string& name, int exp = 1);
    static LaurentPoly term(std::vector<std::string> vars, Exponents exps, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(int n) const; // n >= 0

    /* Eliminates the assigned variables; rejects a zero value substituted
     * into a variable that occurs with a negative exponent. */
    LaurentPoly substitute(const std::map<std::string, Rational>& assignments) const;

    /* Substitutes a Laurent polynomial (over the same variable list as the
     * result) for each assigned variable; used for monomial changes of
     * variables. Assigned polynomials with several terms are only legal for
     * nonnegative exponents of the substituted variable. */
    LaurentPoly substitute_poly(const std::map<std::string, LaurentPoly>& assignments) const;

    /* Coefficient extraction: exponent of `var` fixed to e, other variables kept. */
    LaurentPoly coefficient_of(const std::string& var, int e) const;

    int min_exponent(const std::string& var) const;
    int max_exponent(const std::string& var) const;

    std::string to_string() const;
    static LaurentPoly parse(std::vector<std::string> vars, const std::string& text);

private:
    int var_index(const std::string& name) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

/* Quotient f / g when the division is exact; nullopt otherwise. */
bool try_divide_exact(const LaurentPoly& f, const LaurentPoly& g, LaurentPoly& out);

} // namespace homlink
