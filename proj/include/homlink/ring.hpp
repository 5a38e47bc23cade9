#pragma once

#include "homlink/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace homlink {

/* Graded polynomial ring over Q; every variable sits in degree 2. */
class GradedRing {
public:
    explicit GradedRing(std::vector<std::string> vars);
    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    int var_index(const std::string& name) const;

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const GradedRing>;
RingPtr make_ring(std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

/* Exponent tuple aligned with the ring's variables; degree is 2 * |exponents|. */
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(size_t n) : exp(n, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    int total() const;
    int degree() const { return 2 * total(); }
    bool is_one() const { return total() == 0; }
    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial divide_by(const Monomial& m) const; // requires m | *this
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& m) const;
    bool operator==(const Monomial& m) const { return exp == m.exp; }
};

/* Graded reverse lexicographic order; `grevlex_less(a,b)` means a < b. */
bool grevlex_less(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/* Polynomial with exact rational coefficients, terms sorted leading-first. */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial variable(RingPtr ring, const std::string& name);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    const Monomial& lead_monomial() const;
    const Rational& lead_coeff() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial mul_term(const Monomial& m, const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /* Degree of a homogeneous polynomial; throws on inhomogeneous input.
     * The zero polynomial reports -1. */
    int homogeneous_degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;

    /* Ring morphism: variable i of this ring maps to images[i]. All images
     * must live in `target`. */
    Polynomial map_variables(const RingPtr& target, const std::vector<Polynomial>& images) const;

    std::string to_string() const;
    static Polynomial parse(const RingPtr& ring, const std::string& text);

private:
    RingPtr ring_;
    TermMap terms_;
};

} // namespace homlink
