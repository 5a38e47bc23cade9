#include "homlink/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace homlink {

GradedRing::GradedRing(std::vector<std::string> vars) : vars_(std::move(vars))
{
    std::set<std::string> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size())
        throw std::invalid_argument("duplicate variable names in ring");
}

int GradedRing::var_index(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return int(i);
    throw std::invalid_argument("unknown ring variable: " + name);
}

RingPtr make_ring(std::vector<std::string> vars)
{
    return std::make_shared<const GradedRing>(std::move(vars));
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a == b)
        return true;
    return a && b && a->vars() == b->vars();
}

int Monomial::total() const
{
    int s = 0;
    for (int e : exp)
        s += e;
    return s;
}

bool Monomial::divides(const Monomial& m) const
{
    if (exp.size() != m.exp.size())
        return false;
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > m.exp[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const
{
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i)
        r.exp[i] += m.exp[i];
    return r;
}

Monomial Monomial::divide_by(const Monomial& m) const
{
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) {
        r.exp[i] -= m.exp[i];
        if (r.exp[i] < 0)
            throw std::invalid_argument("monomial division with negative exponent");
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (size_t i = 0; i < r.exp.size(); ++i)
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool Monomial::coprime(const Monomial& m) const
{
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > 0 && m.exp[i] > 0)
            return false;
    return true;
}

bool grevlex_less(const Monomial& a, const Monomial& b)
{
    int da = a.total(), db = b.total();
    if (da != db)
        return da < db;
    // equal total degree: a < b iff the last nonzero entry of a-b is positive
    for (size_t i = a.exp.size(); i-- > 0;) {
        int d = a.exp[i] - b.exp[i];
        if (d != 0)
            return d > 0;
    }
    return false;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c)
{
    Polynomial p(std::move(ring));
    p.add_term(Monomial(p.ring_->nvars()), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index)
{
    Polynomial p(std::move(ring));
    Monomial m(p.ring_->nvars());
    m.exp.at(index) = 1;
    p.add_term(m, rat(1));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name)
{
    int i = ring->var_index(name);
    return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c)
{
    Polynomial p(std::move(ring));
    if (m.exp.size() != p.ring_->nvars())
        throw std::invalid_argument("monomial length mismatch");
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (homlink::is_zero(c))
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (homlink::is_zero(it->second))
            terms_.erase(it);
    }
}

const Monomial& Polynomial::lead_monomial() const
{
    if (terms_.empty())
        throw std::logic_error("lead term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Polynomial::lead_coeff() const
{
    if (terms_.empty())
        throw std::logic_error("lead term of zero polynomial");
    return terms_.begin()->second;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial arithmetic over different rings");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial arithmetic over different rings");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial arithmetic over different rings");
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const
{
    Polynomial r(ring_);
    if (homlink::is_zero(c))
        return r;
    for (const auto& [m, co] : terms_)
        r.terms_.emplace(m, co * c);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const
{
    Polynomial r(ring_);
    if (homlink::is_zero(c))
        return r;
    for (const auto& [mm, cc] : terms_)
        r.terms_.emplace(mm * m, cc * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

int Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            throw std::domain_error("degree query on inhomogeneous polynomial");
    return d;
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Polynomial Polynomial::map_variables(const RingPtr& target,
                                     const std::vector<Polynomial>& images) const
{
    if (images.size() != ring_->nvars())
        throw std::invalid_argument("map_variables needs one image per variable");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (size_t i = 0; i < m.exp.size(); ++i)
            for (int e = 0; e < m.exp[i]; ++e)
                t = t * images[i];
        r = r + t;
    }
    return r;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = c;
        bool neg = sgn(c) < 0;
        if (neg)
            mag = -mag;
        if (first) {
            if (neg)
                out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0)
                continue;
            if (m.exp[i] == 1)
                factors.push_back(ring_->vars()[i]);
            else
                factors.push_back(ring_->vars()[i] + "^" + std::to_string(m.exp[i]));
        }
        if (factors.empty()) {
            out << rat_to_string(mag);
        } else {
            if (!(mag == 1))
                out << rat_to_string(mag) << "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i)
                    out << "*";
                out << factors[i];
            }
        }
    }
    return out.str();
}

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text)
{
    // Reuse the Laurent grammar and check exponents are nonnegative.
    // Implemented via a tiny local scan to avoid a dependency cycle.
    Polynomial result(ring);
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto accept = [&](char c) {
        skip();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    };
    auto digits = [&] {
        skip();
        size_t s = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == s)
            throw std::invalid_argument("expected digits in polynomial: " + text);
        return text.substr(s, i - s);
    };
    auto name = [&] {
        skip();
        size_t s = i;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
            ++i;
        if (i == s)
            throw std::invalid_argument("expected variable in polynomial: " + text);
        return text.substr(s, i - s);
    };

    bool neg = accept('-');
    while (true) {
        Rational coeff = rat(neg ? -1 : 1);
        Monomial mono(ring->nvars());
        bool saw = false;
        skip();
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string lit = digits();
            if (accept('/'))
                lit += "/" + digits();
            coeff *= rat_from_string(lit);
            saw = true;
        }
        if (!saw || accept('*')) {
            while (true) {
                std::string n = name();
                int e = 1;
                if (accept('^'))
                    e = std::stoi(digits());
                mono.exp.at(ring->var_index(n)) += e;
                saw = true;
                if (!accept('*'))
                    break;
            }
        }
        if (!saw)
            throw std::invalid_argument("empty term in polynomial: " + text);
        result.add_term(mono, coeff);
        skip();
        if (i >= text.size())
            break;
        if (accept('+'))
            neg = false;
        else if (accept('-'))
            neg = true;
        else
            throw std::invalid_argument("unexpected character in polynomial: " + text);
    }
    return result;
}

} // namespace homlink
