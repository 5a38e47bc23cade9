#include "homlink/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace homlink {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Rational& c)
{
    LaurentPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, const std::string& name, int exp)
{
    LaurentPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = exp;
    p.add_term(e, rat(1));
    return p;
}

LaurentPoly LaurentPoly::term(std::vector<std::string> vars, Exponents exps, const Rational& c)
{
    LaurentPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw std::invalid_argument("exponent tuple length mismatch");
    p.add_term(exps, c);
    return p;
}

int LaurentPoly::var_index(const std::string& name) const
{
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return int(i);
    throw std::invalid_argument("unknown variable: " + name);
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c)
{
    if (e.size() != vars_.size())
        throw std::invalid_argument("exponent tuple length mismatch");
    if (homlink::is_zero(c))
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (homlink::is_zero(it->second))
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("laurent arithmetic over mismatched variable lists");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("laurent arithmetic over mismatched variable lists");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (vars_ != o.vars_)
        throw std::invalid_argument("laurent arithmetic over mismatched variable lists");
    LaurentPoly r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const
{
    LaurentPoly r(vars_);
    if (homlink::is_zero(c))
        return r;
    for (const auto& [e, co] : terms_)
        r.terms_.emplace(e, co * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative power of a laurent polynomial");
    LaurentPoly r = constant(vars_, rat(1));
    for (int i = 0; i < n; ++i)
        r = r * *this;
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, Rational>& assignments) const
{
    std::vector<int> idx;
    std::vector<Rational> val;
    std::vector<bool> killed(vars_.size(), false);
    for (const auto& [name, v] : assignments) {
        int i = var_index(name);
        idx.push_back(i);
        val.push_back(v);
        killed[i] = true;
    }
    std::vector<std::string> rest;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (!killed[i])
            rest.push_back(vars_[i]);

    LaurentPoly r(rest);
    for (const auto& [e, c] : terms_) {
        Rational factor = c;
        for (size_t k = 0; k < idx.size(); ++k) {
            int exp = e[idx[k]];
            if (exp == 0)
                continue;
            if (homlink::is_zero(val[k])) {
                if (exp < 0)
                    throw std::domain_error("substituting 0 into negative exponent of " +
                                            vars_[idx[k]]);
                factor = rat(0);
                break;
            }
            Rational base = exp > 0 ? val[k] : Rational(1 / val[k]);
            for (int t = 0; t < std::abs(exp); ++t)
                factor *= base;
        }
        if (homlink::is_zero(factor))
            continue;
        Exponents re;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (!killed[i])
                re.push_back(e[i]);
        r.add_term(re, factor);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_poly(const std::map<std::string, LaurentPoly>& assignments) const
{
    if (assignments.empty())
        return *this;
    const std::vector<std::string>& out_vars = assignments.begin()->second.vars();
    for (const auto& [n, p] : assignments)
        if (p.vars() != out_vars)
            throw std::invalid_argument("substitute_poly images over mismatched variable lists");
    for (const std::string& v : vars_)
        if (!assignments.count(v))
            throw std::invalid_argument("substitute_poly requires an image for every variable");

    LaurentPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = LaurentPoly::constant(out_vars, c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            int exp = e[i];
            if (exp == 0)
                continue;
            const LaurentPoly& img = assignments.at(vars_[i]);
            if (exp > 0) {
                t = t * img.pow(exp);
            } else {
                if (img.terms_.size() != 1)
                    throw std::domain_error("negative exponent needs a monomial image");
                const auto& [me, mc] = *img.terms_.begin();
                Exponents inv(me.size());
                for (size_t k = 0; k < me.size(); ++k)
                    inv[k] = me[k] * exp;
                Rational c = rat(1);
                for (int n = 0; n < -exp; ++n)
                    c /= mc;
                t = t * LaurentPoly::term(out_vars, inv, c);
            }
        }
        r = r + t;
    }
    return r;
}

LaurentPoly LaurentPoly::coefficient_of(const std::string& var, int e) const
{
    int i = var_index(var);
    LaurentPoly r(vars_);
    for (const auto& [ex, c] : terms_)
        if (ex[i] == e) {
            Exponents re = ex;
            re[i] = 0;
            r.add_term(re, c);
        }
    return r;
}

int LaurentPoly::min_exponent(const std::string& var) const
{
    int i = var_index(var);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] < m)
            m = e[i];
        first = false;
    }
    return m;
}

int LaurentPoly::max_exponent(const std::string& var) const
{
    int i = var_index(var);
    bool first = true;
    int m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[i] > m)
            m = e[i];
        first = false;
    }
    return m;
}

/* Grammar (round-trip tested):
 *   poly   := term (('+'|'-') term)*   |   '0'
 *   term   := coeff ('*' factor)*      |   factor ('*' factor)*
 *   factor := var ('^' int)?
 *   coeff  := ['-'] digits ['/' digits]
 * Serialization emits terms in ascending lex order of exponent tuples,
 * separated by " + " / " - ", coefficient magnitude omitted when 1. */
std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
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
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] == 1)
                factors.push_back(vars_[i]);
            else
                factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) {
            out << rat_to_string(mag);
        } else {
            bool need_coeff = !(mag == 1);
            if (need_coeff)
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

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}
    void skip_ws()
    {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eof()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c)
    {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string digits()
    {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            throw std::invalid_argument("expected digits at position " + std::to_string(start) +
                                        " in: " + s);
        return s.substr(start, i - start);
    }
    int integer()
    {
        skip_ws();
        bool neg = accept('-');
        int v = std::stoi(digits());
        return neg ? -v : v;
    }
    std::string name()
    {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i == start)
            throw std::invalid_argument("expected variable name at position " +
                                        std::to_string(start) + " in: " + s);
        return s.substr(start, i - start);
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(std::vector<std::string> vars, const std::string& text)
{
    LaurentPoly result(vars);
    Lexer lx(text);
    bool term_neg = lx.accept('-');
    while (true) {
        Rational coeff = rat(term_neg ? -1 : 1);
        Exponents exps(vars.size(), 0);
        bool saw_factor = false;

        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string num = lx.digits();
            std::string lit = num;
            if (lx.accept('/'))
                lit += "/" + lx.digits();
            coeff *= rat_from_string(lit);
            saw_factor = true;
            if (!lx.accept('*'))
                goto term_done;
        }
        while (true) {
            std::string n = lx.name();
            int e = 1;
            if (lx.accept('^'))
                e = lx.integer();
            int idx = -1;
            for (size_t k = 0; k < vars.size(); ++k)
                if (vars[k] == n)
                    idx = int(k);
            if (idx < 0)
                throw std::invalid_argument("unknown variable in polynomial: " + n);
            exps[idx] += e;
            saw_factor = true;
            if (!lx.accept('*'))
                break;
        }
    term_done:
        if (!saw_factor)
            throw std::invalid_argument("empty term in: " + text);
        result.add_term(exps, coeff);
        if (lx.eof())
            break;
        if (lx.accept('+'))
            term_neg = false;
        else if (lx.accept('-'))
            term_neg = true;
        else
            throw std::invalid_argument("unexpected character at position " +
                                        std::to_string(lx.i) + " in: " + text);
    }
    return result;
}

bool try_divide_exact(const LaurentPoly& f, const LaurentPoly& g, LaurentPoly& out)
{
    if (g.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    out = LaurentPoly(f.vars());
    if (f.is_zero())
        return true;
    if (f.vars() != g.vars())
        throw std::invalid_argument("division over mismatched variable lists");

    // Division by the trailing term of g in the lex term order; exactness is
    // checked by requiring the remainder to vanish.
    LaurentPoly rem = f;
    const auto& glead = *g.terms().begin();
    // If f = q*g then the Newton boxes add: every quotient exponent lies in
    // [min(f)-min(g), max(f)-max(g)] coordinatewise. Anything outside means
    // the division is not exact (and also bounds the loop).
    size_t nv = f.vars().size();
    LaurentPoly::Exponents qlo(nv), qhi(nv);
    {
        auto box = [&](const LaurentPoly& p, LaurentPoly::Exponents& lo,
                       LaurentPoly::Exponents& hi) {
            lo = hi = p.terms().begin()->first;
            for (const auto& [e, c] : p.terms())
                for (size_t i = 0; i < nv; ++i) {
                    lo[i] = std::min(lo[i], e[i]);
                    hi[i] = std::max(hi[i], e[i]);
                }
        };
        LaurentPoly::Exponents flo, fhi, glo, ghi;
        box(f, flo, fhi);
        box(g, glo, ghi);
        for (size_t i = 0; i < nv; ++i) {
            qlo[i] = flo[i] - glo[i];
            qhi[i] = fhi[i] - ghi[i];
        }
    }
    LaurentPoly quot(f.vars());
    while (!rem.is_zero()) {
        const LaurentPoly::Exponents rexp = rem.terms().begin()->first;
        const Rational rc = rem.terms().begin()->second;
        LaurentPoly::Exponents q(rexp.size());
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = rexp[i] - glead.first[i];
            if (q[i] < qlo[i] || q[i] > qhi[i])
                return false;
        }
        Rational c = rc / glead.second;
        LaurentPoly t = LaurentPoly::term(f.vars(), q, c);
        quot = quot + t;
        rem = rem - t * g;
        // Progress check: the new remainder's least term must be strictly
        // larger in lex order, otherwise the division cannot be exact.
        if (!rem.is_zero() && !(rexp < rem.terms().begin()->first))
            return false;
    }
    out = quot;
    return true;
}

} // namespace homlink
