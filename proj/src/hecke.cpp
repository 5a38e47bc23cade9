#include "homlink/hecke.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homlink {

namespace {

const std::vector<std::string> QZ = {"q", "z"};
const std::vector<std::string> AS = {"a", "s"};

LaurentPoly qz(const std::string& s) { return LaurentPoly::parse(QZ, s); }

} // namespace

Perm perm_identity(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

int perm_length(const Perm& w)
{
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j])
                ++inv;
    return inv;
}

void HeckeElement::add(const Perm& w, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
        coeffs.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero())
            coeffs.erase(it);
    }
}

/* T_w T_i: swap the values i, i+1 in the row form; the length goes up when
 * value i appears before value i+1. */
HeckeElement right_multiply(const HeckeElement& h, int i, int sign)
{
    HeckeElement out;
    out.strands = h.strands;
    if (i < 0 || i >= h.strands - 1)
        throw std::invalid_argument("generator index out of range");

    for (const auto& [w, c] : h.coeffs) {
        Perm ws = w;
        int pos_i = -1, pos_i1 = -1;
        for (size_t x = 0; x < w.size(); ++x) {
            if (w[x] == i)
                pos_i = int(x);
            if (w[x] == i + 1)
                pos_i1 = int(x);
        }
        std::swap(ws[pos_i], ws[pos_i1]);
        bool lengthens = pos_i < pos_i1;

        if (sign > 0) {
            if (lengthens) {
                out.add(ws, c);
            } else {
                // T_w T_i = (q-1) T_w + q T_{ws}
                out.add(w, c * qz("q - 1"));
                out.add(ws, c * qz("q"));
            }
        } else {
            // T_i^-1 = q^-1 T_i + (q^-1 - 1)
            if (lengthens) {
                out.add(ws, c * qz("q^-1"));
                out.add(w, c * qz("q^-1 - 1"));
            } else {
                // the quadratic relation collapses the shortening case
                out.add(ws, c);
            }
        }
    }
    return out;
}

HeckeElement hecke_image(const BraidWord& w)
{
    HeckeElement h;
    h.strands = w.strands;
    h.add(perm_identity(w.strands), qz("1"));
    for (auto [i, s] : w.letters)
        h = right_multiply(h, i - 1, s);
    return h;
}

namespace {

/* Trace of a single basis element T_w, w in S_n (n = w.size()). */
LaurentPoly trace_basis(const Perm& w, int n);

LaurentPoly trace_element(const HeckeElement& h, int n)
{
    LaurentPoly total(QZ);
    for (const auto& [w, c] : h.coeffs)
        total = total + c * trace_basis(w, n);
    return total;
}

LaurentPoly trace_basis(const Perm& w, int n)
{
    if (n <= 1)
        return qz("1");
    if (w[n - 1] == n - 1) {
        Perm rest(w.begin(), w.end() - 1);
        return trace_basis(rest, n - 1);
    }
    // w = u · (s_{n-2} s_{n-3} ... s_j) with u fixing n-1 and j = w[n-1];
    // then tr(T_w) = tr(T_u T_{n-2} T_rest) = z tr(T_u T_rest).
    int j = w[n - 1];
    Perm dj_inv(n);
    for (int y = 0; y < n; ++y)
        dj_inv[y] = y;
    for (int y = j + 1; y <= n - 1; ++y)
        dj_inv[y] = y - 1;
    dj_inv[j] = n - 1;
    Perm u(n);
    for (int x = 0; x < n; ++x)
        u[x] = dj_inv[w[x]];
    if (u[n - 1] != n - 1)
        throw std::logic_error("coset factorization failed");

    HeckeElement he;
    he.strands = n;
    he.add(u, qz("1"));
    for (int g = n - 3; g >= j; --g)
        he = right_multiply(he, g, +1);

    // all summands now fix n-1; restrict to H_{n-1}
    HeckeElement restricted;
    restricted.strands = n - 1;
    for (const auto& [v, c] : he.coeffs) {
        if (v[n - 1] != n - 1)
            throw std::logic_error("trace reduction left the subalgebra");
        restricted.add(Perm(v.begin(), v.end() - 1), c);
    }
    return qz("z") * trace_element(restricted, n - 1);
}

} // namespace

LaurentPoly ocneanu_trace(const HeckeElement& h)
{
    return trace_element(h, h.strands);
}

void LaurentFraction::canonicalize()
{
    if (num.is_zero()) {
        den_power = 0;
        return;
    }
    LaurentPoly loop = LaurentPoly::parse(AS, "s - s^-1");
    while (den_power > 0) {
        LaurentPoly quot;
        if (!try_divide_exact(num, loop, quot))
            break;
        num = quot;
        --den_power;
    }
}

bool LaurentFraction::operator==(const LaurentFraction& o) const
{
    // cross-multiplied exact comparison
    LaurentPoly loop = LaurentPoly::parse(AS, "s - s^-1");
    LaurentPoly lhs = num * loop.pow(std::max(0, o.den_power - den_power));
    LaurentPoly rhs = o.num * loop.pow(std::max(0, den_power - o.den_power));
    return lhs == rhs;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const
{
    LaurentPoly loop = LaurentPoly::parse(AS, "s - s^-1");
    LaurentFraction r;
    r.den_power = std::max(den_power, o.den_power);
    r.num = num * loop.pow(r.den_power - den_power) +
            o.num * loop.pow(r.den_power - o.den_power);
    r.canonicalize();
    return r;
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const
{
    LaurentFraction neg = o;
    neg.num = -neg.num;
    return *this + neg;
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const
{
    LaurentFraction r;
    r.num = num * o.num;
    r.den_power = den_power + o.den_power;
    r.canonicalize();
    return r;
}

std::string LaurentFraction::text() const
{
    if (den_power == 0)
        return num.to_string();
    std::ostringstream out;
    out << "(" << num.to_string() << ") / (s - s^-1)^" << den_power;
    return out.str();
}

LaurentFraction homfly(const BraidWord& w)
{
    LaurentPoly tr = ocneanu_trace(hecke_image(w));
    int n = w.strands;
    int e = w.writhe();

    // substitute q -> s^2, z -> a^2 (s^2-1) / (a^2-1), then normalize by
    // delta^{n-1} (a s)^{-e} with delta = s (a^2-1) / (a (s^2-1));
    // bookkeeping keeps everything polynomial until two exact divisions.
    int zmax = std::max(0, tr.max_exponent("z"));
    LaurentPoly a2m1 = LaurentPoly::parse(AS, "a^2 - 1");
    LaurentPoly s2m1 = LaurentPoly::parse(AS, "s^2 - 1");

    LaurentPoly N(AS);
    for (const auto& [exp, c] : tr.terms()) {
        int qe = exp[0], ze = exp[1];
        if (ze < 0)
            throw std::logic_error("trace with negative z power");
        LaurentPoly term = LaurentPoly::term(AS, {2 * ze, 2 * qe}, c); // a^{2ze} s^{2qe}
        term = term * s2m1.pow(ze) * a2m1.pow(zmax - ze);
        N = N + term;
    }
    // P = s^{n-1-e} a^{-(n-1)-e} N (a^2-1)^{n-1-zmax} / (s^2-1)^{n-1}
    int apow = n - 1 - zmax;
    if (apow >= 0) {
        N = N * a2m1.pow(apow);
    } else {
        for (int t = 0; t < -apow; ++t) {
            LaurentPoly quot;
            if (!try_divide_exact(N, a2m1, quot))
                throw std::logic_error("homfly normalization: a^2-1 division not exact");
            N = quot;
        }
    }
    N = N * LaurentPoly::term(AS, {-(n - 1) - e, n - 1 - e}, rat(1));

    // (s^2-1)^{n-1} = s^{n-1} (s-s^-1)^{n-1}
    LaurentFraction P;
    P.num = N * LaurentPoly::term(AS, {0, -(n - 1)}, rat(1));
    P.den_power = n - 1;
    P.canonicalize();
    return P;
}

bool skein_holds(const BraidWord& base, size_t pos, int gen)
{
    if (pos > base.letters.size())
        throw std::invalid_argument("insertion position out of range");
    auto insert = [&](int sign) {
        BraidWord w = base;
        w.letters.insert(w.letters.begin() + pos, {gen, sign});
        return w;
    };
    LaurentFraction Pp = homfly(insert(+1));
    LaurentFraction Pm = homfly(insert(-1));
    LaurentFraction P0 = homfly(base);

    LaurentFraction a, ainv, loop;
    a.num = LaurentPoly::parse(AS, "a");
    ainv.num = LaurentPoly::parse(AS, "a^-1");
    loop.num = LaurentPoly::parse(AS, "s - s^-1");
    return a * Pp - ainv * Pm == loop * P0;
}

} // namespace homlink
