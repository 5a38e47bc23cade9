#pragma once

#include "homlink/braid.hpp"
#include "homlink/laurent.hpp"

#include <map>
#include <vector>

namespace homlink {

/* Permutation in row form: perm[i] = image of position i (0-based). */
using Perm = std::vector<int>;

Perm perm_identity(int n);
int perm_length(const Perm& w); // inversion count

/* Element of the Hecke algebra H_n in the T_w basis; coefficients are
 * Laurent polynomials in q with polynomial z-dependence. */
struct HeckeElement {
    int strands = 1;
    std::map<Perm, LaurentPoly> coeffs; // vars {q, z}, no zero coefficients

    void add(const Perm& w, const LaurentPoly& c);
};

/* Image of a braid word under sigma_i -> T_i, sigma_i^-1 -> q^-1 T_i +
 * (q^-1 - 1), expanded in the T_w basis. */
HeckeElement hecke_image(const BraidWord& w);

/* Right multiplication by the generator T_i (0-based position index). */
HeckeElement right_multiply(const HeckeElement& h, int i, int sign);

/* The Markov trace with tr(T_e) = 1 on every H_n and
 * tr(x T_{n-1} y) = z tr(x y) for x, y in H_{n-1}. */
LaurentPoly ocneanu_trace(const HeckeElement& h);

/* Laurent fraction num / (s - s^-1)^den_power over variables {a, s},
 * canonicalized by exact division. The skein-normalized invariant of a
 * split link genuinely carries the loop factor, so a plain Laurent
 * polynomial cannot represent it; knots always canonicalize to den_power 0. */
struct LaurentFraction {
    LaurentPoly num{std::vector<std::string>{"a", "s"}};
    int den_power = 0;

    void canonicalize();
    bool operator==(const LaurentFraction& o) const;
    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const;
    LaurentFraction operator*(const LaurentFraction& o) const;
    std::string text() const;
};

/* Skein-normalized invariant of the closure: unknot -> 1 and
 * a P(L+) - a^-1 P(L-) = (s - s^-1) P(L0). Works for arbitrary words. */
LaurentFraction homfly(const BraidWord& w);

/* The three-term skein check at one letter position: inserts sigma_i,
 * sigma_i^-1 and nothing at `pos` in the word. */
bool skein_holds(const BraidWord& base, size_t pos, int gen);

} // namespace homlink
