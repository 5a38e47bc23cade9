#pragma once

#include "homlink/krcomplex.hpp"
#include "homlink/laurent.hpp"
#include "homlink/resolution.hpp"

#include <array>
#include <map>
#include <string>

namespace homlink {

/* Four-index Betti table beta(p,q,j,k) of the middle homology (or its
 * reduction), together with the component count. Entries are positive. */
struct BettiTable4 {
    std::map<std::array<int, 4>, long> entries; // key (p,q,j,k)
    int components = 0;
    bool reduced = false;

    long at(int p, int q, int j, int k) const;
    bool zero() const { return entries.empty(); }
    /* max p over the support; -1 on the empty table. */
    int max_p() const;
};

/* beta tables computed stratum by stratum via minimal free resolutions.
 * jobs > 1 resolves independent (j,k) strata concurrently. */
BettiTable4 betti_from_homology(const TriGradedHomology& H, int jobs = 1);
BettiTable4 betti_numbers(const ClosedBraidDiagram& d, bool reduced, int jobs = 1);

/* Poincare polynomial: numerator in x,y,a,b over (1-y^2)^denominator_power. */
struct PoincarePolynomial {
    LaurentPoly numerator;
    int denominator_power = 0;
};

PoincarePolynomial poincare(const BettiTable4& T);
PoincarePolynomial poincare_product_with_ab1(const PoincarePolynomial& P1,
                                             const PoincarePolynomial& P2);
bool poincare_equal(const PoincarePolynomial& A, const PoincarePolynomial& B);
std::string poincare_text(const PoincarePolynomial& P);

/* x-degree of the Poincare polynomial = projective dimension. */
PdResult pd_of_table(const BettiTable4& T);

struct CheckReport {
    bool pass = true;
    std::string detail; // first failure description
};

/* Per-stratum Euler identity (the x = -1 specialization reproduces the
 * Hilbert series of every stratum up to the cutoff) plus the exact bridge
 * identity (y - y^-1) * P_B(-1,y,a,-1) = -P_{B,r}(-1,y,a,-1). */
CheckReport euler_check(const ClosedBraidDiagram& d, int cutoff = 30);

/* Hilbert-function identity of a stratum: for T = 0..T_max the dimension of
 * the (2T+1-j)-graded piece equals the alternating binomial sum over the
 * Betti entries of the stratum. */
CheckReport hilbert_identity_check(const BettiTable4& T, const TriGradedHomology& H, int j,
                                   int k, int T_max);

enum class SplitVerdict { consistent, obstructed };

/* Obstruction to being an n-split link: obstructed iff pd > m - n. */
SplitVerdict split_obstruction(const BettiTable4& unreduced, int n);

} // namespace homlink
