#pragma once

#include "homlink/presented.hpp"
#include "homlink/qlinalg.hpp"

#include <map>
#include <utility>

namespace homlink {

/* Graded pieces of a presented module by pure linear algebra: the degree-d
 * piece is F^d modulo the span of all monomial multiples of the relations
 * landing in degree d. Nothing here touches the Groebner machinery, which
 * keeps this an independent route to Tor. */
class GradedPieces {
public:
    explicit GradedPieces(const PresentedModule& M);

    long dim(int degree) const;
    /* Matrix of multiplication by variable `var`: M^d -> M^{d+2}, in the
     * chosen coordinate bases (columns index the degree-d basis). */
    QMatrix multiplication(int var, int degree) const;

private:
    struct Piece {
        std::vector<std::pair<size_t, Monomial>> fbasis; // (position, monomial) spanning F^d
        QMatrix echelon;                                 // RREF of the relation span
        std::vector<size_t> pivot_cols;
        std::vector<size_t> free_cols; // quotient basis = F^d basis at these columns
    };
    const Piece& piece(int degree) const;
    std::vector<Rational> project(const Piece& p, std::vector<Rational> v) const;

    const PresentedModule* mod_;
    mutable std::map<int, Piece> pieces_;
};

/* dim_Q Tor_p(R/m, M)^q as homology of the Koszul complex tensored with M,
 * computed degreewise by exact rank computations. */
long koszul_tor(const PresentedModule& M, int p, int q);

/* Full table over the finite support window [min generator degree,
 * max relation degree + 2*nvars], extended while the top band is nonzero. */
std::map<std::pair<int, int>, long> koszul_tor_table(const PresentedModule& M);

/* Cross-validation of the two Tor routes: the Groebner/syzygy Betti table
 * against the Koszul linear-algebra oracle, compared pointwise over the
 * union of the oracle window and the Betti support with a margin. Returns
 * the first mismatch as a string, or empty on agreement. */
std::string oracle_mismatch(const PresentedModule& M);

} // namespace homlink
