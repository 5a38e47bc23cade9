#pragma once

#include "homlink/braid.hpp"
#include "homlink/presented.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace homlink {

/* Edge ring of a closed braid: one degree-2 variable per edge, one linear
 * relation per crossing (outgoing minus incoming). Gaussian elimination with
 * highest-index pivots rewrites the quotient as a polynomial ring on the
 * surviving variables; the designated component edges X1..Xm always survive. */
class EdgeRing {
public:
    explicit EdgeRing(const ClosedBraidDiagram& d);

    const RingPtr& ambient() const { return ambient_; }
    const RingPtr& reduced() const { return reduced_; }
    const std::vector<int>& surviving() const { return surviving_; } // ambient indices

    /* Push an ambient polynomial through the elimination map. */
    Polynomial eliminate(const Polynomial& ambient_poly) const;
    Polynomial edge_difference(int edge_a, int edge_b) const; // eliminated X_a - X_b

    /* Surviving-variable indices (in the reduced ring) per component. */
    const std::vector<std::vector<int>>& component_classes() const { return classes_; }

private:
    RingPtr ambient_;
    RingPtr reduced_;
    std::vector<int> surviving_;                 // ambient index per reduced variable
    std::vector<Polynomial> images_;             // reduced image of each ambient variable
    std::vector<std::vector<int>> classes_;      // reduced indices grouped by component
};

/* The 2x2 square of a positive crossing over the eliminated edge ring.
 * Corners sit at (j,k) in {-2,0}^2 with module-degree shifts
 * {0,-2,0}, {0,0,0}, {2,-2,-2}, {0,0,-2}; the horizontal maps are u (top)
 * and u*v (bottom), the verticals v (left) and 1 (right), where
 * u = outgoing understrand minus incoming left edge and
 * v = outgoing overstrand minus incoming left edge. */
struct CrossingSquare {
    Polynomial u, v; // over the eliminated ring
};

CrossingSquare crossing_square(const Crossing& c, const EdgeRing& E);

/* Total complex of the crossing squares, tensored over the edge ring:
 * positions (j,k) with j,k in {-2n,...,0}; summands indexed by per-crossing
 * corner states; commuting differentials d_plus (j -> j+2) and d_vert
 * (k -> k+2) with state-dependent signs. */
class TotalDoubleComplex {
public:
    TotalDoubleComplex(const ClosedBraidDiagram& d, const EdgeRing& E);

    int crossing_count() const { return n_; }
    const EdgeRing& edge_ring() const { return *ring_; }

    /* Free module at grid position (j,k); rank 0 off the grid. */
    const FreeModule& at(int j, int k) const;
    HomMatrix d_plus(int j, int k) const;  // (j,k) -> (j+2,k)
    HomMatrix d_vert(int j, int k) const;  // (j,k) -> (j,k+2)

    /* Invariant checks: d+^2 = 0, dv^2 = 0, commuting squares, homogeneity
     * with offsets (2,2,0) and (0,0,2). Throws on violation. */
    void verify() const;

    std::string to_json() const;

private:
    struct Position {
        FreeModule mod;
        std::vector<std::vector<std::pair<int, int>>> states; // per summand, per crossing (j,k)
    };
    const Position& pos(int j, int k) const;

    const EdgeRing* ring_;
    int n_ = 0;
    std::vector<CrossingSquare> squares_;
    std::map<std::pair<int, int>, Position> grid_;
    FreeModule empty_;
};

/* Strata of the iterated homology, as modules over the component ring
 * Q[X1..Xm] (unreduced) or its quotient by X1 (reduced). */
struct TriGradedHomology {
    RingPtr ring;                                    // component ring of the strata
    int components = 0;
    bool reduced = false;
    std::map<std::pair<int, int>, PresentedModule> strata; // nonzero strata only
};

/* H(H(C0,d+),dv) with the grading shift {-w+b, w+b-1, w-b+1} applied and
 * same-component edge variables identified, yielding modules over
 * Q[X1..Xm]. Rejects diagrams with negative crossings. */
TriGradedHomology middle_homology(const ClosedBraidDiagram& d);

/* Homology of the rows (d_plus only), before vertical homology, shifts and
 * variable identification: grid position (j,k) -> module over the
 * eliminated edge ring. Zero positions are omitted. */
std::map<std::pair<int, int>, PresentedModule> dplus_homology(const ClosedBraidDiagram& d);

/* H_r = H / X1 H with first grading shifted by -1, over Q[X2..Xm]
 * (the component ring modulo X1). */
TriGradedHomology reduced_homology(const TriGradedHomology& H);

} // namespace homlink
