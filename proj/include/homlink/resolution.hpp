#pragma once

#include "homlink/presented.hpp"

#include <map>
#include <utility>

namespace homlink {

/* Normalized binomial numbers: n!/(k!(n-k)!) for 0 <= k <= n, 1 for
 * (n,k) = (-1,0), 0 otherwise. */
long binom_norm(long n, long k);

/* Graded free resolution F_l -> ... -> F_1 -> F_0 with differentials
 * diffs[p] : modules[p+1] -> modules[p]; modules[0] is the free cover. */
struct FreeResolution {
    std::vector<FreeModule> modules;
    std::vector<HomMatrix> diffs;
    size_t length() const { return modules.size() - 1; }
};

struct BettiTablePQ {
    std::map<std::pair<int, int>, long> entries; // (p, q) -> count, values > 0
    long at(int p, int q) const;
    int max_p() const; // -1 on empty table
    bool operator==(const BettiTablePQ& o) const { return entries == o.entries; }
};

/* Minimal graded free resolution by iterated kernel generators of reduced
 * Groebner bases with unit-entry cancellation after every step; every
 * differential entry ends up in the maximal homogeneous ideal. */
FreeResolution minimal_free_resolution(const PresentedModule& M);

BettiTablePQ betti_from_resolution(const FreeResolution& R);
BettiTablePQ betti_table(const PresentedModule& M);

/* Projective dimension; the zero module is reported distinctly. */
struct PdResult {
    bool zero_module = false;
    int value = 0;
};
PdResult projective_dimension(const PresentedModule& M);
PdResult pd_from_betti(const BettiTablePQ& b, bool zero_module);

/* depth = nvars - pd (Auslander-Buchsbaum); rejects the zero module. */
int depth(const PresentedModule& M);

/* Alternating-sum reconstruction: the graded dimension at `degree`
 * reconstructed from the Betti table over a ring with `nvars` variables. */
long graded_dim_from_betti(const BettiTablePQ& b, int nvars, int degree);

} // namespace homlink
