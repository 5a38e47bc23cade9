#pragma once

#include "homlink/freemodule.hpp"

#include <optional>
#include <vector>

namespace homlink {

/* Module Groebner machinery for submodules of free graded modules.
 * Monomial order: grevlex on the ring; module order: position-over-term
 * with earlier positions greater. All inputs are homogeneous. */

struct DivisionResult {
    std::vector<Polynomial> quotients; // one per divisor
    ModVector remainder;
};

/* Full division with remainder: v = sum q_i G_i + r, no term of r divisible
 * by any lead term of G. Deterministic: first divisor in list order wins. */
DivisionResult divide(const ModVector& v, const std::vector<ModVector>& G,
                      bool want_quotients = true);

/* Remainder-only division. */
ModVector normal_form(const ModVector& v, const std::vector<ModVector>& G);

/* Buchberger with chain criterion; returns the reduced Groebner basis
 * (monic, auto-reduced, canonically sorted). Rejects inhomogeneous input. */
std::vector<ModVector> buchberger(const std::vector<ModVector>& gens);

/* Schreyer syzygies of a Groebner basis G: generators of
 * { s : sum s_i G_i = 0 }, living in a free module whose position i carries
 * the degree of G_i. Rejects input that is not a Groebner basis (detected by
 * an S-pair with nonzero normal form). */
std::vector<ModVector> syzygy_basis(const std::vector<ModVector>& G);

/* Groebner data for the columns of a homogeneous matrix, built once and
 * reused for kernel generators, membership and lifting. Internally works in
 * target ⊕ source with target positions dominating. */
class ColumnAnalysis {
public:
    explicit ColumnAnalysis(const HomMatrix& A);

    /* Generators of ker A as a submodule of the source. */
    const std::vector<ModVector>& kernel() const { return kernel_; }

    /* Solves A u = v; nullopt when v is not in the column span. */
    std::optional<ModVector> lift(const ModVector& v) const;

    /* Membership of v in the column span of A. */
    bool in_image(const ModVector& v) const;

private:
    HomMatrix A_;
    FreeModule combined_;
    std::vector<ModVector> gb_;
    std::vector<ModVector> kernel_;
};

std::vector<ModVector> kernel_gens(const HomMatrix& A);
std::optional<ModVector> lift_through(const HomMatrix& A, const ModVector& v);

/* Canonical sort used for deterministic Groebner output. */
void sort_vectors(std::vector<ModVector>& vs);

} // namespace homlink
