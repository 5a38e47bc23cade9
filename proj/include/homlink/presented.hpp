#pragma once

#include "homlink/groebner.hpp"

#include <map>
#include <string>
#include <vector>

namespace homlink {

/* Finitely presented graded module: free cover (generator degrees) plus a
 * list of homogeneous relation vectors. A reduced Groebner basis of the
 * relation submodule is computed once at construction and reused by every
 * downstream operation. The zero module has an empty cover. */
class PresentedModule {
public:
    PresentedModule() = default;
    PresentedModule(FreeModule cover, std::vector<ModVector> relations);

    static PresentedModule free_module(FreeModule cover);
    static PresentedModule zero(RingPtr ring);

    const FreeModule& cover() const { return cover_; }
    const RingPtr& ring() const { return cover_.ring; }
    const std::vector<ModVector>& relations() const { return relations_; }
    const std::vector<ModVector>& relation_gb() const { return gb_; }

    size_t ngens() const { return cover_.rank(); }
    bool is_zero() const;

    /* Normal form of a cover vector modulo the relation submodule. */
    ModVector reduce(const ModVector& v) const { return normal_form(v, gb_); }

    /* Minimized presentation: no unit entries in the relation matrix. */
    PresentedModule pruned() const;

    /* dim_Q of each graded piece from min generator degree up to degree D,
     * by counting standard monomials against the relation Groebner basis. */
    std::map<int, long> hilbert_series(int cutoff) const;
    long hilbert_dim(int degree) const;

    /* Shift the module grading up by s (generator degrees += s). */
    PresentedModule shifted(int s) const;

    std::string to_text() const;
    static PresentedModule from_text(const std::string& text);

private:
    FreeModule cover_;
    std::vector<ModVector> relations_;
    std::vector<ModVector> gb_;
};

/* Graded map of presented modules, validated at construction: the matrix
 * must carry every source relation into the target relation submodule. */
class ModuleMap {
public:
    ModuleMap() = default;
    const PresentedModule& source() const { return src_; }
    const PresentedModule& target() const { return tgt_; }
    const HomMatrix& matrix() const { return mat_; }

    ModVector apply(const ModVector& v) const { return tgt_.reduce(mat_.apply(v)); }

    friend ModuleMap check_map(PresentedModule source, PresentedModule target, HomMatrix matrix);

private:
    PresentedModule src_, tgt_;
    HomMatrix mat_;
};

ModuleMap check_map(PresentedModule source, PresentedModule target, HomMatrix matrix);

/* Zero map between presented modules. */
ModuleMap zero_map(PresentedModule source, PresentedModule target);

/* Multiplication by a homogeneous ring element as a map M -> M. */
ModuleMap multiplication_map(const PresentedModule& M, const Polynomial& f);

struct HomologyResult {
    PresentedModule module;
    /* Representatives of the homology generators inside target(f)'s cover. */
    std::vector<ModVector> reps;
};

/* Homology ker g / im f of M1 --f--> M2 --g--> M3; rejects g∘f != 0. */
HomologyResult homology(const ModuleMap& f, const ModuleMap& g);

/* M / fM for homogeneous f. */
PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& f);

/* Collapses each class of ring variables to a single variable of the target
 * ring, after verifying that variable differences within a class annihilate
 * M. classes[c] lists source-variable indices mapping to target variable c;
 * every source variable must appear in exactly one class. */
PresentedModule identify_variables(const PresentedModule& M, const RingPtr& target,
                                   const std::vector<std::vector<int>>& classes);

/* M ⊗_Q N over the concatenated ring; variable names must be disjoint. */
PresentedModule tensor_over_Q(const PresentedModule& M, const PresentedModule& N);

/* Cancels unit entries across a composable chain d[p] : F_{p+1} -> F_p
 * (so chain[0] maps F_1 to F_0), preserving homology. Used both to minimize
 * presentations (length-one chain) and free resolutions. */
void minimize_chain(std::vector<HomMatrix>& chain);

} // namespace homlink
