#pragma once

#include "homlink/ring.hpp"

#include <optional>
#include <vector>

namespace homlink {

/* Free graded module: rank = shifts.size(), generator i sits in degree
 * shifts[i]. Trigraded bookkeeping lives in krcomplex at the grid-position
 * level; this layer only tracks the module grading. */
struct FreeModule {
    RingPtr ring;
    std::vector<int> shifts;

    FreeModule() = default;
    FreeModule(RingPtr r, std::vector<int> s) : ring(std::move(r)), shifts(std::move(s)) {}
    size_t rank() const { return shifts.size(); }
};

bool same_module(const FreeModule& a, const FreeModule& b);

/* Leading term of a module vector under position-over-term order
 * (earlier positions greater). */
struct LeadTerm {
    size_t pos;
    Monomial mono;
    Rational coeff;
};

/* Element of a free module: one polynomial per generator position. */
class ModVector {
public:
    ModVector() = default;
    explicit ModVector(const FreeModule& mod);

    static ModVector unit(const FreeModule& mod, size_t pos);

    const FreeModule& module() const { return mod_; }
    const std::vector<Polynomial>& comps() const { return comps_; }
    const Polynomial& operator[](size_t i) const { return comps_[i]; }
    Polynomial& operator[](size_t i) { return comps_[i]; }
    size_t size() const { return comps_.size(); }

    bool is_zero() const;
    LeadTerm lead() const; // throws on zero

    ModVector operator+(const ModVector& o) const;
    ModVector operator-(const ModVector& o) const;
    ModVector operator*(const Rational& c) const;
    ModVector mul_term(const Monomial& m, const Rational& c) const;
    ModVector mul_poly(const Polynomial& p) const;
    bool operator==(const ModVector& o) const;

    /* Degree of a homogeneous vector: deg(comp_i) + shift_i, constant over
     * nonzero positions. Throws if inhomogeneous; nullopt for zero vector. */
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;

    std::string to_string() const;

private:
    FreeModule mod_;
    std::vector<Polynomial> comps_;
};

/* Homogeneous matrix between free modules, stored column-wise: column s is
 * the image of source generator s in the target. A matrix is homogeneous of
 * degree offset d when deg(entry(r,s)) + tgt.shift[r] == src.shift[s] + d
 * for every nonzero entry. */
class HomMatrix {
public:
    HomMatrix() = default;
    HomMatrix(FreeModule source, FreeModule target);
    HomMatrix(FreeModule source, FreeModule target, std::vector<ModVector> cols);

    static HomMatrix identity(const FreeModule& mod);
    static HomMatrix from_columns(const FreeModule& target, const std::vector<ModVector>& cols,
                                  int degree_offset = 0);

    const FreeModule& source() const { return src_; }
    const FreeModule& target() const { return tgt_; }
    size_t rows() const { return tgt_.rank(); }
    size_t cols() const { return src_.rank(); }

    const ModVector& col(size_t s) const { return cols_[s]; }
    ModVector& col(size_t s) { return cols_[s]; }
    const Polynomial& entry(size_t r, size_t s) const { return cols_[s][r]; }
    void set_entry(size_t r, size_t s, const Polynomial& p) { cols_[s][r] = p; }

    ModVector apply(const ModVector& v) const;
    HomMatrix compose(const HomMatrix& inner) const; // this ∘ inner

    bool is_zero() const;
    /* Verifies entry degrees against a single offset; returns it. Zero
     * matrices report offset 0. */
    int degree_offset() const;
    bool is_homogeneous() const;

    std::string to_string() const;

private:
    FreeModule src_, tgt_;
    std::vector<ModVector> cols_;
};

} // namespace homlink
