#include "homlink/freemodule.hpp"

#include <sstream>
#include <stdexcept>

namespace homlink {

bool same_module(const FreeModule& a, const FreeModule& b)
{
    return same_ring(a.ring, b.ring) && a.shifts == b.shifts;
}

ModVector::ModVector(const FreeModule& mod) : mod_(mod)
{
    comps_.assign(mod.rank(), Polynomial::zero(mod.ring));
}

ModVector ModVector::unit(const FreeModule& mod, size_t pos)
{
    ModVector v(mod);
    v.comps_.at(pos) = Polynomial::constant(mod.ring, rat(1));
    return v;
}

bool ModVector::is_zero() const
{
    for (const auto& p : comps_)
        if (!p.is_zero())
            return false;
    return true;
}

LeadTerm ModVector::lead() const
{
    for (size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].is_zero())
            return {i, comps_[i].lead_monomial(), comps_[i].lead_coeff()};
    throw std::logic_error("lead term of zero module vector");
}

ModVector ModVector::operator+(const ModVector& o) const
{
    ModVector r = *this;
    for (size_t i = 0; i < comps_.size(); ++i)
        r.comps_[i] = r.comps_[i] + o.comps_[i];
    return r;
}

ModVector ModVector::operator-(const ModVector& o) const
{
    ModVector r = *this;
    for (size_t i = 0; i < comps_.size(); ++i)
        r.comps_[i] = r.comps_[i] - o.comps_[i];
    return r;
}

ModVector ModVector::operator*(const Rational& c) const
{
    ModVector r = *this;
    for (auto& p : r.comps_)
        p = p * c;
    return r;
}

ModVector ModVector::mul_term(const Monomial& m, const Rational& c) const
{
    ModVector r = *this;
    for (auto& p : r.comps_)
        p = p.mul_term(m, c);
    return r;
}

ModVector ModVector::mul_poly(const Polynomial& p) const
{
    ModVector r = *this;
    for (auto& q : r.comps_)
        q = q * p;
    return r;
}

bool ModVector::operator==(const ModVector& o) const
{
    return comps_ == o.comps_;
}

std::optional<int> ModVector::homogeneous_degree() const
{
    std::optional<int> d;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero())
            continue;
        int di = comps_[i].homogeneous_degree() + mod_.shifts[i];
        if (d && *d != di)
            throw std::domain_error("inhomogeneous module vector");
        d = di;
    }
    return d;
}

bool ModVector::is_homogeneous() const
{
    std::optional<int> d;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (comps_[i].is_zero())
            continue;
        if (!comps_[i].is_homogeneous())
            return false;
        int di = comps_[i].homogeneous_degree() + mod_.shifts[i];
        if (d && *d != di)
            return false;
        d = di;
    }
    return true;
}

std::string ModVector::to_string() const
{
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i)
            out << ", ";
        out << comps_[i].to_string();
    }
    out << ")";
    return out.str();
}

HomMatrix::HomMatrix(FreeModule source, FreeModule target)
    : src_(std::move(source)), tgt_(std::move(target))
{
    cols_.assign(src_.rank(), ModVector(tgt_));
}

HomMatrix::HomMatrix(FreeModule source, FreeModule target, std::vector<ModVector> cols)
    : src_(std::move(source)), tgt_(std::move(target)), cols_(std::move(cols))
{
    if (cols_.size() != src_.rank())
        throw std::invalid_argument("column count does not match source rank");
    for (const auto& c : cols_)
        if (c.size() != tgt_.rank())
            throw std::invalid_argument("column length does not match target rank");
}

HomMatrix HomMatrix::identity(const FreeModule& mod)
{
    HomMatrix m(mod, mod);
    for (size_t i = 0; i < mod.rank(); ++i)
        m.cols_[i] = ModVector::unit(mod, i);
    return m;
}

HomMatrix HomMatrix::from_columns(const FreeModule& target, const std::vector<ModVector>& cols,
                                  int degree_offset)
{
    std::vector<int> shifts;
    for (const auto& c : cols) {
        auto d = c.homogeneous_degree();
        shifts.push_back(d ? *d - degree_offset : 0);
    }
    FreeModule src(target.ring, shifts);
    return HomMatrix(src, target, cols);
}

ModVector HomMatrix::apply(const ModVector& v) const
{
    ModVector r(tgt_);
    for (size_t s = 0; s < cols_.size(); ++s) {
        if (v[s].is_zero())
            continue;
        r = r + cols_[s].mul_poly(v[s]);
    }
    return r;
}

HomMatrix HomMatrix::compose(const HomMatrix& inner) const
{
    if (!same_module(inner.tgt_, src_))
        throw std::invalid_argument("composition shape mismatch");
    std::vector<ModVector> cols;
    for (size_t s = 0; s < inner.cols(); ++s)
        cols.push_back(apply(inner.col(s)));
    return HomMatrix(inner.src_, tgt_, std::move(cols));
}

bool HomMatrix::is_zero() const
{
    for (const auto& c : cols_)
        if (!c.is_zero())
            return false;
    return true;
}

int HomMatrix::degree_offset() const
{
    std::optional<int> off;
    for (size_t s = 0; s < cols_.size(); ++s) {
        for (size_t r = 0; r < rows(); ++r) {
            const Polynomial& e = entry(r, s);
            if (e.is_zero())
                continue;
            int d = e.homogeneous_degree() + tgt_.shifts[r] - src_.shifts[s];
            if (off && *off != d)
                throw std::domain_error("matrix is not homogeneous of a single degree offset");
            off = d;
        }
    }
    return off.value_or(0);
}

bool HomMatrix::is_homogeneous() const
{
    std::optional<int> off;
    for (size_t s = 0; s < cols_.size(); ++s) {
        for (size_t r = 0; r < rows(); ++r) {
            const Polynomial& e = entry(r, s);
            if (e.is_zero())
                continue;
            if (!e.is_homogeneous())
                return false;
            int d = e.homogeneous_degree() + tgt_.shifts[r] - src_.shifts[s];
            if (off && *off != d)
                return false;
            off = d;
        }
    }
    return true;
}

std::string HomMatrix::to_string() const
{
    std::ostringstream out;
    for (size_t r = 0; r < rows(); ++r) {
        out << "[ ";
        for (size_t s = 0; s < cols(); ++s) {
            if (s)
                out << " | ";
            out << entry(r, s).to_string();
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace homlink
