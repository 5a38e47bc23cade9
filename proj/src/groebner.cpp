#include "homlink/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace homlink {

namespace {

/* POT comparison of lead terms: a before b when a's lead is greater. */
bool lead_greater(const LeadTerm& a, const LeadTerm& b)
{
    if (a.pos != b.pos)
        return a.pos < b.pos;
    return grevlex_less(b.mono, a.mono);
}

bool vector_less(const ModVector& a, const ModVector& b)
{
    bool az = a.is_zero(), bz = b.is_zero();
    if (az || bz)
        return !az && bz; // zero vectors sort last
    LeadTerm la = a.lead(), lb = b.lead();
    if (!(la.pos == lb.pos && la.mono == lb.mono))
        return lead_greater(la, lb);
    // tie-break on the full string form for a total deterministic order
    return a.to_string() < b.to_string();
}

ModVector make_monic(const ModVector& v)
{
    if (v.is_zero())
        return v;
    return v * Rational(1 / v.lead().coeff);
}

} // namespace

void sort_vectors(std::vector<ModVector>& vs)
{
    std::sort(vs.begin(), vs.end(), vector_less);
}

DivisionResult divide(const ModVector& v, const std::vector<ModVector>& G, bool want_quotients)
{
    DivisionResult res;
    if (want_quotients)
        res.quotients.assign(G.size(), Polynomial::zero(v.module().ring));
    res.remainder = ModVector(v.module());
    ModVector work = v;

    while (!work.is_zero()) {
        LeadTerm lt = work.lead();
        bool reduced = false;
        for (size_t g = 0; g < G.size(); ++g) {
            if (G[g].is_zero())
                continue;
            LeadTerm gl = G[g].lead();
            if (gl.pos != lt.pos || !gl.mono.divides(lt.mono))
                continue;
            Monomial q = lt.mono.divide_by(gl.mono);
            Rational c = lt.coeff / gl.coeff;
            work = work - G[g].mul_term(q, c);
            if (want_quotients)
                res.quotients[g].add_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible lead term to the remainder
            res.remainder[lt.pos].add_term(lt.mono, lt.coeff);
            work[lt.pos].add_term(lt.mono, -lt.coeff);
        }
    }
    return res;
}

ModVector normal_form(const ModVector& v, const std::vector<ModVector>& G)
{
    return divide(v, G, false).remainder;
}

namespace {

struct Pair {
    int deg; // degree of the S-pair lcm, for processing order
    size_t i, j;
    bool operator<(const Pair& o) const
    {
        if (deg != o.deg)
            return deg < o.deg;
        if (i != o.i)
            return i < o.i;
        return j < o.j;
    }
};

Pair make_pair(const std::vector<ModVector>& G, size_t i, size_t j)
{
    LeadTerm a = G[i].lead(), b = G[j].lead();
    Monomial l = Monomial::lcm(a.mono, b.mono);
    return Pair{l.degree() + G[i].module().shifts[a.pos], i, j};
}

/* S-vector of two generators with lead terms in the same position. */
ModVector s_vector(const ModVector& f, const ModVector& g, Monomial& mf, Monomial& mg)
{
    LeadTerm lf = f.lead(), lg = g.lead();
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    mf = l.divide_by(lf.mono);
    mg = l.divide_by(lg.mono);
    return f.mul_term(mf, Rational(1 / lf.coeff)) - g.mul_term(mg, Rational(1 / lg.coeff));
}

} // namespace

std::vector<ModVector> buchberger(const std::vector<ModVector>& gens)
{
    std::vector<ModVector> G;
    for (const auto& v : gens) {
        if (v.is_zero())
            continue;
        if (!v.is_homogeneous())
            throw std::invalid_argument("buchberger: inhomogeneous generator " + v.to_string());
        G.push_back(make_monic(v));
    }
    bool ring_case = !G.empty() && G.front().module().rank() == 1;

    std::set<Pair> pairs;
    auto add_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (G[i].lead().pos != G[j].lead().pos)
                continue;
            // product criterion is only valid for ideals (rank one)
            if (ring_case && G[i].lead().mono.coprime(G[j].lead().mono))
                continue;
            pairs.insert(make_pair(G, i, j));
        }
    };
    for (size_t j = 0; j < G.size(); ++j)
        add_pairs(j);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        Monomial mi, mj;
        ModVector s = s_vector(G[p.i], G[p.j], mi, mj);
        ModVector r = normal_form(s, G);
        if (!r.is_zero()) {
            G.push_back(make_monic(r));
            add_pairs(G.size() - 1);
        }
    }

    // minimalize: drop generators whose lead is divisible by another lead
    std::vector<ModVector> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        LeadTerm li = G[i].lead();
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j)
                continue;
            LeadTerm lj = G[j].lead();
            if (lj.pos == li.pos && lj.mono.divides(li.mono) &&
                !(j > i && lj.pos == li.pos && lj.mono == li.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            minimal.push_back(G[i]);
    }

    // tail-reduce each element by the others
    std::vector<ModVector> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModVector> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        ModVector r = normal_form(minimal[i], others);
        if (!r.is_zero())
            reduced.push_back(make_monic(r));
    }
    sort_vectors(reduced);
    return reduced;
}

std::vector<ModVector> syzygy_basis(const std::vector<ModVector>& G)
{
    if (G.empty())
        return {};
    const FreeModule& F = G.front().module();

    // Free module indexed by G; position i carries the degree of G_i.
    std::vector<int> shifts;
    for (const auto& g : G) {
        if (g.is_zero())
            throw std::invalid_argument("syzygy_basis: zero generator");
        auto d = g.homogeneous_degree();
        if (!d)
            throw std::invalid_argument("syzygy_basis: inhomogeneous generator");
        shifts.push_back(*d);
    }
    FreeModule S(F.ring, shifts);

    std::vector<ModVector> syz;
    for (size_t j = 0; j < G.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            LeadTerm li = G[i].lead(), lj = G[j].lead();
            if (li.pos != lj.pos)
                continue;
            Monomial mi, mj;
            ModVector s = s_vector(G[i], G[j], mi, mj);
            DivisionResult d = divide(s, G);
            if (!d.remainder.is_zero())
                throw std::invalid_argument("syzygy_basis: input is not a Groebner basis");
            ModVector row(S);
            row[i] = row[i] + Polynomial::term(F.ring, mi, Rational(1 / li.coeff));
            row[j] = row[j] - Polynomial::term(F.ring, mj, Rational(1 / lj.coeff));
            for (size_t k = 0; k < G.size(); ++k)
                row[k] = row[k] - d.quotients[k];
            if (!row.is_zero())
                syz.push_back(row);
        }
    }
    sort_vectors(syz);
    return syz;
}

ColumnAnalysis::ColumnAnalysis(const HomMatrix& A) : A_(A)
{
    if (!A.is_homogeneous())
        throw std::invalid_argument("ColumnAnalysis: inhomogeneous matrix");
    int off = A.degree_offset();

    // Combined module target ⊕ source; source copies shifted by the degree
    // offset so the augmented columns stay homogeneous.
    std::vector<int> shifts = A.target().shifts;
    for (int s : A.source().shifts)
        shifts.push_back(s + off);
    combined_ = FreeModule(A.target().ring, shifts);

    size_t tr = A.target().rank();
    std::vector<ModVector> gens;
    for (size_t s = 0; s < A.cols(); ++s) {
        ModVector v(combined_);
        for (size_t r = 0; r < tr; ++r)
            v[r] = A.entry(r, s);
        v[tr + s] = Polynomial::constant(A.target().ring, rat(1));
        gens.push_back(v);
    }
    gb_ = buchberger(gens);

    // GB members with vanishing target part project to kernel generators.
    for (const auto& g : gb_) {
        bool tgt_zero = true;
        for (size_t r = 0; r < tr; ++r)
            if (!g[r].is_zero()) {
                tgt_zero = false;
                break;
            }
        if (!tgt_zero)
            continue;
        ModVector k(A.source());
        for (size_t s = 0; s < A.cols(); ++s)
            k[s] = g[tr + s];
        if (!k.is_zero())
            kernel_.push_back(k);
    }
    sort_vectors(kernel_);
}

std::optional<ModVector> ColumnAnalysis::lift(const ModVector& v) const
{
    size_t tr = A_.target().rank();
    ModVector ext(combined_);
    for (size_t r = 0; r < tr; ++r)
        ext[r] = v[r];
    ModVector rem = normal_form(ext, gb_);
    for (size_t r = 0; r < tr; ++r)
        if (!rem[r].is_zero())
            return std::nullopt;
    ModVector u(A_.source());
    for (size_t s = 0; s < A_.cols(); ++s)
        u[s] = -rem[tr + s];
    return u;
}

bool ColumnAnalysis::in_image(const ModVector& v) const
{
    return lift(v).has_value();
}

std::vector<ModVector> kernel_gens(const HomMatrix& A)
{
    return ColumnAnalysis(A).kernel();
}

std::optional<ModVector> lift_through(const HomMatrix& A, const ModVector& v)
{
    return ColumnAnalysis(A).lift(v);
}

} // namespace homlink
