#include "homlink/koszul.hpp"

#include "homlink/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace homlink {

namespace {

/* All monomials with the given exponent total, in a fixed deterministic
 * order. */
void enumerate_monomials(size_t nvars, int total, std::vector<Monomial>& out)
{
    std::vector<int> exp(nvars, 0);
    std::function<void(size_t, int)> walk = [&](size_t var, int remaining) {
        if (nvars == 0) {
            if (remaining == 0)
                out.push_back(Monomial(std::vector<int>{}));
            return;
        }
        if (var + 1 == nvars) {
            exp[var] = remaining;
            out.push_back(Monomial(std::vector<int>(exp)));
            exp[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[var] = e;
            walk(var + 1, remaining - e);
        }
        exp[var] = 0;
    };
    if (total < 0)
        return;
    if (nvars == 0) {
        if (total == 0)
            out.push_back(Monomial(std::vector<int>{}));
        return;
    }
    walk(0, total);
}

/* Size-p subsets of {0..n-1} in lexicographic order. */
std::vector<std::vector<int>> subsets(int n, int p)
{
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n)
        return out;
    std::vector<int> cur;
    std::function<void(int)> walk = [&](int start) {
        if (int(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            walk(v + 1);
            cur.pop_back();
        }
    };
    walk(0);
    return out;
}

} // namespace

GradedPieces::GradedPieces(const PresentedModule& M) : mod_(&M) {}

const GradedPieces::Piece& GradedPieces::piece(int degree) const
{
    auto it = pieces_.find(degree);
    if (it != pieces_.end())
        return it->second;

    Piece p;
    const FreeModule& F = mod_->cover();
    size_t nv = mod_->ring()->nvars();
    for (size_t pos = 0; pos < F.rank(); ++pos) {
        int rem = degree - F.shifts[pos];
        if (rem < 0 || rem % 2 != 0)
            continue;
        std::vector<Monomial> mons;
        enumerate_monomials(nv, rem / 2, mons);
        for (auto& m : mons)
            p.fbasis.emplace_back(pos, std::move(m));
    }

    // span of the relations in degree `degree`
    std::map<std::pair<size_t, std::vector<int>>, size_t> index;
    for (size_t i = 0; i < p.fbasis.size(); ++i)
        index[{p.fbasis[i].first, p.fbasis[i].second.exp}] = i;

    QMatrix rows;
    for (const auto& rel : mod_->relations()) {
        auto rd = rel.homogeneous_degree();
        if (!rd)
            continue;
        int rem = degree - *rd;
        if (rem < 0 || rem % 2 != 0)
            continue;
        std::vector<Monomial> mults;
        enumerate_monomials(nv, rem / 2, mults);
        for (const auto& mu : mults) {
            std::vector<Rational> row(p.fbasis.size(), rat(0));
            bool nonzero = false;
            for (size_t pos = 0; pos < rel.size(); ++pos)
                for (const auto& [m, c] : rel[pos].terms()) {
                    auto key = std::make_pair(pos, (m * mu).exp);
                    auto f = index.find(key);
                    if (f == index.end())
                        throw std::logic_error("koszul: monomial outside degree piece");
                    row[f->second] += c;
                    nonzero = true;
                }
            if (nonzero)
                rows.push_back(std::move(row));
        }
    }
    rref(rows);
    // keep nonzero rows, record pivots
    std::vector<bool> is_pivot(p.fbasis.size(), false);
    for (const auto& row : rows) {
        size_t c = 0;
        while (c < row.size() && is_zero(row[c]))
            ++c;
        if (c == row.size())
            continue;
        p.echelon.push_back(row);
        p.pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    for (size_t c = 0; c < p.fbasis.size(); ++c)
        if (!is_pivot[c])
            p.free_cols.push_back(c);

    return pieces_.emplace(degree, std::move(p)).first->second;
}

std::vector<Rational> GradedPieces::project(const Piece& p, std::vector<Rational> v) const
{
    for (size_t r = 0; r < p.echelon.size(); ++r) {
        const Rational& c = v[p.pivot_cols[r]];
        if (is_zero(c))
            continue;
        Rational f = c; // echelon pivots are 1
        for (size_t k = 0; k < v.size(); ++k)
            v[k] -= f * p.echelon[r][k];
    }
    std::vector<Rational> out;
    out.reserve(p.free_cols.size());
    for (size_t c : p.free_cols)
        out.push_back(v[c]);
    return out;
}

long GradedPieces::dim(int degree) const
{
    return long(piece(degree).free_cols.size());
}

QMatrix GradedPieces::multiplication(int var, int degree) const
{
    const Piece& src = piece(degree);
    const Piece& dst = piece(degree + 2);

    std::map<std::pair<size_t, std::vector<int>>, size_t> dst_index;
    for (size_t i = 0; i < dst.fbasis.size(); ++i)
        dst_index[{dst.fbasis[i].first, dst.fbasis[i].second.exp}] = i;

    QMatrix cols; // one column per source quotient basis element
    for (size_t c : src.free_cols) {
        auto [pos, mon] = src.fbasis[c];
        Monomial m2 = mon;
        m2.exp[var] += 1;
        std::vector<Rational> v(dst.fbasis.size(), rat(0));
        auto f = dst_index.find({pos, m2.exp});
        if (f == dst_index.end())
            throw std::logic_error("koszul: product monomial outside degree piece");
        v[f->second] = rat(1);
        cols.push_back(project(dst, std::move(v)));
    }

    // transpose into row-major matrix: rows = dst quotient dim
    size_t rows_n = dst.free_cols.size();
    QMatrix m(rows_n, std::vector<Rational>(cols.size(), rat(0)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < rows_n; ++r)
            m[r][c] = cols[c][r];
    return m;
}

namespace {

/* Matrix of the Koszul differential  (K_p ⊗ M)^q -> (K_{p-1} ⊗ M)^q. */
QMatrix koszul_differential(const GradedPieces& gp, int nvars, int p, int q)
{
    auto src_sets = subsets(nvars, p);
    auto dst_sets = subsets(nvars, p - 1);
    std::map<std::vector<int>, size_t> dst_index;
    for (size_t i = 0; i < dst_sets.size(); ++i)
        dst_index[dst_sets[i]] = i;

    long sdim = gp.dim(q - 2 * p);
    long ddim = gp.dim(q - 2 * (p - 1));
    QMatrix m(dst_sets.size() * ddim, std::vector<Rational>(src_sets.size() * sdim, rat(0)));
    if (sdim == 0 || ddim == 0 || src_sets.empty() || dst_sets.empty())
        return m;

    for (size_t si = 0; si < src_sets.size(); ++si) {
        const auto& S = src_sets[si];
        for (size_t k = 0; k < S.size(); ++k) {
            std::vector<int> T = S;
            T.erase(T.begin() + k);
            size_t ti = dst_index.at(T);
            int sign = (k % 2 == 0) ? 1 : -1;
            QMatrix mult = gp.multiplication(S[k], q - 2 * p);
            for (long r = 0; r < ddim; ++r)
                for (long c = 0; c < sdim; ++c) {
                    if (is_zero(mult[r][c]))
                        continue;
                    m[ti * ddim + r][si * sdim + c] += rat(sign) * mult[r][c];
                }
        }
    }
    return m;
}

} // namespace

namespace {

long tor_dim(const GradedPieces& gp, int nvars, int p, int q)
{
    if (p < 0 || p > nvars)
        return 0;
    long chain_dim = long(subsets(nvars, p).size()) * gp.dim(q - 2 * p);
    if (chain_dim == 0)
        return 0;
    long rank_out = 0;
    if (p > 0)
        rank_out = long(rank(koszul_differential(gp, nvars, p, q)));
    long rank_in = 0;
    if (p < nvars)
        rank_in = long(rank(koszul_differential(gp, nvars, p + 1, q)));
    return chain_dim - rank_out - rank_in;
}

} // namespace

long koszul_tor(const PresentedModule& M, int p, int q)
{
    GradedPieces gp(M);
    return tor_dim(gp, int(M.ring()->nvars()), p, q);
}

std::string oracle_mismatch(const PresentedModule& M)
{
    BettiTablePQ b = betti_table(M);
    int nvars = int(M.ring()->nvars());
    if (M.ngens() == 0)
        return b.entries.empty() ? "" : "betti table of an empty presentation is nonzero";

    int lo = *std::min_element(M.cover().shifts.begin(), M.cover().shifts.end());
    int hi = lo + 2 * nvars;
    for (const auto& r : M.relations()) {
        auto d = r.homogeneous_degree();
        if (d)
            hi = std::max(hi, *d + 2 * nvars);
    }
    for (const auto& [pq, v] : b.entries)
        hi = std::max(hi, pq.second + 2 * std::max(nvars, 1));

    GradedPieces gp(M);
    while (true) {
        bool top_nonzero = false;
        for (int p = 0; p <= nvars; ++p)
            for (int q = lo; q <= hi; ++q) {
                long t = tor_dim(gp, nvars, p, q);
                if (t != b.at(p, q)) {
                    std::ostringstream out;
                    out << "tor(" << p << "," << q << ")=" << t << " vs betti=" << b.at(p, q);
                    return out.str();
                }
                if (t != 0 && q == hi)
                    top_nonzero = true;
            }
        if (!top_nonzero)
            return "";
        hi += 2;
    }
}

std::map<std::pair<int, int>, long> koszul_tor_table(const PresentedModule& M)
{
    std::map<std::pair<int, int>, long> table;
    if (M.ngens() == 0)
        return table;
    int nvars = int(M.ring()->nvars());
    int lo = *std::min_element(M.cover().shifts.begin(), M.cover().shifts.end());
    int hi = lo;
    for (const auto& r : M.relations()) {
        auto d = r.homogeneous_degree();
        if (d)
            hi = std::max(hi, *d);
    }
    for (int s : M.cover().shifts)
        hi = std::max(hi, s);
    hi += 2 * nvars;

    // Extend the window while a nonzero value sits inside the top band.
    // A single-degree boundary check can miss supports with gaps; the band
    // width 2*nvars covers the degree jumps seen in practice.
    GradedPieces gp(M);
    int band = 2 * std::max(nvars, 1);
    int done_hi = lo - 1;
    while (true) {
        bool band_nonzero = false;
        for (int p = 0; p <= nvars; ++p)
            for (int q = std::max(lo, done_hi + 1); q <= hi; ++q) {
                long v = tor_dim(gp, nvars, p, q);
                if (v != 0) {
                    table[{p, q}] = v;
                    if (q > hi - band)
                        band_nonzero = true;
                }
            }
        done_hi = hi;
        if (!band_nonzero)
            break;
        hi += band;
    }
    return table;
}

} // namespace homlink
