#include "homlink/resolution.hpp"

#include <stdexcept>

namespace homlink {

long binom_norm(long n, long k)
{
    if (n == -1 && k == 0)
        return 1;
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    if (k > n - k)
        k = n - k;
    for (long i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}

long BettiTablePQ::at(int p, int q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

int BettiTablePQ::max_p() const
{
    int m = -1;
    for (const auto& [pq, v] : entries)
        m = std::max(m, pq.first);
    return m;
}

FreeResolution minimal_free_resolution(const PresentedModule& M)
{
    PresentedModule P = M.pruned();
    FreeResolution res;
    if (P.ngens() == 0 || P.relations().empty()) {
        res.modules.push_back(P.cover());
        return res;
    }

    size_t nvars = P.ring()->nvars();
    std::vector<HomMatrix> chain = {HomMatrix::from_columns(P.cover(), P.relations())};
    while (true) {
        if (chain.size() > nvars)
            throw std::logic_error("minimal resolution longer than the variable count");
        std::vector<ModVector> K = kernel_gens(chain.back());
        if (K.empty())
            break;
        chain.push_back(HomMatrix::from_columns(chain.back().source(), K));
        // every differential entry lands in the maximal homogeneous ideal
        minimize_chain(chain);
        while (chain.size() > 1 && chain.back().cols() == 0)
            chain.pop_back();
        if (chain.back().cols() == 0)
            break;
    }

    if (chain.size() == 1 && chain.front().cols() == 0) {
        // cancellation consumed every relation: the module is free
        res.modules.push_back(chain.front().target());
        return res;
    }
    res.modules.push_back(chain.front().target());
    for (const auto& m : chain) {
        res.diffs.push_back(m);
        res.modules.push_back(m.source());
    }
    return res;
}

BettiTablePQ betti_from_resolution(const FreeResolution& R)
{
    BettiTablePQ b;
    for (size_t p = 0; p < R.modules.size(); ++p)
        for (int q : R.modules[p].shifts)
            b.entries[{int(p), q}] += 1;
    return b;
}

BettiTablePQ betti_table(const PresentedModule& M)
{
    return betti_from_resolution(minimal_free_resolution(M));
}

PdResult pd_from_betti(const BettiTablePQ& b, bool zero_module)
{
    PdResult r;
    if (zero_module || b.entries.empty()) {
        r.zero_module = true;
        return r;
    }
    r.value = b.max_p();
    return r;
}

PdResult projective_dimension(const PresentedModule& M)
{
    if (M.is_zero())
        return PdResult{true, 0};
    BettiTablePQ b = betti_table(M);
    return pd_from_betti(b, false);
}

int depth(const PresentedModule& M)
{
    PdResult pd = projective_dimension(M);
    if (pd.zero_module)
        throw std::invalid_argument("depth of the zero module");
    return int(M.ring()->nvars()) - pd.value;
}

long graded_dim_from_betti(const BettiTablePQ& b, int nvars, int degree)
{
    long total = 0;
    for (const auto& [pq, count] : b.entries) {
        auto [p, q] = pq;
        if ((degree - q) % 2 != 0)
            continue;
        long t = (degree - q) / 2;
        long coeff = binom_norm(t + nvars - 1, t);
        total += (p % 2 == 0 ? 1 : -1) * count * coeff;
    }
    return total;
}

} // namespace homlink
