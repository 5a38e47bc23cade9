#include "homlink/linkbetti.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace homlink {

long BettiTable4::at(int p, int q, int j, int k) const
{
    auto it = entries.find({p, q, j, k});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable4::max_p() const
{
    int m = -1;
    for (const auto& [key, v] : entries)
        m = std::max(m, key[0]);
    return m;
}

BettiTable4 betti_from_homology(const TriGradedHomology& H, int jobs)
{
    BettiTable4 out;
    out.components = H.components;
    out.reduced = H.reduced;

    std::vector<std::pair<std::pair<int, int>, const PresentedModule*>> work;
    for (const auto& [jk, M] : H.strata)
        work.emplace_back(jk, &M);
    std::vector<BettiTablePQ> tables(work.size());

    if (jobs <= 1 || work.size() <= 1) {
        for (size_t i = 0; i < work.size(); ++i)
            tables[i] = betti_table(*work[i].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= work.size())
                    return;
                tables[i] = betti_table(*work[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min<int>(jobs, int(work.size())); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (size_t i = 0; i < work.size(); ++i) {
        auto [j, k] = work[i].first;
        if ((k - j) % 2 != 0)
            throw std::logic_error("stratum with odd k - j: pipeline invariant violated");
        for (const auto& [pq, count] : tables[i].entries) {
            auto [p, q] = pq;
            if (!H.reduced && (q + j) % 2 == 0)
                throw std::logic_error("stratum Betti degree with even q + j: "
                                       "pipeline invariant violated");
            out.entries[{p, q, j, k}] += count;
        }
    }
    return out;
}

BettiTable4 betti_numbers(const ClosedBraidDiagram& d, bool reduced, int jobs)
{
    TriGradedHomology H = middle_homology(d);
    if (reduced)
        H = reduced_homology(H);
    return betti_from_homology(H, jobs);
}

namespace {

const std::vector<std::string> XYAB = {"x", "y", "a", "b"};

} // namespace

PoincarePolynomial poincare(const BettiTable4& T)
{
    PoincarePolynomial P;
    P.numerator = LaurentPoly(XYAB);
    P.denominator_power = T.reduced ? T.components - 1 : T.components;
    for (const auto& [key, count] : T.entries) {
        auto [p, q, j, k] = key;
        if ((k - j) % 2 != 0)
            throw std::invalid_argument("odd k - j in Betti table");
        P.numerator.add_term({p, q, j, (k - j) / 2}, rat(count));
    }
    return P;
}

PoincarePolynomial poincare_product_with_ab1(const PoincarePolynomial& P1,
                                             const PoincarePolynomial& P2)
{
    PoincarePolynomial P;
    P.numerator = LaurentPoly::term(XYAB, {0, 0, 1, -1}, rat(1)) * P1.numerator * P2.numerator;
    P.denominator_power = P1.denominator_power + P2.denominator_power;
    return P;
}

bool poincare_equal(const PoincarePolynomial& A, const PoincarePolynomial& B)
{
    return A.denominator_power == B.denominator_power && A.numerator == B.numerator;
}

std::string poincare_text(const PoincarePolynomial& P)
{
    std::ostringstream out;
    out << "(" << P.numerator.to_string() << ") / (1-y^2)^" << P.denominator_power;
    return out.str();
}

PdResult pd_of_table(const BettiTable4& T)
{
    PdResult r;
    if (T.zero()) {
        r.zero_module = true;
        return r;
    }
    r.value = T.max_p();
    return r;
}

CheckReport euler_check(const ClosedBraidDiagram& d, int cutoff)
{
    CheckReport rep;
    TriGradedHomology H = middle_homology(d);
    TriGradedHomology Hr = reduced_homology(H);
    BettiTable4 T = betti_from_homology(H);
    BettiTable4 Tr = betti_from_homology(Hr);
    int m = H.components;

    // per-stratum Euler identity: the alternating binomial sum over the
    // stratum's (p,q) entries recovers its Hilbert function
    auto strata_check = [&](const TriGradedHomology& hom, const BettiTable4& tab, int nvars,
                            const char* tag) {
        for (const auto& [jk, M] : hom.strata) {
            BettiTablePQ pq;
            for (const auto& [key, v] : tab.entries)
                if (key[2] == jk.first && key[3] == jk.second)
                    pq.entries[{key[0], key[1]}] = v;
            auto series = M.hilbert_series(cutoff);
            int lo = series.empty() ? 0 : series.begin()->first;
            for (int i = lo; i <= cutoff; ++i) {
                long lhs = 0;
                auto it = series.find(i);
                if (it != series.end())
                    lhs = it->second;
                long rhs = graded_dim_from_betti(pq, nvars, i);
                if (lhs != rhs) {
                    rep.pass = false;
                    std::ostringstream out;
                    out << tag << " stratum (" << jk.first << "," << jk.second
                        << ") degree " << i << ": dim " << lhs << " vs Betti sum " << rhs;
                    rep.detail = out.str();
                    return;
                }
            }
        }
    };
    strata_check(H, T, m, "unreduced");
    if (!rep.pass)
        return rep;
    strata_check(Hr, Tr, m - 1, "reduced");
    if (!rep.pass)
        return rep;

    // bridge identity, exact on numerators:
    // (y - y^-1) * N_B = -N_r * (1 - y^2) at x = -1, b = -1
    auto specialize = [&](const PoincarePolynomial& P) {
        return P.numerator.substitute({{"x", rat(-1)}, {"b", rat(-1)}});
    };
    LaurentPoly NB = specialize(poincare(T));
    LaurentPoly Nr = specialize(poincare(Tr));
    const std::vector<std::string> YA = {"y", "a"};
    LaurentPoly ym = LaurentPoly::parse(YA, "y - y^-1");
    LaurentPoly one_y2 = LaurentPoly::parse(YA, "1 - y^2");
    if (ym * NB != (-Nr) * one_y2) {
        rep.pass = false;
        rep.detail = "bridge identity failed: (y - y^-1) * " + NB.to_string() +
                     " != -(" + Nr.to_string() + ") * (1 - y^2)";
        return rep;
    }

    // and as a truncated series in y, coefficient by coefficient
    {
        auto series_expand = [&](const LaurentPoly& N, int e, int upto) {
            // N / (1-y^2)^e as a y-series, exact for exponents <= upto
            LaurentPoly tail(YA);
            int ymin = N.is_zero() ? 0 : N.min_exponent("y");
            for (int t = 0; ymin + 2 * t <= upto; ++t)
                tail.add_term({2 * t, 0}, rat(binom_norm(t + e - 1, t)));
            LaurentPoly prod = N * tail;
            LaurentPoly out(YA);
            for (const auto& [exp, c] : prod.terms())
                if (exp[0] <= upto)
                    out.add_term(exp, c);
            return out;
        };
        LaurentPoly lhs = series_expand(ym * NB, m, cutoff);
        LaurentPoly rhs = series_expand(-Nr, m - 1, cutoff);
        if (lhs != rhs) {
            rep.pass = false;
            rep.detail = "bridge series differs below the cutoff";
            return rep;
        }
    }
    return rep;
}

CheckReport hilbert_identity_check(const BettiTable4& T, const TriGradedHomology& H, int j,
                                   int k, int T_max)
{
    CheckReport rep;
    int m = T.components;
    auto it = H.strata.find({j, k});

    for (int t = 0; t <= T_max; ++t) {
        int degree = 2 * t + 1 - j;
        long lhs = 0;
        if (it != H.strata.end())
            lhs = it->second.hilbert_dim(degree);
        long rhs = 0;
        for (const auto& [key, count] : T.entries) {
            if (key[2] != j || key[3] != k)
                continue;
            int p = key[0], q = key[1];
            if ((j + q + 1) % 2 != 0)
                throw std::logic_error("even j + q in a Betti entry");
            long top = t + m - (j + q + 1) / 2;
            long bot = t - (j + q - 1) / 2;
            rhs += (p % 2 == 0 ? 1 : -1) * count * binom_norm(top, bot);
        }
        if (lhs != rhs) {
            rep.pass = false;
            std::ostringstream out;
            out << "stratum (" << j << "," << k << ") T=" << t << ": dim " << lhs
                << " vs binomial sum " << rhs;
            rep.detail = out.str();
            return rep;
        }
    }
    return rep;
}

SplitVerdict split_obstruction(const BettiTable4& unreduced, int n)
{
    int m = unreduced.components;
    if (n < 1 || n > m)
        throw std::invalid_argument("split_obstruction: n out of range 1..m");
    PdResult pd = pd_of_table(unreduced);
    if (pd.zero_module)
        return SplitVerdict::consistent;
    return pd.value > m - n ? SplitVerdict::obstructed : SplitVerdict::consistent;
}

} // namespace homlink
