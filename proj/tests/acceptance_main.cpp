// Acceptance suite: one pass/fail line per criterion, nonzero exit when a
// criterion fails. Criteria 1 and 2 carry a known discrepancy against the
// transcribed reference values for the Hopf example (two arithmetic slips in
// the source of the transcription, see README and the notes printed below);
// the literal checks are reported as stated, followed by the corrected
// fixture with its cross-validations.

#include "homlink/koszul.hpp"
#include "homlink/report.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace homlink;

namespace {

int failures = 0;
std::vector<std::string> notes;

void line(const std::string& name, bool pass, const std::string& detail = "")
{
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name;
    if (!pass && !detail.empty())
        std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass)
        ++failures;
}

void info(const std::string& text) { std::cout << "      " << text << "\n"; }

std::map<std::string, LinkReport> report_cache;

const LinkReport& report_of(const std::string& text, int strands)
{
    std::string key = text + "/" + std::to_string(strands);
    auto it = report_cache.find(key);
    if (it == report_cache.end())
        it = report_cache.emplace(key, analyze(parse_braid(text, strands), 2)).first;
    return it->second;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1

void criterion_1()
{
    auto t0 = std::chrono::steady_clock::now();
    const LinkReport& r = report_of("1 1", 2);
    double dt = seconds_since(t0);

    BettiTable4 literal;
    literal.entries[{1, 2, 1, 1}] = 1;
    literal.entries[{0, 0, 1, 1}] = 1;
    literal.entries[{0, 0, 3, -3}] = 1;
    literal.entries[{0, 2, -1, -3}] = 1;
    bool lit = r.betti.entries == literal.entries && r.pd.value == 1 && dt < 10.0;
    line("criterion 1: Hopf fixture matches the transcribed reference table verbatim", lit,
         "engine betti differs at the two kernel strata; see notes below");

    BettiTable4 corrected;
    corrected.entries[{1, 2, 1, 1}] = 1;
    corrected.entries[{0, 0, 1, 1}] = 1;
    corrected.entries[{0, 2, 3, -3}] = 1;
    corrected.entries[{0, 4, 1, -3}] = 1;
    bool cor = r.betti.entries == corrected.entries && !r.pd.zero_module && r.pd.value == 1 &&
               dt < 10.0;
    line("criterion 1 (corrected fixture): Hopf betti {(1,2,1,1),(0,0,1,1),"
         "(0,2,3,-3),(0,4,1,-3)}, pd 1, < 10 s",
         cor);
    if (!lit && cor)
        notes.push_back(
            "criterion 1: the transcribed reference values for the Hopf example carry two arithmetic slips "
            "(the stratum at inner grid (-2,-4) lands at (j,k)=(1,-3) under the "
            "{0,3,1} shift, and the two surviving kernel strata carry module-degree "
            "shifts {2}); the engine values are pinned by Markov invariance, "
            "split-union multiplicativity and the Tor oracle (criteria 4, 5, 8).");
}

// ---------------------------------------------------------------- criterion 2

void criterion_2()
{
    auto d = close(parse_braid("1 1", 2));
    EdgeRing E(d);
    auto h1 = dplus_homology(d);
    const RingPtr& R = E.reduced();
    int cut = 14;

    auto series_of = [&](const RingPtr& ring, std::vector<int> shifts,
                         std::vector<std::string> rels) {
        FreeModule F(ring, shifts);
        std::vector<ModVector> rv;
        for (size_t i = 0; i < rels.size(); ++i) {
            ModVector v(F);
            v[i % F.rank()] = Polynomial::parse(ring, rels[i]);
            rv.push_back(v);
        }
        return PresentedModule(F, rv).hilbert_series(cut);
    };
    auto two_copies = [&](int shift, const std::string& rel) {
        FreeModule F(R, {shift, shift});
        std::vector<ModVector> rv;
        for (int pos = 0; pos < 2; ++pos) {
            ModVector v(F);
            v[pos] = Polynomial::parse(R, rel);
            rv.push_back(v);
        }
        return PresentedModule(F, rv).hilbert_series(cut);
    };

    const std::string lin = "X1 - X3";
    const std::string quad = "X1*X2 - X1*X3 - X2*X3 + X3^2";
    bool mid = true;
    mid = mid && h1.count({0, 0}) && h1.at({0, 0}).hilbert_series(cut) ==
                                         series_of(R, {0}, {lin});
    mid = mid && h1.count({-2, 0}) && h1.at({-2, 0}).hilbert_series(cut) ==
                                          series_of(R, {0}, {lin});
    mid = mid && h1.count({0, -2}) && h1.at({0, -2}).hilbert_series(cut) == two_copies(0, lin);
    mid = mid && h1.count({-2, -2}) &&
          h1.at({-2, -2}).hilbert_series(cut) == two_copies(2, lin);
    mid = mid && h1.count({0, -4}) && h1.at({0, -4}).hilbert_series(cut) ==
                                          series_of(R, {0}, {quad});
    mid = mid && h1.count({-2, -4}) && h1.at({-2, -4}).hilbert_series(cut) ==
                                           series_of(R, {2}, {quad});
    mid = mid && !h1.count({-4, 0}) && !h1.count({-4, -2}) && !h1.count({-4, -4});
    line("criterion 2: Hopf intermediate d+ homology matches the reference "
         "computation (isomorphism-invariant Hilbert data)",
         mid);

    auto H = middle_homology(d);
    bool diag = H.strata.count({1, 1}) &&
                H.strata.at({1, 1}).hilbert_series(cut) ==
                    series_of(H.ring, {0}, {"X1 - X2"});
    line("criterion 2: final stratum (1,1) has the Hilbert series of R/(X1-X2)", diag);

    bool lit_free = H.strata.count({-1, -3}) &&
                    H.strata.count({3, -3}) &&
                    H.strata.at({-1, -3}).hilbert_series(cut) ==
                        PresentedModule::free_module(FreeModule(H.ring, {2}))
                            .hilbert_series(cut);
    line("criterion 2: final strata at (3,-3) and (-1,-3) as transcribed", lit_free,
         "the (-1,-3) placement is the slip noted under criterion 1");
    bool cor_free =
        H.strata.count({3, -3}) && H.strata.count({1, -3}) &&
        H.strata.at({3, -3}).hilbert_series(cut) ==
            PresentedModule::free_module(FreeModule(H.ring, {2})).hilbert_series(cut) &&
        H.strata.at({1, -3}).hilbert_series(cut) ==
            PresentedModule::free_module(FreeModule(H.ring, {4})).hilbert_series(cut);
    line("criterion 2 (corrected): free strata at (3,-3) gen degree 2 and (1,-3) "
         "gen degree 4",
         cor_free);
}

// ---------------------------------------------------------------- criterion 3

void criterion_3()
{
    std::vector<std::pair<std::string, int>> links = {
        {"", 1},          // unknot
        {"1 1", 2},       // Hopf
        {"1 1 1", 2},     // trefoil
        {"1 2 1 2", 3},   // trefoil, second presentation
        {"", 2},          // 2-component unlink
        {"", 3},          // 3-component unlink
        {"1 1", 3},       // Hopf ⊔ unknot
    };
    bool all = true;
    std::string detail;
    for (const auto& [text, strands] : links) {
        const LinkReport& r = report_of(text, strands);
        std::map<std::array<int, 4>, long> shifted;
        for (const auto& [key, v] : r.betti.entries)
            shifted[{key[0], key[1] - 1, key[2], key[3]}] = v;
        if (shifted != r.betti_reduced.entries) {
            all = false;
            detail = "mismatch for braid \"" + text + "\" on " + std::to_string(strands) +
                     " strands";
            break;
        }
    }
    line("criterion 3: unreduced and reduced tables satisfy "
         "beta(p,q,j,k) = beta_r(p,q-1,j,k) on seven links",
         all, detail);
}

// ---------------------------------------------------------------- criterion 4

void criterion_4()
{
    auto t0 = std::chrono::steady_clock::now();
    bool all = true;
    std::string detail;
    for (const auto& [w1, w2] : markov_test_pairs()) {
        LinkReport a = analyze(w1, 2);
        LinkReport b = analyze(w2, 2);
        if (a.betti.entries != b.betti.entries ||
            a.betti_reduced.entries != b.betti_reduced.entries) {
            all = false;
            detail = "pair [" + w1.text() + "] vs [" + w2.text() + "]";
            break;
        }
    }
    double dt = seconds_since(t0);
    all = all && dt < 300.0;
    std::ostringstream name;
    name << "criterion 4: identical Betti tables across the Markov pairs ("
         << int(dt * 1000) << " ms)";
    line(name.str(), all, detail);
}

// ---------------------------------------------------------------- criterion 5

void criterion_5()
{
    const LinkReport& hopf = report_of("1 1", 2);
    const LinkReport& unk = report_of("", 1);
    const LinkReport& hu = report_of("1 1", 3);
    const LinkReport& hh = report_of("1 1 3 3", 4);
    const LinkReport& uu = report_of("", 2);

    bool mult = poincare_equal(hu.P, poincare_product_with_ab1(hopf.P, unk.P)) &&
                poincare_equal(hh.P, poincare_product_with_ab1(hopf.P, hopf.P)) &&
                poincare_equal(uu.P, poincare_product_with_ab1(unk.P, unk.P));
    bool pd_add = hu.pd.value == hopf.pd.value + unk.pd.value &&
                  hh.pd.value == hopf.pd.value + hopf.pd.value &&
                  uu.pd.value == unk.pd.value + unk.pd.value;
    line("criterion 5: split-union Poincare multiplicativity with the a*b^-1 factor "
         "and pd additivity",
         mult && pd_add);

    bool verdicts = hopf.split == std::vector<SplitVerdict>{SplitVerdict::consistent,
                                                            SplitVerdict::obstructed} &&
                    hh.split == std::vector<SplitVerdict>{
                                    SplitVerdict::consistent, SplitVerdict::consistent,
                                    SplitVerdict::obstructed, SplitVerdict::obstructed};
    line("criterion 5: split-check verdicts (Hopf: n=2 obstructed; Hopf ⊔ Hopf: "
         "n=1,2 consistent, n=3,4 obstructed)",
         verdicts);
}

// ---------------------------------------------------------------- criterion 6

void criterion_6()
{
    // pd <= m-1 on every link computed so far (resolution length <= nvars is
    // enforced by construction and would have thrown already)
    bool all = true;
    std::string detail;
    for (const auto& [key, r] : report_cache) {
        if (r.pd.zero_module)
            continue;
        if (r.pd.value > r.components - 1) {
            all = false;
            detail = "pd " + std::to_string(r.pd.value) + " for " + key;
        }
        if (r.betti_reduced.max_p() > std::max(0, r.components - 1)) {
            all = false;
            detail = "reduced pd too large for " + key;
        }
    }
    line("criterion 6: pd <= components - 1 on every computed link; resolution "
         "length <= variable count enforced on every resolution",
         all, detail);
}

// ---------------------------------------------------------------- criterion 7

void criterion_7()
{
    std::vector<std::pair<std::string, int>> links = {
        {"", 1}, {"1 1", 2}, {"1 1 1", 2}, {"1 1", 3}, {"", 2}, {"1 1 3 3", 4}};
    bool all = true;
    std::string detail;
    for (const auto& [text, strands] : links) {
        auto d = close(parse_braid(text, strands));
        CheckReport e = euler_check(d, 30);
        if (!e.pass) {
            all = false;
            detail = "euler \"" + text + "\": " + e.detail;
            break;
        }
        auto H = middle_homology(d);
        auto T = betti_from_homology(H);
        for (const auto& [jk, M] : H.strata) {
            CheckReport h = hilbert_identity_check(T, H, jk.first, jk.second, 12);
            if (!h.pass) {
                all = false;
                detail = "hilbert identity \"" + text + "\": " + h.detail;
                break;
            }
        }
        if (!all)
            break;
    }
    line("criterion 7: euler and hilbert-function identities to cutoff 30, including "
         "the bridge identity",
         all, detail);
}

// ---------------------------------------------------------------- criterion 8

PresentedModule random_module(std::mt19937& rng)
{
    std::uniform_int_distribution<int> nvars_d(1, 3), ngens_d(1, 4), nrels_d(0, 5),
        shift_d(0, 2), deg_d(1, 2), coef_d(-2, 2);
    int nv = nvars_d(rng);
    std::vector<std::string> names;
    for (int i = 1; i <= nv; ++i)
        names.push_back("X" + std::to_string(i));
    RingPtr R = make_ring(names);
    int ng = ngens_d(rng);
    std::vector<int> shifts;
    for (int i = 0; i < ng; ++i)
        shifts.push_back(2 * shift_d(rng));
    FreeModule F(R, shifts);
    int nr = nrels_d(rng);
    std::vector<ModVector> rels;
    for (int r = 0; r < nr; ++r) {
        int rd = 2 * (deg_d(rng) + *std::max_element(shifts.begin(), shifts.end()) / 2);
        ModVector v(F);
        for (int g = 0; g < ng; ++g) {
            int want = rd - shifts[g];
            if (want < 0 || want % 2)
                continue;
            std::vector<Monomial> mons;
            std::vector<int> exp(nv, 0);
            std::function<void(size_t, int)> walk = [&](size_t var, int remaining) {
                if (var + 1 == size_t(nv)) {
                    exp[var] = remaining;
                    mons.push_back(Monomial(std::vector<int>(exp)));
                    exp[var] = 0;
                    return;
                }
                for (int e = 0; e <= remaining; ++e) {
                    exp[var] = e;
                    walk(var + 1, remaining - e);
                }
                exp[var] = 0;
            };
            walk(0, want / 2);
            for (const auto& m : mons)
                if (coef_d(rng) > 0)
                    v[g].add_term(m, rat(coef_d(rng)));
        }
        if (!v.is_zero())
            rels.push_back(v);
    }
    return PresentedModule(F, rels);
}

void criterion_8()
{
    // every homology stratum of the suite's links
    bool strata_ok = true;
    std::string detail;
    std::vector<std::pair<std::string, int>> links = {
        {"", 1}, {"1 1", 2}, {"1 1 1", 2}, {"1 1", 3}, {"", 2}};
    for (const auto& [text, strands] : links) {
        auto H = middle_homology(close(parse_braid(text, strands)));
        for (const auto& [jk, M] : H.strata) {
            std::string mm = oracle_mismatch(M);
            if (!mm.empty()) {
                strata_ok = false;
                detail = "stratum of \"" + text + "\": " + mm;
                break;
            }
        }
        if (!strata_ok)
            break;
    }

    // 100 randomized small presentations
    std::mt19937 rng(987654321);
    int checked = 0;
    for (int iter = 0; iter < 100 && strata_ok; ++iter) {
        auto M = random_module(rng);
        std::string mm = oracle_mismatch(M);
        if (!mm.empty()) {
            strata_ok = false;
            detail = "random module " + std::to_string(iter) + ": " + mm;
        }
        ++checked;
    }
    line("criterion 8: betti table equals the Koszul Tor oracle on all strata and " +
             std::to_string(checked) + " random presentations",
         strata_ok, detail);

    // Betti convolution under tensor on 20 random pairs
    std::mt19937 rng2(24680);
    bool conv_ok = true;
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<std::string> apool = {"A1", "A2^2", "A1*A2 + A2^2", "A1^2 - A1*A2"};
    std::vector<std::string> bpool = {"B1", "B1^2", "B1^3", "2*B1^2"};
    for (int iter = 0; iter < 20 && conv_ok; ++iter) {
        RingPtr RA = make_ring({"A1", "A2"});
        RingPtr RB = make_ring({"B1"});
        FreeModule FA(RA, {0});
        FreeModule FB(RB, {0});
        ModVector va(FA), vb(FB);
        va[0] = Polynomial::parse(RA, apool[size_t(pick(rng2))]);
        vb[0] = Polynomial::parse(RB, bpool[size_t(pick(rng2))]);
        PresentedModule MA(FA, {va});
        PresentedModule MB(FB, {vb});
        auto bA = betti_table(MA);
        auto bB = betti_table(MB);
        auto bT = betti_table(tensor_over_Q(MA, MB));
        BettiTablePQ convolved;
        for (const auto& [pq1, v1] : bA.entries)
            for (const auto& [pq2, v2] : bB.entries)
                convolved.entries[{pq1.first + pq2.first, pq1.second + pq2.second}] += v1 * v2;
        conv_ok = convolved.entries == bT.entries;
    }
    line("criterion 8: Betti convolution under tensor products on 20 random pairs",
         conv_ok);
}

// ---------------------------------------------------------------- criterion 9

void criterion_9()
{
    bool all = true;
    for (int m = 1; m <= 3 && all; ++m) {
        std::vector<std::string> names;
        for (int i = 1; i <= m; ++i)
            names.push_back("X" + std::to_string(i));
        RingPtr R = make_ring(names);
        for (int dd = 1; dd <= 3 && all; ++dd) {
            // R/m^dd: all monomials of exponent total dd as relations
            FreeModule F(R, {0});
            std::vector<ModVector> rels;
            std::vector<int> exp(m, 0);
            std::function<void(int, int)> walk = [&](int var, int remaining) {
                if (var + 1 == m) {
                    exp[var] = remaining;
                    ModVector v(F);
                    v[0] = Polynomial::term(R, Monomial(std::vector<int>(exp)), rat(1));
                    rels.push_back(v);
                    exp[var] = 0;
                    return;
                }
                for (int e = 0; e <= remaining; ++e) {
                    exp[var] = e;
                    walk(var + 1, remaining - e);
                }
                exp[var] = 0;
            };
            walk(0, dd);
            PresentedModule M(F, rels);
            auto pd = projective_dimension(M);
            all = all && !pd.zero_module && pd.value == m && depth(M) == 0;
        }
    }
    line("criterion 9: pd(R/m^d) = m and depth 0 for m, d in {1,2,3}", all);
}

// --------------------------------------------------------------- criterion 10

void criterion_10()
{
    // skein relation on all words of <= 4 letters in B2 and B3: every word
    // arises as the insertion of one letter into a base of <= 3 letters
    bool skein_ok = true;
    std::string detail;
    for (int strands : {2, 3}) {
        std::vector<std::vector<std::pair<int, int>>> bases = {{}};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::vector<std::pair<int, int>>> next;
            for (const auto& b : bases) {
                if (int(b.size()) == len - 1) {
                    for (int g = 1; g < strands; ++g)
                        for (int s : {1, -1}) {
                            auto c = b;
                            c.emplace_back(g, s);
                            next.push_back(c);
                        }
                }
            }
            bases.insert(bases.end(), next.begin(), next.end());
        }
        for (const auto& b : bases) {
            BraidWord base(strands, std::vector<std::pair<int, int>>(b));
            for (size_t pos = 0; pos <= b.size() && skein_ok; ++pos)
                for (int g = 1; g < strands && skein_ok; ++g)
                    if (!skein_holds(base, pos, g)) {
                        skein_ok = false;
                        detail = "base [" + base.text() + "] pos " + std::to_string(pos);
                    }
            if (!skein_ok)
                break;
        }
        if (!skein_ok)
            break;
    }
    line("criterion 10: skein relation on all words of <= 4 letters in B2, B3",
         skein_ok, detail);

    OracleFitReport fit = oracle_fit_then_predict();
    for (const auto& l : fit.lines)
        info(l);
    line("criterion 10: fit on unknot + Hopf, exact predictions on the trefoil and "
         "Hopf ⊔ unknot",
         fit.pass, fit.detail);
}

} // namespace

int main()
{
    auto t0 = std::chrono::steady_clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();

    std::cout << "\n";
    for (const auto& n : notes)
        std::cout << "NOTE  " << n << "\n";
    std::cout << "\ntotal time: " << int(seconds_since(t0)) << " s; failing lines: "
              << failures << "\n";
    return failures == 0 ? 0 : 1;
}
