#include "homlink/krcomplex.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace homlink {

namespace {

std::string edge_name(int e) { return "X" + std::to_string(e + 1); }

} // namespace

EdgeRing::EdgeRing(const ClosedBraidDiagram& d)
{
    int M = d.num_edges;
    std::vector<std::string> names;
    for (int e = 0; e < M; ++e)
        names.push_back(edge_name(e));
    ambient_ = make_ring(names);

    // one linear relation per crossing: outgoing minus incoming edges
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : d.crossings) {
        std::vector<Rational> row(M, rat(0));
        row[c.out_left] += 1;
        row[c.out_right] += 1;
        row[c.in_left] -= 1;
        row[c.in_right] -= 1;
        bool nonzero = false;
        for (const auto& x : row)
            if (!is_zero(x))
                nonzero = true;
        if (nonzero)
            rows.push_back(std::move(row));
    }

    // Gaussian elimination, pivot on the highest-index variable of each row
    // so the designated component edges survive.
    std::vector<std::pair<int, std::vector<Rational>>> pivots; // (col, row)
    for (auto& row : rows) {
        for (const auto& [pc, prow] : pivots) {
            if (is_zero(row[pc]))
                continue;
            Rational f = row[pc];
            for (int c = 0; c < M; ++c)
                row[c] -= f * prow[c];
        }
        int pc = -1;
        for (int c = M - 1; c >= 0; --c)
            if (!is_zero(row[c])) {
                pc = c;
                break;
            }
        if (pc < 0)
            continue;
        Rational inv = 1 / row[pc];
        for (int c = 0; c < M; ++c)
            row[c] *= inv;
        for (auto& [qc, qrow] : pivots) {
            if (is_zero(qrow[pc]))
                continue;
            Rational f = qrow[pc];
            for (int c = 0; c < M; ++c)
                qrow[c] -= f * row[c];
        }
        pivots.emplace_back(pc, row);
    }

    std::vector<bool> eliminated(M, false);
    for (const auto& [pc, prow] : pivots)
        eliminated[pc] = true;
    std::vector<std::string> survivors;
    std::vector<int> reduced_index(M, -1);
    for (int e = 0; e < M; ++e)
        if (!eliminated[e]) {
            reduced_index[e] = int(surviving_.size());
            surviving_.push_back(e);
            survivors.push_back(edge_name(e));
        }
    reduced_ = make_ring(survivors);

    images_.assign(M, Polynomial::zero(reduced_));
    for (int e = 0; e < M; ++e)
        if (!eliminated[e])
            images_[e] = Polynomial::variable(reduced_, reduced_index[e]);
    for (const auto& [pc, prow] : pivots) {
        // X_pc = -sum_{c != pc} prow[c] X_c over the survivors
        Polynomial img = Polynomial::zero(reduced_);
        for (int c = 0; c < M; ++c) {
            if (c == pc || is_zero(prow[c]))
                continue;
            if (eliminated[c])
                throw std::logic_error("edge ring elimination not fully reduced");
            img = img + Polynomial::variable(reduced_, reduced_index[c]) * (-prow[c]);
        }
        images_[pc] = img;
    }

    classes_.assign(d.num_components, {});
    for (size_t r = 0; r < surviving_.size(); ++r)
        classes_[d.edge_component[surviving_[r]]].push_back(int(r));
    for (int c = 0; c < d.num_components; ++c)
        if (classes_[c].empty())
            throw std::logic_error("component lost all edge variables in elimination");
}

Polynomial EdgeRing::eliminate(const Polynomial& ambient_poly) const
{
    return ambient_poly.map_variables(reduced_, images_);
}

Polynomial EdgeRing::edge_difference(int edge_a, int edge_b) const
{
    Polynomial p = Polynomial::variable(ambient_, edge_a) - Polynomial::variable(ambient_, edge_b);
    return eliminate(p);
}

CrossingSquare crossing_square(const Crossing& c, const EdgeRing& E)
{
    if (c.sign != 1)
        throw std::invalid_argument(
            "negative crossings unsupported: the engine covers positive braids only");
    CrossingSquare s;
    // positive crossing: the strand entering on the left passes over and
    // exits right, so the outgoing understrand is the left outgoing edge
    s.u = E.edge_difference(c.out_left, c.in_left);
    s.v = E.edge_difference(c.out_right, c.in_left);
    return s;
}

TotalDoubleComplex::TotalDoubleComplex(const ClosedBraidDiagram& d, const EdgeRing& E)
    : ring_(&E), n_(int(d.crossings.size()))
{
    for (const auto& c : d.crossings)
        squares_.push_back(crossing_square(c, E));

    empty_ = FreeModule(E.reduced(), {});

    // states: per crossing a corner (j,k) in {-2,0}^2; fixed enumeration order
    static const std::pair<int, int> corners[4] = {{-2, -2}, {-2, 0}, {0, -2}, {0, 0}};
    std::vector<std::pair<int, int>> state(n_);
    std::function<void(int)> walk = [&](int t) {
        if (t == n_) {
            int j = 0, k = 0, shift = 0;
            for (const auto& [jt, kt] : state) {
                j += jt;
                k += kt;
                if (jt == -2 && kt == -2)
                    shift += 2;
            }
            Position& p = grid_[{j, k}];
            if (p.mod.ring == nullptr)
                p.mod = FreeModule(E.reduced(), {});
            p.mod.shifts.push_back(shift);
            p.states.push_back(state);
            return;
        }
        for (const auto& c : corners) {
            state[t] = c;
            walk(t + 1);
        }
    };
    walk(0);
    verify();
}

const TotalDoubleComplex::Position& TotalDoubleComplex::pos(int j, int k) const
{
    static const Position nil{};
    auto it = grid_.find({j, k});
    if (it == grid_.end()) {
        return nil;
    }
    return it->second;
}

const FreeModule& TotalDoubleComplex::at(int j, int k) const
{
    auto it = grid_.find({j, k});
    return it == grid_.end() ? empty_ : it->second.mod;
}

HomMatrix TotalDoubleComplex::d_plus(int j, int k) const
{
    const Position& src = pos(j, k);
    const Position& tgt = pos(j + 2, k);
    FreeModule srcm = src.mod.ring ? src.mod : empty_;
    FreeModule tgtm = tgt.mod.ring ? tgt.mod : empty_;
    HomMatrix m(srcm, tgtm);

    std::map<std::vector<std::pair<int, int>>, size_t> tindex;
    for (size_t i = 0; i < tgt.states.size(); ++i)
        tindex[tgt.states[i]] = i;

    for (size_t s = 0; s < src.states.size(); ++s) {
        int sign = 1;
        for (int t = 0; t < n_; ++t) {
            auto [jt, kt] = src.states[s][t];
            if (jt == -2) {
                auto moved = src.states[s];
                moved[t].first = 0;
                auto f = tindex.find(moved);
                if (f == tindex.end())
                    throw std::logic_error("d_plus target state missing");
                Polynomial map = (kt == 0) ? squares_[t].u : squares_[t].u * squares_[t].v;
                m.set_entry(f->second, s, map * rat(sign));
                sign = -sign; // one more lower-horizontal factor to the left
            }
        }
    }
    return m;
}

HomMatrix TotalDoubleComplex::d_vert(int j, int k) const
{
    const Position& src = pos(j, k);
    const Position& tgt = pos(j, k + 2);
    FreeModule srcm = src.mod.ring ? src.mod : empty_;
    FreeModule tgtm = tgt.mod.ring ? tgt.mod : empty_;
    HomMatrix m(srcm, tgtm);

    std::map<std::vector<std::pair<int, int>>, size_t> tindex;
    for (size_t i = 0; i < tgt.states.size(); ++i)
        tindex[tgt.states[i]] = i;

    for (size_t s = 0; s < src.states.size(); ++s) {
        int sign = 1;
        for (int t = 0; t < n_; ++t) {
            auto [jt, kt] = src.states[s][t];
            if (kt == -2) {
                auto moved = src.states[s];
                moved[t].second = 0;
                auto f = tindex.find(moved);
                if (f == tindex.end())
                    throw std::logic_error("d_vert target state missing");
                Polynomial map = (jt == -2) ? squares_[t].v
                                            : Polynomial::constant(ring_->reduced(), rat(1));
                m.set_entry(f->second, s, map * rat(sign));
                sign = -sign; // one more lower-vertical factor to the left
            }
        }
    }
    return m;
}

void TotalDoubleComplex::verify() const
{
    for (int j = -2 * n_; j <= 0; j += 2)
        for (int k = -2 * n_; k <= 0; k += 2) {
            HomMatrix dp = d_plus(j, k);
            HomMatrix dv = d_vert(j, k);
            if (!dp.is_zero()) {
                if (!dp.is_homogeneous() || (dp.degree_offset() != 2))
                    throw std::logic_error("d_plus is not homogeneous of degree offset 2");
            }
            if (!dv.is_zero()) {
                if (!dv.is_homogeneous() || (dv.degree_offset() != 0))
                    throw std::logic_error("d_vert is not homogeneous of degree offset 0");
            }
            if (!d_plus(j + 2, k).compose(dp).is_zero())
                throw std::logic_error("d_plus squared is not zero");
            if (!d_vert(j, k + 2).compose(dv).is_zero())
                throw std::logic_error("d_vert squared is not zero");
            // commuting squares
            HomMatrix a = d_vert(j + 2, k).compose(dp);
            HomMatrix b = d_plus(j, k + 2).compose(dv);
            for (size_t c = 0; c < a.cols(); ++c)
                if (!(a.col(c) == b.col(c)))
                    throw std::logic_error("d_plus and d_vert do not commute");
        }
}

std::string TotalDoubleComplex::to_json() const
{
    std::ostringstream out;
    out << "{\"crossings\":" << n_ << ",\"ring\":[";
    const auto& vars = ring_->reduced()->vars();
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i)
            out << ",";
        out << '"' << vars[i] << '"';
    }
    out << "],\"positions\":[";
    bool first = true;
    for (const auto& [jk, p] : grid_) {
        if (!first)
            out << ",";
        first = false;
        out << "{\"j\":" << jk.first << ",\"k\":" << jk.second << ",\"rank\":" << p.mod.rank()
            << ",\"shifts\":[";
        for (size_t i = 0; i < p.mod.shifts.size(); ++i) {
            if (i)
                out << ",";
            out << p.mod.shifts[i];
        }
        out << "],\"d_plus\":[";
        HomMatrix dp = d_plus(jk.first, jk.second);
        for (size_t r = 0; r < dp.rows(); ++r) {
            if (r)
                out << ",";
            out << "[";
            for (size_t c = 0; c < dp.cols(); ++c) {
                if (c)
                    out << ",";
                out << '"' << dp.entry(r, c).to_string() << '"';
            }
            out << "]";
        }
        out << "],\"d_vert\":[";
        HomMatrix dv = d_vert(jk.first, jk.second);
        for (size_t r = 0; r < dv.rows(); ++r) {
            if (r)
                out << ",";
            out << "[";
            for (size_t c = 0; c < dv.cols(); ++c) {
                if (c)
                    out << ",";
                out << '"' << dv.entry(r, c).to_string() << '"';
            }
            out << "]";
        }
        out << "]}";
    }
    out << "]}";
    return out.str();
}

namespace {

struct RowHomology {
    PresentedModule module;
    std::vector<ModVector> reps; // kernel representatives in the grid module
};

std::map<std::pair<int, int>, RowHomology> compute_dplus_homology(const TotalDoubleComplex& C)
{
    int n = C.crossing_count();
    std::map<std::pair<int, int>, RowHomology> h1;
    for (int k = -2 * n; k <= 0; k += 2) {
        for (int j = -2 * n; j <= 0; j += 2) {
            auto fm = [&](int jj, int kk) {
                return PresentedModule::free_module(C.at(jj, kk));
            };
            ModuleMap f = check_map(fm(j - 2, k), fm(j, k), C.d_plus(j - 2, k));
            ModuleMap g = check_map(fm(j, k), fm(j + 2, k), C.d_plus(j, k));
            HomologyResult H = homology(f, g);
            RowHomology rh;
            rh.module = H.module;
            rh.reps = H.reps;
            h1.emplace(std::make_pair(j, k), std::move(rh));
        }
    }
    return h1;
}

} // namespace

std::map<std::pair<int, int>, PresentedModule> dplus_homology(const ClosedBraidDiagram& d)
{
    if (!is_positive(d.word))
        throw std::invalid_argument(
            "negative crossings unsupported: the engine covers positive braids only");
    EdgeRing E(d);
    TotalDoubleComplex C(d, E);
    auto h1 = compute_dplus_homology(C);
    std::map<std::pair<int, int>, PresentedModule> out;
    for (const auto& [jk, rh] : h1) {
        PresentedModule M = rh.module.pruned();
        if (!M.is_zero())
            out.emplace(jk, M);
    }
    return out;
}

TriGradedHomology middle_homology(const ClosedBraidDiagram& d)
{
    if (!is_positive(d.word))
        throw std::invalid_argument(
            "negative crossings unsupported: the engine covers positive braids only");

    EdgeRing E(d);
    TotalDoubleComplex C(d, E);

    int n = int(d.crossings.size());
    const RingPtr& S = E.reduced();

    // first pass: homology along d_plus at every grid position
    auto h1 = compute_dplus_homology(C);

    // induced vertical maps on the d_plus homology
    auto induced = [&](int j, int k) -> ModuleMap {
        const RowHomology& src = h1.at({j, k});
        const RowHomology& tgt = h1.at({j, k + 2});
        HomMatrix mat(src.module.cover(), tgt.module.cover());
        HomMatrix dv = C.d_vert(j, k);
        if (!src.reps.empty() && !tgt.reps.empty()) {
            HomMatrix tmat = HomMatrix::from_columns(C.at(j, k + 2), tgt.reps, 0);
            ColumnAnalysis ta(tmat);
            for (size_t i = 0; i < src.reps.size(); ++i) {
                ModVector w = dv.apply(src.reps[i]);
                if (w.is_zero())
                    continue;
                auto u = ta.lift(w);
                if (!u)
                    throw std::logic_error("induced vertical map: image not in kernel span");
                for (size_t r = 0; r < tgt.reps.size(); ++r)
                    mat.set_entry(r, i, (*u)[r]);
            }
        } else {
            for (size_t i = 0; i < src.reps.size(); ++i) {
                ModVector w = dv.apply(src.reps[i]);
                if (!w.is_zero())
                    throw std::logic_error("induced vertical map into zero homology is nonzero");
            }
        }
        return check_map(src.module, tgt.module, std::move(mat));
    };

    std::map<std::pair<int, int>, ModuleMap> vmaps;
    for (int k = -2 * n; k <= 0; k += 2)
        for (int j = -2 * n; j <= 0; j += 2) {
            if (k + 2 <= 0)
                vmaps.emplace(std::make_pair(j, k), induced(j, k));
        }

    // second pass: homology along the induced d_vert
    int w = d.writhe, b = d.strands();
    int s1 = -w + b, sj = w + b - 1, sk = w - b + 1;

    RingPtr RB;
    {
        std::vector<std::string> names;
        for (int c = 1; c <= d.num_components; ++c)
            names.push_back("X" + std::to_string(c));
        RB = make_ring(names);
    }

    TriGradedHomology out;
    out.ring = RB;
    out.components = d.num_components;
    out.reduced = false;

    for (int k = -2 * n; k <= 0; k += 2)
        for (int j = -2 * n; j <= 0; j += 2) {
            const RowHomology& mid = h1.at({j, k});
            ModuleMap fin = (k - 2 >= -2 * n)
                                ? vmaps.at({j, k - 2})
                                : zero_map(PresentedModule::zero(S), mid.module);
            ModuleMap gout = (k + 2 <= 0)
                                 ? vmaps.at({j, k})
                                 : zero_map(mid.module, PresentedModule::zero(S));
            HomologyResult H2 = homology(fin, gout);
            PresentedModule M = H2.module.pruned();
            if (M.is_zero())
                continue;
            M = M.shifted(s1);
            PresentedModule overRB = identify_variables(M, RB, E.component_classes()).pruned();
            if (overRB.is_zero())
                continue;
            // module degrees and the j grading keep opposite parity
            for (int deg : overRB.cover().shifts)
                if ((deg + j + sj) % 2 == 0)
                    throw std::logic_error("stratum parity violated");
            out.strata.emplace(std::make_pair(j + sj, k + sk), overRB);
        }
    return out;
}

TriGradedHomology reduced_homology(const TriGradedHomology& H)
{
    if (H.reduced)
        throw std::invalid_argument("reduced_homology applied twice");
    const RingPtr& RB = H.ring;
    size_t m = RB->nvars();

    std::vector<std::string> names;
    for (size_t i = 1; i < m; ++i)
        names.push_back(RB->vars()[i]);
    RingPtr RBr = make_ring(names);

    // X1 -> 0, Xi -> Xi; the ring map realizes Q[X1..Xm]/(X1)
    std::vector<Polynomial> images;
    images.push_back(Polynomial::zero(RBr));
    for (size_t i = 1; i < m; ++i)
        images.push_back(Polynomial::variable(RBr, int(i - 1)));

    TriGradedHomology out;
    out.ring = RBr;
    out.components = H.components;
    out.reduced = true;
    for (const auto& [jk, M] : H.strata) {
        FreeModule cover(RBr, M.cover().shifts);
        std::vector<ModVector> rels;
        for (const auto& r : M.relations()) {
            ModVector v(cover);
            for (size_t i = 0; i < r.size(); ++i)
                v[i] = r[i].map_variables(RBr, images);
            rels.push_back(v);
        }
        PresentedModule q = PresentedModule(cover, rels).shifted(-1).pruned();
        if (!q.is_zero())
            out.strata.emplace(jk, q);
    }
    return out;
}

} // namespace homlink
