#include "homlink/presented.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace homlink {

PresentedModule::PresentedModule(FreeModule cover, std::vector<ModVector> relations)
    : cover_(std::move(cover))
{
    for (auto& r : relations) {
        if (r.size() != cover_.rank())
            throw std::invalid_argument("relation length does not match generator count");
        if (!r.is_homogeneous())
            throw std::invalid_argument("inhomogeneous relation: " + r.to_string());
        if (!r.is_zero())
            relations_.push_back(std::move(r));
    }
    gb_ = buchberger(relations_);
}

PresentedModule PresentedModule::free_module(FreeModule cover)
{
    return PresentedModule(std::move(cover), {});
}

PresentedModule PresentedModule::zero(RingPtr ring)
{
    return PresentedModule(FreeModule(std::move(ring), {}), {});
}

bool PresentedModule::is_zero() const
{
    if (cover_.rank() == 0)
        return true;
    // zero iff every generator reduces to zero modulo the relations
    for (size_t i = 0; i < cover_.rank(); ++i)
        if (!reduce(ModVector::unit(cover_, i)).is_zero())
            return false;
    return true;
}

PresentedModule PresentedModule::pruned() const
{
    if (relations_.empty())
        return *this;
    std::vector<HomMatrix> chain = {HomMatrix::from_columns(cover_, relations_)};
    minimize_chain(chain);
    std::vector<ModVector> cols;
    for (size_t s = 0; s < chain[0].cols(); ++s)
        cols.push_back(chain[0].col(s));
    return PresentedModule(chain[0].target(), cols);
}

std::map<int, long> PresentedModule::hilbert_series(int cutoff) const
{
    std::map<int, long> dims;
    if (cover_.rank() == 0)
        return dims;
    int lo = *std::min_element(cover_.shifts.begin(), cover_.shifts.end());
    for (int d = lo; d <= cutoff; ++d)
        dims[d] = 0;

    size_t nv = ring()->nvars();
    // lead monomials of the relation basis, split by generator position
    std::vector<std::vector<Monomial>> leads(cover_.rank());
    for (const auto& g : gb_) {
        LeadTerm lt = g.lead();
        leads[lt.pos].push_back(lt.mono);
    }

    std::vector<int> exp(nv, 0);
    size_t cur_pos = 0;
    std::function<void(size_t, int)> walk = [&](size_t var, int remaining) {
        if (var + 1 == nv) {
            exp[var] = remaining;
            Monomial m{std::vector<int>(exp)};
            exp[var] = 0;
            for (const auto& l : leads[cur_pos])
                if (l.divides(m))
                    return;
            dims[2 * m.total() + cover_.shifts[cur_pos]] += 1;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[var] = e;
            walk(var + 1, remaining - e);
        }
        exp[var] = 0;
    };

    for (size_t pos = 0; pos < cover_.rank(); ++pos) {
        cur_pos = pos;
        int s = cover_.shifts[pos];
        for (int d = s; d <= cutoff; ++d) {
            if ((d - s) % 2 != 0)
                continue;
            if (nv == 0) {
                // base ring Q: the only monomial is 1
                if (d == s) {
                    Monomial one{std::vector<int>{}};
                    bool killed = false;
                    for (const auto& l : leads[pos])
                        if (l.divides(one))
                            killed = true;
                    if (!killed)
                        dims[d] += 1;
                }
                continue;
            }
            walk(0, (d - s) / 2);
        }
    }
    return dims;
}

long PresentedModule::hilbert_dim(int degree) const
{
    auto dims = hilbert_series(degree);
    auto it = dims.find(degree);
    return it == dims.end() ? 0 : it->second;
}

PresentedModule PresentedModule::shifted(int s) const
{
    FreeModule cov(cover_.ring, cover_.shifts);
    for (int& d : cov.shifts)
        d += s;
    std::vector<ModVector> rels;
    for (const auto& r : relations_) {
        ModVector v(cov);
        for (size_t i = 0; i < r.size(); ++i)
            v[i] = r[i];
        rels.push_back(v);
    }
    return PresentedModule(cov, rels);
}

std::string PresentedModule::to_text() const
{
    std::ostringstream out;
    out << "ring";
    for (const auto& v : ring()->vars())
        out << " " << v;
    out << "\ngens";
    for (int s : cover_.shifts)
        out << " " << s;
    out << "\nrels " << relations_.size() << "\n";
    for (const auto& r : relations_) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i)
                out << " | ";
            out << r[i].to_string();
        }
        out << "\n";
    }
    return out.str();
}

PresentedModule PresentedModule::from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line, word;

    if (!std::getline(in, line))
        throw std::invalid_argument("module text: missing ring line");
    std::istringstream rl(line);
    rl >> word;
    if (word != "ring")
        throw std::invalid_argument("module text: expected 'ring'");
    std::vector<std::string> vars;
    while (rl >> word)
        vars.push_back(word);
    RingPtr R = make_ring(vars);

    if (!std::getline(in, line))
        throw std::invalid_argument("module text: missing gens line");
    std::istringstream gl(line);
    gl >> word;
    if (word != "gens")
        throw std::invalid_argument("module text: expected 'gens'");
    std::vector<int> shifts;
    int s;
    while (gl >> s)
        shifts.push_back(s);
    FreeModule cover(R, shifts);

    if (!std::getline(in, line))
        throw std::invalid_argument("module text: missing rels line");
    std::istringstream cl(line);
    size_t nrels = 0;
    cl >> word >> nrels;
    if (word != "rels")
        throw std::invalid_argument("module text: expected 'rels'");

    std::vector<ModVector> rels;
    for (size_t r = 0; r < nrels; ++r) {
        if (!std::getline(in, line))
            throw std::invalid_argument("module text: truncated relations");
        ModVector v(cover);
        size_t start = 0, idx = 0;
        while (true) {
            size_t bar = line.find('|', start);
            std::string piece =
                bar == std::string::npos ? line.substr(start) : line.substr(start, bar - start);
            if (idx >= cover.rank())
                throw std::invalid_argument("module text: relation too long");
            v[idx++] = Polynomial::parse(R, piece);
            if (bar == std::string::npos)
                break;
            start = bar + 1;
        }
        if (idx != cover.rank())
            throw std::invalid_argument("module text: relation too short");
        rels.push_back(v);
    }
    return PresentedModule(cover, rels);
}

ModuleMap check_map(PresentedModule source, PresentedModule target, HomMatrix matrix)
{
    if (!same_module(matrix.source(), source.cover()) ||
        !same_module(matrix.target(), target.cover()))
        throw std::invalid_argument("check_map: matrix shape does not match modules");
    if (!matrix.is_homogeneous())
        throw std::invalid_argument("check_map: inhomogeneous matrix");
    for (size_t c = 0; c < source.relations().size(); ++c) {
        ModVector img = matrix.apply(source.relations()[c]);
        if (!target.reduce(img).is_zero())
            throw std::invalid_argument("check_map: ill-defined map, source relation " +
                                        std::to_string(c) + " maps outside target relations");
    }
    ModuleMap m;
    m.src_ = std::move(source);
    m.tgt_ = std::move(target);
    m.mat_ = std::move(matrix);
    return m;
}

ModuleMap zero_map(PresentedModule source, PresentedModule target)
{
    HomMatrix z(source.cover(), target.cover());
    return check_map(std::move(source), std::move(target), std::move(z));
}

ModuleMap multiplication_map(const PresentedModule& M, const Polynomial& f)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument("multiplication by inhomogeneous element");
    HomMatrix mat(M.cover(), M.cover());
    for (size_t i = 0; i < M.ngens(); ++i)
        mat.set_entry(i, i, f);
    return check_map(M, M, std::move(mat));
}

HomologyResult homology(const ModuleMap& f, const ModuleMap& g)
{
    if (!same_module(f.target().cover(), g.source().cover()))
        throw std::invalid_argument("homology: target(f) != source(g)");
    const PresentedModule& M2 = g.source();
    const FreeModule& F2 = M2.cover();

    // verify g∘f == 0 on classes
    HomMatrix comp = g.matrix().compose(f.matrix());
    for (size_t s = 0; s < comp.cols(); ++s)
        if (!g.target().reduce(comp.col(s)).is_zero())
            throw std::invalid_argument("homology: g∘f is not zero");

    // U = preimage of the target relation submodule under g: kernel of
    // [g | relations(M3)] projected to the F2 coordinates.
    std::vector<ModVector> cols;
    for (size_t s = 0; s < F2.rank(); ++s)
        cols.push_back(g.matrix().col(s));
    for (const auto& r : g.target().relations())
        cols.push_back(r);

    std::vector<ModVector> ugens;
    if (cols.empty()) {
        // g maps out of the zero module; nothing to do
    } else {
        HomMatrix aug = HomMatrix::from_columns(g.target().cover(), cols, 0);
        for (const auto& k : kernel_gens(aug)) {
            ModVector u(F2);
            bool nonzero = false;
            for (size_t i = 0; i < F2.rank(); ++i) {
                u[i] = k[i];
                nonzero = nonzero || !u[i].is_zero();
            }
            if (nonzero)
                ugens.push_back(u);
        }
        sort_vectors(ugens);
        ugens.erase(std::unique(ugens.begin(), ugens.end(),
                                [](const ModVector& a, const ModVector& b) { return a == b; }),
                    ugens.end());
    }

    if (ugens.empty()) {
        HomologyResult res;
        res.module = PresentedModule::zero(F2.ring);
        return res;
    }

    // H = U / (im f + relations(M2)); relations of the presentation are the
    // syzygies of the U generators plus lifts of the divided-out vectors.
    HomMatrix U = HomMatrix::from_columns(F2, ugens, 0);
    ColumnAnalysis ua(U);

    std::vector<ModVector> hrels = ua.kernel();
    auto lift_in = [&](const ModVector& v, const char* what) {
        if (v.is_zero())
            return;
        auto u = ua.lift(v);
        if (!u)
            throw std::logic_error(std::string("homology: ") + what +
                                   " does not lie in the kernel submodule");
        hrels.push_back(*u);
    };
    for (size_t s = 0; s < f.matrix().cols(); ++s)
        lift_in(f.matrix().col(s), "image of f");
    for (const auto& r : M2.relations())
        lift_in(r, "relation of middle module");

    HomologyResult res;
    res.module = PresentedModule(U.source(), hrels);
    res.reps = ugens;
    return res;
}

PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& f)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument("quotient by inhomogeneous element");
    std::vector<ModVector> rels = M.relations();
    for (size_t i = 0; i < M.ngens(); ++i) {
        ModVector v(M.cover());
        v[i] = f;
        rels.push_back(v);
    }
    return PresentedModule(M.cover(), rels);
}

PresentedModule identify_variables(const PresentedModule& M, const RingPtr& target,
                                   const std::vector<std::vector<int>>& classes)
{
    const RingPtr& S = M.ring();
    if (classes.size() != target->nvars())
        throw std::invalid_argument("identify_variables: one class per target variable");
    std::vector<int> class_of(S->nvars(), -1);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) {
            if (v < 0 || size_t(v) >= S->nvars() || class_of[v] != -1)
                throw std::invalid_argument("identify_variables: malformed class partition");
            class_of[v] = int(c);
        }
    for (size_t v = 0; v < S->nvars(); ++v)
        if (class_of[v] == -1)
            throw std::invalid_argument("identify_variables: variable not covered by a class");

    // precondition: within a class, variable differences must kill M
    for (const auto& cls : classes)
        for (size_t a = 1; a < cls.size(); ++a) {
            Polynomial diff = Polynomial::variable(S, cls[0]) - Polynomial::variable(S, cls[a]);
            for (size_t i = 0; i < M.ngens(); ++i) {
                ModVector v(M.cover());
                v[i] = diff;
                if (!M.reduce(v).is_zero())
                    throw std::invalid_argument(
                        "identify_variables: " + S->vars()[cls[0]] + " - " + S->vars()[cls[a]] +
                        " does not annihilate the module (component assignment bug?)");
            }
        }

    std::vector<Polynomial> images;
    for (size_t v = 0; v < S->nvars(); ++v)
        images.push_back(Polynomial::variable(target, class_of[v]));

    FreeModule cover(target, M.cover().shifts);
    std::vector<ModVector> rels;
    for (const auto& r : M.relations()) {
        ModVector v(cover);
        for (size_t i = 0; i < r.size(); ++i)
            v[i] = r[i].map_variables(target, images);
        rels.push_back(v);
    }
    return PresentedModule(cover, rels);
}

PresentedModule tensor_over_Q(const PresentedModule& M, const PresentedModule& N)
{
    const auto& mv = M.ring()->vars();
    const auto& nv = N.ring()->vars();
    std::vector<std::string> vars = mv;
    for (const auto& v : nv) {
        if (std::find(mv.begin(), mv.end(), v) != mv.end())
            throw std::invalid_argument("tensor_over_Q: variable name collision: " + v);
        vars.push_back(v);
    }
    RingPtr T = make_ring(vars);

    std::vector<Polynomial> mimg, nimg;
    for (size_t i = 0; i < mv.size(); ++i)
        mimg.push_back(Polynomial::variable(T, int(i)));
    for (size_t j = 0; j < nv.size(); ++j)
        nimg.push_back(Polynomial::variable(T, int(mv.size() + j)));

    size_t gm = M.ngens(), gn = N.ngens();
    std::vector<int> shifts;
    for (size_t i = 0; i < gm; ++i)
        for (size_t j = 0; j < gn; ++j)
            shifts.push_back(M.cover().shifts[i] + N.cover().shifts[j]);
    FreeModule cover(T, shifts);

    auto pos = [&](size_t i, size_t j) { return i * gn + j; };
    std::vector<ModVector> rels;
    for (const auto& r : M.relations())
        for (size_t j = 0; j < gn; ++j) {
            ModVector v(cover);
            for (size_t i = 0; i < gm; ++i)
                v[pos(i, j)] = r[i].map_variables(T, mimg);
            rels.push_back(v);
        }
    for (const auto& r : N.relations())
        for (size_t i = 0; i < gm; ++i) {
            ModVector v(cover);
            for (size_t j = 0; j < gn; ++j)
                v[pos(i, j)] = r[j].map_variables(T, nimg);
            rels.push_back(v);
        }
    return PresentedModule(cover, rels);
}

namespace {

struct RawChain {
    // shifts[p] = generator degrees of F_p; mats[p][r][c] entry of F_{p+1} -> F_p
    std::vector<std::vector<int>> shifts;
    std::vector<std::vector<std::vector<Polynomial>>> mats;
    RingPtr ring;
};

RawChain to_raw(const std::vector<HomMatrix>& chain)
{
    RawChain rc;
    rc.ring = chain.front().target().ring;
    rc.shifts.push_back(chain.front().target().shifts);
    for (const auto& m : chain)
        rc.shifts.push_back(m.source().shifts);
    for (const auto& m : chain) {
        std::vector<std::vector<Polynomial>> grid(m.rows(), std::vector<Polynomial>(m.cols()));
        for (size_t r = 0; r < m.rows(); ++r)
            for (size_t c = 0; c < m.cols(); ++c)
                grid[r][c] = m.entry(r, c);
        rc.mats.push_back(std::move(grid));
    }
    return rc;
}

std::vector<HomMatrix> from_raw(const RawChain& rc)
{
    std::vector<HomMatrix> out;
    for (size_t p = 0; p < rc.mats.size(); ++p) {
        FreeModule tgt(rc.ring, rc.shifts[p]);
        FreeModule src(rc.ring, rc.shifts[p + 1]);
        HomMatrix m(src, tgt);
        for (size_t r = 0; r < rc.mats[p].size(); ++r)
            for (size_t c = 0; c < rc.mats[p][r].size(); ++c)
                m.set_entry(r, c, rc.mats[p][r][c]);
        out.push_back(std::move(m));
    }
    return out;
}

bool find_unit(const RawChain& rc, size_t& p, size_t& i, size_t& j)
{
    for (size_t q = 0; q < rc.mats.size(); ++q)
        for (size_t r = 0; r < rc.mats[q].size(); ++r)
            for (size_t c = 0; c < rc.mats[q][r].size(); ++c) {
                const Polynomial& e = rc.mats[q][r][c];
                if (!e.is_zero() && e.is_constant()) {
                    p = q;
                    i = r;
                    j = c;
                    return true;
                }
            }
    return false;
}

} // namespace

void minimize_chain(std::vector<HomMatrix>& chain)
{
    if (chain.empty())
        return;
    RawChain rc = to_raw(chain);

    size_t p, i, j;
    while (find_unit(rc, p, i, j)) {
        auto& M = rc.mats[p];
        size_t rows = M.size();
        size_t cols = rows ? M[0].size() : 0;
        Rational c = M[i][j].lead_coeff();

        // clear row i in other columns (source basis change of F_{p+1};
        // incoming matrix rows pick up the multiplier)
        for (size_t l = 0; l < cols; ++l) {
            if (l == j || M[i][l].is_zero())
                continue;
            Polynomial t = M[i][l] * Rational(1 / c);
            for (size_t r = 0; r < rows; ++r)
                M[r][l] = M[r][l] - t * M[r][j];
            if (p + 1 < rc.mats.size()) {
                auto& N = rc.mats[p + 1];
                size_t ncols = N.empty() ? 0 : N[0].size();
                for (size_t s = 0; s < ncols; ++s)
                    N[j][s] = N[j][s] + t * N[l][s];
            }
        }
        // clear column j in other rows (target basis change of F_p;
        // outgoing matrix columns pick up the multiplier)
        for (size_t r = 0; r < rows; ++r) {
            if (r == i || M[r][j].is_zero())
                continue;
            Polynomial u = M[r][j] * Rational(1 / c);
            for (size_t l = 0; l < cols; ++l)
                M[r][l] = M[r][l] - u * M[i][l];
            if (p >= 1) {
                auto& P = rc.mats[p - 1];
                for (size_t x = 0; x < P.size(); ++x)
                    P[x][i] = P[x][i] + u * P[x][r];
            }
        }

        // the cancelled summand must split off cleanly on both sides
        if (p >= 1) {
            auto& P = rc.mats[p - 1];
            for (size_t x = 0; x < P.size(); ++x)
                if (!P[x][i].is_zero())
                    throw std::logic_error("minimize_chain: composite not zero");
            for (size_t x = 0; x < P.size(); ++x)
                P[x].erase(P[x].begin() + i);
        }
        if (p + 1 < rc.mats.size()) {
            auto& N = rc.mats[p + 1];
            size_t ncols = N.empty() ? 0 : N[0].size();
            for (size_t s = 0; s < ncols; ++s)
                if (!N[j][s].is_zero())
                    throw std::logic_error("minimize_chain: incoming row not cleared");
            N.erase(N.begin() + j);
        }
        M.erase(M.begin() + i);
        for (auto& row : M)
            row.erase(row.begin() + j);
        rc.shifts[p].erase(rc.shifts[p].begin() + i);
        rc.shifts[p + 1].erase(rc.shifts[p + 1].begin() + j);
    }

    chain = from_raw(rc);
}

} // namespace homlink
