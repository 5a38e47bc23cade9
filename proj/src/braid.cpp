#include "homlink/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace homlink {

BraidWord::BraidWord(int b, std::vector<std::pair<int, int>> ls)
    : strands(b), letters(std::move(ls))
{
    if (strands < 1)
        throw std::invalid_argument("braid needs at least one strand");
    for (auto [i, s] : letters) {
        if (i < 1 || i > strands - 1)
            throw std::invalid_argument("generator index out of range: " + std::to_string(i));
        if (s != 1 && s != -1)
            throw std::invalid_argument("crossing sign must be ±1");
    }
}

int BraidWord::writhe() const
{
    int w = 0;
    for (auto [i, s] : letters)
        w += s;
    return w;
}

std::string BraidWord::text() const
{
    std::ostringstream out;
    for (size_t k = 0; k < letters.size(); ++k) {
        if (k)
            out << " ";
        out << letters[k].first * letters[k].second;
    }
    return out.str();
}

bool is_positive(const BraidWord& w)
{
    for (auto [i, s] : w.letters)
        if (s != 1)
            return false;
    return true;
}

BraidWord parse_braid(const std::string& text, int strands)
{
    std::istringstream in(text);
    std::vector<std::pair<int, int>> letters;
    long v;
    while (in >> v) {
        if (v == 0)
            throw std::invalid_argument("braid letter 0 is not a generator");
        letters.emplace_back(int(std::abs(v)), v > 0 ? 1 : -1);
    }
    if (!in.eof())
        throw std::invalid_argument("bad braid word: " + text);
    return BraidWord(strands, std::move(letters));
}

BraidWord split_union(const BraidWord& w1, const BraidWord& w2)
{
    std::vector<std::pair<int, int>> letters = w1.letters;
    for (auto [i, s] : w2.letters)
        letters.emplace_back(i + w1.strands, s);
    return BraidWord(w1.strands + w2.strands, std::move(letters));
}

ClosedBraidDiagram close(const BraidWord& w)
{
    int b = w.strands;
    int n = int(w.letters.size());

    // Segments (level, position) with level 0..n and position 1..b; an edge
    // is a run of segments between crossings, with closure level n ~ level 0.
    // raw_edge[t][p-1]: edge id of the segment at level t, position p.
    std::vector<std::vector<int>> raw(n + 1, std::vector<int>(b, -1));
    int next = 0;
    for (int p = 0; p < b; ++p)
        raw[0][p] = next++;
    for (int t = 1; t <= n; ++t) {
        int gen = w.letters[t - 1].first; // crossing between levels t-1, t
        for (int p = 0; p < b; ++p) {
            if (p + 1 == gen || p + 1 == gen + 1)
                raw[t][p] = -1; // new edge starts after the crossing
            else
                raw[t][p] = raw[t - 1][p];
        }
        for (int p = 0; p < b; ++p)
            if (raw[t][p] == -1)
                raw[t][p] = next++;
    }
    // closure: top segments are the bottom segments
    std::vector<int> remap(next);
    std::iota(remap.begin(), remap.end(), 0);
    for (int p = 0; p < b; ++p) {
        int top = raw[n][p];
        int bot = raw[0][p];
        if (top != bot) {
            for (int t = 0; t <= n; ++t)
                for (int q = 0; q < b; ++q)
                    if (raw[t][q] == top)
                        raw[t][q] = bot;
        }
    }
    // compress ids
    std::map<int, int> compress;
    for (int t = 0; t <= n; ++t)
        for (int p = 0; p < b; ++p)
            if (!compress.count(raw[t][p])) {
                int id = int(compress.size());
                compress[raw[t][p]] = id;
            }
    for (int t = 0; t <= n; ++t)
        for (int p = 0; p < b; ++p)
            raw[t][p] = compress[raw[t][p]];
    int nedges = int(compress.size());

    // component of each position, per level
    std::vector<int> comp_at_pos(b, -1);
    {
        // cycles of the permutation taking bottom position to top position:
        // strand starting at p ends at position sigma(p); components are the
        // cycles of sigma.
        std::vector<int> sigma(b);
        for (int p = 0; p < b; ++p) {
            int cur = p;
            for (auto [i, s] : w.letters) {
                if (cur == i - 1)
                    cur = i;
                else if (cur == i)
                    cur = i - 1;
            }
            sigma[p] = cur;
        }
        int c = 0;
        for (int p = 0; p < b; ++p) {
            if (comp_at_pos[p] != -1)
                continue;
            int cur = p;
            while (comp_at_pos[cur] == -1) {
                comp_at_pos[cur] = c;
                cur = sigma[cur];
            }
            ++c;
        }
    }

    // component of every edge: walk levels, swapping the component layout at
    // each crossing
    std::vector<int> edge_comp_raw(nedges, -1);
    std::vector<int> layout = comp_at_pos; // component occupying position p at level t
    for (int t = 0; t <= n; ++t) {
        if (t > 0) {
            int i = w.letters[t - 1].first;
            std::swap(layout[i - 1], layout[i]);
        }
        for (int p = 0; p < b; ++p)
            edge_comp_raw[raw[t][p]] = layout[p];
    }
    int ncomp = 1 + *std::max_element(comp_at_pos.begin(), comp_at_pos.end());

    // renumber components by their smallest raw edge, then renumber edges so
    // the l-th edge lies on component K_l
    std::vector<int> comp_first_edge(ncomp, nedges);
    for (int e = 0; e < nedges; ++e)
        comp_first_edge[edge_comp_raw[e]] = std::min(comp_first_edge[edge_comp_raw[e]], e);
    std::vector<int> comp_order(ncomp);
    std::iota(comp_order.begin(), comp_order.end(), 0);
    std::sort(comp_order.begin(), comp_order.end(),
              [&](int a, int bq) { return comp_first_edge[a] < comp_first_edge[bq]; });
    std::vector<int> comp_rename(ncomp);
    for (int c = 0; c < ncomp; ++c)
        comp_rename[comp_order[c]] = c;
    for (int& c : edge_comp_raw)
        c = comp_rename[c];

    std::vector<int> edge_rename(nedges, -1);
    int next_id = 0;
    for (int c = 0; c < ncomp; ++c) {
        // designated edge of component c: smallest raw id on it
        for (int e = 0; e < nedges; ++e)
            if (edge_comp_raw[e] == c) {
                edge_rename[e] = next_id++;
                break;
            }
    }
    for (int e = 0; e < nedges; ++e)
        if (edge_rename[e] == -1)
            edge_rename[e] = next_id++;

    ClosedBraidDiagram d;
    d.word = w;
    d.num_edges = nedges;
    d.num_components = ncomp;
    d.writhe = w.writhe();
    d.edge_component.assign(nedges, -1);
    for (int e = 0; e < nedges; ++e)
        d.edge_component[edge_rename[e]] = edge_comp_raw[e];

    for (int t = 1; t <= n; ++t) {
        auto [i, s] = w.letters[t - 1];
        Crossing c;
        c.sign = s;
        c.position = i;
        c.in_left = edge_rename[raw[t - 1][i - 1]];
        c.in_right = edge_rename[raw[t - 1][i]];
        c.out_left = edge_rename[raw[t][i - 1]];
        c.out_right = edge_rename[raw[t][i]];
        d.crossings.push_back(c);
    }

    // crossingless circles: strand positions never touched by a letter
    std::vector<bool> touched(b, false);
    for (auto [i, s] : w.letters)
        touched[i - 1] = touched[i] = true;
    for (int p = 0; p < b; ++p)
        if (!touched[p])
            d.circle_edges.push_back(edge_rename[raw[0][p]]);

    return d;
}

std::vector<std::pair<BraidWord, BraidWord>> markov_test_pairs()
{
    auto W = [](int b, std::vector<std::pair<int, int>> ls) {
        return BraidWord(b, std::move(ls));
    };
    std::vector<std::pair<BraidWord, BraidWord>> pairs;
    // unknot and its stabilization
    pairs.emplace_back(W(1, {}), W(2, {{1, 1}}));
    // trefoil and a stabilization
    pairs.emplace_back(W(2, {{1, 1}, {1, 1}, {1, 1}}),
                       W(3, {{1, 1}, {1, 1}, {1, 1}, {2, 1}}));
    // two positive presentations of the trefoil
    pairs.emplace_back(W(2, {{1, 1}, {1, 1}, {1, 1}}),
                       W(3, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
    // Hopf link and a stabilization
    pairs.emplace_back(W(2, {{1, 1}, {1, 1}}), W(3, {{1, 1}, {1, 1}, {2, 1}}));
    return pairs;
}

int diagram_split_pieces(const BraidWord& w)
{
    std::vector<int> parent(w.strands);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, s] : w.letters)
        parent[find(i - 1)] = find(i);
    int pieces = 0;
    for (int p = 0; p < w.strands; ++p)
        if (find(p) == p)
            ++pieces;
    return pieces;
}

std::string diagram_json(const ClosedBraidDiagram& d)
{
    std::ostringstream out;
    out << "{\"strands\":" << d.strands() << ",\"writhe\":" << d.writhe
        << ",\"components\":" << d.num_components << ",\"edges\":[";
    for (int e = 0; e < d.num_edges; ++e) {
        if (e)
            out << ",";
        out << "{\"id\":" << e + 1 << ",\"component\":" << d.edge_component[e] + 1 << "}";
    }
    out << "],\"crossings\":[";
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        const Crossing& x = d.crossings[c];
        if (c)
            out << ",";
        out << "{\"sign\":" << x.sign << ",\"in\":[" << x.in_left + 1 << "," << x.in_right + 1
            << "],\"out\":[" << x.out_left + 1 << "," << x.out_right + 1 << "]}";
    }
    out << "],\"circles\":[";
    for (size_t i = 0; i < d.circle_edges.size(); ++i) {
        if (i)
            out << ",";
        out << d.circle_edges[i] + 1;
    }
    out << "]}";
    return out.str();
}

} // namespace homlink
