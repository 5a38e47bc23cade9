#pragma once

#include <string>
#include <utility>
#include <vector>

namespace homlink {

/* Braid word on `strands` strands; letters are (generator index i with
 * 1 <= i <= strands-1, sign ±1). The empty word is allowed. */
struct BraidWord {
    int strands = 1;
    std::vector<std::pair<int, int>> letters;

    BraidWord() = default;
    BraidWord(int b, std::vector<std::pair<int, int>> ls);

    int writhe() const;
    std::string text() const; // whitespace-separated signed generator indices
};

bool is_positive(const BraidWord& w);

/* Parses whitespace-separated signed integers, e.g. "1 1" or "-2 1". */
BraidWord parse_braid(const std::string& text, int strands);

/* Side-by-side union: letters of w2 re-indexed by +w1.strands and appended. */
BraidWord split_union(const BraidWord& w1, const BraidWord& w2);

/* One crossing of a closed braid diagram. Edges are identified by ids; the
 * strand entering at the left position crosses over for a positive letter
 * and exits right. */
struct Crossing {
    int sign;                 // +1 or -1
    int in_left, in_right;    // incoming edge ids at positions (i, i+1)
    int out_left, out_right;  // outgoing edge ids at positions (i, i+1)
    int position;             // generator index i (1-based)
};

/* Closure of a braid word as a combinatorial diagram. Edges are numbered so
 * that edge l (0-based: l-1) lies on component K_l for l = 1..m; crossingless
 * strands close into single-edge circles. */
struct ClosedBraidDiagram {
    BraidWord word;
    int num_edges = 0;
    int num_components = 0;
    int writhe = 0;
    std::vector<int> edge_component; // component id (0-based) per edge
    std::vector<Crossing> crossings;
    std::vector<int> circle_edges; // edges forming crossingless circles

    int strands() const { return word.strands; }
};

ClosedBraidDiagram close(const BraidWord& w);

/* Built-in positive-word pairs representing the same link, for invariance
 * tests: unknot + stabilization, trefoil + stabilization, two positive
 * trefoil presentations, Hopf + stabilization. */
std::vector<std::pair<BraidWord, BraidWord>> markov_test_pairs();

/* Number of split pieces of the diagram: connected components of the strand
 * graph whose edges are the letters (crossingless strands count alone). */
int diagram_split_pieces(const BraidWord& w);

/* Diagram dump (edges, crossings, components) as a JSON string. */
std::string diagram_json(const ClosedBraidDiagram& d);

} // namespace homlink
