#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homlink/braid.hpp"

using namespace homlink;

TEST_CASE("closure of the positive Hopf word")
{
    auto d = close(parse_braid("1 1", 2));
    CHECK(d.num_edges == 4);
    CHECK(d.crossings.size() == 2);
    CHECK(d.num_components == 2);
    CHECK(d.writhe == 2);
    CHECK(d.circle_edges.empty());
    // edges 1 and 2 (0-based 0,1) lie on distinct components
    CHECK(d.edge_component[0] == 0);
    CHECK(d.edge_component[1] == 1);
}

TEST_CASE("closure of the empty word is a crossingless circle")
{
    auto d = close(BraidWord(1, {}));
    CHECK(d.num_edges == 1);
    CHECK(d.crossings.empty());
    CHECK(d.num_components == 1);
    CHECK(d.writhe == 0);
    CHECK(d.circle_edges.size() == 1);
}

TEST_CASE("closure of sigma_1^3 is a knot")
{
    auto d = close(parse_braid("1 1 1", 2));
    CHECK(d.num_edges == 6);
    CHECK(d.crossings.size() == 3);
    CHECK(d.num_components == 1);
    CHECK(d.writhe == 3);
}

TEST_CASE("edge counting: two edges per crossing plus circles")
{
    std::vector<std::pair<std::string, int>> words = {
        {"1 1", 2}, {"1 1 1", 2}, {"1 2 1 2", 3}, {"1 1 2", 3}, {"1", 3}};
    for (const auto& [text, strands] : words) {
        auto d = close(parse_braid(text, strands));
        CHECK(d.num_edges ==
              2 * int(d.crossings.size()) + int(d.circle_edges.size()));
        // every edge is on exactly one component
        for (int e = 0; e < d.num_edges; ++e) {
            CHECK(d.edge_component[e] >= 0);
            CHECK(d.edge_component[e] < d.num_components);
        }
    }
}

TEST_CASE("split_union reindexes and appends")
{
    auto hopf = parse_braid("1 1", 2);
    auto u = split_union(hopf, hopf);
    CHECK(u.strands == 4);
    CHECK(u.text() == "1 1 3 3");

    auto w = split_union(hopf, BraidWord(1, {}));
    CHECK(w.strands == 3);
    CHECK(w.text() == "1 1");
    auto d = close(w);
    CHECK(d.num_components == 3);
    CHECK(d.circle_edges.size() == 1);

    // closure of sigma_1 ⊔ sigma_1 is a 2-component unlink
    auto v = split_union(parse_braid("1", 2), parse_braid("1", 2));
    CHECK(v.text() == "1 3");
    auto dv = close(v);
    CHECK(dv.num_components == 2);
}

TEST_CASE("writhe, strand count and components add under split union")
{
    auto a = parse_braid("1 1 1", 2);
    auto b = parse_braid("1 1", 2);
    auto u = split_union(a, b);
    CHECK(u.strands == a.strands + b.strands);
    CHECK(u.writhe() == a.writhe() + b.writhe());
    CHECK(close(u).num_components == close(a).num_components + close(b).num_components);
}

TEST_CASE("is_positive")
{
    CHECK(is_positive(parse_braid("1 1", 2)));
    CHECK_FALSE(is_positive(parse_braid("-1", 2)));
    CHECK(is_positive(BraidWord(1, {})));
}

TEST_CASE("markov_test_pairs")
{
    auto pairs = markov_test_pairs();
    CHECK(pairs.size() >= 4);
    for (const auto& [w1, w2] : pairs) {
        CHECK(is_positive(w1));
        CHECK(is_positive(w2));
        CHECK(close(w1).num_components == close(w2).num_components);
    }
}

TEST_CASE("braid parsing rejects bad input")
{
    CHECK_THROWS(parse_braid("0", 2));
    CHECK_THROWS(parse_braid("2", 2));  // generator out of range for 2 strands
    CHECK_THROWS(parse_braid("1 x", 2));
}

TEST_CASE("diagram json is well formed enough to inspect")
{
    auto d = close(parse_braid("1 1", 2));
    auto s = diagram_json(d);
    CHECK(s.find("\"components\":2") != std::string::npos);
    CHECK(s.find("\"crossings\"") != std::string::npos);
}
