#include <gtest/gtest.h>

#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "packlab/errors.hpp"
#include "packlab/graph_io.hpp"

namespace packlab {
namespace {

// Independent graph6 reader: expands the body into a bit string first.
Graph decode_graph6_by_bitstring(const std::string& s) {
    const std::size_t n = static_cast<unsigned char>(s[0]) - 63;  // small graphs only
    std::string bits;
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int v = static_cast<unsigned char>(s[i]) - 63;
        for (int b = 5; b >= 0; --b) bits.push_back(((v >> b) & 1) ? '1' : '0');
    }
    std::vector<std::pair<Vertex, Vertex>> es;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (bits.at(k++) == '1') es.emplace_back(i, j);
    return build_graph(n, es);
}

TEST(EdgeList, ParsesWithComments) {
    EXPECT_EQ(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n"), fixtures::c4());
    EXPECT_EQ(parse_edge_list("# a comment\n\n3 1\n# another\n2 1\n"), build_graph(3, {{1, 2}}));
}

TEST(EdgeList, CanonicalEncoding) {
    EXPECT_EQ(format_edge_list(fixtures::k3()), "3 3\n0 1\n0 2\n1 2\n");
    EXPECT_EQ(format_edge_list(build_graph(3, {{2, 1}, {1, 0}})), "3 2\n0 1\n1 2\n");
}

TEST(EdgeList, ErrorsCarryPosition) {
    try {
        parse_edge_list("3 2\n0 1\n1 x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n0 5\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1 7\n0 1\n"), ParseError);
    EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), InputError);
}

TEST(Graph6, K4FromC) {
    const Graph k4 = oracle::graph_from_mask(4, 0b111111);
    EXPECT_EQ(parse_graph6("C~"), k4);
    EXPECT_EQ(decode_graph6_by_bitstring("C~"), k4);
    EXPECT_EQ(format_graph6(k4), "C~\n");
}

TEST(Graph6, MatchesIndependentDecoder) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Graph g = random_graph(1 + seed % 20, 0.35, seed);
        std::string s = format_graph6(g);
        s.pop_back();
        EXPECT_EQ(decode_graph6_by_bitstring(s), g);
    }
}

TEST(Graph6, RejectsMalformed) {
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);     // truncated body
    EXPECT_THROW(parse_graph6("C~~"), ParseError);   // body too long
    EXPECT_THROW(parse_graph6("C\x7f"), ParseError); // character out of range
    EXPECT_THROW(parse_graph6("Bp"), ParseError);    // non-zero padding (3 vertices, 3 bits)
}

// Property: decode(encode(g)) = g for both formats, including the 4-byte
// graph6 size header.
TEST(Codec, RoundTripRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t n = seed % 3 == 0 ? 60 + seed % 20 : seed % 25;
        const Graph g = random_graph(n, 0.05 + (seed % 10) * 0.09, seed);
        for (GraphFormat f : {GraphFormat::EdgeList, GraphFormat::Graph6}) ASSERT_EQ(decode_graph(encode_graph(g, f), f), g);
    }
}

}  // namespace
}  // namespace packlab
