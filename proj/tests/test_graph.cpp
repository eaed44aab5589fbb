#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pclie/graph.hpp"
#include "support/oracles.hpp"

using namespace pclie;
using namespace pclie::testing;

TEST_CASE("parse_graph: worked examples") {
    auto k2 = parse_graph(R"({"vertices":["x1","x2"],"edges":[["x1","x2"]]})");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(k2.alphabet().name(0) == "x1");

    auto p3 = parse_graph(R"({"vertices":["x1","x2","x3"],"edges":[["x1","x2"],["x2","x3"]]})");
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK_FALSE(p3.adjacent(1, 1));

    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1"],"edges":[["x1","x1"]]})"), ParseError);
}

TEST_CASE("parse_graph: malformed input") {
    CHECK_THROWS_AS(parse_graph("not json"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"(["x1"])"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1","x1"],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1"],"edges":[["x1","x9"]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1"],"edges":[],"extra":1})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1"]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices":["x1"],"edges":[["x1"]]})"), ParseError);
}

TEST_CASE("duplicate edges collapse and order is normalized") {
    auto g = parse_graph(R"({"vertices":["a","b","c"],"edges":[["b","a"],["a","b"],["b","c"]]})");
    CHECK(g.edges() == std::vector<std::pair<Letter, Letter>>{{0, 1}, {1, 2}});
    CHECK(g.neighbors(1) == std::vector<Letter>{0, 2});
}

TEST_CASE("serialize then parse is the identity on valid graphs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 2 + draw(rng, 4);
        std::vector<std::pair<Letter, Letter>> edges;
        for (Letter a = 0; a < n; ++a)
            for (Letter b = a + 1; b < n; ++b)
                if (rng() & 1u)
                    edges.emplace_back(a, b);
        CommutationGraph g(make_alphabet(n), edges);
        CommutationGraph back = parse_graph(serialize_graph(g));
        CHECK(back.alphabet() == g.alphabet());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("graph parser survives arbitrary input") {
    const std::string chars = "{}[]\",:x12vertices edg";
    std::mt19937 rng(101);
    for (int iter = 0; iter < 3000; ++iter) {
        std::string text;
        const int len = draw(rng, 40);
        for (int i = 0; i < len; ++i)
            text += chars[static_cast<std::size_t>(draw(rng, static_cast<int>(chars.size())))];
        try {
            parse_graph(text);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("clique_counts: worked examples") {
    CHECK(clique_counts(path_graph(3), 3) == std::vector<std::uint64_t>{1, 3, 2, 0});
    CHECK(clique_counts(complete_graph(3), 3) == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(clique_counts(edgeless_graph(3), 2) == std::vector<std::uint64_t>{1, 3, 0});
}

TEST_CASE("clique_counts: binomial bounds and complete-graph total") {
    for (int n = 1; n <= 6; ++n) {
        auto counts = clique_counts(complete_graph(n), n);
        std::uint64_t total = 0;
        for (auto c : counts)
            total += c;
        CHECK(total == (1ull << n));
    }
    std::mt19937 rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        const int n = 2 + draw(rng, 5);
        std::vector<std::pair<Letter, Letter>> edges;
        for (Letter a = 0; a < n; ++a)
            for (Letter b = a + 1; b < n; ++b)
                if (rng() & 1u)
                    edges.emplace_back(a, b);
        CommutationGraph g(make_alphabet(n), edges);
        auto counts = clique_counts(g, n);
        std::uint64_t choose = 1;
        for (int k = 1; k <= n; ++k) {
            choose = choose * static_cast<std::uint64_t>(n - k + 1) / static_cast<std::uint64_t>(k);
            CHECK(counts[static_cast<std::size_t>(k)] <= choose);
        }
        CHECK(counts[1] == static_cast<std::uint64_t>(n));
    }
}
