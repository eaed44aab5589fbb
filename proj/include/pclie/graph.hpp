#ifndef PCLIE_GRAPH_HPP
#define PCLIE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pclie/words.hpp"

namespace pclie {

// Commutation graph: undirected, loop-free, on the letters of an alphabet.
// An edge {x,y} means the generators x and y commute. The vertex order of
// the defining file is the letter order.
class CommutationGraph {
public:
    CommutationGraph(Alphabet alphabet, std::vector<std::pair<Letter, Letter>> edges);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    int vertex_count() const noexcept { return alphabet_.size(); }
    bool adjacent(Letter a, Letter b) const;
    // Normalized: each pair (a,b) with a < b, sorted, no duplicates.
    const std::vector<std::pair<Letter, Letter>>& edges() const noexcept { return edges_; }
    std::vector<Letter> neighbors(Letter v) const;

private:
    Alphabet alphabet_;
    std::vector<std::pair<Letter, Letter>> edges_;
    std::vector<std::vector<bool>> adj_;
};

// JSON object with exactly the keys "vertices" (array of distinct strings,
// order = ascending letter order) and "edges" (array of 2-element string
// arrays). Throws ParseError on malformed input, unknown vertices, loops,
// duplicate vertices, or extra keys.
CommutationGraph parse_graph(std::string_view json_text);

std::string serialize_graph(const CommutationGraph& g);

// c_0 = 1, c_1 = |X|, c_k = number of k-vertex cliques, by exhaustive
// extension. Desk-scale graphs only.
std::vector<std::uint64_t> clique_counts(const CommutationGraph& g, int max_k);

}  // namespace pclie

#endif
