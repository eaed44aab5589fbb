#include "pclie/graph.hpp"

#include <algorithm>

#include <json.hpp>

namespace pclie {

CommutationGraph::CommutationGraph(Alphabet alphabet, std::vector<std::pair<Letter, Letter>> edges)
    : alphabet_(std::move(alphabet)) {
    const int n = alphabet_.size();
    adj_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("graph: edge references an invalid letter");
        if (a == b)
            throw std::invalid_argument("graph: loop edge on '" + alphabet_.name(a) + "'");
        adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        adj_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    }
    for (Letter a = 0; a < n; ++a)
        for (Letter b = a + 1; b < n; ++b)
            if (adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                edges_.emplace_back(a, b);
}

bool CommutationGraph::adjacent(Letter a, Letter b) const {
    if (a < 0 || a >= vertex_count() || b < 0 || b >= vertex_count())
        return false;
    return adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::vector<Letter> CommutationGraph::neighbors(Letter v) const {
    std::vector<Letter> out;
    for (Letter u = 0; u < vertex_count(); ++u)
        if (adjacent(v, u))
            out.push_back(u);
    return out;
}

CommutationGraph parse_graph(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph: invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("graph: top-level value must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "vertices" && key != "edges")
            throw ParseError("graph: unknown key '" + key + "'");
    }
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph: missing \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("graph: missing \"edges\" array");

    std::vector<std::string> names;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw ParseError("graph: vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    auto alphabet = [&]() -> Alphabet {
        try {
            return Alphabet(std::move(names));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("graph: ") + e.what());
        }
    }();

    std::vector<std::pair<Letter, Letter>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("graph: each edge must be a 2-element array of vertex names");
        auto a = alphabet.find(e[0].get<std::string>());
        auto b = alphabet.find(e[1].get<std::string>());
        if (!a || !b)
            throw ParseError("graph: edge references unknown vertex");
        if (*a == *b)
            throw ParseError("graph: loop edge on '" + e[0].get<std::string>() + "'");
        edges.emplace_back(*a, *b);
    }
    try {
        return CommutationGraph(std::move(alphabet), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

std::string serialize_graph(const CommutationGraph& g) {
    nlohmann::json j;
    j["vertices"] = g.alphabet().names();
    auto edges = nlohmann::json::array();
    for (auto [a, b] : g.edges())
        edges.push_back({g.alphabet().name(a), g.alphabet().name(b)});
    j["edges"] = std::move(edges);
    return j.dump();
}

std::vector<std::uint64_t> clique_counts(const CommutationGraph& g, int max_k) {
    if (max_k < 1)
        throw std::invalid_argument("clique_counts: max_k must be >= 1");
    const int n = g.vertex_count();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_k) + 1, 0);
    counts[0] = 1;

    // Extend cliques one vertex at a time, vertices in increasing order.
    std::vector<Letter> clique;
    auto extend = [&](auto&& self, Letter next) -> void {
        const int k = static_cast<int>(clique.size());
        if (k >= 1 && k <= max_k)
            ++counts[static_cast<std::size_t>(k)];
        if (k == max_k)
            return;
        for (Letter v = next; v < n; ++v) {
            bool ok = true;
            for (Letter u : clique)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            clique.push_back(v);
            self(self, v + 1);
            clique.pop_back();
        }
    };
    extend(extend, 0);
    return counts;
}

}  // namespace pclie
