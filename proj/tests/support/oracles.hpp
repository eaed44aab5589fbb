// Brute-force oracles and instance generators shared by the unit and
// acceptance suites. Everything here is independent of the library's
// production code paths it is used to check.

#ifndef PCLIE_TESTS_ORACLES_HPP
#define PCLIE_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pclie/graph.hpp"
#include "pclie/words.hpp"

namespace pclie::testing {

// Alphabet x1 < x2 < ... < xq.
inline Alphabet make_alphabet(int q) {
    std::vector<std::string> names;
    for (int i = 1; i <= q; ++i)
        names.push_back("x" + std::to_string(i));
    return Alphabet(std::move(names));
}

// Word and tree builders taking 1-based letter numbers, so tests read like
// the worked examples: W({3,1}) is x3x1, L(3) is the leaf x3.
inline Word W(std::initializer_list<int> one_based) {
    std::vector<Letter> letters;
    for (int x : one_based)
        letters.push_back(static_cast<Letter>(x - 1));
    return Word(std::move(letters));
}

inline NWord L(int one_based) { return NWord::leaf(static_cast<Letter>(one_based - 1)); }
inline NWord P(const NWord& a, const NWord& b) { return NWord::pair(a, b); }

// All words of exactly this length over letters 0..q-1, lex ascending.
inline std::vector<Word> all_words(int q, int len) {
    std::vector<Word> out;
    std::vector<Letter> cur(static_cast<std::size_t>(len), 0);
    for (;;) {
        out.emplace_back(cur);
        int i = len - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == q - 1)
            cur[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Independent ALSW characterization: u is aperiodic and strictly greater
// (letterwise, equal lengths) than every proper cyclic rotation.
inline bool is_alsw_rotation_oracle(const Word& u) {
    const int n = u.size();
    if (n == 0)
        return false;
    for (int r = 1; r < n; ++r) {
        std::vector<Letter> rot;
        for (int i = 0; i < n; ++i)
            rot.push_back(u[(r + i) % n]);
        if (rot == u.letters())
            return false;  // periodic
        for (int i = 0; i < n; ++i) {
            if (rot[static_cast<std::size_t>(i)] != u[i]) {
                if (rot[static_cast<std::size_t>(i)] > u[i])
                    return false;
                break;
            }
        }
    }
    return true;
}

// All Catalan-many bracketings of a word.
inline std::vector<NWord> all_bracketings(const Word& u) {
    if (u.size() == 1)
        return {NWord::leaf(u[0])};
    std::vector<NWord> out;
    for (int split = 1; split < u.size(); ++split)
        for (const NWord& l : all_bracketings(u.subword(0, split)))
            for (const NWord& r : all_bracketings(u.subword(split, u.size() - split)))
                out.push_back(NWord::pair(l, r));
    return out;
}

// All bracketing trees over all words of exactly this length.
inline std::vector<NWord> all_nwords(int q, int len) {
    std::vector<NWord> out;
    for (const Word& w : all_words(q, len))
        for (const NWord& t : all_bracketings(w))
            out.push_back(t);
    return out;
}

inline int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

// Witt / necklace numbers: dimensions of the free Lie algebra components.
inline std::int64_t necklace(std::int64_t q, int d) {
    std::int64_t sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0)
            continue;
        std::int64_t pw = 1;
        for (int i = 0; i < d / e; ++i)
            pw *= q;
        sum += moebius(e) * pw;
    }
    return sum / d;
}

// Deterministic psuedorandom helpers; mt19937 output is standardized, and
// only raw modular draws are used, so instances are identical everywhere.
inline int draw(std::mt19937& rng, int bound) { return static_cast<int>(rng() % static_cast<unsigned>(bound)); }

inline Word random_word(std::mt19937& rng, int q, int len) {
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i)
        letters.push_back(static_cast<Letter>(draw(rng, q)));
    return Word(std::move(letters));
}

// Rejection sampling; q >= 2 or len == 1 required for termination.
inline Word random_alsw(std::mt19937& rng, int q, int len) {
    for (;;) {
        Word w = random_word(rng, q, len);
        if (is_alsw(w))
            return w;
    }
}

inline NWord random_nword(std::mt19937& rng, int q, int len) {
    if (len == 1)
        return NWord::leaf(static_cast<Letter>(draw(rng, q)));
    const int split = 1 + draw(rng, len - 1);
    return NWord::pair(random_nword(rng, q, split), random_nword(rng, q, len - split));
}

// All labeled graphs on x1..xn.
inline std::vector<CommutationGraph> all_graphs_on(int n) {
    const Alphabet alphabet = make_alphabet(n);
    std::vector<std::pair<Letter, Letter>> slots;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = a + 1; b < n; ++b)
            slots.emplace_back(a, b);
    std::vector<CommutationGraph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<Letter, Letter>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask & (1u << i))
                edges.push_back(slots[i]);
        out.emplace_back(alphabet, std::move(edges));
    }
    return out;
}

// The 2^6 labeled graphs on x1..x4.
inline std::vector<CommutationGraph> all_graphs_on_4() { return all_graphs_on(4); }

// 20 fixed pseudorandom labeled graphs on x1..x5.
inline std::vector<CommutationGraph> fixed_graphs_on_5() {
    const Alphabet alphabet = make_alphabet(5);
    std::vector<std::pair<Letter, Letter>> slots;
    for (Letter a = 0; a < 5; ++a)
        for (Letter b = a + 1; b < 5; ++b)
            slots.emplace_back(a, b);
    std::mt19937 rng(20250810u);
    std::vector<CommutationGraph> out;
    for (int k = 0; k < 20; ++k) {
        std::vector<std::pair<Letter, Letter>> edges;
        for (const auto& slot : slots)
            if (rng() & 1u)
                edges.push_back(slot);
        out.emplace_back(alphabet, std::move(edges));
    }
    return out;
}

inline CommutationGraph path_graph(int n) {
    Alphabet alphabet = make_alphabet(n);
    std::vector<std::pair<Letter, Letter>> edges;
    for (Letter i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return CommutationGraph(std::move(alphabet), std::move(edges));
}

inline CommutationGraph cycle_graph(int n) {
    Alphabet alphabet = make_alphabet(n);
    std::vector<std::pair<Letter, Letter>> edges;
    for (Letter i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, static_cast<Letter>(n - 1));
    return CommutationGraph(std::move(alphabet), std::move(edges));
}

inline CommutationGraph complete_graph(int n) {
    Alphabet alphabet = make_alphabet(n);
    std::vector<std::pair<Letter, Letter>> edges;
    for (Letter a = 0; a < n; ++a)
        for (Letter b = a + 1; b < n; ++b)
            edges.emplace_back(a, b);
    return CommutationGraph(std::move(alphabet), std::move(edges));
}

inline CommutationGraph edgeless_graph(int n) {
    return CommutationGraph(make_alphabet(n), {});
}

inline CommutationGraph star_graph(int n) {
    // Center x1 adjacent to every other vertex.
    Alphabet alphabet = make_alphabet(n);
    std::vector<std::pair<Letter, Letter>> edges;
    for (Letter i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return CommutationGraph(std::move(alphabet), std::move(edges));
}

}  // namespace pclie::testing

#endif
