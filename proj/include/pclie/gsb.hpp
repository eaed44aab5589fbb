#ifndef PCLIE_GSB_HPP
#define PCLIE_GSB_HPP

#include <map>
#include <optional>
#include <vector>

#include "pclie/graph.hpp"
#include "pclie/lie_core.hpp"

namespace pclie {

// The relation set S(G): monic monomial relators [u] = ([u~],b) with b
// adjacent to every letter of u~ and absent from it, generated per degree,
// with a leading-word index for subword search.
class RelationSet {
public:
    const CommutationGraph& graph() const noexcept { return graph_; }
    int max_degree() const noexcept { return max_degree_; }

    // Relators of exactly this word length, deglex ascending. Empty for
    // degree < 2 or degree > max_degree().
    const std::vector<NWord>& relators(int degree) const;
    std::vector<NWord> all_relators() const;
    std::size_t relator_count() const noexcept { return index_.size(); }

    const NWord* find_by_word(const Word& leading) const;

    struct Occurrence {
        int pos;
        int len;
    };

    // Leftmost occurrence of any relator word as a contiguous factor of u;
    // among relators matching at that position, the deglex-greatest (i.e.
    // longest). Reversed = rightmost position, shortest relator.
    std::optional<Occurrence> find_occurrence(const Word& u, bool reversed = false) const;

private:
    friend RelationSet generate_s(const CommutationGraph&, int);

    explicit RelationSet(CommutationGraph g) : graph_(std::move(g)) {}

    CommutationGraph graph_;
    int max_degree_ = 0;
    std::vector<std::vector<NWord>> by_degree_;
    std::map<Word, NWord, decltype(&lex_less)> index_{&lex_less};
};

// All S(G) elements of word length 2..max_degree.
RelationSet generate_s(const CommutationGraph& g, int max_degree);

// True iff no relator's leading word occurs as a contiguous factor of u.
// Requires is_alsw(u); rejects words longer than the generated degree.
bool is_s_reduced(const Word& u, const RelationSet& s);

enum class ReductionStrategy { LeftmostLongest, RightmostShortest };

// Rewrites p to its S-reduced normal form: repeatedly eliminates the
// deglex-greatest reducible basis word by subtracting the expansion of the
// special bracketing at the matched relator occurrence. Requires every term
// degree <= s.max_degree().
LiePolynomial normal_form(const LiePolynomial& p, const RelationSet& s,
                          ReductionStrategy strategy = ReductionStrategy::LeftmostLongest);

struct Composition {
    enum class Kind { Intersection, Inclusion };

    NWord f, g;
    Word w;          // overlap word
    Kind kind;
    int position;    // intersection: start of g's word in w; inclusion: start of g's word in f's word
    LiePolynomial value;
};

// All intersection and inclusion compositions among the relators with
// overlap word length <= max_word_len, sorted by (w deglex, f, g, kind,
// position). Throws if an overlap word fails to be an ALSW (never the case
// for S(G); reported rather than skipped).
std::vector<Composition> find_compositions(const RelationSet& s, int max_word_len);
std::vector<Composition> find_compositions(const RelationSet& s);

struct CompositionReport {
    struct Entry {
        Composition composition;
        LiePolynomial reduced;
        bool trivial;
    };

    int relator_count = 0;
    int intersections = 0;
    int inclusions = 0;
    std::vector<Entry> entries;
    bool pass = true;  // every composition reduced to zero
};

// Generates S(G) to max_degree, computes all compositions with overlap word
// length <= max_degree, and reduces each to normal form.
CompositionReport check_gsb(const CommutationGraph& g, int max_degree);

// Per-degree basis of L(G): index d holds the canonical bracketings of the
// S-reduced ALSWs of length d, deglex ascending. Index 0 is empty.
std::vector<std::vector<NWord>> enumerate_basis(const CommutationGraph& g, int max_degree);

// Basis of the nilpotent quotient L(G,n): degrees 1..n-1.
std::vector<std::vector<NWord>> nilpotent_basis(const CommutationGraph& g, int n);

// Equality in L(G): normal_form(p - q) == 0.
bool equal_in_pc(const LiePolynomial& p, const LiePolynomial& q, const RelationSet& s);

}  // namespace pclie

#endif
