#ifndef PCLIE_WORDS_HPP
#define PCLIE_WORDS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pclie/errors.hpp"

namespace pclie {

// A letter is an index into an Alphabet; smaller index = smaller letter.
// Symbolic names exist only at I/O boundaries.
using Letter = std::int32_t;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> names);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    const std::string& name(Letter i) const { return names_.at(static_cast<std::size_t>(i)); }
    std::optional<Letter> find(std::string_view name) const noexcept;
    const std::vector<std::string>& names() const noexcept { return names_; }

    bool operator==(const Alphabet& other) const noexcept { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Letter> index_;
};

// Associative word: a sequence of letters. The empty word is constructible
// but is accepted only by the comparison routines; everything algebra-facing
// requires non-empty input.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    static Word single(Letter x) { return Word(std::vector<Letter>{x}); }

    int size() const noexcept { return static_cast<int>(letters_.size()); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }

    Word subword(int pos, int len) const;
    Word concat(const Word& other) const;
    void append(Letter x) { letters_.push_back(x); }

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

enum class WordOrder { Lex, DegLex };

// Lexicographic order with the convention that every non-empty word is
// smaller than the empty word, hence a word is smaller than each of its
// proper prefixes.
std::strong_ordering lex_compare(const Word& u, const Word& v) noexcept;

// Length first, then lex. The empty word is deglex-smallest.
std::strong_ordering deglex_compare(const Word& u, const Word& v) noexcept;

std::strong_ordering compare(WordOrder order, const Word& u, const Word& v) noexcept;

inline bool lex_less(const Word& u, const Word& v) noexcept { return lex_compare(u, v) < 0; }
inline bool deglex_less(const Word& u, const Word& v) noexcept { return deglex_compare(u, v) < 0; }

// True iff for every split u = vw into non-empty halves, wv < u in lex.
// Throws on the empty word.
bool is_alsw(const Word& u);

// All associative Lyndon-Shirshov words of length 1..max_len over the given
// alphabet, deglex ascending.
std::vector<Word> enumerate_alsw(const Alphabet& alphabet, int max_len);

// Same, over an explicit sub-alphabet of letters (used to restrict a word to
// the neighbourhood of a vertex). `letters` must be strictly increasing.
std::vector<Word> enumerate_alsw_over(const std::vector<Letter>& letters, int max_len);

// Non-associative word: a binary bracketing tree over a non-empty word.
// Immutable; cheap to copy. The underlying associative word is cached at
// every node, so word() is O(1).
class NWord {
public:
    static NWord leaf(Letter x);
    static NWord pair(const NWord& left, const NWord& right);

    bool is_leaf() const noexcept { return !node_->left; }
    Letter letter() const;          // leaf only
    NWord left() const;             // pair only
    NWord right() const;            // pair only
    const Word& word() const noexcept { return node_->word; }
    int length() const noexcept { return node_->word.size(); }

    bool operator==(const NWord& other) const noexcept;

private:
    struct Node {
        Word word;
        std::shared_ptr<const Node> left, right;
    };
    explicit NWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// deglex on the underlying word, structural tie-break. Total order on all
// trees; on Lyndon-Shirshov words the tie-break never fires (the bracketing
// is determined by the word).
std::strong_ordering nword_compare(const NWord& a, const NWord& b) noexcept;

struct NWordDeglexLess {
    bool operator()(const NWord& a, const NWord& b) const noexcept { return nword_compare(a, b) < 0; }
};

// Conditions (i)-(iii): underlying word is an ALSW; for a pair, both halves
// pass and word(left) > word(right); if left = (l1,l2) then
// word(right) >= word(l2).
bool is_nlsw(const NWord& t);

// The unique Lyndon-Shirshov bracketing of an ALSW: the right half is the
// longest proper ALSW suffix. Throws if u is not an ALSW.
NWord bracket_canonical(const Word& u);

}  // namespace pclie

#endif
