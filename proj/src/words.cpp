#include "pclie/words.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace pclie {

namespace {

std::atomic<std::size_t> g_max_terms{1000000};

}  // namespace

std::size_t max_polynomial_terms() noexcept { return g_max_terms.load(std::memory_order_relaxed); }
void set_max_polynomial_terms(std::size_t limit) noexcept { g_max_terms.store(limit, std::memory_order_relaxed); }

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("alphabet: empty letter name");
        auto [it, inserted] = index_.emplace(names_[i], static_cast<Letter>(i));
        if (!inserted)
            throw std::invalid_argument("alphabet: duplicate letter name '" + names_[i] + "'");
    }
}

std::optional<Letter> Alphabet::find(std::string_view name) const noexcept {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Word Word::subword(int pos, int len) const {
    assert(pos >= 0 && len >= 0 && pos + len <= size());
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() + other.letters_.size());
    out.insert(out.end(), letters_.begin(), letters_.end());
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w.letters()) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
        h *= 1099511628211ull;
    }
    return h;
}

std::strong_ordering lex_compare(const Word& u, const Word& v) noexcept {
    const int n = std::min(u.size(), v.size());
    for (int i = 0; i < n; ++i) {
        if (u[i] != v[i])
            return u[i] <=> v[i];
    }
    if (u.size() == v.size())
        return std::strong_ordering::equal;
    // One word is a proper prefix of the other; the longer one is smaller.
    return u.size() > v.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::strong_ordering deglex_compare(const Word& u, const Word& v) noexcept {
    if (u.size() != v.size())
        return u.size() <=> v.size();
    return lex_compare(u, v);
}

std::strong_ordering compare(WordOrder order, const Word& u, const Word& v) noexcept {
    return order == WordOrder::Lex ? lex_compare(u, v) : deglex_compare(u, v);
}

bool is_alsw(const Word& u) {
    if (u.empty())
        throw std::invalid_argument("is_alsw: empty word");
    const int n = u.size();
    // u = vw with v = u[0..s), w = u[s..n); wv is the cyclic rotation by s.
    // Equal lengths, so the lex comparison is plain letterwise comparison.
    for (int s = 1; s < n; ++s) {
        int i = 0;
        for (; i < n; ++i) {
            const Letter a = u[(s + i) % n];
            const Letter b = u[i];
            if (a != b) {
                if (a > b)
                    return false;
                break;
            }
        }
        if (i == n)
            return false;  // rotation equal to u: periodic word
    }
    return true;
}

namespace {

void enumerate_alsw_into(const std::vector<Letter>& letters, int max_len, std::vector<Word>& out) {
    const int q = static_cast<int>(letters.size());
    if (q == 0 || max_len < 1)
        return;
    std::vector<int> digits;
    for (int len = 1; len <= max_len; ++len) {
        digits.assign(static_cast<std::size_t>(len), 0);
        for (;;) {
            std::vector<Letter> w(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i)
                w[static_cast<std::size_t>(i)] = letters[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
            Word cand(std::move(w));
            if (is_alsw(cand))
                out.push_back(std::move(cand));
            // Next word in plain lex order (letters strictly increasing in
            // `letters`, so this is deglex-ascending overall).
            int i = len - 1;
            while (i >= 0 && digits[static_cast<std::size_t>(i)] == q - 1) {
                digits[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0)
                break;
            ++digits[static_cast<std::size_t>(i)];
        }
    }
}

}  // namespace

std::vector<Word> enumerate_alsw(const Alphabet& alphabet, int max_len) {
    if (max_len < 1)
        throw std::invalid_argument("enumerate_alsw: max_len must be >= 1");
    std::vector<Letter> letters(static_cast<std::size_t>(alphabet.size()));
    for (int i = 0; i < alphabet.size(); ++i)
        letters[static_cast<std::size_t>(i)] = i;
    std::vector<Word> out;
    enumerate_alsw_into(letters, max_len, out);
    return out;
}

std::vector<Word> enumerate_alsw_over(const std::vector<Letter>& letters, int max_len) {
    assert(std::is_sorted(letters.begin(), letters.end()));
    std::vector<Word> out;
    enumerate_alsw_into(letters, max_len, out);
    return out;
}

NWord NWord::leaf(Letter x) {
    auto node = std::make_shared<Node>();
    node->word = Word::single(x);
    return NWord(std::move(node));
}

NWord NWord::pair(const NWord& left, const NWord& right) {
    auto node = std::make_shared<Node>();
    node->word = left.word().concat(right.word());
    node->left = left.node_;
    node->right = right.node_;
    return NWord(std::move(node));
}

Letter NWord::letter() const {
    assert(is_leaf());
    return node_->word[0];
}

NWord NWord::left() const {
    assert(!is_leaf());
    return NWord(node_->left);
}

NWord NWord::right() const {
    assert(!is_leaf());
    return NWord(node_->right);
}

bool NWord::operator==(const NWord& other) const noexcept {
    if (node_ == other.node_)
        return true;
    if (node_->word != other.node_->word)
        return false;
    if (is_leaf() || other.is_leaf())
        return is_leaf() == other.is_leaf();
    return left() == other.left() && right() == other.right();
}

std::strong_ordering nword_compare(const NWord& a, const NWord& b) noexcept {
    if (auto c = deglex_compare(a.word(), b.word()); c != 0)
        return c;
    if (a.is_leaf() || b.is_leaf()) {
        if (a.is_leaf() && b.is_leaf())
            return std::strong_ordering::equal;
        return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = nword_compare(a.left(), b.left()); c != 0)
        return c;
    return nword_compare(a.right(), b.right());
}

bool is_nlsw(const NWord& t) {
    if (t.is_leaf())
        return true;
    if (!is_alsw(t.word()))
        return false;
    const NWord l = t.left();
    const NWord r = t.right();
    if (!is_nlsw(l) || !is_nlsw(r))
        return false;
    if (lex_compare(l.word(), r.word()) <= 0)
        return false;
    if (!l.is_leaf() && lex_compare(r.word(), l.right().word()) < 0)
        return false;
    return true;
}

NWord bracket_canonical(const Word& u) {
    if (!is_alsw(u))
        throw std::invalid_argument("bracket_canonical: input is not an associative Lyndon-Shirshov word");
    const int n = u.size();
    if (n == 1)
        return NWord::leaf(u[0]);
    // Right half: the longest proper suffix that is an ALSW.
    for (int pos = 1; pos < n; ++pos) {
        Word suffix = u.subword(pos, n - pos);
        if (is_alsw(suffix))
            return NWord::pair(bracket_canonical(u.subword(0, pos)), bracket_canonical(suffix));
    }
    // Unreachable: the last letter alone is always an ALSW.
    throw std::logic_error("bracket_canonical: no ALSW suffix found");
}

}  // namespace pclie
