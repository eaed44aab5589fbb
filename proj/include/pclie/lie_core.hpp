#ifndef PCLIE_LIE_CORE_HPP
#define PCLIE_LIE_CORE_HPP

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pclie/words.hpp"

namespace pclie {

// Exact arbitrary-precision rational coefficients.
using Rational = mpq_class;

// A Lie polynomial in the Lyndon-Shirshov basis: a finite map from
// non-associative Lyndon-Shirshov words to nonzero rational coefficients.
// Terms iterate deglex-ascending.
class LiePolynomial {
public:
    using TermMap = std::map<NWord, Rational, NWordDeglexLess>;

    LiePolynomial() = default;

    // Validates that w is a Lyndon-Shirshov word; throws otherwise.
    static LiePolynomial basis_term(const NWord& w, Rational coeff = Rational(1));

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    // Deglex-greatest term. Throws on the zero polynomial.
    std::pair<NWord, Rational> leading_monomial() const;

    Rational coefficient(const NWord& w) const;

    // coeff may be zero (no-op). The caller guarantees w is a basis word;
    // checked by assert.
    void add_term(const NWord& w, const Rational& coeff);

    LiePolynomial& operator+=(const LiePolynomial& other);
    LiePolynomial& operator-=(const LiePolynomial& other);
    LiePolynomial& operator*=(const Rational& c);

    friend LiePolynomial operator+(LiePolynomial a, const LiePolynomial& b) { return a += b; }
    friend LiePolynomial operator-(LiePolynomial a, const LiePolynomial& b) { return a -= b; }
    friend LiePolynomial operator*(LiePolynomial a, const Rational& c) { return a *= c; }
    friend LiePolynomial operator*(const Rational& c, LiePolynomial a) { return a *= c; }
    friend LiePolynomial operator-(LiePolynomial a) { return a *= Rational(-1); }

    bool operator==(const LiePolynomial& other) const noexcept { return terms_ == other.terms_; }

private:
    TermMap terms_;
};

// Two independent expansion routes. LeftJacobi is the production algorithm:
// depth-first rewriting by the Jacobi identity, oriented on the left factor.
// Associative expands in the free associative algebra and recovers the basis
// coordinates by triangular elimination against leading words; it shares no
// code with the Jacobi route and exists to cross-check it. Results are
// route-independent (tested).
enum class ExpandStrategy { LeftJacobi, Associative };

// Expansion of bracketing trees into the Lyndon-Shirshov basis. Owns a memo
// table keyed by pairs of basis words; one Expander per thread (or use the
// free functions below, which share a thread-local instance).
class Expander {
public:
    explicit Expander(ExpandStrategy strategy = ExpandStrategy::LeftJacobi) : strategy_(strategy) {}

    // Unique representation of an arbitrary bracketing tree in the basis.
    LiePolynomial expand(const NWord& t);

    // Bilinear Lie bracket of two polynomials, in the basis.
    LiePolynomial bracket(const LiePolynomial& p, const LiePolynomial& q);

    ExpandStrategy strategy() const noexcept { return strategy_; }
    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    // u, v are basis words (canonical trees). Handles orientation and the
    // Jacobi rewriting.
    const LiePolynomial& basis_bracket(const NWord& u, const NWord& v);
    LiePolynomial bracket_word(const LiePolynomial& p, const NWord& v);

    struct PairHash {
        std::size_t operator()(const std::pair<Word, Word>& k) const noexcept {
            WordHash h;
            return h(k.first) * 1000003u ^ h(k.second);
        }
    };

    ExpandStrategy strategy_;
    std::unordered_map<std::pair<Word, Word>, LiePolynomial, PairHash> memo_;
};

// Thread-local LeftJacobi Expander.
LiePolynomial expand(const NWord& t);
LiePolynomial bracket(const LiePolynomial& p, const LiePolynomial& q);

// The element of the free associative algebra represented by a bracketing
// tree, (a,b) |-> ab - ba. Homogeneous; terms keyed by word, lex order.
std::map<Word, Rational, decltype(&lex_less)> associative_expand(const NWord& t);

inline std::pair<NWord, Rational> leading_monomial(const LiePolynomial& p) { return p.leading_monomial(); }

// Re-bracketing of an ALSW around a designated ALSW occurrence d: in the
// canonical tree of w, the minimal subtree covering the occurrence has word
// d*c1*...*cm with c1 <= ... <= cm the nondecreasing ALSW factorization; it
// is replaced by the left-normed tree ((([d],[c1]),...),[cm]). The result is
// generally not a Lyndon-Shirshov word.
NWord special_bracket(const Word& w, int d_start, int d_len);

// Nondecreasing ALSW factorization c = c1...cm, c1 <= ... <= cm (the
// Chen-Fox-Lyndon factorization in this ordering convention).
std::vector<Word> alsw_factorization(const Word& c);

// Bracketing shape with leaves replaced by '*'.
class Pattern {
public:
    static Pattern star();
    static Pattern pair(const Pattern& left, const Pattern& right);

    bool is_star() const noexcept { return !node_->left; }
    Pattern left() const;
    Pattern right() const;
    int star_count() const noexcept { return node_->stars; }

    std::string to_string() const;
    bool operator==(const Pattern& other) const noexcept;

private:
    struct Node {
        std::shared_ptr<const Node> left, right;
        int stars = 1;
    };
    explicit Pattern(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Substitute factors into the pattern's stars, left to right.
NWord substitute(const Pattern& p, const std::vector<NWord>& factors);

struct DDecomposition {
    std::vector<NWord> factors;  // d-indecomposable, left to right
    Pattern pattern;
};

// Recursively split pairs (v,w) while word(w) > d; the leaves of that
// recursion are the d-indecomposable factors. Requires t to be a
// Lyndon-Shirshov word with word(t) > d and d an ALSW.
DDecomposition d_decompose(const NWord& t, const Word& d);

// The map appending d to each d-indecomposable factor in turn:
// sum over i of the pattern substitution with ([u_i],[d]) in slot i,
// each summand normalized through expand. When the greatest letters of the
// factors are distinct and differ from the greatest letter of d, every
// summand is already a single basis word; outside that case the same
// substitution formula applies and expand absorbs the difference.
LiePolynomial derive(const NWord& t, const Word& d);

}  // namespace pclie

#endif
