#include "pclie/lie_core.hpp"

#include <cassert>

namespace pclie {

LiePolynomial LiePolynomial::basis_term(const NWord& w, Rational coeff) {
    if (!is_nlsw(w))
        throw std::invalid_argument("basis_term: not a Lyndon-Shirshov word");
    LiePolynomial p;
    p.add_term(w, coeff);
    return p;
}

std::pair<NWord, Rational> LiePolynomial::leading_monomial() const {
    if (terms_.empty())
        throw std::invalid_argument("leading_monomial: zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Rational LiePolynomial::coefficient(const NWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LiePolynomial::add_term(const NWord& w, const Rational& coeff) {
    if (sgn(coeff) == 0)
        return;
    assert(is_nlsw(w));
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    } else if (terms_.size() > max_polynomial_terms()) {
        throw ResourceLimitError("polynomial exceeds the term limit (" +
                                 std::to_string(max_polynomial_terms()) + ")");
    }
}

LiePolynomial& LiePolynomial::operator+=(const LiePolynomial& other) {
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

LiePolynomial& LiePolynomial::operator-=(const LiePolynomial& other) {
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

LiePolynomial& LiePolynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_)
        coeff *= c;
    return *this;
}

namespace {

using AssocPoly = std::map<Word, Rational, decltype(&lex_less)>;

void assoc_add(AssocPoly& p, const Word& w, const Rational& c) {
    auto [it, inserted] = p.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            p.erase(it);
    } else if (p.size() > max_polynomial_terms()) {
        throw ResourceLimitError("associative expansion exceeds the term limit");
    }
}

AssocPoly assoc_expand_impl(const NWord& t) {
    AssocPoly out(&lex_less);
    if (t.is_leaf()) {
        out.emplace(t.word(), Rational(1));
        return out;
    }
    const AssocPoly l = assoc_expand_impl(t.left());
    const AssocPoly r = assoc_expand_impl(t.right());
    for (const auto& [u, cu] : l)
        for (const auto& [v, cv] : r) {
            const Rational c = cu * cv;
            assoc_add(out, u.concat(v), c);
            assoc_add(out, v.concat(u), -c);
        }
    return out;
}

// Triangular elimination: the associative expansion of a basis word [w] has
// lex-greatest term w with coefficient 1 among words of its length, so
// peeling greatest words recovers the basis coordinates of any Lie element.
LiePolynomial straighten(AssocPoly a) {
    LiePolynomial out;
    while (!a.empty()) {
        // The map is keyed by lex, which disagrees with deglex across
        // degrees; scan for the deglex-greatest word.
        auto greatest = a.begin();
        for (auto it = a.begin(); it != a.end(); ++it)
            if (deglex_compare(it->first, greatest->first) > 0)
                greatest = it;
        const Word w = greatest->first;
        const Rational c = greatest->second;
        if (!is_alsw(w))
            throw std::logic_error("straighten: leading word is not an ALSW; input is not a Lie element");
        const NWord basis_word = bracket_canonical(w);
        out.add_term(basis_word, c);
        for (const auto& [u, cu] : assoc_expand_impl(basis_word))
            assoc_add(a, u, -c * cu);
        if (a.count(w))
            throw std::logic_error("straighten: leading coefficient did not cancel");
    }
    return out;
}

}  // namespace

std::map<Word, Rational, decltype(&lex_less)> associative_expand(const NWord& t) {
    return assoc_expand_impl(t);
}

LiePolynomial Expander::expand(const NWord& t) {
    if (strategy_ == ExpandStrategy::Associative)
        return straighten(assoc_expand_impl(t));
    if (t.is_leaf())
        return LiePolynomial::basis_term(t);
    return bracket(expand(t.left()), expand(t.right()));
}

LiePolynomial Expander::bracket(const LiePolynomial& p, const LiePolynomial& q) {
    if (strategy_ == ExpandStrategy::Associative) {
        AssocPoly ap(&lex_less), aq(&lex_less), comm(&lex_less);
        for (const auto& [t, c] : p.terms())
            for (const auto& [u, cu] : assoc_expand_impl(t))
                assoc_add(ap, u, c * cu);
        for (const auto& [t, c] : q.terms())
            for (const auto& [u, cu] : assoc_expand_impl(t))
                assoc_add(aq, u, c * cu);
        for (const auto& [u, cu] : ap)
            for (const auto& [v, cv] : aq) {
                const Rational c = cu * cv;
                assoc_add(comm, u.concat(v), c);
                assoc_add(comm, v.concat(u), -c);
            }
        return straighten(std::move(comm));
    }
    LiePolynomial out;
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms()) {
            auto cmp = lex_compare(u.word(), v.word());
            if (cmp == 0)
                continue;
            const Rational c = cu * cv;
            if (cmp > 0) {
                for (const auto& [w, cw] : basis_bracket(u, v).terms())
                    out.add_term(w, c * cw);
            } else {
                for (const auto& [w, cw] : basis_bracket(v, u).terms())
                    out.add_term(w, -c * cw);
            }
        }
    return out;
}

LiePolynomial Expander::bracket_word(const LiePolynomial& p, const NWord& v) {
    LiePolynomial out;
    for (const auto& [u, cu] : p.terms()) {
        auto cmp = lex_compare(u.word(), v.word());
        if (cmp == 0)
            continue;
        if (cmp > 0) {
            for (const auto& [w, cw] : basis_bracket(u, v).terms())
                out.add_term(w, cu * cw);
        } else {
            for (const auto& [w, cw] : basis_bracket(v, u).terms())
                out.add_term(w, -cu * cw);
        }
    }
    return out;
}

// Bracket of basis words [u] > [v]. If condition (iii) holds for the pair,
// ([u],[v]) is itself a basis word; otherwise rewrite by the Jacobi identity
// and recurse.
const LiePolynomial& Expander::basis_bracket(const NWord& u, const NWord& v) {
    assert(lex_compare(u.word(), v.word()) > 0);
    const auto key = std::make_pair(u.word(), v.word());
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    LiePolynomial result;
    if (u.is_leaf() || lex_compare(u.right().word(), v.word()) <= 0) {
        result.add_term(NWord::pair(u, v), Rational(1));
    } else {
        // (([u1],[u2]),[v]) = (([u1],[v]),[u2]) + ([u1],([u2],[v]))
        const NWord u1 = u.left(), u2 = u.right();
        result += bracket_word(bracket_word(LiePolynomial::basis_term(u1), v), u2);
        LiePolynomial u2v = bracket_word(LiePolynomial::basis_term(u2), v);
        for (const auto& [w, cw] : u2v.terms()) {
            auto cmp = lex_compare(u1.word(), w.word());
            if (cmp == 0)
                continue;
            if (cmp > 0) {
                for (const auto& [x, cx] : basis_bracket(u1, w).terms())
                    result.add_term(x, cw * cx);
            } else {
                for (const auto& [x, cx] : basis_bracket(w, u1).terms())
                    result.add_term(x, -cw * cx);
            }
        }
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

namespace {

Expander& default_expander() {
    thread_local Expander e(ExpandStrategy::LeftJacobi);
    return e;
}

}  // namespace

LiePolynomial expand(const NWord& t) { return default_expander().expand(t); }

LiePolynomial bracket(const LiePolynomial& p, const LiePolynomial& q) {
    return default_expander().bracket(p, q);
}

std::vector<Word> alsw_factorization(const Word& c) {
    if (c.empty())
        return {};
    std::vector<Word> factors;
    int end = c.size();
    while (end > 0) {
        // Longest ALSW suffix of c[0..end).
        int start = 0;
        while (start < end && !is_alsw(c.subword(start, end - start)))
            ++start;
        factors.push_back(c.subword(start, end - start));
        end = start;
    }
    std::reverse(factors.begin(), factors.end());
    // Factorization must be nondecreasing; this is asserted, not assumed.
    for (std::size_t i = 0; i + 1 < factors.size(); ++i)
        if (lex_compare(factors[i], factors[i + 1]) > 0)
            throw std::logic_error("alsw_factorization: factors not nondecreasing");
    return factors;
}

namespace {

// Rebuilds the tree with the subtree spanning [pos, pos+len) replaced.
// The occurrence is known to coincide with a subtree on the search path.
NWord replace_subtree(const NWord& t, int t_start, int pos, int len, const NWord& replacement) {
    if (t_start == pos && t.length() == len)
        return replacement;
    assert(!t.is_leaf());
    const int left_len = t.left().length();
    if (pos + len <= t_start + left_len)
        return NWord::pair(replace_subtree(t.left(), t_start, pos, len, replacement), t.right());
    assert(pos >= t_start + left_len);
    return NWord::pair(t.left(), replace_subtree(t.right(), t_start + left_len, pos, len, replacement));
}

// Minimal subtree whose leaf span covers [pos, pos+len); returns its start.
std::pair<NWord, int> minimal_cover(const NWord& t, int t_start, int pos, int len) {
    if (t.is_leaf())
        return {t, t_start};
    const int left_len = t.left().length();
    if (pos + len <= t_start + left_len)
        return minimal_cover(t.left(), t_start, pos, len);
    if (pos >= t_start + left_len)
        return minimal_cover(t.right(), t_start + left_len, pos, len);
    return {t, t_start};
}

}  // namespace

NWord special_bracket(const Word& w, int d_start, int d_len) {
    if (d_len < 1 || d_start < 0 || d_start + d_len > w.size())
        throw std::invalid_argument("special_bracket: occurrence out of bounds");
    const Word d = w.subword(d_start, d_len);
    if (!is_alsw(d))
        throw std::invalid_argument("special_bracket: designated occurrence is not an ALSW");
    const NWord tree = bracket_canonical(w);  // validates w

    auto [cover, cover_start] = minimal_cover(tree, 0, d_start, d_len);
    // The minimal covering subword of an ALSW occurrence has the form [dc].
    if (cover_start != d_start)
        throw std::logic_error("special_bracket: covering subword does not start at the occurrence");

    NWord cluster = bracket_canonical(d);
    const Word c = cover.word().subword(d_len, cover.length() - d_len);
    for (const Word& ci : alsw_factorization(c))
        cluster = NWord::pair(cluster, bracket_canonical(ci));

    return replace_subtree(tree, 0, cover_start, cover.length(), cluster);
}

Pattern Pattern::star() {
    auto node = std::make_shared<Node>();
    return Pattern(std::move(node));
}

Pattern Pattern::pair(const Pattern& left, const Pattern& right) {
    auto node = std::make_shared<Node>();
    node->left = left.node_;
    node->right = right.node_;
    node->stars = left.star_count() + right.star_count();
    return Pattern(std::move(node));
}

Pattern Pattern::left() const {
    assert(!is_star());
    return Pattern(node_->left);
}

Pattern Pattern::right() const {
    assert(!is_star());
    return Pattern(node_->right);
}

std::string Pattern::to_string() const {
    if (is_star())
        return "*";
    return "(" + left().to_string() + "," + right().to_string() + ")";
}

bool Pattern::operator==(const Pattern& other) const noexcept {
    if (node_ == other.node_)
        return true;
    if (is_star() || other.is_star())
        return is_star() == other.is_star();
    return left() == other.left() && right() == other.right();
}

namespace {

NWord substitute_impl(const Pattern& p, const std::vector<NWord>& factors, std::size_t& next) {
    if (p.is_star())
        return factors.at(next++);
    NWord l = substitute_impl(p.left(), factors, next);
    NWord r = substitute_impl(p.right(), factors, next);
    return NWord::pair(l, r);
}

void d_decompose_impl(const NWord& t, const Word& d, std::vector<NWord>& factors, Pattern& pattern) {
    if (!t.is_leaf() && lex_compare(t.right().word(), d) > 0) {
        std::vector<NWord> rf;
        Pattern lp = Pattern::star(), rp = Pattern::star();
        d_decompose_impl(t.left(), d, factors, lp);
        d_decompose_impl(t.right(), d, rf, rp);
        factors.insert(factors.end(), rf.begin(), rf.end());
        pattern = Pattern::pair(lp, rp);
    } else {
        factors.push_back(t);
        pattern = Pattern::star();
    }
}

}  // namespace

NWord substitute(const Pattern& p, const std::vector<NWord>& factors) {
    if (static_cast<int>(factors.size()) != p.star_count())
        throw std::invalid_argument("substitute: factor count does not match pattern");
    std::size_t next = 0;
    return substitute_impl(p, factors, next);
}

DDecomposition d_decompose(const NWord& t, const Word& d) {
    if (!is_alsw(d))
        throw std::invalid_argument("d_decompose: d is not an ALSW");
    if (!is_nlsw(t))
        throw std::invalid_argument("d_decompose: t is not a Lyndon-Shirshov word");
    if (lex_compare(t.word(), d) <= 0)
        throw std::invalid_argument("d_decompose: word(t) must be greater than d");
    DDecomposition out{{}, Pattern::star()};
    d_decompose_impl(t, d, out.factors, out.pattern);
    return out;
}

LiePolynomial derive(const NWord& t, const Word& d) {
    DDecomposition dec = d_decompose(t, d);  // validates preconditions
    const NWord d_tree = bracket_canonical(d);
    LiePolynomial out;
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
        std::vector<NWord> slots = dec.factors;
        slots[i] = NWord::pair(dec.factors[i], d_tree);
        out += expand(substitute(dec.pattern, slots));
    }
    return out;
}

}  // namespace pclie
