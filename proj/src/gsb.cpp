#include "pclie/gsb.hpp"

#include <algorithm>
#include <cassert>

namespace pclie {

namespace {

const std::vector<NWord> kNoRelators;

// Checked structural facts about every S(G) element: the last letter is the
// second largest one and the greatest letter occurs exactly once.
void validate_relator(const NWord& r) {
    const Word& u = r.word();
    const Letter b = u[u.size() - 1];
    Letter greatest = u[0];
    for (int i = 0; i < u.size(); ++i)
        greatest = std::max(greatest, u[i]);
    int greatest_count = 0;
    for (int i = 0; i < u.size(); ++i)
        if (u[i] == greatest)
            ++greatest_count;
    if (greatest_count != 1)
        throw std::logic_error("relator: greatest letter must occur exactly once");
    if (b >= greatest)
        throw std::logic_error("relator: last letter must be below the greatest");
    for (int i = 0; i < u.size() - 1; ++i)
        if (u[i] != greatest && u[i] >= b)
            throw std::logic_error("relator: last letter must be the second largest");
}

}  // namespace

const std::vector<NWord>& RelationSet::relators(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(by_degree_.size()))
        return kNoRelators;
    return by_degree_[static_cast<std::size_t>(degree)];
}

std::vector<NWord> RelationSet::all_relators() const {
    std::vector<NWord> out;
    for (const auto& list : by_degree_)
        out.insert(out.end(), list.begin(), list.end());
    return out;
}

const NWord* RelationSet::find_by_word(const Word& leading) const {
    auto it = index_.find(leading);
    return it == index_.end() ? nullptr : &it->second;
}

std::optional<RelationSet::Occurrence> RelationSet::find_occurrence(const Word& u, bool reversed) const {
    const int n = u.size();
    auto probe_at = [&](int pos) -> std::optional<Occurrence> {
        const int max_len = std::min(max_degree_, n - pos);
        if (!reversed) {
            for (int len = max_len; len >= 2; --len)
                if (index_.count(u.subword(pos, len)))
                    return Occurrence{pos, len};
        } else {
            for (int len = 2; len <= max_len; ++len)
                if (index_.count(u.subword(pos, len)))
                    return Occurrence{pos, len};
        }
        return std::nullopt;
    };
    if (!reversed) {
        for (int pos = 0; pos + 2 <= n; ++pos)
            if (auto occ = probe_at(pos))
                return occ;
    } else {
        for (int pos = n - 2; pos >= 0; --pos)
            if (auto occ = probe_at(pos))
                return occ;
    }
    return std::nullopt;
}

RelationSet generate_s(const CommutationGraph& g, int max_degree) {
    if (max_degree < 2)
        throw std::invalid_argument("generate_s: max_degree must be >= 2");
    RelationSet s(g);
    s.max_degree_ = max_degree;
    s.by_degree_.assign(static_cast<std::size_t>(max_degree) + 1, {});

    for (Letter b = 0; b < g.vertex_count(); ++b) {
        const std::vector<Letter> nbhd = g.neighbors(b);
        if (nbhd.empty())
            continue;
        // Every candidate u~ is an ALSW over the neighbourhood of b; b itself
        // is never a neighbour, so b does not occur in u~.
        for (const Word& stem : enumerate_alsw_over(nbhd, max_degree - 1)) {
            const NWord candidate = NWord::pair(bracket_canonical(stem), NWord::leaf(b));
            if (!is_nlsw(candidate))
                continue;
            validate_relator(candidate);
            s.by_degree_[static_cast<std::size_t>(candidate.length())].push_back(candidate);
            s.index_.emplace(candidate.word(), candidate);
        }
    }
    for (auto& list : s.by_degree_)
        std::sort(list.begin(), list.end(), NWordDeglexLess{});
    return s;
}

bool is_s_reduced(const Word& u, const RelationSet& s) {
    if (!is_alsw(u))
        throw std::invalid_argument("is_s_reduced: input is not an ALSW");
    if (u.size() > s.max_degree())
        throw DegreeBoundError("is_s_reduced: word length " + std::to_string(u.size()) +
                               " exceeds the generated relation degree " + std::to_string(s.max_degree()));
    return !s.find_occurrence(u).has_value();
}

LiePolynomial normal_form(const LiePolynomial& p, const RelationSet& s, ReductionStrategy strategy) {
    if (!p.is_zero() && p.leading_monomial().first.length() > s.max_degree())
        throw DegreeBoundError("normal_form: polynomial degree exceeds the generated relation degree");

    const bool reversed = strategy == ReductionStrategy::RightmostShortest;
    LiePolynomial work = p;
    for (;;) {
        // Deglex-greatest reducible basis word.
        std::optional<RelationSet::Occurrence> occ;
        const NWord* target = nullptr;
        Rational coeff;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            occ = s.find_occurrence(it->first.word(), reversed);
            if (occ) {
                target = &it->first;
                coeff = it->second;
                break;
            }
        }
        if (!target)
            return work;
        const NWord rewritten = special_bracket(target->word(), occ->pos, occ->len);
        LiePolynomial replacement = expand(rewritten);
        assert(replacement.leading_monomial().first == *target &&
               replacement.leading_monomial().second == Rational(1));
        work -= coeff * replacement;
    }
}

namespace {

bool word_has_prefix(const Word& u, const Word& prefix, int at) {
    if (at + prefix.size() > u.size())
        return false;
    for (int i = 0; i < prefix.size(); ++i)
        if (u[at + i] != prefix[i])
            return false;
    return true;
}

LiePolynomial bracketed_occurrence(const Word& w, int pos, int len) {
    if (!is_alsw(w))
        throw std::domain_error("find_compositions: overlap word is not an ALSW");
    return expand(special_bracket(w, pos, len));
}

}  // namespace

std::vector<Composition> find_compositions(const RelationSet& s, int max_word_len) {
    std::vector<Composition> out;
    const std::vector<NWord> relators = s.all_relators();

    for (const NWord& f : relators) {
        const Word& fw = f.word();
        for (const NWord& g : relators) {
            const Word& gw = g.word();
            // Intersections: a proper suffix of f's word equals a proper
            // prefix of g's word.
            for (int k = 1; k < std::min(fw.size(), gw.size()); ++k) {
                const int wlen = fw.size() + gw.size() - k;
                if (wlen > max_word_len)
                    continue;
                bool match = true;
                for (int i = 0; i < k; ++i)
                    if (fw[fw.size() - k + i] != gw[i]) {
                        match = false;
                        break;
                    }
                if (!match)
                    continue;
                Word w = fw.concat(gw.subword(k, gw.size() - k));
                const int gpos = fw.size() - k;
                LiePolynomial value =
                    bracketed_occurrence(w, 0, fw.size()) - bracketed_occurrence(w, gpos, gw.size());
                out.push_back({f, g, std::move(w), Composition::Kind::Intersection, gpos, std::move(value)});
            }
            // Inclusions: g's word occurs inside f's word, f != g.
            if (f == g || gw.size() >= fw.size() || fw.size() > max_word_len)
                continue;
            for (int pos = 0; pos + gw.size() <= fw.size(); ++pos) {
                if (!word_has_prefix(fw, gw, pos))
                    continue;
                LiePolynomial value =
                    LiePolynomial::basis_term(f) - bracketed_occurrence(fw, pos, gw.size());
                out.push_back({f, g, fw, Composition::Kind::Inclusion, pos, std::move(value)});
            }
        }
    }

    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        if (auto c = deglex_compare(a.w, b.w); c != 0)
            return c < 0;
        if (auto c = deglex_compare(a.f.word(), b.f.word()); c != 0)
            return c < 0;
        if (auto c = deglex_compare(a.g.word(), b.g.word()); c != 0)
            return c < 0;
        if (a.kind != b.kind)
            return a.kind < b.kind;
        return a.position < b.position;
    });
    return out;
}

std::vector<Composition> find_compositions(const RelationSet& s) {
    return find_compositions(s, s.max_degree());
}

CompositionReport check_gsb(const CommutationGraph& g, int max_degree) {
    const RelationSet s = generate_s(g, max_degree);
    CompositionReport report;
    report.relator_count = static_cast<int>(s.relator_count());
    std::vector<Composition> comps = find_compositions(s, max_degree);
    for (Composition& comp : comps) {
        LiePolynomial reduced = normal_form(comp.value, s);
        const bool trivial = reduced.is_zero();
        report.pass = report.pass && trivial;
        (comp.kind == Composition::Kind::Intersection ? report.intersections : report.inclusions)++;
        report.entries.push_back({std::move(comp), std::move(reduced), trivial});
    }
    return report;
}

std::vector<std::vector<NWord>> enumerate_basis(const CommutationGraph& g, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("enumerate_basis: max_degree must be >= 1");
    std::vector<std::vector<NWord>> out(static_cast<std::size_t>(max_degree) + 1);
    if (max_degree == 1 || g.vertex_count() == 0) {
        for (Letter x = 0; x < g.vertex_count(); ++x)
            out[1].push_back(NWord::leaf(x));
        return out;
    }
    const RelationSet s = generate_s(g, max_degree);
    for (const Word& u : enumerate_alsw(g.alphabet(), max_degree))
        if (is_s_reduced(u, s))
            out[static_cast<std::size_t>(u.size())].push_back(bracket_canonical(u));
    return out;
}

std::vector<std::vector<NWord>> nilpotent_basis(const CommutationGraph& g, int n) {
    if (n < 2)
        throw std::invalid_argument("nilpotent_basis: nilpotency class must be >= 2");
    return enumerate_basis(g, n - 1);
}

bool equal_in_pc(const LiePolynomial& p, const LiePolynomial& q, const RelationSet& s) {
    return normal_form(p - q, s).is_zero();
}

}  // namespace pclie
