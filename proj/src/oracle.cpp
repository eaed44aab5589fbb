#include "pclie/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pclie {

namespace {

// Sparse integer row: (column, coefficient), sorted by column, nonzero
// coefficients, gcd of entries 1, leading coefficient positive.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

void normalize(SparseRow& row) {
    if (row.empty())
        return;
    mpz_class g = 0;
    for (const auto& [col, c] : row)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(row.front().second) < 0)
        g = -g;
    if (g != 1)
        for (auto& [col, c] : row)
            c /= g;
}

// a*x + b*y, merged by column.
SparseRow axpy(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, b * y[j].second);
            ++j;
        } else {
            mpz_class c = a * x[i].second + b * y[j].second;
            if (c != 0)
                out.emplace_back(x[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

struct IdealSpace::Echelon {
    std::map<int, SparseRow> pivots;  // leading column -> row

    // Reduces the row against the pivots; empty result means dependent.
    SparseRow reduce(SparseRow row) const {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end())
                break;
            const SparseRow& pivot = it->second;
            const mpz_class& a = pivot.front().second;
            const mpz_class& b = row.front().second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            row = axpy(a / g, row, -(b / g), pivot);
        }
        normalize(row);
        return row;
    }

    bool insert(SparseRow row) {
        row = reduce(std::move(row));
        if (row.empty())
            return false;
        const int lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        return true;
    }
};

namespace {

// Coordinate row of a polynomial in the deglex-ordered basis of its degree,
// scaled to integer entries.
SparseRow coordinate_row(const LiePolynomial& p, const std::map<Word, int, decltype(&lex_less)>& columns) {
    mpz_class denom_lcm = 1;
    for (const auto& [w, c] : p.terms())
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    SparseRow row;
    row.reserve(p.term_count());
    for (const auto& [w, c] : p.terms()) {
        auto it = columns.find(w.word());
        if (it == columns.end())
            throw std::logic_error("oracle: basis word missing from the degree component");
        mpz_class entry = c.get_num() * (denom_lcm / c.get_den());
        row.emplace_back(it->second, std::move(entry));
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    normalize(row);
    return row;
}

constexpr std::int64_t kMaxMatrixCells = 2000000000;  // rows*cols guard

}  // namespace

IdealSpace::IdealSpace(const CommutationGraph& g, int max_degree) : graph_(g) {
    if (max_degree < 1)
        throw std::invalid_argument("IdealSpace: max_degree must be >= 1");
    components_.resize(static_cast<std::size_t>(max_degree) + 1);
    rows_.resize(static_cast<std::size_t>(max_degree) + 1);

    // All Lyndon-Shirshov words per degree.
    std::vector<std::vector<Word>> alsw_by_degree(static_cast<std::size_t>(max_degree) + 1);
    if (g.vertex_count() > 0)
        for (const Word& u : enumerate_alsw(g.alphabet(), max_degree))
            alsw_by_degree[static_cast<std::size_t>(u.size())].push_back(u);

    // Independent spanning polynomials of the previous degree component.
    std::vector<LiePolynomial> spanning;

    for (int d = 1; d <= max_degree; ++d) {
        DegreeComponent& comp = components_[static_cast<std::size_t>(d)];
        comp.degree = d;
        std::map<Word, int, decltype(&lex_less)> columns(&lex_less);
        for (const Word& u : alsw_by_degree[static_cast<std::size_t>(d)]) {
            columns.emplace(u, static_cast<int>(comp.basis.size()));
            comp.basis.push_back(bracket_canonical(u));
        }
        rows_[static_cast<std::size_t>(d)] = std::make_shared<Echelon>();
        if (d == 1)
            continue;

        std::vector<LiePolynomial> candidates;
        if (d == 2) {
            for (auto [a, b] : graph_.edges())
                candidates.push_back(expand(NWord::pair(NWord::leaf(b), NWord::leaf(a))));
        } else {
            for (const LiePolynomial& r : spanning)
                for (Letter x = 0; x < graph_.vertex_count(); ++x)
                    candidates.push_back(bracket(r, LiePolynomial::basis_term(NWord::leaf(x))));
        }

        const std::int64_t cells =
            static_cast<std::int64_t>(candidates.size()) * static_cast<std::int64_t>(comp.basis.size());
        if (cells > kMaxMatrixCells)
            throw ResourceLimitError("IdealSpace: matrix size guard exceeded at degree " + std::to_string(d));

        Echelon& ech = *rows_[static_cast<std::size_t>(d)];
        std::vector<LiePolynomial> indep;
        for (LiePolynomial& cand : candidates) {
            if (cand.is_zero())
                continue;
            if (ech.insert(coordinate_row(cand, columns)))
                indep.push_back(std::move(cand));
        }
        comp.rank = static_cast<std::int64_t>(ech.pivots.size());
        spanning = std::move(indep);
    }
}

const IdealSpace::DegreeComponent& IdealSpace::component(int degree) const {
    if (degree < 1 || degree > max_degree())
        throw std::invalid_argument("IdealSpace: degree out of range");
    return components_[static_cast<std::size_t>(degree)];
}

std::vector<std::int64_t> IdealSpace::quotient_dims() const {
    std::vector<std::int64_t> dims;
    for (int d = 1; d <= max_degree(); ++d) {
        const DegreeComponent& comp = components_[static_cast<std::size_t>(d)];
        dims.push_back(static_cast<std::int64_t>(comp.basis.size()) - comp.rank);
    }
    return dims;
}

bool IdealSpace::contains(const LiePolynomial& p) const {
    if (p.is_zero())
        return true;
    const int d = p.leading_monomial().first.length();
    for (const auto& [w, c] : p.terms())
        if (w.length() != d)
            throw std::invalid_argument("ideal membership: polynomial is not homogeneous");
    if (d > max_degree())
        throw std::invalid_argument("ideal membership: degree exceeds the built component range");

    std::map<Word, int, decltype(&lex_less)> columns(&lex_less);
    const DegreeComponent& comp = component(d);
    for (std::size_t i = 0; i < comp.basis.size(); ++i)
        columns.emplace(comp.basis[i].word(), static_cast<int>(i));
    return rows_[static_cast<std::size_t>(d)]->reduce(coordinate_row(p, columns)).empty();
}

std::vector<std::int64_t> dims_by_linear_algebra(const CommutationGraph& g, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("dims_by_linear_algebra: max_degree must be >= 1");
    return IdealSpace(g, max_degree).quotient_dims();
}

bool ideal_membership(const LiePolynomial& p, const CommutationGraph& g) {
    if (p.is_zero())
        return true;
    const int d = p.leading_monomial().first.length();
    return IdealSpace(g, d).contains(p);
}

namespace {

std::vector<int> moebius_upto(int n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (int p = 2; p <= n; ++p) {
        if (composite[static_cast<std::size_t>(p)])
            continue;
        for (int m = p; m <= n; m += p) {
            if (m > p)
                composite[static_cast<std::size_t>(m)] = true;
            mu[static_cast<std::size_t>(m)] *= -1;
        }
        const long long p2 = static_cast<long long>(p) * p;
        for (long long m = p2; m <= n; m += p2)
            mu[static_cast<std::size_t>(m)] = 0;
    }
    return mu;
}

}  // namespace

std::vector<std::int64_t> dims_by_clique_series(const CommutationGraph& g, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("dims_by_clique_series: max_degree must be >= 1");
    const int n = max_degree;

    // C(t) = sum_k (-1)^k c_k t^k, truncated beyond t^n.
    std::vector<mpz_class> C(static_cast<std::size_t>(n) + 1, 0);
    C[0] = 1;
    if (g.vertex_count() > 0) {
        const std::vector<std::uint64_t> cliques = clique_counts(g, std::min(n, g.vertex_count()));
        for (std::size_t k = 1; k < cliques.size() && k <= static_cast<std::size_t>(n); ++k) {
            C[k] = mpz_class(cliques[k]);
            if (k % 2 == 1)
                C[k] = -C[k];
        }
    }

    // inv = C^{-1} mod t^{n+1}; C(0) = 1 so the inverse has integer entries.
    std::vector<mpz_class> inv(static_cast<std::size_t>(n) + 1, 0);
    inv[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += C[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
        inv[static_cast<std::size_t>(m)] = -acc;
    }

    // b = -t C' / C; then m*l_m = sum_{d|m} mu(m/d) b_d.
    std::vector<mpz_class> b(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (int j = 1; j <= m; ++j)
            acc += mpz_class(-j) * C[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(m - j)];
        b[static_cast<std::size_t>(m)] = std::move(acc);
    }

    const std::vector<int> mu = moebius_upto(n);
    std::vector<std::int64_t> dims;
    for (int m = 1; m <= n; ++m) {
        mpz_class sum = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0)
                sum += mpz_class(mu[static_cast<std::size_t>(m / d)]) * b[static_cast<std::size_t>(d)];
        mpz_class lm, rem;
        mpz_fdiv_qr(lm.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), mpz_class(m).get_mpz_t());
        if (rem != 0)
            throw std::domain_error("dims_by_clique_series: non-integral dimension at degree " +
                                    std::to_string(m));
        if (!lm.fits_slong_p())
            throw ResourceLimitError("dims_by_clique_series: dimension overflows int64");
        dims.push_back(static_cast<std::int64_t>(lm.get_si()));
    }
    return dims;
}

}  // namespace pclie
