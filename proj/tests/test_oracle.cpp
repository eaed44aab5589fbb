#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pclie/gsb.hpp"
#include "pclie/oracle.hpp"
#include "support/oracles.hpp"

using namespace pclie;
using namespace pclie::testing;

TEST_CASE("dims_by_linear_algebra: worked examples") {
    CHECK(dims_by_linear_algebra(path_graph(3), 3) == std::vector<std::int64_t>{3, 1, 2});
    CHECK(dims_by_linear_algebra(complete_graph(3), 4) == std::vector<std::int64_t>{3, 0, 0, 0});
    CHECK(dims_by_linear_algebra(edgeless_graph(2), 5) == std::vector<std::int64_t>{2, 1, 2, 3, 6});
}

TEST_CASE("dims_by_clique_series: worked examples") {
    CHECK(dims_by_clique_series(path_graph(3), 6) == std::vector<std::int64_t>{3, 1, 2, 3, 6, 9});
    for (int n = 1; n <= 5; ++n) {
        auto dims = dims_by_clique_series(complete_graph(n), 5);
        CHECK(dims.front() == n);
        for (std::size_t d = 1; d < dims.size(); ++d)
            CHECK(dims[d] == 0);
    }
    for (int q : {2, 3}) {
        auto dims = dims_by_clique_series(edgeless_graph(q), 7);
        for (int d = 1; d <= 7; ++d)
            CHECK(dims[static_cast<std::size_t>(d - 1)] == necklace(q, d));
    }
}

TEST_CASE("oracles agree with each other and with the engine") {
    std::vector<CommutationGraph> sample = {path_graph(4), cycle_graph(4), star_graph(5),
                                            cycle_graph(5), edgeless_graph(3)};
    for (const auto& g : sample) {
        const int max_degree = 5;
        auto linear = dims_by_linear_algebra(g, max_degree);
        auto series = dims_by_clique_series(g, max_degree);
        auto basis = enumerate_basis(g, max_degree);
        CHECK(linear == series);
        for (int d = 1; d <= max_degree; ++d)
            CHECK(linear[static_cast<std::size_t>(d - 1)] ==
                  static_cast<std::int64_t>(basis[static_cast<std::size_t>(d)].size()));
    }
}

TEST_CASE("free-algebra bound with equality exactly below the first relator") {
    for (const auto& g : {path_graph(3), star_graph(4), edgeless_graph(3)}) {
        const int max_degree = 5;
        auto dims = dims_by_linear_algebra(g, max_degree);
        RelationSet s = generate_s(g, max_degree);
        const std::int64_t q = g.vertex_count();
        for (int d = 1; d <= max_degree; ++d) {
            const std::int64_t dim = dims[static_cast<std::size_t>(d - 1)];
            CHECK(dim >= 0);
            CHECK(dim <= necklace(q, d));
            bool relator_at_most_d = false;
            for (int k = 2; k <= d; ++k)
                relator_at_most_d = relator_at_most_d || !s.relators(k).empty();
            CHECK((dim == necklace(q, d)) == !relator_at_most_d);
        }
    }
}

TEST_CASE("ideal_membership: worked examples") {
    auto p3 = path_graph(3);
    CHECK(ideal_membership(expand(P(P(L(3), L(1)), L(2))), p3));
    CHECK_FALSE(ideal_membership(LiePolynomial::basis_term(P(L(3), L(1))), p3));
    CHECK(ideal_membership(expand(P(L(2), L(1))), p3));
    CHECK(ideal_membership(expand(P(L(3), L(2))), p3));
    CHECK(ideal_membership(LiePolynomial(), p3));

    LiePolynomial mixed = LiePolynomial::basis_term(L(1)) +
                          LiePolynomial::basis_term(P(L(2), L(1)));
    CHECK_THROWS_AS(ideal_membership(mixed, p3), std::invalid_argument);
}

TEST_CASE("every relator lies in the ideal generated by the edges") {
    for (const auto& g : {path_graph(4), cycle_graph(4), star_graph(4), complete_graph(4)}) {
        IdealSpace ideal(g, 5);
        RelationSet s = generate_s(g, 5);
        for (const NWord& r : s.all_relators())
            CHECK(ideal.contains(expand(r)));
    }
}

TEST_CASE("left-bracketing spans nothing new") {
    // Ideal growth uses right-bracketing by generators only; bracketing a
    // generator on the left must stay inside the component.
    for (const auto& g : {path_graph(4), cycle_graph(4)}) {
        IdealSpace ideal(g, 5);
        std::vector<LiePolynomial> current;
        for (auto [a, b] : g.edges())
            current.push_back(expand(NWord::pair(NWord::leaf(b), NWord::leaf(a))));
        for (int d = 3; d <= 5; ++d) {
            std::vector<LiePolynomial> next;
            for (const auto& r : current)
                for (Letter x = 0; x < g.vertex_count(); ++x) {
                    LiePolynomial right = bracket(r, LiePolynomial::basis_term(NWord::leaf(x)));
                    LiePolynomial left = bracket(LiePolynomial::basis_term(NWord::leaf(x)), r);
                    if (!right.is_zero()) {
                        CHECK(ideal.contains(right));
                        next.push_back(right);
                    }
                    if (!left.is_zero())
                        CHECK(ideal.contains(left));
                }
            current = std::move(next);
        }
    }
}

TEST_CASE("matrix size guard refuses oversized requests") {
    CHECK_THROWS_AS(dims_by_linear_algebra(complete_graph(60), 3), ResourceLimitError);
}

TEST_CASE("quotient dims are reachable through IdealSpace components") {
    IdealSpace ideal(path_graph(3), 4);
    CHECK(ideal.max_degree() == 4);
    CHECK(ideal.component(2).basis.size() == 3);  // x2x1, x3x1, x3x2
    CHECK(ideal.component(2).rank == 2);
    CHECK_THROWS_AS(ideal.component(0), std::invalid_argument);
    CHECK_THROWS_AS(ideal.component(5), std::invalid_argument);
    CHECK(ideal.quotient_dims() == std::vector<std::int64_t>{3, 1, 2, 3});
}
