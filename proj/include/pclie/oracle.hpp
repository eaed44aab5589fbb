#ifndef PCLIE_ORACLE_HPP
#define PCLIE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "pclie/graph.hpp"
#include "pclie/lie_core.hpp"

namespace pclie {

// Degree-by-degree realization of the ideal I(G) generated by the edge
// relations, by exact integer linear algebra over the free-algebra basis:
// I_2 = span of edge brackets, I_{d+1} = span of [r, x] over an independent
// spanning set r of I_d and letters x.
class IdealSpace {
public:
    struct DegreeComponent {
        int degree = 0;
        std::vector<NWord> basis;  // all Lyndon-Shirshov words of this length, deglex order
        std::int64_t rank = 0;     // dimension of the ideal component
    };

    IdealSpace(const CommutationGraph& g, int max_degree);

    int max_degree() const noexcept { return static_cast<int>(components_.size()) - 1; }
    const DegreeComponent& component(int degree) const;

    // dim L(G)_d = #basis words of degree d - rank of the ideal component.
    std::vector<std::int64_t> quotient_dims() const;

    // Membership of a homogeneous polynomial of degree <= max_degree().
    bool contains(const LiePolynomial& p) const;

private:
    struct Echelon;

    const CommutationGraph graph_;
    std::vector<DegreeComponent> components_;       // index = degree; [0] unused
    std::vector<std::shared_ptr<Echelon>> rows_;    // parallel to components_
};

// Quotient dimensions of degrees 1..max_degree by exact Gaussian
// elimination. Desk scale; guarded against oversized matrices.
std::vector<std::int64_t> dims_by_linear_algebra(const CommutationGraph& g, int max_degree);

// Quotient dimensions from the clique polynomial C(t) = sum (-1)^k c_k t^k
// by matching prod (1-t^d)^{l_d} = C(t); exact integer series arithmetic
// with an explicit integrality check on every l_d.
std::vector<std::int64_t> dims_by_clique_series(const CommutationGraph& g, int max_degree);

// True iff the homogeneous polynomial p lies in I(G). Throws on
// non-homogeneous input. The zero polynomial is a member.
bool ideal_membership(const LiePolynomial& p, const CommutationGraph& g);

}  // namespace pclie

#endif
