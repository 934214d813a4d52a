#pragma once

#include <vector>

#include "toric/toric.hpp"

namespace toric {

// J_tor(P): the toric filters ordered by inclusion. Graded by cardinality
// (asserted); the lattice property is diagnosed, not assumed -- failures
// carry explicit witness pairs with their minimal upper / maximal lower
// bound sets.
struct FilterPoset {
    std::vector<VertexSet> elements; // sorted by (size, value)
    std::vector<std::pair<int, int>> covers; // indices into elements, a covered-by b
    bool graded = false;
    bool is_lattice = false;
    struct LatticeFailure {
        VertexSet a = 0, b = 0;
        bool join = false;                // true: no join, false: no meet
        std::vector<VertexSet> bounds;    // the competing minimal/maximal bounds
    };
    std::vector<LatticeFailure> failures;

    int index_of(VertexSet s) const; // -1 if absent
};

// I is an order ideal of some member's poset (primary route).
bool is_toric_filter(const ToricPoset& p, VertexSet i);

// Cross-check route: the elements of I appear consecutively in the cyclic
// order of some total toric extension.
bool is_toric_filter_via_extensions(const ToricPoset& p, VertexSet i,
                                    int cap = kDefaultVertexCap);

FilterPoset toric_filters(const ToricPoset& p, int cap = kDefaultVertexCap);

// Indicator of I in canonical vertex order.
std::vector<int> characteristic_vector(VertexSet i, int n);

// Gradedness witness: a vertex v in J and a member exhibiting J-{v} as a
// toric filter. Errc::NotAFilter when J is empty or not a toric filter.
std::pair<int, Orientation> filter_cover_witness(const ToricPoset& p, VertexSet j);

} // namespace toric
