#include "toric/filters.hpp"

#include <algorithm>
#include <set>

namespace toric {

int FilterPoset::index_of(VertexSet s) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == s) return static_cast<int>(i);
    return -1;
}

bool is_toric_filter(const ToricPoset& p, VertexSet i) {
    if (i & ~p.graph().full_set()) fail(Errc::UnknownVertex, "filter entry out of range");
    for (const Poset& ps : p.member_posets())
        if (is_ideal(ps, i)) return true;
    return false;
}

bool is_toric_filter_via_extensions(const ToricPoset& p, VertexSet i, int cap) {
    if (i & ~p.graph().full_set()) fail(Errc::UnknownVertex, "filter entry out of range");
    int k = popcount(i);
    if (k == 0 || k == p.graph().order()) return true;
    for (const CyclicWord& w : p.extensions(cap)) {
        // consecutive cyclic run equal to i
        const auto& seq = w.seq();
        int n = w.size();
        for (int start = 0; start < n; ++start) {
            VertexSet run = 0;
            for (int t = 0; t < k; ++t) run |= VertexSet(1) << seq[(start + t) % n];
            if (run == i) return true;
        }
    }
    return false;
}

FilterPoset toric_filters(const ToricPoset& p, int cap) {
    int n = p.graph().order();
    if (n > cap) fail(Errc::CapExceeded, "vertex count exceeds filter enumeration cap");

    std::set<VertexSet> found;
    for (const Poset& ps : p.member_posets())
        for (VertexSet s : order_ideals(ps)) found.insert(s);

    FilterPoset fp;
    fp.elements.assign(found.begin(), found.end());
    std::sort(fp.elements.begin(), fp.elements.end(), [](VertexSet a, VertexSet b) {
        return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
    });

    int m = static_cast<int>(fp.elements.size());
    // covers of the inclusion order
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            VertexSet sa = fp.elements[a], sb = fp.elements[b];
            if (sa == sb || (sa & ~sb)) continue;
            bool cover = true;
            for (int c = 0; cover && c < m; ++c) {
                VertexSet sc = fp.elements[c];
                if (sc == sa || sc == sb) continue;
                if (!(sa & ~sc) && !(sc & ~sb)) cover = false;
            }
            if (cover) fp.covers.emplace_back(a, b);
        }

    // graded by cardinality: every nonempty element contains one of size-1 less
    fp.graded = true;
    for (VertexSet s : fp.elements) {
        if (s == 0) continue;
        bool covered = false;
        for (VertexSet t = s; t; t &= t - 1)
            if (found.count(s & ~(VertexSet(1) << lowest_bit(t)))) { covered = true; break; }
        if (!covered) { fp.graded = false; break; }
    }

    // lattice diagnosis with witnesses
    fp.is_lattice = true;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            VertexSet sa = fp.elements[a], sb = fp.elements[b];
            std::vector<VertexSet> uppers, lowers;
            for (VertexSet sc : fp.elements) {
                if (!((sa | sb) & ~sc)) uppers.push_back(sc);
                if (!(sc & ~(sa & sb))) lowers.push_back(sc);
            }
            auto minimal = [](std::vector<VertexSet>& xs) {
                std::vector<VertexSet> keep;
                for (VertexSet x : xs) {
                    bool min = true;
                    for (VertexSet y : xs)
                        if (y != x && !(y & ~x)) { min = false; break; }
                    if (min) keep.push_back(x);
                }
                return keep;
            };
            auto maximal = [](std::vector<VertexSet>& xs) {
                std::vector<VertexSet> keep;
                for (VertexSet x : xs) {
                    bool max = true;
                    for (VertexSet y : xs)
                        if (y != x && !(x & ~y)) { max = false; break; }
                    if (max) keep.push_back(x);
                }
                return keep;
            };
            std::vector<VertexSet> min_upper = minimal(uppers);
            std::vector<VertexSet> max_lower = maximal(lowers);
            if (min_upper.size() != 1) {
                fp.is_lattice = false;
                fp.failures.push_back({sa, sb, true, min_upper});
            }
            if (max_lower.size() != 1) {
                fp.is_lattice = false;
                fp.failures.push_back({sa, sb, false, max_lower});
            }
        }
    return fp;
}

std::vector<int> characteristic_vector(VertexSet i, int n) {
    std::vector<int> chi(n, 0);
    for (VertexSet t = i; t; t &= t - 1) chi[lowest_bit(t)] = 1;
    return chi;
}

std::pair<int, Orientation> filter_cover_witness(const ToricPoset& p, VertexSet j) {
    if (j == 0) fail(Errc::NotAFilter, "the empty set has no cover witness");
    const auto& posets = p.member_posets();
    for (std::size_t m = 0; m < posets.size(); ++m) {
        if (!is_ideal(posets[m], j)) continue;
        // least v in j that is minimal in this member
        for (VertexSet t = j; t; t &= t - 1) {
            int v = lowest_bit(t);
            if (posets[m].below(v) == 0)
                return {v, flip_source(p.members()[m], v)};
        }
    }
    fail(Errc::NotAFilter, "set is not a toric filter");
}

} // namespace toric
