#pragma once

#include <map>
#include <string>
#include <vector>

#include "toric/filters.hpp"
#include "toric/toric.hpp"

namespace toric {

// A Coxeter system (W,S) by its bond matrix. Only edge existence
// (m >= 3) affects computation; larger labels and infinity (m = 0 in the
// JSON encoding) are recorded verbatim.
class CoxeterSystem {
public:
    static constexpr int kInfinity = 0;

    CoxeterSystem(std::vector<std::string> generators,
                  std::vector<std::tuple<std::string, std::string, int>> bonds);

    const Graph& coxeter_graph() const { return graph_; }
    const GraphPtr& coxeter_graph_ptr() const { return graph_ptr_; }
    const std::vector<std::string>& generators() const { return graph_.labels(); }
    int bond(const std::string& a, const std::string& b) const; // m_{i,j}, 2 if unlisted

private:
    Graph graph_;
    GraphPtr graph_ptr_;
    std::map<std::pair<int, int>, int> bonds_;
};

// A Coxeter element as a word using every generator exactly once.
class CoxeterElementWord {
public:
    CoxeterElementWord(const CoxeterSystem& cs, std::vector<std::string> word);
    const std::vector<std::string>& word() const { return word_; }
    const std::vector<int>& indices() const { return indices_; } // canonical generator ids

private:
    std::vector<std::string> word_;
    std::vector<int> indices_;
};

// w(c): orient each Coxeter-graph edge from the earlier generator to the
// later one.
Orientation orientation_of(const CoxeterSystem& cs, const CoxeterElementWord& c);

// Conjugacy by the flip-equivalence criterion.
bool coxeter_conjugate(const CoxeterSystem& cs, const CoxeterElementWord& a,
                       const CoxeterElementWord& b, int cap = kDefaultVertexCap);

// One entry per member of the flip class of w(c): the member together with
// its linear extensions read as words (the reduced expressions of that
// conjugate).
struct ConjugateElement {
    Orientation orientation;
    std::vector<std::vector<std::string>> words;
};
std::vector<ConjugateElement> conjugacy_class_elements(const CoxeterSystem& cs,
                                                       const CoxeterElementWord& c,
                                                       int cap = kDefaultVertexCap);

// Toric filters of P(Gamma,[w(c)]): the generator subsets that can open a
// reduced expression of a conjugate of c.
FilterPoset initial_segments(const CoxeterSystem& cs, const CoxeterElementWord& c,
                             int cap = kDefaultVertexCap);

} // namespace toric
