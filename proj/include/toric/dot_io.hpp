#pragma once

#include <ostream>

#include "toric/filters.hpp"
#include "toric/flipclass.hpp"
#include "toric/poset.hpp"

namespace toric {

// Stable node ordering throughout: canonical label order, members in
// canonical class order, filter elements by (size, value).

void write_graph_dot(std::ostream& os, const Graph& g, const std::string& name = "G");
void write_orientation_dot(std::ostream& os, const Orientation& o, const std::string& name = "G");
// Layered digraph of the covers.
void write_hasse_dot(std::ostream& os, const Poset& p, const std::string& name = "hasse");
// Members as nodes, single flips as edges.
void write_flip_graph_dot(std::ostream& os, const FlipClass& cls, const std::string& name = "flips");
// Ranked by cardinality.
void write_filter_poset_dot(std::ostream& os, const FilterPoset& fp, const Graph& g,
                            const std::string& name = "filters");

} // namespace toric
