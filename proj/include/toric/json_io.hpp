#pragma once

#include <string>

#include <json.hpp>

#include "toric/coxeter.hpp"
#include "toric/filters.hpp"
#include "toric/geom.hpp"
#include "toric/toric.hpp"

namespace toric {

using json = nlohmann::json;

// {"vertices":[...],"edges":[[a,b],...]}
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

// Graph fields plus "arcs":[[tail,head],...] and optional "ties":[[a,b],...].
// When `base` is given the vertices/edges may be omitted from the JSON.
Orientation orientation_from_json(const json& j, const Graph* base = nullptr);
json orientation_to_json(const Orientation& o);

// "1,2|3" over a graph's labels.
SetPartition partition_from_string(const std::string& s, const Graph& g);
json partition_to_json(const SetPartition& pi, const Graph& g);

// {"coords":{"1":"1/4",...}}
TorusPoint point_from_json(const json& j);
json point_to_json(const TorusPoint& p);

// {"generators":[...],"bonds":[[a,b,m],...]}, m = 0 encodes infinity
CoxeterSystem coxeter_from_json(const json& j);

json cyclic_word_to_json(const CyclicWord& w, const Graph& g);
json set_to_json(VertexSet s, const Graph& g);
json filter_poset_to_json(const FilterPoset& fp, const Graph& g);
json reconcile_report_to_json(const ReconcileReport& rep);

} // namespace toric
