#pragma once

#include <string>

#include <json.hpp>

#include "deg/axioms.hpp"
#include "deg/graph.hpp"
#include "deg/llt.hpp"
#include "deg/qsym.hpp"

namespace deg {

using json = nlohmann::json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);
Graph load_graph(const std::string& path);

json to_json(const QTPoly& p);
json to_json(const FExpansion& f);
QTPoly qtpoly_from_json(const json& j);
FExpansion fexp_from_json(const json& j);
json to_json(const SchurExpansion& s);
json to_json(const AxiomReport& r);
json to_json(const SkewShape& s);
json to_json(const Tableau& t);

// [[outer, inner], ...], e.g. [[[2],[]],[[1],[]]]
SkewTuple tuple_from_json(const json& j);
json to_json(const SkewTuple& nu);
Partition partition_from_json(const json& j);

}  // namespace deg
