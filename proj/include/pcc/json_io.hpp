#pragma once

#include <json.hpp>
#include <string>

#include "pcc/classifier.hpp"
#include "pcc/digraph.hpp"
#include "pcc/graph.hpp"
#include "pcc/pc_cycles.hpp"
#include "pcc/structure.hpp"

namespace pcc {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[u, v, color], ...]} with exactly C(n,2) entries.
Json instance_to_json(const ColoredCompleteGraph& g);
ColoredCompleteGraph instance_from_json(const Json& j);

// {"S": [ints], "f": {"vertex": color}}; colors are user labels.
Json certificate_to_json(const ColoredCompleteGraph& g, const DegeneracyCertificate& cert);
DegeneracyCertificate certificate_from_json(const ColoredCompleteGraph& g, const Json& j);

// {"vertices": [ints], "closed": bool}
Json cycle_to_json(const PcCycle& c);
Json path_to_json(const PcPath& p);

// {"parts": [[ints]], "arcs": [[u, v], ...]}
Json digraph_to_json(const MultipartiteTournament& t);
MultipartiteTournament digraph_from_json(const Json& j);

// {"tag": "a"|"b"|"c", "certificates": {...}}
Json result_to_json(const ColoredCompleteGraph& g, const TrichotomyResult& r);

Json read_json_file(const std::string& path);

}  // namespace pcc
