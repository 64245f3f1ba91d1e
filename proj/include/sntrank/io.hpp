#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sntrank/cover.hpp"
#include "sntrank/factorization.hpp"
#include "sntrank/graph.hpp"
#include "sntrank/solver.hpp"
#include "sntrank/uniqueness.hpp"

namespace sntrank {

using Json = nlohmann::ordered_json;

enum class GraphFormat { autodetect, edgelist, structured };

// Edge-list text ("n N" header, "e u v" lines, "#" comments) or the
// structured document {"n": int, "edges": [[u,v], ...]}. Labels are
// 1-based in both formats; u == v encodes a loop. Throws parse_error.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::autodetect);

std::string write_edgelist(const Graph& g);

Json graph_to_json(const Graph& g);

// Cover schema: {"order": k, "components": [[v,...], ...], "joins": [[i,j], ...]}
// with 1-based vertex labels and 0-based component indices.
Json cover_to_json(const Cover& c);
Cover cover_from_json(const Json& j, int ground_n);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

const char* status_name(SolveStatus s);

Json solve_result_to_json(const SolveResult& r, bool include_cover);
Json uniqueness_to_json(const UniquenessReport& rep);
Json validity_to_json(const ValidityReport& rep);

}  // namespace sntrank
