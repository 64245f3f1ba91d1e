#include "sntrank/io.hpp"

#include <algorithm>
#include <sstream>

#include "sntrank/errors.hpp"

namespace sntrank {

namespace {

GraphFormat sniff(std::string_view text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' ? GraphFormat::structured : GraphFormat::edgelist;
    }
    return GraphFormat::edgelist;
}

constexpr int kMaxParsedVertices = 1'000'000;

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag == "n") {
            if (n >= 0) throw parse_error("duplicate header", line_no);
            if (!(ls >> n) || n < 0) throw parse_error("malformed header", line_no);
            if (n > kMaxParsedVertices) throw parse_error("vertex count too large", line_no);
        } else if (tag == "e") {
            if (n < 0) throw parse_error("edge before the \"n\" header", line_no);
            int u, v;
            if (!(ls >> u >> v)) throw parse_error("malformed edge line", line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("edge endpoint out of range 1.." + std::to_string(n), line_no);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw parse_error("unknown directive \"" + tag + "\"", line_no);
        }
        std::string rest;
        if (ls >> rest) throw parse_error("trailing tokens", line_no);
    }
    if (n < 0) throw parse_error("missing \"n\" header", line_no);
    return Graph::from_edges(n, edges);
}

Graph parse_structured(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("structured graph needs an integer \"n\" field");
    const long long n_raw = j["n"].get<long long>();
    if (n_raw < 0) throw parse_error("negative vertex count");
    if (n_raw > kMaxParsedVertices) throw parse_error("vertex count too large");
    const int n = int(n_raw);
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw parse_error("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw parse_error("each edge must be a pair of integers");
            const int u = e[0].get<int>(), v = e[1].get<int>();
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("edge endpoint out of range 1.." + std::to_string(n));
            edges.emplace_back(u - 1, v - 1);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::autodetect) format = sniff(text);
    return format == GraphFormat::structured ? parse_structured(text) : parse_edgelist(text);
}

std::string write_edgelist(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = std::move(edges);
    return j;
}

Json cover_to_json(const Cover& c) {
    Json j;
    j["order"] = c.order();
    Json comps = Json::array();
    for (const Component& k : c.components()) {
        Json members = Json::array();
        for (int v = k.find_first(); v >= 0; v = k.find_next(v)) members.push_back(v + 1);
        comps.push_back(std::move(members));
    }
    j["components"] = std::move(comps);
    Json joins = Json::array();
    for (auto [a, b] : c.joins()) joins.push_back({a, b});
    j["joins"] = std::move(joins);
    return j;
}

Cover cover_from_json(const Json& j, int ground_n) {
    if (!j.is_object() || !j.contains("components") || !j.contains("joins"))
        throw parse_error("cover document needs \"components\" and \"joins\"");
    Cover c(ground_n);
    std::vector<int> index;
    for (const auto& comp : j["components"]) {
        if (!comp.is_array()) throw parse_error("each component must be an array");
        Component k(ground_n);
        for (const auto& v : comp) {
            if (!v.is_number_integer()) throw parse_error("component members must be integers");
            const int label = v.get<int>();
            if (label < 1 || label > ground_n)
                throw parse_error("component member out of range 1.." + std::to_string(ground_n));
            k.set(label - 1);
        }
        if (k.none()) throw parse_error("empty component");
        index.push_back(c.add_component(k));
    }
    for (const auto& join : j["joins"]) {
        if (!join.is_array() || join.size() != 2 || !join[0].is_number_integer() ||
            !join[1].is_number_integer())
            throw parse_error("each join must be a pair of component indices");
        const int a = join[0].get<int>(), b = join[1].get<int>();
        if (a < 0 || b < 0 || a >= int(index.size()) || b >= int(index.size()))
            throw parse_error("join index out of range");
        c.add_join(index[a], index[b]);
    }
    if (j.contains("order") && j["order"].is_number_integer() &&
        j["order"].get<int>() != c.order())
        throw parse_error("declared order does not match the component list");
    if (!c.all_components_joined()) throw parse_error("cover has a component with no join");
    return c;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("matrix must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw parse_error("matrix row must be an array");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw parse_error("matrix entries must be integers");
            const long long value = v.get<long long>();
            if (value < 0) throw parse_error("matrix entries must be nonnegative");
            r.push_back(value);
        }
        rows.push_back(std::move(r));
    }
    if (!rows.empty())
        for (const auto& r : rows)
            if (r.size() != rows[0].size()) throw parse_error("ragged matrix rows");
    return IntMatrix::from_rows(rows);
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::exact: return "exact";
        case SolveStatus::cap_reached: return "cap_reached";
        default: return "timeout";
    }
}

Json solve_result_to_json(const SolveResult& r, bool include_cover) {
    Json j;
    j["st_plus"] = r.rank;
    j["status"] = status_name(r.status);
    if (include_cover) j["cover"] = cover_to_json(r.certificate);
    return j;
}

Json uniqueness_to_json(const UniquenessReport& rep) {
    Json j;
    j["st_plus"] = rep.rank;
    j["unique"] = rep.unique;
    j["essentially_unique"] = rep.essentially_unique;
    j["unique_cover_graph"] = rep.unique_cover_graph;
    j["cover_count"] = rep.covers.size();
    j["orbit_count"] = rep.orbit_count;
    j["cover_graph_count"] = rep.cover_graphs.size();
    Json covers = Json::array();
    for (const Cover& c : rep.covers) covers.push_back(cover_to_json(c));
    j["covers"] = std::move(covers);
    Json graphs = Json::array();
    for (const Graph& g : rep.cover_graphs) graphs.push_back(graph_to_json(g));
    j["cover_graphs"] = std::move(graphs);
    return j;
}

Json validity_to_json(const ValidityReport& rep) {
    Json j;
    j["valid"] = rep.valid;
    Json missing = Json::array();
    for (auto [u, v] : rep.missing) missing.push_back({u + 1, v + 1});
    j["missing"] = std::move(missing);
    Json forbidden = Json::array();
    for (auto [u, v] : rep.forbidden) forbidden.push_back({u + 1, v + 1});
    j["forbidden"] = std::move(forbidden);
    return j;
}

}  // namespace sntrank
