#include "sntrank/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sntrank/errors.hpp"

namespace sntrank {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v + 1) + " out of range 1.." +
                                    std::to_string(n_));
}

int Graph::edge_count() const {
    int twice = 0, loops = 0;
    for (int v = 0; v < n_; ++v) {
        twice += adj_[v].count();
        if (has_loop(v)) ++loops;
    }
    return (twice - loops) / 2 + loops;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].find_first(); v >= 0; v = adj_[u].find_next(v))
            if (u <= v) out.emplace_back(u, v);
    return out;
}

bool Graph::has_any_edge() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v].any()) return true;
    return false;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
    Permutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[v] = image[inner.image[v]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.image.resize(image.size());
    for (std::size_t v = 0; v < image.size(); ++v) out.image[image[v]] = int(v);
    return out;
}

Bitset neighbors(const Graph& g, int v) {
    g.check_vertex(v);
    return g.row(v);
}

TwinReduction twin_free_reduce(const Graph& g) {
    const int n = g.vertex_count();
    TwinReduction r;
    r.class_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < int(r.representatives.size()); ++c) {
            if (g.row(v) == g.row(r.representatives[c])) {
                r.class_of[v] = c;
                break;
            }
        }
        if (r.class_of[v] < 0) {
            r.class_of[v] = int(r.representatives.size());
            r.representatives.push_back(v);
        }
    }
    const int m = int(r.representatives.size());
    r.reduced = Graph(m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b)
            if (g.has_edge(r.representatives[a], r.representatives[b])) r.reduced.add_edge(a, b);
    return r;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph conormal_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng * nh);
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x)
            for (int b = 0; b < ng; ++b)
                for (int y = 0; y < nh; ++y) {
                    const int u = a * nh + x, v = b * nh + y;
                    if (u > v) continue;
                    if (g.has_edge(a, b) || h.has_edge(x, y)) out.add_edge(u, v);
                }
    return out;
}

namespace {

// degree/loop signatures used to prune the permutation searches
std::vector<std::pair<int, int>> vertex_signatures(const Graph& g) {
    std::vector<std::pair<int, int>> sig(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) sig[v] = {g.degree(v), g.has_loop(v) ? 1 : 0};
    return sig;
}

void automorphism_dfs(const Graph& g, const std::vector<std::pair<int, int>>& sig,
                      std::vector<int>& image, std::vector<bool>& used, int v,
                      std::vector<Permutation>& out) {
    const int n = g.vertex_count();
    if (v == n) {
        out.push_back(Permutation{image});
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || sig[v] != sig[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != g.has_edge(image[u], w)) ok = false;
        if (g.has_loop(v) != g.has_loop(w)) ok = false;
        if (!ok) continue;
        used[w] = true;
        image[v] = w;
        automorphism_dfs(g, sig, image, used, v + 1, out);
        used[w] = false;
    }
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw limit_error("automorphism search capped at " + std::to_string(cap) +
                          " vertices, got " + std::to_string(n));
    std::vector<Permutation> out;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    automorphism_dfs(g, vertex_signatures(g), image, used, 0, out);
    // put the identity first, keep the rest in generation (lexicographic) order
    auto id = Permutation::identity(n);
    std::stable_partition(out.begin(), out.end(), [&](const Permutation& p) { return p == id; });
    return out;
}

namespace {

bool mono_dfs(const Graph& pat, const Graph& host, std::vector<int>& image,
              std::vector<bool>& used, int v) {
    const int np = pat.vertex_count(), nh = host.vertex_count();
    if (v == np) return true;
    for (int w = 0; w < nh; ++w) {
        if (used[w]) continue;
        if (pat.degree(v) > host.degree(w)) continue;
        if (pat.has_loop(v) && !host.has_loop(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (pat.has_edge(u, v) && !host.has_edge(image[u], w)) ok = false;
        if (!ok) continue;
        used[w] = true;
        image[v] = w;
        if (mono_dfs(pat, host, image, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool subgraph_monomorphism_exists(const Graph& pattern, const Graph& host, int cap) {
    if (host.vertex_count() > cap)
        throw limit_error("monomorphism search capped at " + std::to_string(cap) +
                          " host vertices, got " + std::to_string(host.vertex_count()));
    if (pattern.vertex_count() > host.vertex_count()) return false;
    std::vector<int> image(pattern.vertex_count(), -1);
    std::vector<bool> used(host.vertex_count(), false);
    return mono_dfs(pattern, host, image, used, 0);
}

namespace {

bool iso_dfs(const Graph& g, const Graph& h, const std::vector<std::pair<int, int>>& sg,
             const std::vector<std::pair<int, int>>& sh, std::vector<int>& image,
             std::vector<bool>& used, int v) {
    const int n = g.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || sg[v] != sh[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(image[u], w)) ok = false;
        if (!ok) continue;
        used[w] = true;
        image[v] = w;
        if (iso_dfs(g, h, sg, sh, image, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int cap) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.vertex_count() > cap)
        throw limit_error("isomorphism search capped at " + std::to_string(cap) + " vertices");
    if (g.edge_count() != h.edge_count()) return false;
    auto sg = vertex_signatures(g), sh = vertex_signatures(h);
    auto sorted = [](std::vector<std::pair<int, int>> s) {
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sorted(sg) != sorted(sh)) return false;
    std::vector<int> image(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    return iso_dfs(g, h, sg, sh, image, used, 0);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            const Bitset& row = g.row(v);
            for (int w = row.find_first(); w >= 0; w = row.find_next(w))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out(int(vertices.size()));
    for (int a = 0; a < int(vertices.size()); ++a)
        for (int b = a; b < int(vertices.size()); ++b)
            if (g.has_edge(vertices[a], vertices[b])) out.add_edge(a, b);
    return out;
}

bool has_any_loop(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_loop(v)) return true;
    return false;
}

bool is_forest(const Graph& g) {
    if (has_any_loop(g)) return false;
    // acyclic iff every component is a tree: |E| = n - #components
    const int n_components = int(connected_components(g).size());
    return g.edge_count() == g.vertex_count() - n_components;
}

bool is_cycle_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || has_any_loop(g) || !is_connected(g)) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_path_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || has_any_loop(g) || !is_connected(g)) return false;
    if (n == 1) return true;
    int ends = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1)
            ++ends;
        else if (d != 2)
            return false;
    }
    return ends == 2;
}

bool is_complete_loopless(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v) != (u != v)) return false;
    return true;
}

bool is_complete_all_loops(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!g.has_edge(u, v)) return false;
    return true;
}

int matching_number_forest(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("matching_number_forest: not a loopless forest");
    const int n = g.vertex_count();
    std::vector<Bitset> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.row(v);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = adj[v].count();
    int matched = 0;
    // repeatedly match a leaf to its neighbour; optimal on forests
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (deg[v] != 1) continue;
            int w = adj[v].find_first();
            ++matched;
            // remove both endpoints
            for (int x = adj[w].find_first(); x >= 0; x = adj[w].find_next(x)) {
                adj[x].reset(w);
                --deg[x];
            }
            for (int x = adj[v].find_first(); x >= 0; x = adj[v].find_next(x)) {
                adj[x].reset(v);
                --deg[x];
            }
            adj[v] = Bitset(n);
            adj[w] = Bitset(n);
            deg[v] = deg[w] = 0;
            progress = true;
        }
    }
    return matched;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_graph_loops(int n) {
    Graph g = complete_graph(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, v);
    return g;
}

Graph star_graph(const std::vector<int>& arms) {
    int n = 1;
    for (int k : arms) n += k;
    Graph g(n);
    int next = 1;
    for (int k : arms) {
        int prev = 0;
        for (int i = 0; i < k; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

}  // namespace sntrank
