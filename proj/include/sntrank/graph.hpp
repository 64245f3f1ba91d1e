#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sntrank/bitset.hpp"

namespace sntrank {

// Simple undirected graph with loops. Vertices are 0-based in memory;
// file formats and reports use 1-based labels (translated at the
// boundary). A loop is a set diagonal entry, so N(v) contains v exactly
// when v has a loop and twin comparison is plain row equality.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    bool has_loop(int v) const { return adj_[v].test(v); }

    const Bitset& row(int v) const { return adj_[v]; }

    // |N(v)|, loop included.
    int degree(int v) const { return adj_[v].count(); }

    int edge_count() const;                             // loops count once
    std::vector<std::pair<int, int>> edges() const;     // (u,v) with u <= v
    bool has_any_edge() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

    void check_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

struct Permutation {
    std::vector<int> image;  // image[v] = sigma(v), a bijection on 0..n-1

    int size() const { return int(image.size()); }
    int operator()(int v) const { return image[v]; }

    static Permutation identity(int n);
    Permutation compose(const Permutation& inner) const;  // this ∘ inner
    Permutation inverse() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.image == b.image;
    }
};

// --- basic operations ------------------------------------------------------

// N_G(v); contains v iff v has a loop.
Bitset neighbors(const Graph& g, int v);

struct TwinReduction {
    Graph reduced;
    std::vector<int> class_of;         // original vertex -> reduced vertex
    std::vector<int> representatives;  // reduced vertex -> lowest original member
};

// Keeps one representative (the lowest label) per class of vertices with
// identical neighbourhoods. Idempotent.
TwinReduction twin_free_reduce(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Co-normal product: vertex set V(G) x V(H) labelled row-major
// (g*|V(H)|+h), edge {(g,h),(g',h')} iff {g,g'} in E(G) or {h,h'} in E(H).
Graph conormal_product(const Graph& g, const Graph& h);

// All adjacency- and loop-preserving permutations; identity first.
std::vector<Permutation> automorphisms(const Graph& g, int cap = 10);

// True iff an injective map V(pattern) -> V(host) sends edges to edges
// (not necessarily induced; loops must map to loops).
bool subgraph_monomorphism_exists(const Graph& pattern, const Graph& host, int cap = 12);

bool is_isomorphic(const Graph& g, const Graph& h, int cap = 12);

// --- structure helpers ------------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// the induced subgraph on `vertices` (kept in the given order)
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool has_any_loop(const Graph& g);
bool is_forest(const Graph& g);       // loopless and acyclic
bool is_cycle_graph(const Graph& g);  // connected, loopless, all degrees 2, n >= 3
bool is_path_graph(const Graph& g);
bool is_complete_loopless(const Graph& g);
bool is_complete_all_loops(const Graph& g);

// maximum matching size of a loopless forest (greedy leaf matching)
int matching_number_forest(const Graph& g);

// --- factories ---------------------------------------------------------------

Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_graph_loops(int n);  // K_n with all loops
Graph star_graph(const std::vector<int>& arms);  // centre 0, arms appended in order

}  // namespace sntrank
