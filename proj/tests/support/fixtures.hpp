#pragma once

// Shared named instances used across the unit and acceptance suites.

#include <vector>

#include "sntrank/factorization.hpp"
#include "sntrank/graph.hpp"

namespace sntrank::testing {

inline Graph graph_from_adjacency(const std::vector<std::vector<int>>& rows) {
    const int n = int(rows.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (rows[i][j]) g.add_edge(i, j);
    return g;
}

// 5 vertices, loops on the middle three; st_plus = 4 (rank-forced)
inline Graph looped_five_vertex() {
    return graph_from_adjacency({{0, 1, 1, 0, 0},
                                 {1, 1, 1, 1, 0},
                                 {1, 1, 1, 1, 1},
                                 {0, 1, 1, 1, 1},
                                 {0, 0, 1, 1, 0}});
}

// star on 4 vertices with all loops: 3K1^l v K1^l; unique optimal cover
inline Graph looped_star4() {
    return join(Graph::from_edges(3, {{0, 0}, {1, 1}, {2, 2}}),
                Graph::from_edges(1, {{0, 0}}));
}

// 4 vertices, loops at 1 and 2; two optimal covers over one family
inline Graph mixed_quad() {
    return graph_from_adjacency({{1, 1, 1, 1}, {1, 1, 0, 1}, {1, 0, 0, 1}, {1, 1, 1, 0}});
}

// K3 v K1^l: unique cover graph K3, not essentially unique
inline Graph k3_with_looped_apex() {
    return join(complete_graph(3), Graph::from_edges(1, {{0, 0}}));
}

// threshold chain: T_1 = K1 v K1^l, T_{i+1} = (T_i u K1) v K1^l
inline Graph threshold_chain(int i) {
    Graph t = join(Graph(1), Graph::from_edges(1, {{0, 0}}));
    for (int k = 1; k < i; ++k)
        t = join(disjoint_union(t, Graph(1)), Graph::from_edges(1, {{0, 0}}));
    return t;
}

// the published order-5 witness pair for K6
inline IntMatrix k6_witness_b() {
    return IntMatrix::from_rows({{1, 0, 1, 0, 0},
                                 {1, 0, 0, 1, 0},
                                 {1, 0, 0, 0, 1},
                                 {0, 1, 1, 0, 0},
                                 {0, 1, 0, 1, 0},
                                 {0, 1, 0, 0, 1}});
}

inline IntMatrix k6_witness_c() {
    return IntMatrix::from_rows({{0, 1, 0, 0, 0},
                                 {1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 1},
                                 {0, 0, 1, 0, 1},
                                 {0, 0, 1, 1, 0}});
}

// the five-component worked cover of K6
inline Cover k6_worked_cover() {
    Cover c(6);
    auto add = [&](std::initializer_list<int> vs) {
        Component k(6);
        for (int v : vs) k.set(v - 1);
        return c.add_component(k);
    };
    const int k1 = add({1, 2, 3}), k2 = add({4, 5, 6});
    const int k3 = add({1, 4}), k4 = add({2, 5}), k5 = add({3, 6});
    c.add_join(k1, k2);
    c.add_join(k3, k4);
    c.add_join(k4, k5);
    c.add_join(k5, k3);
    return c;
}

}  // namespace sntrank::testing
