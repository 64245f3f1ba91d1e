#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sntrank/cover.hpp"
#include "sntrank/graph.hpp"
#include "sntrank/solver.hpp"

namespace sntrank {

// Minimum size of a separating cover on n elements (s(1) = 0). Integer
// arithmetic over powers of 3 only, so interval boundaries are exact.
int katona_s(long long n);

struct FactorSum {
    int sum = 0;
    std::vector<int> factors;  // ascending, each >= 2, product >= n
};

// min { sum q_i : n <= prod q_i, q_i >= 2 }, with the lexicographically
// least sorted witness list. Empty list (sum 0) for n = 1.
FactorSum min_factor_sum(long long n);

// min over k in {2..5} of k + s(ceil(n/k)); equals katona_s(n) for n >= 4.
int katona_recursion_check(long long n);

// A valid cover of K_n of order katona_s(n), built by the recursive
// product construction on m = max{t : s(t) = s(n)} and restricted to [n].
Cover build_complete_cover(int n);

// Loopless forests: rank = 2 * (edge star cover number), certificate by
// repeated lowest-leaf reduction.
std::pair<int, Cover> snt_rank_forest(const Graph& f);

// Generalized star with t >= 3 arms of lengths arms[i] >= 1.
int snt_rank_generalized_star(const std::vector<int>& arms);

int snt_rank_cycle(int n);  // 2 when n = 4, else n

// Connected loopless graph with exactly one cycle.
int snt_rank_unicyclic(const Graph& g);

struct VK1Reduction {
    Graph reduced;          // the graph left after peeling the looped apex
    int delta = 0;          // rank(G) = rank(reduced) + delta
    int apex = -1;          // the removed vertex (original label)
    std::vector<int> kept;  // reduced vertex -> original label
    std::vector<int> isolated_removed;  // original labels dropped in the tK1 case
};

// Detects G = G' v K1^l (a looped dominating vertex). Returns the reduced
// instance, or nullopt when no such vertex exists or n <= 1.
std::optional<VK1Reduction> reduce_vK1(const Graph& g);

enum class GraphClassTag {
    edgeless,
    forest,
    cycle,
    path,
    complete,
    complete_with_all_loops,
    generalized_star,
    unicyclic,
    threshold_with_loops,
    other,
};

struct GraphClass {
    GraphClassTag tag = GraphClassTag::other;
    std::vector<int> parameters;  // cycle/complete: n; generalized star: arm lengths
};

GraphClass recognize_class(const Graph& g);

// Full pipeline: component additivity, isolated-vertex stripping, twin
// reduction, v K1^l reduction to fixpoint, class formulas, exact-solver
// fallback. The certificate is reassembled for the original labels.
SolveResult snt_rank(const Graph& g, const SolverOptions& opts = {});

}  // namespace sntrank
