#pragma once

#include <optional>
#include <vector>

#include "sntrank/cover.hpp"
#include "sntrank/graph.hpp"

namespace sntrank {

struct SolverOptions {
    std::optional<int> max_order;         // cap on cover order
    std::optional<double> time_limit_s;   // wall-clock budget
    bool enumerate_all = false;
    int threads = 1;                      // parallel connected components
    int vertex_cap = 20;                  // hard fail above this
    bool closed_form_only = false;        // forbid the exact-search fallback

    // individually switchable pruning rules (for the pruning-safety checks)
    bool prune_bound = true;     // reuse-aware lower bound on new components
    bool prune_hall = true;      // discard families violating Hall's condition
    bool prune_min_size = true;  // minimum component size on complete inputs
};

enum class SolveStatus { exact, cap_reached, timeout };

struct SolveResult {
    int rank = 0;
    Cover certificate;
    SolveStatus status = SolveStatus::exact;
};

// Exact minimum cover order with a certificate. Additivity over connected
// components is applied before search; isolated loopless vertices never
// appear in any component. Deterministic for fixed options.
SolveResult snt_rank_exact(const Graph& g, const SolverOptions& opts = {});

struct EnumerationResult {
    std::vector<Cover> covers;  // canonical, sorted, deduplicated
    bool complete = true;       // false when a time limit truncated the scan
};

// The complete list of valid covers of optimal order, including covers
// that share a component family but differ in their join sets.
EnumerationResult enumerate_optimal_covers(const Graph& g, const SolverOptions& opts = {});

// A cheap valid lower bound: sum over connected components of the known
// per-class values (forests, cycles, complete graphs, looped cliques).
int lower_bound(const Graph& g);

}  // namespace sntrank
