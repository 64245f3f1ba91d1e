#pragma once

#include <vector>

#include "sntrank/cover.hpp"
#include "sntrank/graph.hpp"
#include "sntrank/solver.hpp"

namespace sntrank {

struct UniquenessReport {
    int rank = 0;
    std::vector<Cover> covers;        // every optimal cover, canonical and sorted
    int orbit_count = 0;              // orbits under the automorphism action
    std::vector<Graph> cover_graphs;  // distinct cover graphs up to isomorphism
    bool unique = false;              // exactly one optimal cover
    bool essentially_unique = false;  // one orbit
    bool unique_cover_graph = false;  // one cover graph up to isomorphism
};

// Map every component pointwise through sigma, keep the joins, canonicalize.
Cover apply_automorphism(const Permutation& sigma, const Cover& c);

// True iff some automorphism of g maps c1 onto c2.
bool covers_equivalent(const Graph& g, const Cover& c1, const Cover& c2, int aut_cap = 10);

// Complete classification; refuses (limit_error) when enumeration cannot
// be finished under the given options.
UniquenessReport classify_uniqueness(const Graph& g, const SolverOptions& opts = {});

}  // namespace sntrank
