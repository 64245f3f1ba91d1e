#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sntrank/bitset.hpp"
#include "sntrank/graph.hpp"

namespace sntrank {

// A component of a cover: a nonempty vertex subset of the ground set.
using Component = Bitset;

// A set-join cover candidate: a deduplicated family of components plus a
// set of unordered index pairs (a == b allowed, meaning K v K). Joins are
// stored on component indices so sharing a component across joins is
// explicit — the order counts distinct components, not joins.
class Cover {
public:
    Cover() = default;
    explicit Cover(int ground_n) : ground_n_(ground_n) {}

    int ground_n() const { return ground_n_; }
    int order() const { return int(comps_.size()); }

    // Dedups: adding an existing component returns its index.
    // Throws std::invalid_argument for an empty component.
    int add_component(const Component& c);

    void add_join(int a, int b);

    const std::vector<Component>& components() const { return comps_; }
    const std::vector<std::pair<int, int>>& joins() const { return joins_; }

    // true when every component participates in at least one join
    bool all_components_joined() const;

    friend bool operator==(const Cover& a, const Cover& b) {
        return a.ground_n_ == b.ground_n_ && a.comps_ == b.comps_ && a.joins_ == b.joins_;
    }
    friend bool operator!=(const Cover& a, const Cover& b) { return !(a == b); }

private:
    int ground_n_ = 0;
    std::vector<Component> comps_;
    std::vector<std::pair<int, int>> joins_;  // normalized a <= b, insertion order
};

// The set-join K v L on ground set 0..n-1: all pairs {i,j} with i in K,
// j in L; vertex v gets a loop exactly when v is in both.
// Throws std::invalid_argument when either side is empty.
Graph set_join(const Component& k, const Component& l, int n);

struct ValidityReport {
    bool valid = false;
    std::vector<std::pair<int, int>> missing;    // edges of G not covered
    std::vector<std::pair<int, int>> forbidden;  // covered pairs not in E(G)
};

// Valid iff the union of the cover's set-joins equals E(G) exactly.
ValidityReport validate_cover(const Graph& g, const Cover& c);

// One vertex per component, an edge per join (loop for a self-join).
Graph cover_graph(const Cover& c);

// Intersect every component with S, drop joins where a side empties,
// dedupe, keep only components still participating in a join, relabel the
// ground set to S (order preserving).
Cover restrict_cover(const Cover& c, const Bitset& s);

// System of distinct representatives over the component family, via
// maximum bipartite matching. Returns the witness (component -> vertex)
// or nullopt.
std::optional<std::vector<int>> sdr_witness(const Cover& c);
bool sdr_exists(const Cover& c);

// Components sorted by (cardinality, member sequence); joins rewritten to
// sorted pairs and sorted. Equal covers have identical canonical forms.
Cover canonical_form(const Cover& c);

// Total order on covers (compares canonical forms of equal ground sets).
int compare_covers(const Cover& a, const Cover& b);

// Relabel a cover through vertex map old->new on a new ground set.
Cover remap_cover(const Cover& c, const std::vector<int>& vertex_map, int new_ground_n);

}  // namespace sntrank
