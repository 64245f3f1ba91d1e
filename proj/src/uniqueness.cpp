#include "sntrank/uniqueness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sntrank/errors.hpp"

namespace sntrank {

Cover apply_automorphism(const Permutation& sigma, const Cover& c) {
    if (sigma.size() != c.ground_n())
        throw std::invalid_argument("apply_automorphism: permutation size mismatch");
    return canonical_form(remap_cover(c, sigma.image, c.ground_n()));
}

bool covers_equivalent(const Graph& g, const Cover& c1, const Cover& c2, int aut_cap) {
    const Cover target = canonical_form(c2);
    for (const Permutation& sigma : automorphisms(g, aut_cap))
        if (apply_automorphism(sigma, c1) == target) return true;
    return false;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

UniquenessReport classify_uniqueness(const Graph& g, const SolverOptions& opts) {
    EnumerationResult en = enumerate_optimal_covers(g, opts);
    if (!en.complete)
        throw limit_error("optimal-cover enumeration incomplete; refusing to classify");

    UniquenessReport rep;
    rep.covers = std::move(en.covers);
    if (rep.covers.empty()) throw std::logic_error("enumeration returned no covers");
    rep.rank = rep.covers.front().order();

    // orbits of the automorphism action on the cover list
    const int count = int(rep.covers.size());
    const int aut_cap = std::max(10, g.vertex_count());
    const auto auts = automorphisms(g, aut_cap);
    std::vector<int> parent(count);
    std::iota(parent.begin(), parent.end(), 0);
    auto index_of = [&](const Cover& c) {
        const auto it =
            std::lower_bound(rep.covers.begin(), rep.covers.end(), c,
                             [](const Cover& a, const Cover& b) { return compare_covers(a, b) < 0; });
        if (it == rep.covers.end() || !(*it == c))
            throw std::logic_error("automorphism image of an optimal cover is not optimal");
        return int(it - rep.covers.begin());
    };
    for (int i = 0; i < count; ++i)
        for (const Permutation& sigma : auts) {
            const int j = index_of(apply_automorphism(sigma, rep.covers[i]));
            const int ri = find_root(parent, i), rj = find_root(parent, j);
            if (ri != rj) parent[ri] = rj;
        }
    for (int i = 0; i < count; ++i)
        if (find_root(parent, i) == i) ++rep.orbit_count;

    // distinct cover graphs up to isomorphism
    for (const Cover& c : rep.covers) {
        const Graph cg = cover_graph(c);
        bool known = false;
        for (const Graph& rep_g : rep.cover_graphs)
            if (is_isomorphic(cg, rep_g, std::max(12, cg.vertex_count()))) {
                known = true;
                break;
            }
        if (!known) rep.cover_graphs.push_back(cg);
    }

    rep.unique = count == 1;
    rep.essentially_unique = rep.orbit_count == 1;
    rep.unique_cover_graph = rep.cover_graphs.size() == 1;
    return rep;
}

}  // namespace sntrank
