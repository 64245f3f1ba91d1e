#include "support/naive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace sntrank::testing {

namespace {

using VMask = std::uint32_t;
using EMask = std::uint64_t;  // edge slots j(j+1)/2+i, needs n <= 10

int slot(int i, int j) { return j * (j + 1) / 2 + i; }  // i <= j

struct PairTable {
    int n = 0;
    EMask target = 0;
    // pair index (a <= b) over all nonempty subsets 1..2^n-1
    std::vector<EMask> edges;     // 0 when the pair is not admissible
    std::vector<bool> admissible;

    explicit PairTable(const Graph& g) : n(g.vertex_count()) {
        if (n > 6) throw std::invalid_argument("naive reference limited to 6 vertices");
        std::vector<VMask> adj(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w = g.row(v).find_first(); w >= 0; w = g.row(v).find_next(w)) {
                adj[v] |= VMask{1} << w;
                if (v <= w) target |= EMask{1} << slot(v, w);
            }
        const int count = (1 << n) - 1;
        edges.assign(std::size_t(count + 1) * (count + 1), 0);
        admissible.assign(edges.size(), false);
        for (int a = 1; a <= count; ++a)
            for (int b = a; b <= count; ++b) {
                bool ok = true;
                EMask e = 0;
                for (int u = 0; u < n && ok; ++u) {
                    if (!(a >> u & 1)) continue;
                    for (int v = 0; v < n; ++v) {
                        if (!(b >> v & 1)) continue;
                        if (!(adj[u] >> v & 1)) {
                            ok = false;
                            break;
                        }
                        e |= EMask{1} << (u <= v ? slot(u, v) : slot(v, u));
                    }
                }
                if (ok) {
                    edges[std::size_t(a) * (count + 1) + b] = e;
                    admissible[std::size_t(a) * (count + 1) + b] = true;
                }
            }
    }

    EMask pair_mask(int a, int b) const {
        if (a > b) std::swap(a, b);
        return edges[std::size_t(a) * ((1 << n) - 1 + 1) + b];
    }
    bool adm(int a, int b) const {
        if (a > b) std::swap(a, b);
        return admissible[std::size_t(a) * ((1 << n) - 1 + 1) + b];
    }
};

// does some family of exactly r subsets cover the target?
bool family_search(const PairTable& t, int r, int start, std::vector<int>& family, EMask acc) {
    const int depth = int(family.size());
    if (depth == r) return acc == t.target;
    const int count = (1 << t.n) - 1;
    for (int s = start; s <= count; ++s) {
        if (count - s + 1 < r - depth) break;
        EMask acc2 = acc;
        for (int prev : family) acc2 |= t.pair_mask(prev, s);
        acc2 |= t.pair_mask(s, s);
        family.push_back(s);
        if (family_search(t, r, s + 1, family, acc2)) return true;
        family.pop_back();
    }
    return false;
}

void collect_families(const PairTable& t, int r, int start, std::vector<int>& family, EMask acc,
                      std::vector<std::vector<int>>& out) {
    const int depth = int(family.size());
    if (depth == r) {
        if (acc == t.target) out.push_back(family);
        return;
    }
    const int count = (1 << t.n) - 1;
    for (int s = start; s <= count; ++s) {
        if (count - s + 1 < r - depth) break;
        EMask acc2 = acc;
        for (int prev : family) acc2 |= t.pair_mask(prev, s);
        acc2 |= t.pair_mask(s, s);
        family.push_back(s);
        collect_families(t, r, s + 1, family, acc2, out);
        family.pop_back();
    }
}

void join_subsets(const PairTable& t, const std::vector<int>& family,
                  const std::vector<std::pair<int, int>>& pairs, std::size_t k, EMask acc,
                  std::uint32_t used, std::vector<std::pair<int, int>>& joins,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
    EMask rest = acc;
    for (std::size_t q = k; q < pairs.size(); ++q)
        rest |= t.pair_mask(family[pairs[q].first], family[pairs[q].second]);
    if (rest != t.target) return;
    if (k == pairs.size()) {
        const std::uint32_t all = (1u << family.size()) - 1;
        if (acc == t.target && used == all) out.push_back(joins);
        return;
    }
    joins.push_back(pairs[k]);
    join_subsets(t, family, pairs, k + 1,
                 acc | t.pair_mask(family[pairs[k].first], family[pairs[k].second]),
                 used | (1u << pairs[k].first) | (1u << pairs[k].second), joins, out);
    joins.pop_back();
    join_subsets(t, family, pairs, k + 1, acc, used, joins, out);
}

}  // namespace

int naive_rank(const Graph& g) {
    const PairTable t(g);
    if (t.target == 0) return 0;
    std::vector<int> family;
    for (int r = 1; r <= t.n; ++r) {
        family.clear();
        if (family_search(t, r, 1, family, 0)) return r;
    }
    throw std::logic_error("naive_rank: no cover found up to order n");
}

std::vector<Cover> naive_optimal_covers(const Graph& g) {
    const int n = g.vertex_count();
    const PairTable t(g);
    std::vector<Cover> out;
    if (t.target == 0) {
        out.emplace_back(n);
        return out;
    }
    const int rank = naive_rank(g);
    std::vector<std::vector<int>> families;
    std::vector<int> family;
    collect_families(t, rank, 1, family, 0, families);
    for (const auto& fam : families) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < rank; ++a)
            for (int b = a; b < rank; ++b)
                if (t.adm(fam[a], fam[b])) pairs.emplace_back(a, b);
        std::vector<std::vector<std::pair<int, int>>> join_sets;
        std::vector<std::pair<int, int>> joins;
        join_subsets(t, fam, pairs, 0, 0, 0, joins, join_sets);
        for (const auto& js : join_sets) {
            Cover c(n);
            std::vector<int> idx;
            for (int s : fam) {
                Component k(n);
                for (int v = 0; v < n; ++v)
                    if (s >> v & 1) k.set(v);
                idx.push_back(c.add_component(k));
            }
            for (auto [a, b] : js) c.add_join(idx[a], idx[b]);
            out.push_back(canonical_form(c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Cover& a, const Cover& b) { return compare_covers(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// canonical slot-mask under vertex relabelling: the minimum over all
// permutations; used to pick one representative per isomorphism class
std::uint64_t relabel_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) {
            if (!(mask >> slot(i, j) & 1)) continue;
            const int a = std::min(perm[i], perm[j]), b = std::max(perm[i], perm[j]);
            out |= std::uint64_t{1} << slot(a, b);
        }
    return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i)
            if (mask >> slot(i, j) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const int slots = n * (n + 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        bool least = true;
        for (const auto& perm : perms)
            if (relabel_mask(n, mask, perm) < mask) {
                least = false;
                break;
            }
        if (!least) continue;
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> connected_graphs_labeled(int n) {
    const int slots = n * (n + 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> random_connected_graphs(int n, int count, unsigned seed,
                                           double loop_p) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double densities[] = {0.3, 0.5, 0.7};
    std::vector<Graph> out;
    while (int(out.size()) < count) {
        const double p = densities[out.size() % 3];
        Graph g(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < p) g.add_edge(i, j);
            if (coin(rng) < loop_p) g.add_edge(i, i);
        }
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

namespace {

std::string ahu_encode(const Graph& g, int v, int parent) {
    std::vector<std::string> parts;
    const Bitset& row = g.row(v);
    for (int w = row.find_first(); w >= 0; w = row.find_next(w))
        if (w != parent) parts.push_back(ahu_encode(g, w, v));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& part : parts) s += part;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> layer;
    int remaining = n;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            const Bitset& row = g.row(v);
            for (int w = row.find_first(); w >= 0; w = row.find_next(w))
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) centers.push_back(v);
    return centers;
}

std::string tree_signature(const Graph& g) {
    const auto centers = tree_centers(g);
    if (centers.size() == 1) return ahu_encode(g, centers[0], -1);
    std::string a = ahu_encode(g, centers[0], centers[1]);
    std::string b = ahu_encode(g, centers[1], centers[0]);
    return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace

std::vector<Graph> trees_up_to_iso(int n) {
    std::vector<Graph> current{Graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : current)
            for (int v = 0; v < t.vertex_count(); ++v) {
                Graph bigger(size);
                for (auto [a, b] : t.edges()) bigger.add_edge(a, b);
                bigger.add_edge(v, size - 1);
                next.emplace(tree_signature(bigger), bigger);
            }
        current.clear();
        for (auto& [sig, tree] : next) current.push_back(std::move(tree));
    }
    return current;
}

std::vector<std::vector<int>> distances(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        std::queue<int> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            const Bitset& row = g.row(v);
            for (int w = row.find_first(); w >= 0; w = row.find_next(w))
                if (w != v && dist[s][w] < 0) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

}  // namespace sntrank::testing
