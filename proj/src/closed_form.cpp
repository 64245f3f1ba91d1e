#include "sntrank/closed_form.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sntrank/errors.hpp"

namespace sntrank {

int katona_s(long long n) {
    if (n <= 0) throw std::invalid_argument("katona_s: n must be positive");
    if (n == 1) return 0;
    if (n == 2) return 2;
    // for i >= 1 the intervals (2*3^{i-1}, 3^i], (3^i, 4*3^{i-1}], (4*3^{i-1}, 2*3^i]
    // partition (2, inf); scan i upward with integer arithmetic only
    long long p = 1;  // 3^{i-1}
    for (int i = 1;; ++i) {
        if (n <= 3 * p) return 3 * i;
        if (n <= 4 * p) return 3 * i + 1;
        if (n <= 6 * p) return 3 * i + 2;
        p *= 3;
    }
}

namespace {

constexpr long long kFactorSumMax = 2'000'000;  // keeps every optimal factor < 64

// DP table over targets; witness[m] is the lexicographically least sorted
// optimal factor list for m. Grown on demand, shared across calls.
struct FactorTable {
    std::mutex mu;
    std::vector<int> sum{0, 0};                    // sum[0] unused, sum[1] = 0
    std::vector<std::vector<int>> witness{{}, {}};

    void grow(long long n) {
        std::lock_guard<std::mutex> lock(mu);
        for (long long m = sum.size(); m <= n; ++m) {
            int best_sum = -1;
            std::vector<int> best_list;
            const int qmax = int(std::min<long long>(m, 64));
            for (int q = 2; q <= qmax; ++q) {
                const long long rest = (m + q - 1) / q;  // ceil(m/q)
                std::vector<int> cand = witness[rest];
                cand.insert(std::upper_bound(cand.begin(), cand.end(), q), q);
                const int cand_sum = sum[rest] + q;
                if (best_sum < 0 || cand_sum < best_sum ||
                    (cand_sum == best_sum && cand < best_list)) {
                    best_sum = cand_sum;
                    best_list = std::move(cand);
                }
            }
            sum.push_back(best_sum);
            witness.push_back(std::move(best_list));
        }
    }
};

FactorTable& factor_table() {
    static FactorTable table;
    return table;
}

}  // namespace

FactorSum min_factor_sum(long long n) {
    if (n <= 0) throw std::invalid_argument("min_factor_sum: n must be positive");
    if (n > kFactorSumMax)
        throw std::invalid_argument("min_factor_sum: n beyond supported table size");
    auto& table = factor_table();
    table.grow(n);
    std::lock_guard<std::mutex> lock(table.mu);
    return {table.sum[n], table.witness[n]};
}

int katona_recursion_check(long long n) {
    if (n < 4) throw std::invalid_argument("katona_recursion_check: requires n >= 4");
    int best = -1;
    for (int k = 2; k <= 5; ++k) {
        const int value = k + katona_s((n + k - 1) / k);
        if (best < 0 || value < best) best = value;
    }
    return best;
}

namespace {

// The recursive product construction: process factors largest-first, so
// the base clique is on the largest factor and each later factor q splits
// the ground set into q pairwise-joined blocks while the inner cover is
// replicated across the blocks.
Cover product_cover(const std::vector<int>& factors_desc) {
    int ground = factors_desc.front();
    Cover cover(ground);
    std::vector<int> idx;
    for (int v = 0; v < ground; ++v) {
        Component c(ground);
        c.set(v);
        idx.push_back(cover.add_component(c));
    }
    for (int a = 0; a < ground; ++a)
        for (int b = a + 1; b < ground; ++b) cover.add_join(idx[a], idx[b]);

    for (std::size_t f = 1; f < factors_desc.size(); ++f) {
        const int q = factors_desc[f];
        const int n1 = ground;
        const int n2 = n1 * q;
        Cover next(n2);
        std::vector<int> comp_index;
        for (const Component& k : cover.components()) {
            Component rep(n2);
            for (int v = k.find_first(); v >= 0; v = k.find_next(v))
                for (int t = 0; t < q; ++t) rep.set(v + t * n1);
            comp_index.push_back(next.add_component(rep));
        }
        for (auto [a, b] : cover.joins()) next.add_join(comp_index[a], comp_index[b]);
        std::vector<int> blocks;
        for (int t = 0; t < q; ++t) {
            Component block(n2);
            for (int v = 0; v < n1; ++v) block.set(t * n1 + v);
            blocks.push_back(next.add_component(block));
        }
        for (int a = 0; a < q; ++a)
            for (int b = a + 1; b < q; ++b) next.add_join(blocks[a], blocks[b]);
        cover = std::move(next);
        ground = n2;
    }
    return cover;
}

}  // namespace

Cover build_complete_cover(int n) {
    if (n < 2) throw std::invalid_argument("build_complete_cover: requires n >= 2");
    const int s = katona_s(n);
    long long m = n;
    while (katona_s(m + 1) == s) ++m;
    std::vector<int> factors = min_factor_sum(m).factors;
    std::sort(factors.begin(), factors.end(), std::greater<int>());
    Cover cover = product_cover(factors);
    if (cover.ground_n() == n) return cover;
    Bitset keep(cover.ground_n());
    for (int v = 0; v < n; ++v) keep.set(v);
    return restrict_cover(cover, keep);
}

std::pair<int, Cover> snt_rank_forest(const Graph& f) {
    if (!is_forest(f)) throw std::invalid_argument("snt_rank_forest: not a loopless forest");
    const int n = f.vertex_count();
    std::vector<Bitset> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = f.row(v);
    auto degree = [&](int v) { return adj[v].count(); };
    Cover cover(n);
    int stars = 0;
    while (true) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (degree(v) == 1) leaf = v;
        if (leaf < 0) break;
        const int w = adj[leaf].find_first();
        Component centre(n);
        centre.set(w);
        const Component around = adj[w];
        const int ic = cover.add_component(centre);
        const int ia = cover.add_component(around);
        cover.add_join(ic, ia);
        ++stars;
        for (int x = adj[w].find_first(); x >= 0; x = adj[w].find_next(x)) adj[x].reset(w);
        adj[w] = Bitset(n);
    }
    return {2 * stars, cover};
}

int snt_rank_generalized_star(const std::vector<int>& arms) {
    if (arms.size() < 3)
        throw std::invalid_argument("snt_rank_generalized_star: requires at least 3 arms");
    int vertices = 1, odd = 0;
    for (int k : arms) {
        if (k < 1) throw std::invalid_argument("snt_rank_generalized_star: arm length >= 1");
        vertices += k;
        if (k % 2 == 1) ++odd;
    }
    return odd > 0 ? vertices + 1 - odd : vertices - 1;
}

int snt_rank_cycle(int n) {
    if (n < 3) throw std::invalid_argument("snt_rank_cycle: requires n >= 3");
    return n == 4 ? 2 : n;
}

namespace {

// leaf stars plus a final cycle cover; shared by the unicyclic formula and
// the dispatcher's certificate construction
std::pair<int, Cover> unicyclic_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.row(v);
    Cover cover(n);
    int rank = 0;
    while (true) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (adj[v].count() == 1) leaf = v;
        if (leaf < 0) break;
        const int w = adj[leaf].find_first();
        Component centre(n);
        centre.set(w);
        const Component around = adj[w];
        cover.add_join(cover.add_component(centre), cover.add_component(around));
        rank += 2;
        for (int x = adj[w].find_first(); x >= 0; x = adj[w].find_next(x)) adj[x].reset(w);
        adj[w] = Bitset(n);
    }
    // whatever is left is a single cycle (or nothing)
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (adj[v].any()) start = v;
    if (start >= 0) {
        std::vector<int> ring{start};
        int prev = -1, cur = start;
        while (true) {
            int nxt = -1;
            for (int x = adj[cur].find_first(); x >= 0; x = adj[cur].find_next(x))
                if (x != prev) {
                    nxt = x;
                    break;
                }
            if (nxt == start || nxt < 0) break;
            ring.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        const int len = int(ring.size());
        if (len == 4) {
            Component a(n), b(n);
            a.set(ring[0]);
            a.set(ring[2]);
            b.set(ring[1]);
            b.set(ring[3]);
            cover.add_join(cover.add_component(a), cover.add_component(b));
            rank += 2;
        } else {
            std::vector<int> idx;
            for (int v : ring) {
                Component c(n);
                c.set(v);
                idx.push_back(cover.add_component(c));
            }
            for (int t = 0; t < len; ++t) cover.add_join(idx[t], idx[(t + 1) % len]);
            rank += len;
        }
    }
    return {rank, cover};
}

}  // namespace

int snt_rank_unicyclic(const Graph& g) {
    if (has_any_loop(g) || !is_connected(g) || g.edge_count() != g.vertex_count())
        throw std::invalid_argument(
            "snt_rank_unicyclic: requires a connected loopless graph with exactly one cycle");
    return unicyclic_cover(g).first;
}

std::optional<VK1Reduction> reduce_vK1(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return std::nullopt;
    int apex = -1;
    for (int v = 0; v < n && apex < 0; ++v)
        if (g.row(v).count() == n) apex = v;  // loop plus every other vertex
    if (apex < 0) return std::nullopt;
    VK1Reduction red;
    red.apex = apex;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != apex) rest.push_back(v);
    Graph without = induced_subgraph(g, rest);
    std::vector<int> isolated, kept;
    for (int v = 0; v < int(rest.size()); ++v)
        (without.row(v).none() ? isolated : kept).push_back(v);
    if (isolated.empty()) {
        red.reduced = std::move(without);
        red.delta = 0;
        red.kept = rest;
    } else {
        red.delta = 2;
        red.reduced = induced_subgraph(without, kept);
        for (int v : kept) red.kept.push_back(rest[v]);
        for (int v : isolated) red.isolated_removed.push_back(rest[v]);
    }
    return red;
}

namespace {

bool is_threshold_with_loops(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bitset> adj(n);
    Bitset alive(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = g.row(v);
        alive.set(v);
    }
    int remaining = n;
    while (remaining > 0) {
        bool removed = false;
        for (int v = alive.find_first(); v >= 0; v = alive.find_next(v))
            if ((adj[v] & alive).none()) {  // isolated, loopless
                alive.reset(v);
                --remaining;
                removed = true;
            }
        if (removed) continue;
        int dom = -1;
        for (int v = alive.find_first(); v >= 0 && dom < 0; v = alive.find_next(v))
            if ((adj[v] & alive) == alive) dom = v;  // looped, dominating
        if (dom < 0) return false;
        alive.reset(dom);
        --remaining;
    }
    return true;
}

std::optional<std::vector<int>> generalized_star_arms(const Graph& g) {
    if (!is_connected(g) || !is_forest(g)) return std::nullopt;
    const int n = g.vertex_count();
    int centre = -1;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d >= 3) {
            if (centre >= 0) return std::nullopt;
            centre = v;
        }
    }
    if (centre < 0) return std::nullopt;
    std::vector<int> arms;
    const Bitset& row = g.row(centre);
    for (int next = row.find_first(); next >= 0; next = row.find_next(next)) {
        int len = 1, prev = centre, cur = next;
        while (g.degree(cur) == 2) {
            const Bitset& r = g.row(cur);
            int step = -1;
            for (int x = r.find_first(); x >= 0; x = r.find_next(x))
                if (x != prev) step = x;
            prev = cur;
            cur = step;
            ++len;
        }
        if (g.degree(cur) != 1) return std::nullopt;  // arm must end in a leaf
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end(), std::greater<int>());
    return arms;
}

}  // namespace

GraphClass recognize_class(const Graph& g) {
    const int n = g.vertex_count();
    if (!g.has_any_edge()) return {GraphClassTag::edgeless, {n}};
    if (is_complete_all_loops(g)) return {GraphClassTag::complete_with_all_loops, {n}};
    if (is_complete_loopless(g)) return {GraphClassTag::complete, {n}};
    if (is_cycle_graph(g)) return {GraphClassTag::cycle, {n}};
    if (is_path_graph(g)) return {GraphClassTag::path, {n}};
    if (auto arms = generalized_star_arms(g)) return {GraphClassTag::generalized_star, *arms};
    if (is_forest(g)) return {GraphClassTag::forest, {n}};
    if (!has_any_loop(g) && is_connected(g) && g.edge_count() == n)
        return {GraphClassTag::unicyclic, {n}};
    if (is_threshold_with_loops(g)) return {GraphClassTag::threshold_with_loops, {n}};
    return {GraphClassTag::other, {n}};
}

namespace {

SolveResult solve_any(const Graph& g, const SolverOptions& opts);

SolveResult solve_connected(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    SolveResult res;
    res.certificate = Cover(n);
    if (!g.has_any_edge()) return res;  // a lone loopless vertex
    if (n == 1) {                       // a lone looped vertex
        Component k(1);
        k.set(0);
        const int i = res.certificate.add_component(k);
        res.certificate.add_join(i, i);
        res.rank = 1;
        return res;
    }

    const TwinReduction tw = twin_free_reduce(g);
    if (tw.reduced.vertex_count() < n) {
        SolveResult sub = solve_connected(tw.reduced, opts);
        Cover lifted(n);
        std::vector<int> comp_index;
        for (const Component& k : sub.certificate.components()) {
            Component e(n);
            for (int v = 0; v < n; ++v)
                if (k.test(tw.class_of[v])) e.set(v);
            comp_index.push_back(lifted.add_component(e));
        }
        for (auto [a, b] : sub.certificate.joins()) lifted.add_join(comp_index[a], comp_index[b]);
        res.rank = sub.rank;
        res.certificate = std::move(lifted);
        res.status = sub.status;
        return res;
    }

    if (const auto red = reduce_vK1(g)) {
        SolveResult sub = solve_any(red->reduced, opts);
        Cover lifted(n);
        if (red->delta == 0) {
            std::vector<int> comp_index;
            for (const Component& k : sub.certificate.components()) {
                Component e(n);
                e.set(red->apex);
                for (int v = k.find_first(); v >= 0; v = k.find_next(v)) e.set(red->kept[v]);
                comp_index.push_back(lifted.add_component(e));
            }
            for (auto [a, b] : sub.certificate.joins())
                lifted.add_join(comp_index[a], comp_index[b]);
        } else if (red->reduced.vertex_count() == 0) {
            Component all(n), apex_only(n);
            apex_only.set(red->apex);
            all.set(red->apex);
            for (int v : red->isolated_removed) all.set(v);
            lifted.add_join(lifted.add_component(all), lifted.add_component(apex_only));
        } else {
            std::vector<int> comp_index;
            for (const Component& k : sub.certificate.components()) {
                Component e(n);
                e.set(red->apex);
                for (int v = k.find_first(); v >= 0; v = k.find_next(v)) e.set(red->kept[v]);
                comp_index.push_back(lifted.add_component(e));
            }
            for (auto [a, b] : sub.certificate.joins())
                lifted.add_join(comp_index[a], comp_index[b]);
            Component iso(n), apex_only(n);
            apex_only.set(red->apex);
            for (int v : red->isolated_removed) iso.set(v);
            lifted.add_join(lifted.add_component(iso), lifted.add_component(apex_only));
        }
        res.rank = sub.rank + red->delta;
        res.certificate = std::move(lifted);
        res.status = sub.status;
        return res;
    }

    const GraphClass cls = recognize_class(g);
    switch (cls.tag) {
        case GraphClassTag::complete: {
            res.rank = katona_s(n);
            res.certificate = build_complete_cover(n);
            return res;
        }
        case GraphClassTag::cycle: {
            auto [rank, cover] = unicyclic_cover(g);
            res.rank = rank;
            res.certificate = std::move(cover);
            return res;
        }
        case GraphClassTag::path:
        case GraphClassTag::generalized_star:
        case GraphClassTag::forest: {
            auto [rank, cover] = snt_rank_forest(g);
            res.rank = rank;
            res.certificate = std::move(cover);
            return res;
        }
        case GraphClassTag::unicyclic: {
            auto [rank, cover] = unicyclic_cover(g);
            res.rank = rank;
            res.certificate = std::move(cover);
            return res;
        }
        default: {
            if (opts.closed_form_only)
                throw limit_error("no closed form applies to this graph");
            return snt_rank_exact(g, opts);
        }
    }
}

SolveResult solve_any(const Graph& g, const SolverOptions& opts) {
    const auto comps = connected_components(g);
    if (comps.size() == 1 && g.vertex_count() > 0) return solve_connected(g, opts);
    SolveResult res;
    res.certificate = Cover(g.vertex_count());
    bool timed_out = false, capped = false;
    for (const auto& comp : comps) {
        SolveResult part = solve_connected(induced_subgraph(g, comp), opts);
        res.rank += part.rank;
        timed_out |= part.status == SolveStatus::timeout;
        capped |= part.status == SolveStatus::cap_reached;
        Cover mapped = remap_cover(part.certificate, comp, g.vertex_count());
        std::vector<int> comp_index;
        for (const Component& k : mapped.components())
            comp_index.push_back(res.certificate.add_component(k));
        for (auto [a, b] : mapped.joins())
            res.certificate.add_join(comp_index[a], comp_index[b]);
    }
    res.status = timed_out  ? SolveStatus::timeout
                 : capped   ? SolveStatus::cap_reached
                            : SolveStatus::exact;
    return res;
}

}  // namespace

SolveResult snt_rank(const Graph& g, const SolverOptions& opts) {
    SolveResult res = solve_any(g, opts);
    res.certificate = canonical_form(res.certificate);
    if (res.status == SolveStatus::exact) {
        const ValidityReport rep = validate_cover(g, res.certificate);
        if (!rep.valid || res.certificate.order() != res.rank)
            throw std::logic_error("snt_rank produced an inconsistent certificate");
    }
    return res;
}

}  // namespace sntrank
