// Acceptance suite: runs every acceptance criterion at its stated
// tolerance (all checks exact, integer arithmetic) and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sntrank/closed_form.hpp"
#include "sntrank/factorization.hpp"
#include "sntrank/uniqueness.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace sntrank;
using sntrank::testing::naive_rank;

namespace {

struct Checker {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

// every (graph, optimal cover) pair produced while running criteria 3-6;
// criterion 7 replays them through the matrix side
std::vector<std::pair<Graph, Cover>> g_found_covers;

void note_cover(const Graph& g, const Cover& c) { g_found_covers.emplace_back(g, c); }

// ---------------------------------------------------------------- corpus ---

std::vector<Graph>& small_corpus() {
    // exhaustive connected graphs with loops on <= 5 vertices (one per
    // isomorphism class) plus 200 seeded random 6-vertex graphs
    static std::vector<Graph> corpus = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 5; ++n)
            for (Graph& g : testing::connected_graphs_up_to_iso(n)) out.push_back(std::move(g));
        for (Graph& g : testing::random_connected_graphs(6, 200, 6061979))
            out.push_back(std::move(g));
        return out;
    }();
    return corpus;
}

std::vector<Graph>& labeled_corpus() {
    // every labeled connected graph with loops on <= 5 vertices
    static std::vector<Graph> corpus = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 5; ++n)
            for (Graph& g : testing::connected_graphs_labeled(n)) out.push_back(std::move(g));
        return out;
    }();
    return corpus;
}

// ------------------------------------------------------------- criteria ---

void criterion_1(Checker& ck) {
    ck.expect(katona_s(1) == 0, "s(1)=0");
    for (int n = 2; n <= 5; ++n)
        ck.expect(katona_s(n) == n, "s(n)=n for n=" + std::to_string(n));
    ck.expect(katona_s(6) == 5, "s(6)=5");
    ck.expect(katona_s(8) == 6, "s(8)=6");
    min_factor_sum(100000);  // build the table once
    for (int n = 4; n <= 100000; ++n) {
        const int s = katona_s(n);
        if (s != min_factor_sum(n).sum) {
            ck.expect(false, "factor-sum mismatch at n=" + std::to_string(n));
            return;
        }
        if (s != katona_recursion_check(n)) {
            ck.expect(false, "recursion mismatch at n=" + std::to_string(n));
            return;
        }
        ++ck.checks;
    }
}

void criterion_2(Checker& ck) {
    for (int n = 2; n <= 200; ++n) {
        const Cover c = build_complete_cover(n);
        ck.expect(c.order() == katona_s(n), "order != s(n) at n=" + std::to_string(n));
        ck.expect(validate_cover(complete_graph(n), c).valid,
                  "invalid cover of K_" + std::to_string(n));
    }
    for (int n : {9, 27}) {
        const Cover c = build_complete_cover(n);
        for (const Component& k : c.components())
            ck.expect(k.count() == n / 3,
                      "component size != n/3 at n=" + std::to_string(n));
    }
    for (int n : {6, 18}) {
        const Cover c = build_complete_cover(n);
        std::vector<Component> comps = c.components();
        std::sort(comps.begin(), comps.end(),
                  [](const Component& a, const Component& b) { return a.count() > b.count(); });
        ck.expect(comps[0].count() == n / 2 && comps[1].count() == n / 2,
                  "two largest components not of size n/2 at n=" + std::to_string(n));
        ck.expect(!comps[0].intersects(comps[1]),
                  "two largest components not disjoint at n=" + std::to_string(n));
    }
}

void criterion_3(Checker& ck) {
    // exhaustive: every labeled connected graph on <= 5 vertices
    for (const Graph& g : labeled_corpus()) {
        const SolveResult r = snt_rank_exact(g);
        const int reference = naive_rank(g);
        if (r.status != SolveStatus::exact || r.rank != reference) {
            ck.expect(false, "oracle mismatch on a <=5-vertex graph (exact " +
                                 std::to_string(r.rank) + " vs naive " +
                                 std::to_string(reference) + ")");
            return;
        }
        ++ck.checks;
    }
    // plus the 200 random 6-vertex graphs: these also feed criterion 7
    for (const Graph& g : small_corpus()) {
        const SolveResult r = snt_rank_exact(g);
        const int reference = naive_rank(g);
        ck.expect(r.status == SolveStatus::exact && r.rank == reference,
                  "oracle mismatch on a corpus graph (exact " + std::to_string(r.rank) +
                      " vs naive " + std::to_string(reference) + ")");
        note_cover(g, r.certificate);
    }
}

void criterion_4(Checker& ck) {
    auto value = [&](const Graph& g, int expected, const std::string& name) {
        const SolveResult r = snt_rank_exact(g);
        ck.expect(r.rank == expected && r.status == SolveStatus::exact,
                  name + " expected " + std::to_string(expected) + ", got " +
                      std::to_string(r.rank));
        note_cover(g, r.certificate);
    };
    value(complete_graph(6), 5, "K6");
    value(cycle_graph(3), 3, "C3");
    value(cycle_graph(4), 2, "C4");
    value(cycle_graph(5), 5, "C5");
    value(testing::looped_five_vertex(), 4, "looped 5-vertex instance");
    value(testing::looped_star4(), 3, "looped star");
    value(testing::mixed_quad(), 3, "mixed quad");
    value(testing::k3_with_looped_apex(), 3, "K3 with looped apex");
}

void criterion_5(Checker& ck) {
    for (int n = 3; n <= 9; ++n)
        for (const Graph& t : testing::trees_up_to_iso(n)) {
            const auto [rank, cover] = snt_rank_forest(t);
            const SolveResult r = snt_rank_exact(t);
            ck.expect(rank == r.rank, "tree formula mismatch at n=" + std::to_string(n));
            ck.expect(validate_cover(t, cover).valid && cover.order() == rank,
                      "tree cover unsound at n=" + std::to_string(n));
            note_cover(t, cover);
            note_cover(t, r.certificate);
        }
    ck.expect(snt_rank_forest(path_graph(5)).first == 4, "P5 = 4");
    ck.expect(snt_rank_forest(star_graph({2, 2, 2})).first == 6, "star(2,2,2) = 6");
    ck.expect(snt_rank_forest(star_graph({3, 3, 3})).first == 8, "star(3,3,3) = 8");
    ck.expect(snt_rank_generalized_star({3, 3, 3}) == 8, "star formula (3,3,3) = 8");
    ck.expect(snt_rank_forest(star_graph({2, 1, 1})).first == 4, "star(2,1,1) = 4");
    ck.expect(snt_rank_generalized_star({2, 1, 1}) == 4, "star formula (2,1,1) = 4");
    for (int t = 1; t <= 8; ++t) {
        ck.expect(snt_rank_forest(star_graph(std::vector<int>(t, 1))).first == 2,
                  "K_{1," + std::to_string(t) + "} = 2");
    }
}

void criterion_6(Checker& ck) {
    for (int n = 3; n <= 7; ++n) {
        const SolveResult r = snt_rank_exact(cycle_graph(n));
        ck.expect(snt_rank_cycle(n) == r.rank, "cycle mismatch at n=" + std::to_string(n));
        note_cover(cycle_graph(n), r.certificate);
    }
    const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    const Graph c4_pendant = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    for (const auto& [g, name] :
         std::vector<std::pair<Graph, std::string>>{{paw, "paw"}, {c4_pendant, "C4+pendant"}}) {
        const int closed = snt_rank_unicyclic(g);
        const SolveResult r = snt_rank_exact(g);
        ck.expect(closed == 4 && r.rank == 4,
                  name + " expected 4, closed " + std::to_string(closed) + " exact " +
                      std::to_string(r.rank));
        note_cover(g, r.certificate);
    }
}

void criterion_7(Checker& ck) {
    for (const auto& [g, cover] : g_found_covers) {
        const auto [b, cmat] = cover_to_factors(cover);
        const bool realized = verify_realization(g, b, cmat);
        ck.expect(realized, "verify_realization failed on a stored cover");
        if (realized)
            ck.expect(support_condition_check(triproduct(b, cmat), b, cmat),
                      "support condition failed on a stored cover");
    }
}

void criterion_8(Checker& ck) {
    for (const Graph& g : small_corpus()) {
        const EnumerationResult en = enumerate_optimal_covers(g);
        ck.expect(en.complete, "enumeration did not finish on a corpus graph");
        for (const Cover& c : en.covers) {
            ck.expect(sdr_exists(c), "optimal cover without an SDR");
            const Graph cg = cover_graph(c);
            ck.expect(twin_free_reduce(cg).reduced.vertex_count() == cg.vertex_count(),
                      "cover graph has twins");
            ck.expect(subgraph_monomorphism_exists(cg, g), "cover graph does not embed");
            ck.expect(snt_rank(cg).rank == c.order(), "st_plus(cover graph) != cover order");
        }
    }
}

void criterion_9(Checker& ck) {
    ck.expect(classify_uniqueness(path_graph(5)).unique, "P5 unique");
    ck.expect(classify_uniqueness(path_graph(7)).unique, "P7 unique");
    ck.expect(!classify_uniqueness(path_graph(4)).unique, "P4 not unique");
    ck.expect(!classify_uniqueness(path_graph(6)).unique, "P6 not unique");
    for (int n = 3; n <= 8; ++n)
        for (const Graph& t : testing::trees_up_to_iso(n)) {
            const auto dist = testing::distances(t);
            bool all_even = true;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (t.degree(u) == 1 && t.degree(v) == 1 && dist[u][v] % 2 != 0)
                        all_even = false;
            ck.expect(classify_uniqueness(t).unique == all_even,
                      "tree uniqueness mismatch at n=" + std::to_string(n));
        }
    ck.expect(classify_uniqueness(complete_graph(3)).unique, "K3 unique");
    const UniquenessReport k6 = classify_uniqueness(complete_graph(6));
    ck.expect(k6.essentially_unique && !k6.unique, "K6 essentially unique only");
    ck.expect(k6.cover_graphs.size() == 1 &&
                  is_isomorphic(k6.cover_graphs[0],
                                disjoint_union(complete_graph(2), complete_graph(3))),
              "K6 cover graph K2 u K3");
    ck.expect(!classify_uniqueness(complete_graph(4)).essentially_unique,
              "K4 not essentially unique");
    ck.expect(!classify_uniqueness(complete_graph(5)).essentially_unique,
              "K5 not essentially unique");
    const UniquenessReport g3 = classify_uniqueness(testing::k3_with_looped_apex());
    ck.expect(g3.unique_cover_graph && g3.cover_graphs.size() == 1 &&
                  is_isomorphic(g3.cover_graphs[0], complete_graph(3)),
              "K3-apex cover graph is K3");
    ck.expect(!g3.essentially_unique, "K3-apex not essentially unique");
}

void criterion_10(Checker& ck) {
    std::mt19937 rng(424243);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int made = 0;
    while (made < 200) {
        const int base_n = 3 + int(rng() % 3);  // 3..5
        Graph base = testing::random_connected_graphs(base_n, 1, unsigned(rng()))[0];
        // plant twins: duplicate one or two random vertices
        Graph g = base;
        const int copies = 1 + int(rng() % 2);
        for (int t = 0; t < copies; ++t) {
            const int src = int(rng() % unsigned(g.vertex_count()));
            Graph bigger(g.vertex_count() + 1);
            for (auto [u, v] : g.edges()) bigger.add_edge(u, v);
            const int fresh = g.vertex_count();
            for (int w = 0; w < g.vertex_count(); ++w)
                if (g.has_edge(src, w) && w != src) bigger.add_edge(fresh, w);
            if (g.has_loop(src)) {
                bigger.add_edge(fresh, fresh);
                bigger.add_edge(fresh, src);
            }
            g = std::move(bigger);
        }
        // plant a looped apex half the time
        if (coin(rng) < 0.5) g = join(g, Graph::from_edges(1, {{0, 0}}));
        if (g.vertex_count() > 8) continue;
        ++made;
        const SolveResult via_reductions = snt_rank(g);
        const SolveResult via_search = snt_rank_exact(g);
        ck.expect(via_reductions.rank == via_search.rank,
                  "reduction pipeline disagrees with the exact solver");
        ck.expect(validate_cover(g, via_reductions.certificate).valid &&
                      via_reductions.certificate.order() == via_reductions.rank,
                  "reassembled certificate unsound");
    }
    for (int i = 1; i <= 5; ++i) {
        const Graph t = testing::threshold_chain(i);
        const SolveResult r = snt_rank(t);
        ck.expect(r.rank == 2 * i, "threshold chain T_" + std::to_string(i));
        ck.expect(validate_cover(t, r.certificate).valid, "threshold certificate invalid");
    }
}

struct Criterion {
    int id;
    const char* what;
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Katona formula triple agreement on [4, 1e5] plus anchors", criterion_1},
        {2, "complete-graph covers validate with order s(n) on [2, 200]", criterion_2},
        {3, "exact solver matches the unpruned reference search, exhaustively to 5 vertices", criterion_3},
        {4, "named instance values reproduced by the exact solver", criterion_4},
        {5, "tree formula matches the exact solver on all trees with 3-9 vertices", criterion_5},
        {6, "cycle and unicyclic values via both paths", criterion_6},
        {7, "factorization round trip over every cover found above", criterion_7},
        {8, "structural properties of every enumerated optimal cover", criterion_8},
        {9, "uniqueness classifications at desk scale", criterion_9},
        {10, "reductions agree with the exact solver; threshold chains", criterion_10},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        Checker ck;
        const auto start = std::chrono::steady_clock::now();
        c.run(ck);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = ck.failures.empty();
        std::printf("criterion %2d: %s (%d checks, %.1fs) — %s\n", c.id, ok ? "PASS" : "FAIL",
                    ck.checks, seconds, c.what);
        for (std::size_t i = 0; i < ck.failures.size() && i < 5; ++i)
            std::printf("              failure: %s\n", ck.failures[i].c_str());
        if (ck.failures.size() > 5)
            std::printf("              (%zu failures total)\n", ck.failures.size());
        if (!ok) ++failed;
    }
    if (failed) std::printf("%d criteria FAILED\n", failed);
    else std::printf("all criteria passed\n");
    return failed == 0 ? 0 : 1;
}
