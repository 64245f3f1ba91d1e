#include "sntrank/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>

#include "sntrank/closed_form.hpp"
#include "sntrank/errors.hpp"

namespace sntrank {

namespace {

using Clock = std::chrono::steady_clock;
using VMask = std::uint32_t;

constexpr int kMaxVertices = 22;       // vertex masks fit a word, edge slots fit 4 words
constexpr int kMaxEnumVertices = 14;   // family enumeration scans all 2^n subsets

inline int popcount(VMask m) { return __builtin_popcount(m); }

inline VMask full_mask(int n) { return n >= 32 ? ~VMask{0} : ((VMask{1} << n) - 1); }

// Edge slots: slot(i,j) = j(j+1)/2 + i for i <= j (loops are slot(i,i)).
struct EdgeSet {
    std::array<std::uint64_t, 4> w{};

    void set(int s) { w[s >> 6] |= (std::uint64_t{1} << (s & 63)); }
    bool test(int s) const { return (w[s >> 6] >> (s & 63)) & 1; }
    bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
    EdgeSet& operator|=(const EdgeSet& o) {
        for (int k = 0; k < 4; ++k) w[k] |= o.w[k];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.w == b.w; }
    friend bool operator!=(const EdgeSet& a, const EdgeSet& b) { return a.w != b.w; }
    // first slot present in *this but not in `minus`; -1 if none
    int first_not_in(const EdgeSet& minus) const {
        for (int k = 0; k < 4; ++k) {
            std::uint64_t d = w[k] & ~minus.w[k];
            if (d) return k * 64 + __builtin_ctzll(d);
        }
        return -1;
    }
};

inline int edge_slot(int i, int j) { return j * (j + 1) / 2 + i; }  // i <= j

struct SlotTable {
    std::array<std::pair<int, int>, kMaxVertices*(kMaxVertices + 1) / 2> ij{};
    SlotTable() {
        for (int j = 0; j < kMaxVertices; ++j)
            for (int i = 0; i <= j; ++i) ij[edge_slot(i, j)] = {i, j};
    }
};
const SlotTable slot_table;

struct LocalGraph {
    int n = 0;
    std::array<VMask, kMaxVertices> adj{};  // loop = own bit
    EdgeSet target;
};

LocalGraph make_local(const Graph& g) {
    LocalGraph lg;
    lg.n = g.vertex_count();
    for (int v = 0; v < lg.n; ++v) {
        const Bitset& row = g.row(v);
        for (int w = row.find_first(); w >= 0; w = row.find_next(w)) {
            lg.adj[v] |= VMask{1} << w;
            if (v <= w) lg.target.set(edge_slot(v, w));
        }
    }
    return lg;
}

EdgeSet pair_edges(VMask k, VMask l) {
    EdgeSet e;
    for (VMask ku = k; ku; ku &= ku - 1) {
        int u = __builtin_ctz(ku);
        for (VMask lv = l; lv; lv &= lv - 1) {
            int v = __builtin_ctz(lv);
            e.set(u <= v ? edge_slot(u, v) : edge_slot(v, u));
        }
    }
    return e;
}

// AND of adjacency rows over the members of k: the largest admissible partner.
VMask partner_limit(const LocalGraph& g, VMask k) {
    VMask m = full_mask(g.n);
    for (VMask ku = k; ku; ku &= ku - 1) m &= g.adj[__builtin_ctz(ku)];
    return m;
}

// ascending-member-sequence order on vertex masks (cardinality first)
bool mask_set_less(VMask a, VMask b) {
    int ca = popcount(a), cb = popcount(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    VMask d = a ^ b;
    return (a & (d & -d)) != 0;  // whoever holds the first differing vertex is smaller
}

// Kuhn matching: does the family admit a system of distinct representatives?
bool sdr_assign(const std::vector<VMask>& comps, std::vector<int>& owner,
                std::vector<char>& visited, int c) {
    for (VMask m = comps[c]; m; m &= m - 1) {
        int v = __builtin_ctz(m);
        if (visited[v]) continue;
        visited[v] = 1;
        if (owner[v] < 0 || sdr_assign(comps, owner, visited, owner[v])) {
            owner[v] = c;
            return true;
        }
    }
    return false;
}

bool family_has_sdr(const std::vector<VMask>& comps, int n) {
    std::vector<int> owner(n, -1);
    std::vector<char> visited(n);
    for (int c = 0; c < int(comps.size()); ++c) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!sdr_assign(comps, owner, visited, c)) return false;
    }
    return true;
}

struct Move {
    VMask k, l;
    int cost;
};

struct ComponentSolution {
    int rank = 0;
    std::vector<VMask> comps;
    std::vector<std::pair<int, int>> joins;
    bool timed_out = false;
    bool capped = false;
};

class BranchAndBound {
public:
    BranchAndBound(const LocalGraph& g, const SolverOptions& opts,
                   std::optional<Clock::time_point> deadline, int root_lower_bound)
        : g_(g), opts_(opts), deadline_(deadline), root_lower_bound_(root_lower_bound) {
        min_comp_size_ = 1;
        if (opts_.prune_min_size) {
            bool complete = true;
            for (int v = 0; v < g_.n && complete; ++v)
                if (g_.adj[v] != (full_mask(g_.n) & ~(VMask{1} << v))) complete = false;
            if (complete && g_.n >= 2) {
                int s = katona_s(g_.n);
                int n_min = g_.n;
                while (n_min > 1 && katona_s(n_min - 1) == s) --n_min;
                min_comp_size_ = g_.n - n_min + 1;
            }
        }
    }

    ComponentSolution run() {
        seed_singleton_cover();
        if (!(opts_.prune_bound && best_order_ == root_lower_bound_)) dfs(EdgeSet{}, EdgeSet{});
        ComponentSolution out;
        out.rank = best_order_;
        out.comps = best_comps_;
        out.joins = best_joins_;
        out.timed_out = timed_out_;
        out.capped = capped_ && opts_.max_order && best_order_ > *opts_.max_order;
        return out;
    }

private:
    void seed_singleton_cover() {
        std::vector<int> index_of(g_.n, -1);
        for (int v = 0; v < g_.n; ++v)
            if (g_.adj[v]) {
                index_of[v] = int(best_comps_.size());
                best_comps_.push_back(VMask{1} << v);
            }
        for (int j = 0; j < g_.n; ++j)
            for (int i = 0; i <= j; ++i)
                if (g_.target.test(edge_slot(i, j)))
                    best_joins_.emplace_back(index_of[i], index_of[j]);
        best_order_ = int(best_comps_.size());
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if (deadline_ && (++ticks_ & 255) == 0 && Clock::now() > *deadline_) timed_out_ = true;
        return timed_out_;
    }

    int find_component(VMask m) const {
        for (int i = 0; i < int(comps_.size()); ++i)
            if (comps_[i] == m) return i;
        return -1;
    }

    std::vector<Move> generate_moves(int i, int j) {
        std::vector<Move> moves;
        const VMask bit_i = VMask{1} << i, bit_j = VMask{1} << j;
        const VMask k_base = g_.adj[j] & ~bit_i;
        VMask ks = k_base;
        while (true) {
            const VMask k = ks | bit_i;
            const VMask limit = partner_limit(g_, k);
            if (limit & bit_j) {
                const VMask l_base = limit & ~bit_j;
                VMask ls = l_base;
                while (true) {
                    const VMask l = ls | bit_j;
                    const bool both_ways = (l & bit_i) && (k & bit_j);
                    if (!(both_ways && k > l)) {
                        const bool in_k = find_component(k) >= 0;
                        const bool in_l = find_component(l) >= 0;
                        const int cost = (k == l) ? (in_k ? 0 : 1) : (!in_k + !in_l);
                        moves.push_back({k, l, cost});
                    }
                    if (!ls) break;
                    ls = (ls - 1) & l_base;
                }
            }
            if (!ks) break;
            ks = (ks - 1) & k_base;
        }
        std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
            if (a.cost != b.cost) return a.cost < b.cost;
            const int sa = popcount(a.k) + popcount(a.l), sb = popcount(b.k) + popcount(b.l);
            if (sa != sb) return sa > sb;
            if (a.k != b.k) return a.k < b.k;
            return a.l < b.l;
        });
        return moves;
    }

    void record_solution() {
        best_order_ = int(comps_.size());
        best_comps_ = comps_;
        best_joins_ = joins_;
        if (opts_.prune_bound && best_order_ == root_lower_bound_) done_ = true;
    }

    // Complete the current family with admissible joins only (zero new
    // components). Precondition: the uncovered edges all lie inside the
    // union of admissible pairs of the family.
    void record_greedy_completion(EdgeSet covered) {
        const auto saved = joins_;
        for (int a = 0; a < int(comps_.size()) && g_.target.first_not_in(covered) >= 0; ++a) {
            const VMask limit = partner_limit(g_, comps_[a]);
            for (int b = a; b < int(comps_.size()); ++b) {
                if (comps_[b] & ~limit) continue;
                EdgeSet e = pair_edges(comps_[a], comps_[b]);
                if (e.first_not_in(covered) < 0) continue;  // nothing new
                covered |= e;
                joins_.emplace_back(a, b);
                if (g_.target.first_not_in(covered) < 0) break;
            }
        }
        record_solution();
        joins_ = saved;
    }

    // Whether one additional component could, together with the existing
    // family, cover everything still missing. A "no" lower-bounds the
    // remaining cost by two new components.
    bool one_new_component_suffices(const EdgeSet& covered, const EdgeSet& adm) {
        std::vector<std::pair<int, int>> rem;
        for (int j = 0; j < g_.n; ++j)
            for (int i = 0; i <= j; ++i) {
                const int s = edge_slot(i, j);
                if (g_.target.test(s) && !covered.test(s) && !adm.test(s)) rem.emplace_back(i, j);
            }
        if (rem.empty()) return true;
        const VMask full = full_mask(g_.n);
        for (VMask x = 1; x <= full && x != 0; ++x) {
            const VMask limit = partner_limit(g_, x);
            VMask reach = 0;
            if (!(x & ~limit)) reach |= x;  // x joinable with itself
            for (const VMask c : comps_)
                if (!(c & ~limit)) reach |= c;
            if (!reach) continue;
            bool all = true;
            for (auto [i, j] : rem) {
                const VMask bi = VMask{1} << i, bj = VMask{1} << j;
                if (!(((x & bi) && (reach & bj)) || ((x & bj) && (reach & bi)))) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    }

    void dfs(const EdgeSet& covered, const EdgeSet& adm) {
        if (done_ || out_of_time()) return;
        const int slot = g_.target.first_not_in(covered);
        if (slot < 0) {
            record_solution();
            return;
        }
        const auto [i, j] = slot_table.ij[slot];
        for (const Move& mv : generate_moves(i, j)) {
            if (done_ || timed_out_) return;
            const int c2 = int(comps_.size()) + mv.cost;
            if (c2 >= best_order_) continue;
            if (opts_.max_order && c2 > *opts_.max_order) {
                capped_ = true;
                continue;
            }
            if (min_comp_size_ > 1 &&
                ((find_component(mv.k) < 0 && popcount(mv.k) < min_comp_size_) ||
                 (find_component(mv.l) < 0 && popcount(mv.l) < min_comp_size_)))
                continue;

            const std::size_t comps_mark = comps_.size();
            int ia = find_component(mv.k);
            if (ia < 0) {
                ia = int(comps_.size());
                comps_.push_back(mv.k);
            }
            int ib = find_component(mv.l);
            if (ib < 0) {
                ib = int(comps_.size());
                comps_.push_back(mv.l);
            }
            joins_.emplace_back(std::min(ia, ib), std::max(ia, ib));

            bool viable = true;
            if (opts_.prune_hall && comps_.size() > comps_mark)
                viable = family_has_sdr(comps_, g_.n);

            if (viable) {
                const EdgeSet covered2 = covered | pair_edges(mv.k, mv.l);
                EdgeSet adm2 = adm;
                for (std::size_t x = comps_mark; x < comps_.size(); ++x) {
                    const VMask limit = partner_limit(g_, comps_[x]);
                    for (std::size_t y = 0; y < comps_.size(); ++y)
                        if (!(comps_[y] & ~limit)) adm2 |= pair_edges(comps_[x], comps_[y]);
                }
                if (g_.target.first_not_in(covered2) < 0) {
                    record_solution();
                } else if (opts_.prune_bound) {
                    if (g_.target.first_not_in(covered2 | adm2) < 0) {
                        record_greedy_completion(covered2);
                    } else {
                        int need = 1;
                        if (c2 == best_order_ - 2 && g_.n <= 12 &&
                            !one_new_component_suffices(covered2, adm2))
                            need = 2;
                        if (c2 + need < best_order_) dfs(covered2, adm2);
                    }
                } else {
                    dfs(covered2, adm2);
                }
            }

            joins_.pop_back();
            comps_.resize(comps_mark);
        }
    }

    const LocalGraph& g_;
    SolverOptions opts_;
    std::optional<Clock::time_point> deadline_;
    int root_lower_bound_ = 0;
    int min_comp_size_ = 1;

    std::vector<VMask> comps_;
    std::vector<std::pair<int, int>> joins_;

    int best_order_ = 0;
    std::vector<VMask> best_comps_;
    std::vector<std::pair<int, int>> best_joins_;

    bool done_ = false;
    bool timed_out_ = false;
    bool capped_ = false;
    std::uint64_t ticks_ = 0;
};

// lower bound of one connected piece
int connected_lower_bound(const Graph& h) {
    const int m = h.vertex_count();
    if (m == 1) return h.has_loop(0) ? 1 : 0;
    if (is_complete_all_loops(h)) return 1;
    if (is_forest(h)) return 2 * matching_number_forest(h);
    if (is_cycle_graph(h)) return m == 4 ? 2 : m;
    if (is_complete_loopless(h)) return katona_s(m);
    return 2;  // has a non-loop edge and is not an all-looped clique
}

ComponentSolution solve_component(const Graph& h, const SolverOptions& opts,
                                  std::optional<Clock::time_point> deadline) {
    ComponentSolution out;
    if (h.vertex_count() == 1) {
        if (h.has_loop(0)) {
            out.rank = 1;
            out.comps = {VMask{1}};
            out.joins = {{0, 0}};
        }
        return out;
    }
    LocalGraph lg = make_local(h);
    BranchAndBound bnb(lg, opts, deadline, connected_lower_bound(h));
    return bnb.run();
}

Cover assemble_cover(int ground_n, const std::vector<std::vector<int>>& vertex_maps,
                     const std::vector<ComponentSolution>& parts) {
    Cover cover(ground_n);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<int> comp_index;
        for (VMask m : parts[p].comps) {
            Component c(ground_n);
            for (VMask t = m; t; t &= t - 1) c.set(vertex_maps[p][__builtin_ctz(t)]);
            comp_index.push_back(cover.add_component(c));
        }
        for (auto [a, b] : parts[p].joins) cover.add_join(comp_index[a], comp_index[b]);
    }
    return cover;
}

std::optional<Clock::time_point> make_deadline(const SolverOptions& opts) {
    if (!opts.time_limit_s) return std::nullopt;
    return Clock::now() +
           std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(*opts.time_limit_s));
}

}  // namespace

int lower_bound(const Graph& g) {
    int total = 0;
    for (const auto& comp : connected_components(g))
        total += connected_lower_bound(induced_subgraph(g, comp));
    return total;
}

SolveResult snt_rank_exact(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    const int cap = std::min(opts.vertex_cap, kMaxVertices);
    if (n > cap)
        throw limit_error("exact solver capped at " + std::to_string(cap) + " vertices, got " +
                          std::to_string(n));

    const auto deadline = make_deadline(opts);
    const auto comps = connected_components(g);
    std::vector<ComponentSolution> parts(comps.size());
    if (opts.threads > 1 && comps.size() > 1) {
        std::vector<std::future<ComponentSolution>> futs;
        futs.reserve(comps.size());
        for (const auto& comp : comps)
            futs.push_back(std::async(std::launch::async, [&, comp] {
                return solve_component(induced_subgraph(g, comp), opts, deadline);
            }));
        for (std::size_t p = 0; p < parts.size(); ++p) parts[p] = futs[p].get();
    } else {
        for (std::size_t p = 0; p < parts.size(); ++p)
            parts[p] = solve_component(induced_subgraph(g, comps[p]), opts, deadline);
    }

    SolveResult res;
    bool timed_out = false, capped = false;
    for (const auto& part : parts) {
        res.rank += part.rank;
        timed_out |= part.timed_out;
        capped |= part.capped;
    }
    res.status = timed_out  ? SolveStatus::timeout
                 : capped   ? SolveStatus::cap_reached
                            : SolveStatus::exact;
    res.certificate = canonical_form(assemble_cover(n, comps, parts));
    return res;
}

namespace {

struct LocalCover {
    std::vector<VMask> comps;
    std::vector<std::pair<int, int>> joins;
};

struct JoinCandidate {
    int a, b;
    EdgeSet e;
};

// Enumerates, per connected piece, every component family of the optimal
// order whose admissible joins can cover the edge set exactly, and then
// every exact-covering join subset over each family. The Hall filter is
// safe: every optimal cover has a system of distinct representatives.
class FamilyEnumerator {
public:
    FamilyEnumerator(const LocalGraph& g, int rank, std::optional<Clock::time_point> deadline)
        : g_(g), rank_(rank), deadline_(deadline) {
        const VMask full = full_mask(g_.n);
        for (VMask m = 1; m <= full && m != 0; ++m)
            if (partner_limit(g_, m) != 0) universe_.push_back(m);
        std::sort(universe_.begin(), universe_.end(), mask_set_less);
        limits_.reserve(universe_.size());
        for (VMask m : universe_) limits_.push_back(partner_limit(g_, m));
    }

    bool run(std::vector<LocalCover>& out) {
        if (rank_ == 0) {
            out.push_back({});
            return true;
        }
        recurse(0, EdgeSet{}, out);
        return !timed_out_;
    }

private:
    bool out_of_time() {
        if (timed_out_) return true;
        if (deadline_ && (++ticks_ & 8191) == 0 && Clock::now() > *deadline_) timed_out_ = true;
        return timed_out_;
    }

    void recurse(std::size_t start, const EdgeSet& acc, std::vector<LocalCover>& out) {
        if (out_of_time()) return;
        const int depth = int(chosen_.size());
        if (depth == rank_) {
            if (acc == g_.target && family_has_sdr(chosen_, g_.n)) emit(out);
            return;
        }
        if (universe_.size() - start < std::size_t(rank_ - depth)) return;
        for (std::size_t u = start; u < universe_.size(); ++u) {
            if (timed_out_) return;
            const VMask cand = universe_[u];
            VMask uni = cand;
            for (VMask c : chosen_) uni |= c;
            if (popcount(uni) < depth + 1) continue;  // Hall necessary condition
            EdgeSet acc2 = acc;
            const VMask limit = limits_[u];
            for (const VMask c : chosen_)
                if (!(c & ~limit)) acc2 |= pair_edges(cand, c);
            if (!(cand & ~limit)) acc2 |= pair_edges(cand, cand);
            chosen_.push_back(cand);
            chosen_limits_.push_back(limit);
            recurse(u + 1, acc2, out);
            chosen_.pop_back();
            chosen_limits_.pop_back();
        }
    }

    void emit(std::vector<LocalCover>& out) {
        std::vector<JoinCandidate> pairs;
        for (int a = 0; a < rank_; ++a)
            for (int b = a; b < rank_; ++b)
                if (!(chosen_[b] & ~chosen_limits_[a]))
                    pairs.push_back({a, b, pair_edges(chosen_[a], chosen_[b])});
        std::vector<EdgeSet> suffix(pairs.size() + 1);
        for (int k = int(pairs.size()) - 1; k >= 0; --k) suffix[k] = suffix[k + 1] | pairs[k].e;
        std::vector<std::pair<int, int>> joins;
        const std::uint32_t all_used = (rank_ >= 32) ? ~0u : ((1u << rank_) - 1);
        subset_dfs(pairs, suffix, 0, EdgeSet{}, 0u, all_used, joins, out);
    }

    void subset_dfs(const std::vector<JoinCandidate>& pairs, const std::vector<EdgeSet>& suffix,
                    std::size_t k, const EdgeSet& acc, std::uint32_t used, std::uint32_t all_used,
                    std::vector<std::pair<int, int>>& joins, std::vector<LocalCover>& out) {
        if (out_of_time()) return;
        if ((acc | suffix[k]) != g_.target) return;  // cannot be completed
        if (k == pairs.size()) {
            if (acc == g_.target && used == all_used) out.push_back({chosen_, joins});
            return;
        }
        joins.emplace_back(pairs[k].a, pairs[k].b);
        subset_dfs(pairs, suffix, k + 1, acc | pairs[k].e,
                   used | (1u << pairs[k].a) | (1u << pairs[k].b), all_used, joins, out);
        joins.pop_back();
        subset_dfs(pairs, suffix, k + 1, acc, used, all_used, joins, out);
    }

    const LocalGraph& g_;
    int rank_;
    std::optional<Clock::time_point> deadline_;
    std::vector<VMask> universe_;
    std::vector<VMask> limits_;

    std::vector<VMask> chosen_;
    std::vector<VMask> chosen_limits_;

    bool timed_out_ = false;
    std::uint64_t ticks_ = 0;
};

}  // namespace

EnumerationResult enumerate_optimal_covers(const Graph& g, const SolverOptions& opts) {
    const int n = g.vertex_count();
    if (n > std::min(opts.vertex_cap, kMaxVertices))
        throw limit_error("enumeration capped at " +
                          std::to_string(std::min(opts.vertex_cap, kMaxVertices)) + " vertices");

    const auto deadline = make_deadline(opts);
    const auto comps = connected_components(g);

    EnumerationResult res;
    // per-piece lists of local covers, then a cross product over pieces
    std::vector<std::vector<LocalCover>> piece_covers;
    std::vector<std::vector<int>> piece_maps;
    for (const auto& comp : comps) {
        const Graph h = induced_subgraph(g, comp);
        if (h.vertex_count() > kMaxEnumVertices)
            throw limit_error("enumeration capped at " + std::to_string(kMaxEnumVertices) +
                              " vertices per connected component");
        ComponentSolution sol = solve_component(h, opts, deadline);
        if (sol.timed_out || sol.capped) {
            res.complete = false;
            return res;
        }
        LocalGraph lg = make_local(h);
        FamilyEnumerator fe(lg, sol.rank, deadline);
        std::vector<LocalCover> covers;
        if (!fe.run(covers)) {
            res.complete = false;
            return res;
        }
        piece_covers.push_back(std::move(covers));
        piece_maps.push_back(comp);
    }

    // cross product across pieces
    std::vector<Cover> acc{Cover(n)};
    for (std::size_t p = 0; p < piece_covers.size(); ++p) {
        std::vector<Cover> next;
        next.reserve(acc.size() * std::max<std::size_t>(1, piece_covers[p].size()));
        for (const Cover& base : acc)
            for (const LocalCover& lc : piece_covers[p]) {
                Cover merged = base;
                std::vector<int> comp_index;
                for (VMask m : lc.comps) {
                    Component c(n);
                    for (VMask t = m; t; t &= t - 1) c.set(piece_maps[p][__builtin_ctz(t)]);
                    comp_index.push_back(merged.add_component(c));
                }
                for (auto [a, b] : lc.joins) merged.add_join(comp_index[a], comp_index[b]);
                next.push_back(std::move(merged));
            }
        acc = std::move(next);
    }

    for (Cover& c : acc) c = canonical_form(c);
    std::sort(acc.begin(), acc.end(),
              [](const Cover& a, const Cover& b) { return compare_covers(a, b) < 0; });
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    res.covers = std::move(acc);
    return res;
}

}  // namespace sntrank
