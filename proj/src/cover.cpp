#include "sntrank/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sntrank {

int Cover::add_component(const Component& c) {
    if (c.none()) throw std::invalid_argument("cover component must be nonempty");
    if (c.size_bits() != ground_n_)
        throw std::invalid_argument("component width does not match ground set");
    for (int i = 0; i < int(comps_.size()); ++i)
        if (comps_[i] == c) return i;
    comps_.push_back(c);
    return int(comps_.size()) - 1;
}

void Cover::add_join(int a, int b) {
    if (a < 0 || b < 0 || a >= order() || b >= order())
        throw std::invalid_argument("join index out of range");
    if (a > b) std::swap(a, b);
    for (auto& j : joins_)
        if (j.first == a && j.second == b) return;
    joins_.emplace_back(a, b);
}

bool Cover::all_components_joined() const {
    std::vector<bool> used(comps_.size(), false);
    for (auto [a, b] : joins_) used[a] = used[b] = true;
    return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

Graph set_join(const Component& k, const Component& l, int n) {
    if (k.none() || l.none()) throw std::invalid_argument("set-join of an empty set");
    Graph g(n);
    for (int u = k.find_first(); u >= 0; u = k.find_next(u))
        for (int v = l.find_first(); v >= 0; v = l.find_next(v)) g.add_edge(u, v);
    return g;
}

ValidityReport validate_cover(const Graph& g, const Cover& c) {
    const int n = g.vertex_count();
    ValidityReport rep;
    Graph covered(n);
    for (auto [a, b] : c.joins()) {
        const Component& k = c.components()[a];
        const Component& l = c.components()[b];
        for (int u = k.find_first(); u >= 0; u = k.find_next(u))
            for (int v = l.find_first(); v >= 0; v = l.find_next(v)) covered.add_edge(u, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            if (g.has_edge(u, v) && !covered.has_edge(u, v)) rep.missing.emplace_back(u, v);
            if (!g.has_edge(u, v) && covered.has_edge(u, v)) rep.forbidden.emplace_back(u, v);
        }
    rep.valid = rep.missing.empty() && rep.forbidden.empty();
    return rep;
}

Graph cover_graph(const Cover& c) {
    Graph g(c.order());
    for (auto [a, b] : c.joins()) g.add_edge(a, b);
    return g;
}

Cover restrict_cover(const Cover& c, const Bitset& s) {
    // order-preserving relabelling of the surviving ground set
    std::vector<int> new_label(c.ground_n(), -1);
    int m = 0;
    for (int v = s.find_first(); v >= 0; v = s.find_next(v)) {
        if (v >= c.ground_n()) throw std::invalid_argument("restriction set exceeds ground set");
        new_label[v] = m++;
    }
    Cover out(m);
    for (auto [a, b] : c.joins()) {
        Component k = c.components()[a] & s;
        Component l = c.components()[b] & s;
        if (k.none() || l.none()) continue;
        auto relabel = [&](const Component& comp) {
            Component r(m);
            for (int v = comp.find_first(); v >= 0; v = comp.find_next(v)) r.set(new_label[v]);
            return r;
        };
        int ia = out.add_component(relabel(k));
        int ib = out.add_component(relabel(l));
        out.add_join(ia, ib);
    }
    return out;
}

namespace {

// Kuhn's augmenting-path matching on the component/vertex incidence.
bool try_assign(const Cover& c, int comp, std::vector<int>& vertex_owner,
                std::vector<bool>& visited) {
    const Component& k = c.components()[comp];
    for (int v = k.find_first(); v >= 0; v = k.find_next(v)) {
        if (visited[v]) continue;
        visited[v] = true;
        if (vertex_owner[v] < 0 || try_assign(c, vertex_owner[v], vertex_owner, visited)) {
            vertex_owner[v] = comp;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> sdr_witness(const Cover& c) {
    std::vector<int> vertex_owner(c.ground_n(), -1);
    for (int comp = 0; comp < c.order(); ++comp) {
        std::vector<bool> visited(c.ground_n(), false);
        if (!try_assign(c, comp, vertex_owner, visited)) return std::nullopt;
    }
    std::vector<int> rep(c.order(), -1);
    for (int v = 0; v < c.ground_n(); ++v)
        if (vertex_owner[v] >= 0) rep[vertex_owner[v]] = v;
    return rep;
}

bool sdr_exists(const Cover& c) { return sdr_witness(c).has_value(); }

Cover canonical_form(const Cover& c) {
    std::vector<int> perm(c.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        return set_less(c.components()[a], c.components()[b]);
    });
    std::vector<int> pos(c.order());
    for (int i = 0; i < c.order(); ++i) pos[perm[i]] = i;
    Cover out(c.ground_n());
    for (int i = 0; i < c.order(); ++i) out.add_component(c.components()[perm[i]]);
    std::vector<std::pair<int, int>> joins;
    for (auto [a, b] : c.joins()) {
        int x = pos[a], y = pos[b];
        if (x > y) std::swap(x, y);
        joins.emplace_back(x, y);
    }
    std::sort(joins.begin(), joins.end());
    joins.erase(std::unique(joins.begin(), joins.end()), joins.end());
    for (auto [a, b] : joins) out.add_join(a, b);
    return out;
}

int compare_covers(const Cover& a, const Cover& b) {
    Cover ca = canonical_form(a), cb = canonical_form(b);
    if (ca.ground_n() != cb.ground_n()) return ca.ground_n() < cb.ground_n() ? -1 : 1;
    const int na = ca.order(), nb = cb.order();
    for (int i = 0; i < std::min(na, nb); ++i)
        if (int c = compare_sets(ca.components()[i], cb.components()[i]); c != 0) return c;
    if (na != nb) return na < nb ? -1 : 1;
    if (ca.joins() != cb.joins()) return ca.joins() < cb.joins() ? -1 : 1;
    return 0;
}

Cover remap_cover(const Cover& c, const std::vector<int>& vertex_map, int new_ground_n) {
    Cover out(new_ground_n);
    std::vector<int> comp_map(c.order());
    for (int i = 0; i < c.order(); ++i) {
        Component r(new_ground_n);
        const Component& k = c.components()[i];
        for (int v = k.find_first(); v >= 0; v = k.find_next(v)) r.set(vertex_map[v]);
        comp_map[i] = out.add_component(r);
    }
    for (auto [a, b] : c.joins()) out.add_join(comp_map[a], comp_map[b]);
    return out;
}

}  // namespace sntrank
