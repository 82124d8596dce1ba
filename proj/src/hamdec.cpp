#include "hprop/hamdec.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "hprop/errors.hpp"

namespace hprop {

std::vector<int> max_bipartite_matching(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : arcs) adj[u].push_back(v);
    for (auto& a : adj) std::sort(a.begin(), a.end());

    constexpr int kInf = 1 << 30;
    std::vector<int> match_l(n, -1), match_r(n, -1), dist(n);

    auto bfs = [&]() {
        std::queue<int> q;
        for (int u = 0; u < n; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool found = false;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w == -1) {
                    found = true;
                } else if (dist[w] == kInf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    };
    while (bfs()) {
        for (int u = 0; u < n; ++u)
            if (match_l[u] == -1) dfs(u);
    }
    return match_l;
}

std::optional<int> deficient_vertex(const DirectedGraph& d) {
    std::vector<char> has_out(d.n, 0), has_in(d.n, 0);
    for (auto [u, v] : d.arcs) {
        has_out[u] = 1;
        has_in[v] = 1;
    }
    for (int i = 0; i < d.n; ++i)
        if (!has_out[i] || !has_in[i]) return i;
    return std::nullopt;
}

std::optional<HamiltonianDecomposition> has_hamiltonian_decomposition(const DirectedGraph& d) {
    if (d.n < 1) return std::nullopt;
    if (deficient_vertex(d)) return std::nullopt;
    auto match = max_bipartite_matching(d.n, d.arcs);
    for (int u = 0; u < d.n; ++u)
        if (match[u] == -1) return std::nullopt;
    // follow permutation cycles
    HamiltonianDecomposition hd;
    std::vector<char> seen(d.n, 0);
    for (int start = 0; start < d.n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int u = start;
        do {
            seen[u] = 1;
            cycle.push_back(u);
            u = match[u];
        } while (u != start);
        hd.cycles.push_back(std::move(cycle));
    }
    return hd;
}

bool brute_force_hd(const DirectedGraph& d) {
    if (d.n > 9) throw Error(ErrorCode::NTooLargeForOracle, "brute-force oracle limited to n <= 9");
    if (d.n < 1) return false;
    std::vector<std::vector<char>> arc(d.n, std::vector<char>(d.n, 0));
    for (auto [u, v] : d.arcs) arc[u][v] = 1;
    std::vector<int> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < d.n && ok; ++i) ok = arc[i][perm[i]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool validate_decomposition(const DirectedGraph& d, const HamiltonianDecomposition& hd) {
    std::vector<std::vector<char>> arc(d.n, std::vector<char>(d.n, 0));
    for (auto [u, v] : d.arcs) arc[u][v] = 1;
    std::vector<char> covered(d.n, 0);
    for (const auto& cycle : hd.cycles) {
        if (cycle.empty()) return false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int u = cycle[i];
            int v = cycle[(i + 1) % cycle.size()];
            if (u < 0 || u >= d.n || covered[u]) return false;
            covered[u] = 1;
            if (!arc[u][v]) return false;
        }
    }
    for (int i = 0; i < d.n; ++i)
        if (!covered[i]) return false;
    return true;
}

}  // namespace hprop
