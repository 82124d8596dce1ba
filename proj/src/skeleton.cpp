#include "hprop/skeleton.hpp"

#include <queue>

namespace hprop {

SkeletonGraph skeleton_graph(const StepGraphon& g) {
    SkeletonGraph s;
    s.q = g.blocks();
    for (int i = 0; i < s.q; ++i)
        for (int j = i; j < s.q; ++j)
            if (g.values[i][j] > 0) s.edges.emplace_back(i, j);
    return s;
}

RationalMatrix incidence_matrix(const SkeletonGraph& s) {
    RationalMatrix b(s.q, RationalVector(s.edges.size(), Rational(0)));
    const Rational half(1, 2);
    for (std::size_t c = 0; c < s.edges.size(); ++c) {
        auto [i, j] = s.edges[c];
        if (i == j)
            b[i][c] = 1;
        else {
            b[i][c] = half;
            b[j][c] = half;
        }
    }
    return b;
}

namespace {

struct ComponentScan {
    int components = 0;
    int bipartite_components = 0;
};

ComponentScan scan_components(const SkeletonGraph& s) {
    std::vector<std::vector<int>> adj(s.q);
    std::vector<bool> loop(s.q, false);
    for (auto [i, j] : s.edges) {
        if (i == j) {
            loop[i] = true;
        } else {
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    }
    ComponentScan out;
    std::vector<int> color(s.q, -1);
    for (int start = 0; start < s.q; ++start) {
        if (color[start] != -1) continue;
        ++out.components;
        bool odd = false;
        color[start] = 0;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            if (loop[u]) odd = true;
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    bfs.push(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                }
            }
        }
        if (!odd) ++out.bipartite_components;
    }
    return out;
}

}  // namespace

bool has_odd_cycle(const SkeletonGraph& s) {
    auto scan = scan_components(s);
    return scan.bipartite_components < scan.components;
}

bool all_components_nonbipartite(const SkeletonGraph& s) {
    return count_bipartite_components(s) == 0;
}

int count_bipartite_components(const SkeletonGraph& s) {
    return scan_components(s).bipartite_components;
}

int rational_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace hprop
