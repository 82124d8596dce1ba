#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hprop/sampler.hpp"

namespace hprop {

/// Vertex-disjoint directed cycles covering every vertex. A length-1 cycle is
/// only valid on a self-loop.
struct HamiltonianDecomposition {
    std::vector<std::vector<int>> cycles;
};

/// Maximum-cardinality matching between out-roles (left) and in-roles (right)
/// of the vertex set, Hopcroft-Karp. match[u] = matched right vertex or -1.
/// Augmenting order is fixed by vertex index, so the result is deterministic.
std::vector<int> max_bipartite_matching(int n, const std::vector<std::pair<int, int>>& arcs);

/// A digraph splits into disjoint spanning cycles iff the out/in bipartite
/// graph has a perfect matching; the decomposition is read off the matching
/// permutation's cycles. Vertices with in- or out-degree 0 are rejected first.
std::optional<HamiltonianDecomposition> has_hamiltonian_decomposition(const DirectedGraph& d);

/// Exhaustive oracle over vertex permutations; guarded to n <= 9.
bool brute_force_hd(const DirectedGraph& d);

/// Independent check: disjointness, full coverage, and arc membership.
bool validate_decomposition(const DirectedGraph& d, const HamiltonianDecomposition& hd);

/// First vertex with in-degree or out-degree 0, if any (the "NO" witness).
std::optional<int> deficient_vertex(const DirectedGraph& d);

}  // namespace hprop
