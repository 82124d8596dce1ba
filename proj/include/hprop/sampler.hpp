#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hprop/graphon.hpp"

namespace hprop {

/// Labeled undirected sample G_n ~ W; node i carries coordinate x_i.
struct SampledGraph {
    int n = 0;
    std::vector<double> coordinates;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
    std::uint64_t seed = 0;
};

struct DirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // ordered pairs, sorted, unique
};

/// Two-step sampling: coordinates i.i.d. Uni[0,1], then each pair i<j is an
/// edge with probability W(x_i, x_j). Deterministic in (g, n, seed).
SampledGraph sample_graph(const GeneralGraphon& g, int n, std::uint64_t seed);

/// Replaces each undirected edge with two opposite arcs.
DirectedGraph directify(const SampledGraph& g);

// Graph file format: "n m" header then m lines "i j" (0-indexed, i<j) for
// undirected graphs; "d n m" header with ordered pairs for digraphs.
void write_graph(std::ostream& os, const SampledGraph& g);
void write_digraph(std::ostream& os, const DirectedGraph& g);
void write_coordinates(std::ostream& os, const SampledGraph& g);

/// Reads either format; undirected edges are expanded to arc pairs.
DirectedGraph read_digraph(std::istream& is);

}  // namespace hprop
