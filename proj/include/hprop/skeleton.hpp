#pragma once

#include <utility>
#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/rational.hpp"

namespace hprop {

/// Support pattern of a step-graphon: node per partition interval, edge (i,j)
/// iff the block value is nonzero; self-loops allowed. Edges are kept in
/// canonical lexicographic order over pairs i <= j (the loop at a node sorts
/// before its other edges), which fixes the column order of the incidence
/// matrix. Nodes are 0-indexed.
struct SkeletonGraph {
    int q = 0;
    std::vector<std::pair<int, int>> edges;  // i <= j, sorted, unique

    int edge_count() const { return static_cast<int>(edges.size()); }
};

SkeletonGraph skeleton_graph(const StepGraphon& g);

/// q x r edge-incidence matrix: a loop column is the unit vector at its node,
/// an ordinary edge column has 1/2 at both endpoints. All columns are
/// probability vectors.
RationalMatrix incidence_matrix(const SkeletonGraph& s);

/// Condition A: a self-loop, or some connected component not 2-colorable.
bool has_odd_cycle(const SkeletonGraph& s);

/// Every connected component contains an odd cycle; equivalent to the
/// incidence matrix having full row rank q over the rationals.
bool all_components_nonbipartite(const SkeletonGraph& s);

/// Connected components without an odd cycle (isolated loopless nodes count).
int count_bipartite_components(const SkeletonGraph& s);

/// Rank over the rationals by exact Gaussian elimination.
int rational_rank(RationalMatrix m);

}  // namespace hprop
