#pragma once

#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/polytope.hpp"
#include "hprop/skeleton.hpp"

namespace hprop {

/// Support of the saturation discretized on the uniform N x N grid.
struct SupportPattern {
    int resolution = 0;
    std::vector<std::vector<bool>> cells;  // N x N, symmetric
};

/// Cell (i,j) is marked supported iff W is positive at some point of a k x k
/// midpoint subsample of the cell. For a step-graphon whose partition is
/// aligned with the grid this reproduces the blockwise support exactly; for
/// general graphons it can miss support concentrated off the sample points
/// (and is a documented approximation either way).
SupportPattern discretize_support(const GeneralGraphon& g, int resolution, int subsamples);

/// Discretization of c -> integral of W(s,t) c(s,t) dt on grid step functions:
/// component i = (1/N) * sum_j pattern(i,j) * c(i,j). c must be symmetric.
std::vector<double> phi_discrete(const SupportPattern& p,
                                 const std::vector<std::vector<double>>& c);

/// Graph on N nodes whose adjacency is the pattern (diagonal cells are loops).
SkeletonGraph pattern_graph(const SupportPattern& p);

/// Surjectivity of the discretized integral operator: every component of the
/// pattern graph contains an odd cycle.
bool check_a_ext(const SupportPattern& p);

/// Integrates a grid step function over each partition interval. Requires
/// every breakpoint to be a multiple of 1/N.
std::vector<double> mu_sigma(const std::vector<double>& grid_values, const Partition& sigma);

/// Membership of the constant function 1: the pattern is treated as the
/// skeleton of an N-block step-graphon with uniform concentration vector
/// (1/N,...,1/N), which reduces the functional membership test to a finite LP.
MembershipVerdict check_b_ext(const SupportPattern& p);

/// Combined extended-condition outcome at one resolution.
struct ExtVerdict {
    int resolution = 0;
    bool a_ext = false;
    Membership b_ext_status = Membership::outside;
    Rational b_ext_margin;
    bool exact = false;  // input was a step-graphon and the grid refines its partition
};

ExtVerdict analyze_ext(const GeneralGraphon& g, int resolution, int subsamples);

/// True iff every breakpoint of the step-graphon is a multiple of 1/N.
bool partition_aligned(const StepGraphon& g, int resolution);

}  // namespace hprop
