#pragma once

// Shared test fixtures and generators.

#include <algorithm>
#include <random>
#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/sampler.hpp"

namespace hprop::testing {

inline Rational dec(const char* s) { return rational_from_decimal(s); }

/// Step-graphon with partition (0,0.3,0.6,1): loops at blocks 1 and 3,
/// edges (1,2) and (2,3), zero blocks (1,3) and (2,2).
inline StepGraphon figure2_graphon() {
    RationalVector sigma = {dec("0"), dec("0.3"), dec("0.6"), dec("1")};
    RationalMatrix values = {
        {dec("0.9"), dec("0.5"), dec("0")},
        {dec("0.5"), dec("0"), dec("0.5")},
        {dec("0"), dec("0.5"), dec("0.9")},
    };
    return validate_step_graphon(std::move(sigma), std::move(values));
}

/// Loopless two-block graphon: support only off-diagonal (bipartite skeleton).
inline StepGraphon bipartite_graphon() {
    RationalVector sigma = {dec("0"), dec("0.3"), dec("1")};
    RationalMatrix values = {{dec("0"), dec("1")}, {dec("1"), dec("0")}};
    return validate_step_graphon(std::move(sigma), std::move(values));
}

/// W11 = W12 = 1, W22 = 0: Condition A holds but x* = (0.3, 0.7) lies outside
/// the edge polytope (second coordinate of X(S) is at most 1/2).
inline StepGraphon outside_graphon() {
    RationalVector sigma = {dec("0"), dec("0.3"), dec("1")};
    RationalMatrix values = {{dec("1"), dec("1")}, {dec("1"), dec("0")}};
    return validate_step_graphon(std::move(sigma), std::move(values));
}

inline GeneralGraphon constant_graphon(double p) {
    FamilyGraphon f;
    f.kind = FamilyGraphon::Kind::constant;
    f.p = p;
    return GeneralGraphon(f);
}

/// Figure-1 undirected graph: edges 12, 14, 23, 34, 13 (1-indexed in the
/// source; stored 0-indexed).
inline SampledGraph figure1_graph() {
    SampledGraph g;
    g.n = 4;
    g.coordinates = {0.0, 0.0, 0.0, 0.0};
    g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
    return g;
}

/// Random step-graphon with denominator-D breakpoints and density-controlled
/// symmetric support; always valid.
inline StepGraphon random_step_graphon(std::mt19937_64& rng, int max_q = 5, int denom = 24,
                                       double density = 0.6) {
    std::uniform_int_distribution<int> qd(1, max_q);
    int q = qd(rng);
    // pick q-1 distinct interior cut positions out of denom-1
    std::vector<int> positions;
    for (int i = 1; i < denom; ++i) positions.push_back(i);
    std::shuffle(positions.begin(), positions.end(), rng);
    positions.resize(q - 1);
    std::sort(positions.begin(), positions.end());
    RationalVector sigma = {Rational(0)};
    for (int p : positions) sigma.push_back(Rational(p, denom));
    sigma.push_back(Rational(1));

    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> vd(1, 10);
    RationalMatrix values(q, RationalVector(q, Rational(0)));
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            Rational v = (u(rng) < density) ? Rational(vd(rng), 10) : Rational(0);
            values[i][j] = v;
            values[j][i] = v;
        }
    return validate_step_graphon(std::move(sigma), std::move(values));
}

/// Random digraph on n nodes with arc probability `density` (no self-loops).
inline DirectedGraph random_digraph(std::mt19937_64& rng, int n, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DirectedGraph d;
    d.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && u(rng) < density) d.arcs.emplace_back(i, j);
    return d;
}

}  // namespace hprop::testing
