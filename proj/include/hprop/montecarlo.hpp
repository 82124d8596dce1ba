#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/polytope.hpp"

namespace hprop {

struct ExperimentRow {
    int n = 0;
    int trials = 0;
    int successes = 0;
    double frequency = 0.0;
    double ci_low = 0.0;   // Wilson 95%
    double ci_high = 0.0;
    double seconds = 0.0;  // wall clock; excluded from the determinism contract
};

struct ExperimentReport {
    std::string graphon_id;
    std::uint64_t seed = 0;
    std::vector<ExperimentRow> rows;
};

/// Empirical P(directed sample has a Hamiltonian decomposition) per n. Each
/// trial reseeds from (seed, n, trial index), so any trial can be replayed in
/// isolation and the aggregate is independent of thread count.
ExperimentReport run_experiment(const GeneralGraphon& g, const std::vector<int>& n_list,
                                int trials, std::uint64_t seed, int threads = 1);

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(int successes, int trials, double z);

enum class Classification { h_property, no_h_property, undetermined };

const char* classification_name(Classification c);

/// Certified outcome: condition A (odd cycle / surjectivity) plus membership
/// of the concentration vector, combined into the asymptotic classification.
/// Exact for step-graphons; resolution-limited for general graphons.
struct TheoremVerdict {
    bool condition_a = false;
    Membership condition_b_status = Membership::outside;
    Classification classification = Classification::undetermined;
    bool step_exact = false;
};

TheoremVerdict classify_graphon(const GeneralGraphon& g, const std::vector<int>& resolutions,
                                int subsamples);

/// CSV schema: n,trials,successes,frequency,ci_low,ci_high,seconds. Timing is
/// zeroed unless requested so default output is byte-reproducible.
void write_csv(std::ostream& os, const ExperimentReport& r, bool include_timing = false);

/// Minimal line plot of frequency vs n.
void write_svg(std::ostream& os, const ExperimentReport& r);

}  // namespace hprop
