#include "hprop/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>
#include <tuple>

#include "hprop/errors.hpp"
#include "hprop/graphon_ext.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/rng.hpp"
#include "hprop/sampler.hpp"
#include "hprop/skeleton.hpp"

namespace hprop {

namespace {

bool single_trial(const GeneralGraphon& g, int n, std::uint64_t master_seed, int trial) {
    std::uint64_t trial_seed =
        rng::derive(master_seed, rng::kStreamTrial, static_cast<std::uint64_t>(n),
                    static_cast<std::uint64_t>(trial));
    SampledGraph s = sample_graph(g, n, trial_seed);
    return has_hamiltonian_decomposition(directify(s)).has_value();
}

}  // namespace

ExperimentReport run_experiment(const GeneralGraphon& g, const std::vector<int>& n_list,
                                int trials, std::uint64_t seed, int threads) {
    if (trials < 1) throw Error(ErrorCode::InvalidTrials, "trials must be at least 1");
    if (n_list.empty()) throw Error(ErrorCode::InvalidN, "n list must be nonempty");
    if (threads < 1) threads = 1;

    ExperimentReport report;
    report.graphon_id = g.describe();
    report.seed = seed;
    for (int n : n_list) {
        if (n < 1) throw Error(ErrorCode::InvalidN, "sample size must be at least 1");
        auto t0 = std::chrono::steady_clock::now();
        std::atomic<int> next{0};
        std::atomic<int> successes{0};
        auto worker = [&]() {
            for (;;) {
                int trial = next.fetch_add(1);
                if (trial >= trials) return;
                if (single_trial(g, n, seed, trial)) successes.fetch_add(1);
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        auto t1 = std::chrono::steady_clock::now();

        ExperimentRow row;
        row.n = n;
        row.trials = trials;
        row.successes = successes.load();
        row.frequency = static_cast<double>(row.successes) / trials;
        std::tie(row.ci_low, row.ci_high) = wilson_interval(row.successes, trials, 1.959964);
        row.seconds = std::chrono::duration<double>(t1 - t0).count();
        report.rows.push_back(row);
    }
    return report;
}

std::pair<double, double> wilson_interval(int successes, int trials, double z) {
    double n = trials;
    double p = successes / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    double lo = center - half, hi = center + half;
    return {std::max(0.0, lo), std::min(1.0, hi)};
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::h_property: return "H-property";
        case Classification::no_h_property: return "no-H-property";
        case Classification::undetermined: return "undetermined (boundary)";
    }
    return "?";
}

TheoremVerdict classify_graphon(const GeneralGraphon& g, const std::vector<int>& resolutions,
                                int subsamples) {
    TheoremVerdict v;
    if (g.is_step()) {
        const StepGraphon& s = g.step();
        SkeletonGraph sk = skeleton_graph(s);
        v.condition_a = has_odd_cycle(sk);
        v.condition_b_status = polytope_membership(incidence_matrix(sk), concentration_vector(s)).status;
        v.step_exact = true;
    } else {
        // finest requested resolution decides; coarser ones are diagnostics
        int n = resolutions.empty() ? 64 : *std::max_element(resolutions.begin(), resolutions.end());
        ExtVerdict e = analyze_ext(g, n, subsamples);
        v.condition_a = e.a_ext;
        v.condition_b_status = e.b_ext_status;
        v.step_exact = false;
    }
    if (v.condition_a && v.condition_b_status == Membership::interior)
        v.classification = Classification::h_property;
    else if (!v.condition_a || v.condition_b_status == Membership::outside)
        v.classification = Classification::no_h_property;
    else
        v.classification = Classification::undetermined;
    return v;
}

void write_csv(std::ostream& os, const ExperimentReport& r, bool include_timing) {
    os << "n,trials,successes,frequency,ci_low,ci_high,seconds\n";
    char buf[160];
    for (const auto& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.6f,%.6f,%.6f,%.3f\n", row.n, row.trials,
                      row.successes, row.frequency, row.ci_low, row.ci_high,
                      include_timing ? row.seconds : 0.0);
        os << buf;
    }
}

void write_svg(std::ostream& os, const ExperimentReport& r) {
    const int w = 640, h = 400, ml = 60, mb = 40, mt = 20, mr = 20;
    double nmax = 1.0;
    for (const auto& row : r.rows) nmax = std::max(nmax, static_cast<double>(row.n));
    auto px = [&](double n) { return ml + (w - ml - mr) * (n / nmax); };
    auto py = [&](double f) { return h - mb - (h - mb - mt) * f; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << w - mr << "\" y2=\"" << py(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << ml << "\" y2=\"" << py(1)
       << "\" stroke=\"black\"/>\n";
    for (double f : {0.0, 0.25, 0.5, 0.75, 1.0})
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(f) + 4
           << "\" text-anchor=\"end\" font-size=\"12\">" << f << "</text>\n";
    os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& row : r.rows) os << px(row.n) << ',' << py(row.frequency) << ' ';
    os << "\"/>\n";
    for (const auto& row : r.rows) {
        os << "<circle cx=\"" << px(row.n) << "\" cy=\"" << py(row.frequency)
           << "\" r=\"3\" fill=\"steelblue\"/>\n";
        os << "<text x=\"" << px(row.n) << "\" y=\"" << h - mb + 16
           << "\" text-anchor=\"middle\" font-size=\"12\">" << row.n << "</text>\n";
    }
    os << "<text x=\"" << (w + ml) / 2 << "\" y=\"" << h - 8
       << "\" text-anchor=\"middle\" font-size=\"13\">n</text>\n";
    os << "</svg>\n";
}

}  // namespace hprop
