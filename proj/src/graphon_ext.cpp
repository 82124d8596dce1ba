#include "hprop/graphon_ext.hpp"

#include "hprop/errors.hpp"

namespace hprop {

SupportPattern discretize_support(const GeneralGraphon& g, int resolution, int subsamples) {
    if (resolution < 1) throw Error(ErrorCode::InvalidN, "resolution must be at least 1");
    if (subsamples < 1) throw Error(ErrorCode::InvalidN, "subsample count must be at least 1");
    const int n = resolution, k = subsamples;
    SupportPattern p;
    p.resolution = n;
    p.cells.assign(n, std::vector<bool>(n, false));
    auto sample_point = [&](int cell, int a) {
        return (cell + (a + 0.5) / k) / static_cast<double>(n);
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            bool hit = false;
            for (int a = 0; a < k && !hit; ++a)
                for (int b = 0; b < k && !hit; ++b)
                    hit = g.evaluate(sample_point(i, a), sample_point(j, b)) > 0.0;
            p.cells[i][j] = hit;
            p.cells[j][i] = hit;
        }
    }
    return p;
}

std::vector<double> phi_discrete(const SupportPattern& p,
                                 const std::vector<std::vector<double>>& c) {
    const int n = p.resolution;
    if (static_cast<int>(c.size()) != n)
        throw Error(ErrorCode::DimensionMismatch, "kernel matrix size != resolution");
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::DimensionMismatch, "kernel matrix size != resolution");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c[i][j] != c[j][i]) throw Error(ErrorCode::AsymmetricC, "kernel must be symmetric");

    std::vector<double> x(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            if (p.cells[i][j]) s += c[i][j];
        x[i] = s / n;
    }
    return x;
}

SkeletonGraph pattern_graph(const SupportPattern& p) {
    SkeletonGraph s;
    s.q = p.resolution;
    for (int i = 0; i < s.q; ++i)
        for (int j = i; j < s.q; ++j)
            if (p.cells[i][j]) s.edges.emplace_back(i, j);
    return s;
}

bool check_a_ext(const SupportPattern& p) { return all_components_nonbipartite(pattern_graph(p)); }

std::vector<double> mu_sigma(const std::vector<double>& grid_values, const Partition& sigma) {
    const int n = static_cast<int>(grid_values.size());
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "empty grid function");
    std::vector<int> cuts;  // breakpoint positions in grid cells
    for (const auto& s : sigma.breakpoints) {
        Rational scaled = Rational(s) * n;
        if (denominator(scaled) != 1)
            throw Error(ErrorCode::UnalignedPartition, "grid does not refine the partition");
        cuts.push_back(static_cast<int>(numerator(scaled)));
    }
    std::vector<double> out;
    out.reserve(sigma.intervals());
    for (int i = 0; i + 1 < static_cast<int>(cuts.size()); ++i) {
        double s = 0.0;
        for (int c = cuts[i]; c < cuts[i + 1]; ++c) s += grid_values[c];
        out.push_back(s / n);
    }
    return out;
}

MembershipVerdict check_b_ext(const SupportPattern& p) {
    SkeletonGraph s = pattern_graph(p);
    RationalMatrix b = incidence_matrix(s);
    ConcentrationVector uniform(p.resolution, Rational(1, p.resolution));
    return polytope_membership(b, uniform);
}

bool partition_aligned(const StepGraphon& g, int resolution) {
    for (const auto& s : g.partition.breakpoints)
        if (denominator(Rational(s * resolution)) != 1) return false;
    return true;
}

ExtVerdict analyze_ext(const GeneralGraphon& g, int resolution, int subsamples) {
    ExtVerdict v;
    v.resolution = resolution;
    SupportPattern p = discretize_support(g, resolution, subsamples);
    v.a_ext = check_a_ext(p);
    auto m = check_b_ext(p);
    v.b_ext_status = m.status;
    v.b_ext_margin = m.status == Membership::outside ? Rational(0) : m.margin;
    v.exact = g.is_step() && partition_aligned(g.step(), resolution);
    return v;
}

}  // namespace hprop
