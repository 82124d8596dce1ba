#include "hprop/sampler.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "hprop/errors.hpp"
#include "hprop/rng.hpp"

namespace hprop {

SampledGraph sample_graph(const GeneralGraphon& g, int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::InvalidN, "sample size must be at least 1");
    SampledGraph out;
    out.n = n;
    out.seed = seed;
    out.coordinates.resize(n);
    for (int i = 0; i < n; ++i)
        out.coordinates[i] = rng::u01(rng::derive(seed, rng::kStreamCoordinate, i));
    // pairs in lexicographic order i < j; each pair has its own stream, so the
    // outcome is independent of iteration order
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double p = g.evaluate(out.coordinates[i], out.coordinates[j]);
            double u = rng::u01(rng::derive(seed, rng::kStreamPair, i, j));
            if (u < p) out.edges.emplace_back(i, j);
        }
    }
    return out;
}

DirectedGraph directify(const SampledGraph& g) {
    DirectedGraph d;
    d.n = g.n;
    d.arcs.reserve(2 * g.edges.size());
    for (auto [i, j] : g.edges) {
        d.arcs.emplace_back(i, j);
        d.arcs.emplace_back(j, i);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

void write_graph(std::ostream& os, const SampledGraph& g) {
    os << g.n << ' ' << g.edges.size() << '\n';
    for (auto [i, j] : g.edges) os << i << ' ' << j << '\n';
}

void write_digraph(std::ostream& os, const DirectedGraph& g) {
    os << "d " << g.n << ' ' << g.arcs.size() << '\n';
    for (auto [i, j] : g.arcs) os << i << ' ' << j << '\n';
}

void write_coordinates(std::ostream& os, const SampledGraph& g) {
    auto flags = os.flags();
    os.precision(17);
    for (int i = 0; i < g.n; ++i) os << i << ' ' << g.coordinates[i] << '\n';
    os.flags(flags);
}

DirectedGraph read_digraph(std::istream& is) {
    std::string first;
    if (!std::getline(is, first)) throw Error(ErrorCode::ParseError, "empty graph file");
    std::istringstream header(first);
    std::string tok;
    header >> tok;
    bool directed = (tok == "d");
    long n = 0, m = 0;
    if (directed) {
        if (!(header >> n >> m)) throw Error(ErrorCode::ParseError, "bad digraph header");
    } else {
        try {
            n = std::stol(tok);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad graph header");
        }
        if (!(header >> m)) throw Error(ErrorCode::ParseError, "bad graph header");
    }
    if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative counts in header");

    DirectedGraph d;
    d.n = static_cast<int>(n);
    for (long e = 0; e < m; ++e) {
        long i, j;
        if (!(is >> i >> j)) throw Error(ErrorCode::ParseError, "truncated edge list");
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw Error(ErrorCode::ParseError, "edge endpoint out of range");
        if (directed) {
            d.arcs.emplace_back(i, j);
        } else {
            if (i >= j) throw Error(ErrorCode::ParseError, "undirected edges require i < j");
            d.arcs.emplace_back(i, j);
            d.arcs.emplace_back(j, i);
        }
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
    return d;
}

}  // namespace hprop
