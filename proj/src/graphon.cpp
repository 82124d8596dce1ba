#include "hprop/graphon.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "hprop/errors.hpp"

namespace hprop {

int StepGraphon::cell_index(const Rational& x) const {
    const auto& s = partition.breakpoints;
    if (x < 0 || x > 1) throw Error(ErrorCode::CoordinateOutOfRange, "coordinate outside [0,1]");
    if (x == 1) return blocks() - 1;
    // half-open cells [s_{i-1}, s_i)
    int lo = 0, hi = blocks() - 1;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (x < s[mid + 1])
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

const Rational& StepGraphon::block_value(const Rational& x, const Rational& y) const {
    return values[cell_index(x)][cell_index(y)];
}

double GeneralGraphon::evaluate(double x, double y) const {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw Error(ErrorCode::CoordinateOutOfRange, "coordinate outside [0,1]");
    if (const auto* s = std::get_if<StepGraphon>(&form_)) {
        return to_double(s->block_value(Rational(x), Rational(y)));
    }
    if (const auto* g = std::get_if<GridGraphon>(&form_)) {
        int n = g->resolution;
        auto cell = [n](double t) {
            int i = static_cast<int>(t * n);
            return std::min(i, n - 1);
        };
        return g->values[cell(x)][cell(y)];
    }
    const auto& f = std::get<FamilyGraphon>(form_);
    double v = 0.0;
    switch (f.kind) {
        case FamilyGraphon::Kind::constant: v = f.p; break;
        case FamilyGraphon::Kind::product: v = x * y; break;
        case FamilyGraphon::Kind::mean: v = (x + y) / 2.0; break;
    }
    return f.saturated ? (v > 0.0 ? 1.0 : 0.0) : v;
}

std::string GeneralGraphon::describe() const {
    std::ostringstream os;
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the textual form
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    if (const auto* s = std::get_if<StepGraphon>(&form_)) {
        for (const auto& b : s->partition.breakpoints) feed(b.str() + ";");
        for (const auto& row : s->values)
            for (const auto& v : row) feed(v.str() + ",");
        os << "step(q=" << s->blocks() << ")";
    } else if (const auto* g = std::get_if<GridGraphon>(&form_)) {
        for (const auto& row : g->values)
            for (double v : row) feed(std::to_string(v) + ",");
        os << "grid(N=" << g->resolution << ")";
    } else {
        const auto& f = std::get<FamilyGraphon>(form_);
        switch (f.kind) {
            case FamilyGraphon::Kind::constant:
                os << "constant(p=" << f.p << ")";
                feed("constant" + std::to_string(f.p));
                break;
            case FamilyGraphon::Kind::product:
                os << "product";
                feed("product");
                break;
            case FamilyGraphon::Kind::mean:
                os << "mean";
                feed("mean");
                break;
        }
        if (f.saturated) os << "-saturated";
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "#%016llx", static_cast<unsigned long long>(h));
    os << buf;
    return os.str();
}

StepGraphon validate_step_graphon(RationalVector sigma, RationalMatrix values) {
    if (sigma.size() < 2)
        throw Error(ErrorCode::NonMonotonePartition, "partition needs at least two breakpoints");
    if (sigma.front() != 0 || sigma.back() != 1)
        throw Error(ErrorCode::EndpointsNot01, "partition must start at 0 and end at 1");
    for (std::size_t i = 1; i < sigma.size(); ++i)
        if (!(sigma[i - 1] < sigma[i]))
            throw Error(ErrorCode::NonMonotonePartition, "breakpoints must be strictly increasing");

    const std::size_t q = sigma.size() - 1;
    if (values.size() != q)
        throw Error(ErrorCode::DimensionMismatch, "value matrix must be q x q");
    for (const auto& row : values)
        if (row.size() != q)
            throw Error(ErrorCode::DimensionMismatch, "value matrix must be q x q");
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            if (values[i][j] < 0 || values[i][j] > 1)
                throw Error(ErrorCode::ValueOutOfRange, "block values must lie in [0,1]");
            if (values[i][j] != values[j][i])
                throw Error(ErrorCode::AsymmetricValues, "value matrix must be symmetric");
        }
    return StepGraphon{Partition{std::move(sigma)}, std::move(values)};
}

ConcentrationVector concentration_vector(const StepGraphon& g) {
    ConcentrationVector x;
    const auto& s = g.partition.breakpoints;
    x.reserve(g.blocks());
    for (int i = 1; i <= g.blocks(); ++i) x.push_back(s[i] - s[i - 1]);
    return x;
}

StepGraphon saturate(const StepGraphon& g) {
    StepGraphon r = g;
    for (auto& row : r.values)
        for (auto& v : row) v = (v > 0) ? 1 : 0;
    return r;
}

GeneralGraphon saturate(const GeneralGraphon& g) {
    if (const auto* s = std::get_if<StepGraphon>(&g.form())) return GeneralGraphon(saturate(*s));
    if (const auto* gr = std::get_if<GridGraphon>(&g.form())) {
        GridGraphon r = *gr;
        for (auto& row : r.values)
            for (auto& v : row) v = (v > 0.0) ? 1.0 : 0.0;
        return GeneralGraphon(std::move(r));
    }
    FamilyGraphon f = std::get<FamilyGraphon>(g.form());
    if (f.kind == FamilyGraphon::Kind::constant) {
        f.p = (f.p > 0.0 || f.saturated) ? 1.0 : 0.0;
        f.saturated = false;
    } else {
        f.saturated = true;
    }
    return GeneralGraphon(f);
}

StepGraphon refine_partition(const StepGraphon& g, const RationalVector& extra_breakpoints) {
    RationalVector sigma = g.partition.breakpoints;
    for (const auto& b : extra_breakpoints) {
        if (b <= 0 || b >= 1)
            throw Error(ErrorCode::CoordinateOutOfRange, "refinement breakpoint outside (0,1)");
        sigma.push_back(b);
    }
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());

    // map each refined interval to the original block containing it
    std::vector<int> owner;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i) owner.push_back(g.cell_index(sigma[i]));

    const std::size_t q = owner.size();
    RationalMatrix values(q, RationalVector(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) values[i][j] = g.values[owner[i]][owner[j]];
    return StepGraphon{Partition{std::move(sigma)}, std::move(values)};
}

}  // namespace hprop
