#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hprop/rational.hpp"

namespace hprop {

/// Breakpoint sequence 0 = s_0 < s_1 < ... < s_q = 1, stored exactly.
struct Partition {
    RationalVector breakpoints;

    int intervals() const { return static_cast<int>(breakpoints.size()) - 1; }
};

/// Graphon constant on the rectangles of a finite partition of [0,1];
/// block values kept as exact rationals so support decisions are exact.
struct StepGraphon {
    Partition partition;
    RationalMatrix values;  // q x q, symmetric, entries in [0,1]

    int blocks() const { return partition.intervals(); }
    /// Index of the half-open cell [s_{i-1}, s_i) holding x; the last cell is closed at 1.
    int cell_index(const Rational& x) const;
    const Rational& block_value(const Rational& x, const Rational& y) const;
};

/// Symmetric value table on the uniform N x N grid.
struct GridGraphon {
    int resolution = 0;
    std::vector<std::vector<double>> values;  // N x N, symmetric, entries in [0,1]
};

/// Closed-form kernels used in experiments.
struct FamilyGraphon {
    enum class Kind { constant, product, mean };
    Kind kind = Kind::constant;
    double p = 0.0;         // only for constant
    bool saturated = false; // evaluate the 0/1 saturation of the base kernel
};

/// Interval lengths s_i - s_{i-1}; strictly positive, sums to 1 exactly.
using ConcentrationVector = RationalVector;

/// Symmetric measurable W:[0,1]^2 -> [0,1], in one of three concrete forms.
class GeneralGraphon {
  public:
    using Form = std::variant<StepGraphon, GridGraphon, FamilyGraphon>;

    GeneralGraphon() = default;
    explicit GeneralGraphon(StepGraphon s) : form_(std::move(s)) {}
    explicit GeneralGraphon(GridGraphon g) : form_(std::move(g)) {}
    explicit GeneralGraphon(FamilyGraphon f) : form_(f) {}

    /// W(x,y); throws Error(CoordinateOutOfRange) if (x,y) leaves the unit square.
    double evaluate(double x, double y) const;

    bool is_step() const { return std::holds_alternative<StepGraphon>(form_); }
    const StepGraphon& step() const { return std::get<StepGraphon>(form_); }
    const Form& form() const { return form_; }

    /// Short human-readable identifier (kind + dimensions + content hash).
    std::string describe() const;

  private:
    Form form_;
};

/// Checks partition monotonicity/endpoints, symmetry, value range and shape.
StepGraphon validate_step_graphon(RationalVector sigma, RationalMatrix values);

ConcentrationVector concentration_vector(const StepGraphon& g);

/// Pointwise indicator of the support: 1 where W > 0, else 0.
StepGraphon saturate(const StepGraphon& g);
GeneralGraphon saturate(const GeneralGraphon& g);

/// Splits intervals at the given breakpoints (duplicates block values);
/// evaluates pointwise identically to the input.
StepGraphon refine_partition(const StepGraphon& g, const RationalVector& extra_breakpoints);

}  // namespace hprop
