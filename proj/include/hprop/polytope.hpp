#pragma once

#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/rational.hpp"
#include "hprop/skeleton.hpp"

namespace hprop {

enum class Membership { outside, boundary, interior };

const char* membership_name(Membership m);

/// Classification of x against the edge polytope conv{columns of B}, with an
/// exact certificate either way: a convex combination B*lambda = x with
/// margin t* = max-min coefficient, or a strict separating Farkas vector.
struct MembershipVerdict {
    Membership status = Membership::outside;
    RationalVector certificate;            // length r, present unless outside
    Rational margin;                       // t*, present unless outside
    RationalVector separating_certificate; // length q, present iff outside
};

/// Decides x in X(S), on its boundary, or in its relative interior via the
/// max-min-coefficient LP (the relative interior of a finite convex hull is
/// exactly the strictly positive convex combinations of the generators).
MembershipVerdict polytope_membership(const RationalMatrix& b, const ConcentrationVector& x);

/// Floating-point mode (tolerance 1e-9) for large instances; must agree with
/// the exact mode on all shipped fixtures.
struct FloatMembershipVerdict {
    Membership status = Membership::outside;
    std::vector<double> certificate;
    double margin = 0.0;
    std::vector<double> separating_certificate;
};

FloatMembershipVerdict polytope_membership_float(const std::vector<std::vector<double>>& b,
                                                 const std::vector<double>& x);

}  // namespace hprop
