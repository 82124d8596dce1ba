#include "hprop/polytope.hpp"

#include "hprop/errors.hpp"
#include "hprop/lp.hpp"

namespace hprop {

const char* membership_name(Membership m) {
    switch (m) {
        case Membership::outside: return "outside";
        case Membership::boundary: return "boundary";
        case Membership::interior: return "interior";
    }
    return "?";
}

MembershipVerdict polytope_membership(const RationalMatrix& b, const ConcentrationVector& x) {
    if (b.size() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "incidence matrix rows != vector length");
    auto lp = lp_max_min_coefficient<Rational>(b, x);
    MembershipVerdict v;
    if (lp.status == LpStatus::infeasible) {
        v.status = Membership::outside;
        v.separating_certificate = std::move(lp.farkas);
        return v;
    }
    v.status = lp.t_star > 0 ? Membership::interior : Membership::boundary;
    v.margin = lp.t_star;
    v.certificate = std::move(lp.lambda);
    return v;
}

FloatMembershipVerdict polytope_membership_float(const std::vector<std::vector<double>>& b,
                                                 const std::vector<double>& x) {
    if (b.size() != x.size())
        throw Error(ErrorCode::DimensionMismatch, "incidence matrix rows != vector length");
    auto lp = lp_max_min_coefficient<double>(b, x);
    FloatMembershipVerdict v;
    if (lp.status == LpStatus::infeasible) {
        v.status = Membership::outside;
        v.separating_certificate = std::move(lp.farkas);
        return v;
    }
    v.status = lp.t_star > LpScalar<double>::eps ? Membership::interior : Membership::boundary;
    v.margin = lp.t_star;
    v.certificate = std::move(lp.lambda);
    return v;
}

}  // namespace hprop
