#include "hprop/json_io.hpp"

#include <fstream>

#include "hprop/errors.hpp"

namespace hprop {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& j) {
    if (j.is_string()) return rational_from_decimal(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    throw Error(ErrorCode::ParseError, "expected a number or decimal string");
}

Membership membership_from_name(const std::string& s) {
    if (s == "outside") return Membership::outside;
    if (s == "boundary") return Membership::boundary;
    if (s == "interior") return Membership::interior;
    throw Error(ErrorCode::ParseError, "unknown membership status '" + s + "'");
}

json fractions(const RationalVector& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_fraction_string(r));
    return a;
}

RationalVector fractions_from_json(const json& a) {
    RationalVector v;
    for (const auto& e : a) {
        std::string s = e.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            v.push_back(Rational(boost::multiprecision::mpz_int(s)));
        } else {
            v.push_back(Rational(boost::multiprecision::mpz_int(s.substr(0, slash)),
                                 boost::multiprecision::mpz_int(s.substr(slash + 1))));
        }
    }
    return v;
}

}  // namespace

namespace {

GeneralGraphon graphon_from_json_impl(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw Error(ErrorCode::ParseError, "graphon JSON needs a 'type' field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "step") {
        RationalVector sigma;
        for (const auto& e : j.at("sigma")) sigma.push_back(rational_from_json(e));
        RationalMatrix values;
        for (const auto& row : j.at("values")) {
            RationalVector r;
            for (const auto& e : row) r.push_back(rational_from_json(e));
            values.push_back(std::move(r));
        }
        return GeneralGraphon(validate_step_graphon(std::move(sigma), std::move(values)));
    }
    if (type == "grid") {
        GridGraphon g;
        g.resolution = j.at("resolution").get<int>();
        if (g.resolution < 1) throw Error(ErrorCode::InvalidN, "grid resolution must be >= 1");
        for (const auto& row : j.at("values")) {
            std::vector<double> r;
            for (const auto& e : row)
                r.push_back(e.is_string() ? to_double(rational_from_decimal(e.get<std::string>()))
                                          : e.get<double>());
            g.values.push_back(std::move(r));
        }
        if (static_cast<int>(g.values.size()) != g.resolution)
            throw Error(ErrorCode::DimensionMismatch, "grid values must be N x N");
        for (const auto& row : g.values)
            if (static_cast<int>(row.size()) != g.resolution)
                throw Error(ErrorCode::DimensionMismatch, "grid values must be N x N");
        for (int a = 0; a < g.resolution; ++a)
            for (int b = 0; b < g.resolution; ++b) {
                if (g.values[a][b] < 0.0 || g.values[a][b] > 1.0)
                    throw Error(ErrorCode::ValueOutOfRange, "grid values must lie in [0,1]");
                if (g.values[a][b] != g.values[b][a])
                    throw Error(ErrorCode::AsymmetricValues, "grid values must be symmetric");
            }
        return GeneralGraphon(std::move(g));
    }
    if (type == "family") {
        FamilyGraphon f;
        const std::string name = j.at("name").get<std::string>();
        if (name == "constant") {
            f.kind = FamilyGraphon::Kind::constant;
            f.p = j.at("params").at("p").get<double>();
            if (f.p < 0.0 || f.p > 1.0)
                throw Error(ErrorCode::ValueOutOfRange, "constant family needs p in [0,1]");
        } else if (name == "product") {
            f.kind = FamilyGraphon::Kind::product;
        } else if (name == "mean") {
            f.kind = FamilyGraphon::Kind::mean;
        } else {
            throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
        }
        return GeneralGraphon(f);
    }
    throw Error(ErrorCode::ParseError, "unknown graphon type '" + type + "'");
}

}  // namespace

GeneralGraphon graphon_from_json(const json& j) {
    try {
        return graphon_from_json_impl(j);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid graphon JSON: ") + e.what());
    }
}

GeneralGraphon load_graphon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return graphon_from_json(j);
}

json membership_to_json(const MembershipVerdict& v) {
    json j;
    j["status"] = membership_name(v.status);
    if (v.status != Membership::outside) {
        j["certificate"] = fractions(v.certificate);
        j["margin"] = to_fraction_string(v.margin);
    } else {
        j["separating_certificate"] = fractions(v.separating_certificate);
    }
    return j;
}

MembershipVerdict membership_from_json(const json& j) {
    MembershipVerdict v;
    v.status = membership_from_name(j.at("status").get<std::string>());
    if (v.status != Membership::outside) {
        v.certificate = fractions_from_json(j.at("certificate"));
        v.margin = fractions_from_json(json::array({j.at("margin")}))[0];
    } else {
        v.separating_certificate = fractions_from_json(j.at("separating_certificate"));
    }
    return v;
}

json theorem_verdict_to_json(const TheoremVerdict& v) {
    json j;
    j["condition_a"] = v.condition_a;
    j["condition_b_status"] = membership_name(v.condition_b_status);
    j["classification"] = classification_name(v.classification);
    j["basis"] = v.step_exact ? "step-exact" : "general-approximate";
    return j;
}

TheoremVerdict theorem_verdict_from_json(const json& j) {
    TheoremVerdict v;
    v.condition_a = j.at("condition_a").get<bool>();
    v.condition_b_status = membership_from_name(j.at("condition_b_status").get<std::string>());
    const std::string c = j.at("classification").get<std::string>();
    if (c == classification_name(Classification::h_property))
        v.classification = Classification::h_property;
    else if (c == classification_name(Classification::no_h_property))
        v.classification = Classification::no_h_property;
    else
        v.classification = Classification::undetermined;
    v.step_exact = j.at("basis").get<std::string>() == "step-exact";
    return v;
}

json ext_verdict_to_json(const ExtVerdict& v) {
    json j;
    j["resolution"] = v.resolution;
    j["a_ext"] = v.a_ext;
    j["b_ext_status"] = membership_name(v.b_ext_status);
    j["b_ext_margin"] = to_fraction_string(v.b_ext_margin);
    j["exact"] = v.exact;
    return j;
}

}  // namespace hprop
