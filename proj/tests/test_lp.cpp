#include <doctest.h>

#include <random>

#include "hprop/lp.hpp"

using namespace hprop;

namespace {

const Rational h(1, 2);

bool check_farkas(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& y) {
    // y'a_j <= 0 for all columns, y'b > 0
    const std::size_t m = a.size(), n = a[0].size();
    for (std::size_t j = 0; j < n; ++j) {
        Rational dot(0);
        for (std::size_t i = 0; i < m; ++i) dot += y[i] * a[i][j];
        if (dot > 0) return false;
    }
    Rational dotb(0);
    for (std::size_t i = 0; i < m; ++i) dotb += y[i] * b[i];
    return dotb > 0;
}

}  // namespace

TEST_CASE("single-column system") {
    auto r = lp_max_min_coefficient<Rational>({{Rational(1)}}, {Rational(1)});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.t_star == 1);
    CHECK(r.lambda == std::vector<Rational>{Rational(1)});
}

TEST_CASE("figure-2 incidence system has optimum 1/5") {
    std::vector<std::vector<Rational>> b = {
        {1, h, 0, 0},
        {0, h, h, 0},
        {0, 0, h, 1},
    };
    std::vector<Rational> x = {Rational(3, 10), Rational(3, 10), Rational(4, 10)};
    auto r = lp_max_min_coefficient<Rational>(b, x);
    REQUIRE(r.status == LpStatus::optimal);
    // hand-derived: lambda = (1/5, 1/5, 2/5, 1/5) maximizes the minimum coefficient
    CHECK(r.t_star == Rational(1, 5));
    for (std::size_t i = 0; i < 3; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < 4; ++j) row += b[i][j] * r.lambda[j];
        CHECK(row == x[i]);
    }
    Rational lmin = r.lambda[0];
    for (const auto& l : r.lambda) lmin = std::min(lmin, l);
    CHECK(lmin == r.t_star);
}

TEST_CASE("infeasible system yields an exact Farkas witness") {
    std::vector<std::vector<Rational>> a = {{1, h}, {0, h}};
    std::vector<Rational> b = {Rational(3, 10), Rational(7, 10)};
    auto r = lp_max_min_coefficient<Rational>(a, b);
    REQUIRE(r.status == LpStatus::infeasible);
    REQUIRE(r.farkas.size() == 2);
    CHECK(check_farkas(a, b, r.farkas));
}

TEST_CASE("unbounded max-min input is reported as malformed") {
    // single constraint lambda1 - lambda2 = 0: t can grow without bound
    std::vector<std::vector<Rational>> a = {{1, -1}};
    std::vector<Rational> b = {Rational(0)};
    CHECK_THROWS_AS((void)lp_max_min_coefficient<Rational>(a, b), Error);
}

TEST_CASE("random feasibility agreement between exact and float engines") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> vd(0, 4);
    for (int iter = 0; iter < 100; ++iter) {
        const int m = 3, n = 5;
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
        std::vector<std::vector<double>> af(m, std::vector<double>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                int v = vd(rng);
                a[i][j] = Rational(v, 4);
                af[i][j] = v / 4.0;
            }
        std::vector<Rational> b(m);
        std::vector<double> bf(m);
        for (int i = 0; i < m; ++i) {
            int v = vd(rng);
            b[i] = Rational(v, 4);
            bf[i] = v / 4.0;
        }
        MaxMinResult<Rational> re;
        MaxMinResult<double> rf;
        bool exact_threw = false, float_threw = false;
        try {
            re = lp_max_min_coefficient<Rational>(a, b);
        } catch (const Error&) {
            exact_threw = true;
        }
        try {
            rf = lp_max_min_coefficient<double>(af, bf);
        } catch (const Error&) {
            float_threw = true;
        }
        CHECK(exact_threw == float_threw);
        if (exact_threw) continue;
        CHECK(re.status == rf.status);
        if (re.status == LpStatus::optimal) {
            CHECK(to_double(re.t_star) == doctest::Approx(rf.t_star).epsilon(1e-6));
            // verify the exact optimizer satisfies the constraints exactly
            for (int i = 0; i < m; ++i) {
                Rational row(0);
                for (int j = 0; j < n; ++j) row += a[i][j] * re.lambda[j];
                CHECK(row == b[i]);
            }
        } else {
            CHECK(check_farkas(a, b, re.farkas));
        }
    }
}
