#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "hprop/errors.hpp"
#include "hprop/graphon_ext.hpp"

using namespace hprop;
using namespace hprop::testing;

TEST_CASE("discretize_support reproduces blockwise support at aligned resolutions") {
    GeneralGraphon g{figure2_graphon()};
    SupportPattern p = discretize_support(g, 10, 3);
    const StepGraphon& s = g.step();
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            Rational cx(2 * i + 1, 20), cy(2 * j + 1, 20);  // cell centers
            bool expected = s.block_value(cx, cy) > 0;
            CHECK(p.cells[i][j] == expected);
        }
}

TEST_CASE("discretize_support corner cases") {
    SupportPattern zero = discretize_support(constant_graphon(0.0), 4, 3);
    for (const auto& row : zero.cells)
        for (bool c : row) CHECK_FALSE(c);
    // W = xy is positive at every midpoint sample
    SupportPattern prod =
        discretize_support(GeneralGraphon(FamilyGraphon{FamilyGraphon::Kind::product}), 4, 3);
    for (const auto& row : prod.cells)
        for (bool c : row) CHECK(c);
}

TEST_CASE("phi_discrete hand examples") {
    SupportPattern full;
    full.resolution = 3;
    full.cells.assign(3, std::vector<bool>(3, true));
    std::vector<std::vector<double>> ones(3, std::vector<double>(3, 1.0));
    CHECK(phi_discrete(full, ones) == std::vector<double>{1.0, 1.0, 1.0});
    std::vector<std::vector<double>> zeros(3, std::vector<double>(3, 0.0));
    CHECK(phi_discrete(full, zeros) == std::vector<double>{0.0, 0.0, 0.0});

    SupportPattern pair;
    pair.resolution = 2;
    pair.cells = {{false, true}, {true, false}};
    std::vector<std::vector<double>> c = {{0.0, 2.0}, {2.0, 0.0}};
    CHECK(phi_discrete(pair, c) == std::vector<double>{1.0, 1.0});

    std::vector<std::vector<double>> asym = {{0.0, 1.0}, {2.0, 0.0}};
    CHECK_THROWS_AS((void)phi_discrete(pair, asym), Error);
    CHECK_THROWS_AS((void)phi_discrete(full, c), Error);
}

TEST_CASE("check_a_ext") {
    CHECK(check_a_ext(discretize_support(GeneralGraphon{figure2_graphon()}, 10, 3)));
    CHECK_FALSE(check_a_ext(discretize_support(GeneralGraphon{bipartite_graphon()}, 10, 3)));
    CHECK(check_a_ext(discretize_support(constant_graphon(1.0), 6, 2)));
}

TEST_CASE("mu_sigma integrates grid step functions") {
    Partition sigma{{dec("0"), dec("0.3"), dec("0.6"), dec("1")}};
    std::vector<double> ones(10, 1.0);
    auto v = mu_sigma(ones, sigma);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == doctest::Approx(0.3));
    CHECK(v[1] == doctest::Approx(0.3));
    CHECK(v[2] == doctest::Approx(0.4));
    std::vector<double> zeros(10, 0.0);
    CHECK(mu_sigma(zeros, sigma) == std::vector<double>{0.0, 0.0, 0.0});

    Partition halves{{dec("0"), dec("0.5"), dec("1")}};
    std::vector<double> indicator(10, 0.0);
    for (int i = 0; i < 5; ++i) indicator[i] = 1.0;
    auto w = mu_sigma(indicator, halves);
    CHECK(w[0] == doctest::Approx(0.5));
    CHECK(w[1] == doctest::Approx(0.0));

    Partition unaligned{{dec("0"), dec("0.25"), dec("1")}};
    CHECK_THROWS_AS((void)mu_sigma(ones, unaligned), Error);
}

TEST_CASE("check_b_ext fixtures") {
    auto fig2 = check_b_ext(discretize_support(GeneralGraphon{figure2_graphon()}, 10, 3));
    CHECK(fig2.status == Membership::interior);
    CHECK(fig2.margin > 0);
    auto bip = check_b_ext(discretize_support(GeneralGraphon{bipartite_graphon()}, 10, 3));
    CHECK(bip.status == Membership::outside);
    auto full = check_b_ext(discretize_support(constant_graphon(1.0), 8, 2));
    CHECK(full.status == Membership::interior);
}

TEST_CASE("step-graphon exactness: ext checks agree with the skeleton/polytope path") {
    std::mt19937_64 rng(211);
    for (int iter = 0; iter < 100; ++iter) {
        StepGraphon g = random_step_graphon(rng, 4, 12);
        const int n = 12;  // aligned by construction
        REQUIRE(partition_aligned(g, n));
        SupportPattern p = discretize_support(GeneralGraphon{g}, n, 3);
        SkeletonGraph sk = skeleton_graph(g);
        CHECK(check_a_ext(p) == all_components_nonbipartite(sk));
        auto ext = check_b_ext(p);
        auto direct = polytope_membership(incidence_matrix(sk), concentration_vector(g));
        CHECK(ext.status == direct.status);
    }
}

TEST_CASE("rank of the discretized operator equals N minus bipartite components") {
    std::mt19937_64 rng(223);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 2 + iter % 11;  // N up to 12
        SupportPattern p;
        p.resolution = n;
        p.cells.assign(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                bool on = u(rng) < 0.35;
                p.cells[i][j] = on;
                p.cells[j][i] = on;
            }
        // build the matrix of phi restricted to supported cells by feeding
        // basis kernels (independent of the incidence-matrix route)
        RationalMatrix phi_matrix(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (!p.cells[i][j]) continue;
                std::vector<std::vector<double>> basis(n, std::vector<double>(n, 0.0));
                basis[i][j] = 1.0;
                basis[j][i] = 1.0;
                auto image = phi_discrete(p, basis);
                for (int r = 0; r < n; ++r)
                    phi_matrix[r].push_back(rational_from_double(image[r]));
            }
        int rank = phi_matrix[0].empty() ? 0 : rational_rank(phi_matrix);
        SkeletonGraph pg = pattern_graph(p);
        CHECK(rank == n - count_bipartite_components(pg));
    }
}

TEST_CASE("mu_sigma after phi_discrete is linear in the kernel") {
    std::mt19937_64 rng(227);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Partition sigma{{dec("0"), dec("0.5"), dec("1")}};
    SupportPattern p = discretize_support(GeneralGraphon{figure2_graphon()}, 10, 3);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<std::vector<double>> a(10, std::vector<double>(10)),
            b(10, std::vector<double>(10));
        for (int i = 0; i < 10; ++i)
            for (int j = i; j < 10; ++j) {
                a[i][j] = a[j][i] = u(rng);
                b[i][j] = b[j][i] = u(rng);
            }
        double alpha = u(rng);
        std::vector<std::vector<double>> combo(10, std::vector<double>(10));
        for (int i = 0; i < 10; ++i)
            for (int j = 0; j < 10; ++j) combo[i][j] = a[i][j] + alpha * b[i][j];
        auto lhs = mu_sigma(phi_discrete(p, combo), sigma);
        auto ma = mu_sigma(phi_discrete(p, a), sigma);
        auto mb = mu_sigma(phi_discrete(p, b), sigma);
        for (std::size_t k = 0; k < lhs.size(); ++k)
            CHECK(lhs[k] == doctest::Approx(ma[k] + alpha * mb[k]).epsilon(1e-10));
    }
}

TEST_CASE("adding supported cells never flips check_a_ext to false") {
    std::mt19937_64 rng(229);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int iter = 0; iter < 30; ++iter) {
        const int n = 6;
        SupportPattern p;
        p.resolution = n;
        p.cells.assign(n, std::vector<bool>(n, false));
        bool was_true = false;
        for (int step = 0; step < 12; ++step) {
            int i = static_cast<int>(u(rng) * n), j = static_cast<int>(u(rng) * n);
            p.cells[i][j] = p.cells[j][i] = true;
            bool now = check_a_ext(p);
            if (was_true) CHECK(now);
            was_true = was_true || now;
        }
    }
}

TEST_CASE("analyze_ext marks aligned step inputs as exact") {
    GeneralGraphon g{figure2_graphon()};
    ExtVerdict aligned = analyze_ext(g, 10, 3);
    CHECK(aligned.exact);
    CHECK(aligned.a_ext);
    CHECK(aligned.b_ext_status == Membership::interior);
    ExtVerdict unaligned = analyze_ext(g, 8, 3);
    CHECK_FALSE(unaligned.exact);
    ExtVerdict family = analyze_ext(constant_graphon(1.0), 8, 3);
    CHECK_FALSE(family.exact);
    CHECK(family.a_ext);
}
