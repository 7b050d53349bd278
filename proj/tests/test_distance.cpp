#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lsc/distance.hpp"
#include "lsc/rng.hpp"
#include "lsc/sample.hpp"
#include "support/grid_oracle.hpp"

using namespace lsc;

TEST_CASE("ball feasibility intervals") {
    const CorrSet S = make_F(0.1, 5);
    const TruncSeq ray = unit_ray(2, 5);

    // Reaching e^(2) takes radius 0.4: step t1 up to 0.1 and lower t2 from 2
    // to the cap 2(1 - t1 - 0.1). Strictly below that the ball misses.
    CHECK(ball_hits_set(S, ray, 0.39).is_empty());

    const Interval I = ball_hits_set(S, ray, 0.400001);
    REQUIRE_FALSE(I.is_empty());
    CHECK(std::fabs(I.lo - 0.1) <= 1e-12);
    CHECK(std::fabs(I.hi - 0.1000005) <= 1e-9);

    // Monotone in the radius.
    const Interval wide = ball_hits_set(S, ray, 1.0);
    CHECK(wide.lo <= I.lo);
    CHECK(wide.hi >= I.hi);

    CHECK_THROWS_AS(ball_hits_set(S, ray, -0.5), std::domain_error);
    CHECK_THROWS_AS(ball_hits_set(S, TruncSeq::zero(4), 1.0), dimension_mismatch);
    CHECK_THROWS_AS(ball_hits_set(make_F(0.51, 5), TruncSeq::zero(5), 1.0),
                    empty_set_error);
}

TEST_CASE("distance to a set, witness included") {
    const CorrSet S = make_F(0.1, 5);
    const TruncSeq ray = unit_ray(2, 5);

    const DistanceResult res = dist_to_set(S, ray);
    CHECK(std::fabs(res.dist - 0.4) <= 1e-9);
    CHECK(contains(S, res.witness));
    CHECK(sup_dist(res.witness, ray) <= res.dist + 1e-12);
    CHECK(res.iterations > 0);

    // A member has distance exactly zero and is its own witness.
    const TruncSeq in({0.5, 0.3, 0.0, -2.0, 1.0});
    const DistanceResult zero_res = dist_to_set(S, in);
    CHECK(zero_res.dist == 0.0);
    CHECK(zero_res.witness == in);

    CHECK_THROWS_AS(dist_to_set(make_F(0.6, 5), TruncSeq::zero(5)), empty_set_error);
}

TEST_CASE("distance from the origin to the first family is the parameter") {
    for (double x : {0.001, 0.05, 0.2, 0.45}) {
        const DistanceResult res = dist_to_set(make_F1(x, 50), TruncSeq::zero(50));
        CHECK(std::fabs(res.dist - x) <= 1e-9);
    }
}

TEST_CASE("membership and zero distance coincide") {
    const CorrSet S = make_F2(0.15, 12);
    const auto members = sample(S, 50, SampleStrategy::Boundary, 3, 10.0, 5.0);
    for (const auto& p : members) {
        CHECK(contains(S, p));
        CHECK(dist_to_set(S, p).dist == 0.0);
    }
    // Far points: macroscopically outside, distance clearly positive.
    for (int k = 2; k <= 12; k += 5) {
        TruncSeq far = TruncSeq::zero(12);
        far.set_coord(k, 100.0);
        CHECK_FALSE(contains(S, far));
        CHECK(dist_to_set(S, far).dist > 1.0);
    }
}

TEST_CASE("bisection agrees with the grid oracle on random instances") {
    Rng rng(777);
    int compared = 0;
    while (compared < 400) {
        const int K = rng.uniform_int(2, 6);
        const double x = rng.uniform(0.0, 0.5);
        CorrSet S;
        switch (rng.uniform_int(0, 2)) {
            case 0: S = make_F1(x, K); break;
            case 1: S = make_F2(x, K); break;
            default: S = make_F(x, K); break;
        }
        std::vector<double> c(static_cast<std::size_t>(K));
        for (int i = 0; i < K; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(-8.0, 8.0);
        const TruncSeq p{std::move(c)};
        const double solver = dist_to_set(S, p).dist;
        const double oracle = testing::grid_dist(S, p);
        CHECK(std::fabs(solver - oracle) <= 1e-6);
        ++compared;
    }
}

TEST_CASE("bisection agrees with the oracle on custom cap systems") {
    Rng rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const int K = rng.uniform_int(2, 5);
        CorrSet S;
        S.x = 0.0;
        S.K = K;
        S.t1_lo = rng.uniform(-3.0, 0.0);
        S.t1_hi = S.t1_lo + rng.uniform(0.5, 4.0);
        for (int k = 2; k <= K; ++k) {
            CoordCap cap;
            cap.k = k;
            const int pieces = rng.uniform_int(1, 3);
            for (int i = 0; i < pieces; ++i)
                cap.pieces.push_back({rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 5.0)});
            S.caps.push_back(std::move(cap));
        }
        std::vector<double> c(static_cast<std::size_t>(K));
        for (int i = 0; i < K; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(-6.0, 6.0);
        const TruncSeq p{std::move(c)};
        const double solver = dist_to_set(S, p).dist;
        const double oracle = testing::grid_dist(S, p);
        CHECK(std::fabs(solver - oracle) <= 1e-6);
    }
}

TEST_CASE("certified infeasibility just below the computed distance") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int K = rng.uniform_int(2, 6);
        const double x = rng.uniform(0.0, 0.5);
        const CorrSet S = make_F(x, K);
        std::vector<double> c(static_cast<std::size_t>(K));
        for (int i = 0; i < K; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(-8.0, 8.0);
        const TruncSeq p{std::move(c)};
        const double d = dist_to_set(S, p).dist;
        if (d <= 1e-9) continue;
        // Strictly inside the infimum the ball must miss the set.
        CHECK(ball_hits_set(S, p, d * (1.0 - 1e-9) - 1e-12).is_empty());
        CHECK_FALSE(ball_hits_set(S, p, d).is_empty());
    }
}

TEST_CASE("excess over a finite point set") {
    const CorrSet B = make_F(0.1, 10);
    const std::vector<TruncSeq> pts = {unit_ray(2, 10), unit_ray(10, 10)};
    const ExcessResult res = excess(pts, B);
    CHECK(std::fabs(res.value - 2.0) <= 1e-9); // 2 * 10 * 0.1 from e^(10)
    CHECK(res.argmax == 1);
    CHECK(std::fabs(res.worst.dist - res.value) <= 1e-15);
    CHECK_THROWS_AS(excess({}, B), std::domain_error);

    // Ties break to the first index.
    const std::vector<TruncSeq> tied = {unit_ray(5, 10), unit_ray(5, 10)};
    CHECK(excess(tied, B).argmax == 0);
}

TEST_CASE("inclusion gap reports the offending points") {
    const CorrSet B = make_F(0.1, 10);
    const std::vector<TruncSeq> pts = {TruncSeq::zero(10), unit_ray(10, 10)};

    const GapReport bad = inclusion_gap(pts, B, 1.0);
    CHECK_FALSE(bad.holds());
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].index == 1);
    CHECK(std::fabs(bad.violations[0].dist - 2.0) <= 1e-9);

    const GapReport ok = inclusion_gap(pts, B, 2.1);
    CHECK(ok.holds());

    // The 1e-9 guard tolerates an exactly attained radius.
    const GapReport edge = inclusion_gap({unit_ray(10, 10)}, B, 2.0);
    CHECK(edge.holds());

    CHECK_THROWS_AS(inclusion_gap(pts, B, -1.0), std::domain_error);
}
