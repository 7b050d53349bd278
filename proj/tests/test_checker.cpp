#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lsc/checker.hpp"
#include "lsc/report.hpp"

using namespace lsc;

TEST_CASE("labeled sampling plans") {
    const CorrSet S = make_F(0.1, 10);
    const SampleSpec spec{9, MixStrategy::Mixed, 42, 10.0, 5.0};
    const auto pts = labeled_samples(S, spec);
    REQUIRE(pts.size() == 9);
    CHECK(pts.front().label == "interior[0]");
    CHECK(pts[4].label == "interior[4]"); // 9 -> 5 interior + 4 boundary
    CHECK(pts[5].label == "boundary[0]");
    CHECK(pts.back().label == "boundary[3]");
    for (const auto& p : pts) CHECK(contains(S, p.point));

    const auto again = labeled_samples(S, spec);
    bool same = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
        same = same && again[i].point == pts[i].point && again[i].label == pts[i].label;
    CHECK(same);

    const auto rays = ray_points(S);
    REQUIRE(rays.size() == 9);
    CHECK(rays.front().label == "e^(2)");
    CHECK(rays.back().label == "e^(10)");
    for (const auto& p : rays) CHECK(contains(S, p.point));
}

TEST_CASE("modulus table for the first family stays within the linear bound") {
    const SampleSpec spec{200, MixStrategy::Mixed, 42, 10.0, 5.0};
    const std::vector<double> grid = {0.01, 0.1, 0.3};
    const ModulusTable tab = hlsc_modulus(Family::F1, grid, spec, 30);
    REQUIRE(tab.x_grid.size() == 3);
    CHECK_FALSE(tab.rays_included); // defaults off outside the intersection family
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(tab.excess_lb[i] <= grid[i] + 1e-9);
        CHECK(tab.excess_lb[i] >= 0.0);
        CHECK_FALSE(tab.attained_at[i].empty());
    }
}

TEST_CASE("modulus table for the intersection blows up like 2Kx on the rays") {
    const SampleSpec spec{100, MixStrategy::Mixed, 42, 10.0, 5.0};
    const ModulusTable tab = hlsc_modulus(Family::F, {0.1}, spec, 50);
    CHECK(tab.rays_included); // default on for the intersection family
    REQUIRE(tab.excess_lb.size() == 1);
    CHECK(std::fabs(tab.excess_lb[0] - 10.0) <= 1e-6); // 2 * 50 * 0.1
    CHECK(tab.attained_at[0] == "e^(50)");

    // Without rays the sampled bound cannot reach the supremum scale but must
    // still exceed the single-family rate.
    const ModulusTable no_rays = hlsc_modulus(Family::F, {0.1}, spec, 50, 1e-12, false);
    CHECK_FALSE(no_rays.rays_included);
    CHECK(no_rays.excess_lb[0] <= tab.excess_lb[0] + 1e-12);

    CHECK_THROWS_AS(hlsc_modulus(Family::F, {}, spec, 50), std::domain_error);
    CHECK_THROWS_AS(hlsc_modulus(Family::F, {0.6}, spec, 50), std::domain_error);
    CHECK_THROWS_AS(hlsc_modulus(Family::F, {0.0}, spec, 50), std::domain_error);
}

TEST_CASE("pointwise check report") {
    const auto targets = detail::default_vlsc_targets(10);
    REQUIRE(targets.size() == 4);
    const VlscReport rep = vlsc_check(targets, {0.5, 1.0}, 40);
    CHECK(rep.all_pass);
    REQUIRE(rep.rows.size() == 8);
    // Row 0: t1 = 0.5 > 0, delta = 0.5 * min(t1/2, r).
    CHECK(rep.rows[0].label == "(0.5,0,...)");
    CHECK(rep.rows[0].r == 0.5);
    CHECK(rep.rows[0].delta == 0.125);
    CHECK_FALSE(rep.rows[0].M.has_value());
    CHECK(rep.rows[0].max_dist <= 0.5 + 1e-9);
    // e^(2) rows carry the cutoff M = 3.
    CHECK(rep.rows[4].label == "e^(2)");
    REQUIRE(rep.rows[4].M.has_value());
    CHECK(*rep.rows[4].M == 3.0);

    CHECK_THROWS_AS(vlsc_check({}, {0.5}, 10), std::domain_error);
    CHECK_THROWS_AS(vlsc_check(targets, {}, 10), std::domain_error);
    CHECK_THROWS_AS(vlsc_check(targets, {0.5}, 0), std::domain_error);
}

TEST_CASE("proposition suite passes on the reference configuration") {
    Config cfg;
    const SuiteReport rep = run_proposition_suite(cfg);
    CHECK(rep.all_pass);
    CHECK(rep.warnings.empty());
    REQUIRE(rep.sections.size() == 8);
    const char* expected[] = {"branch-cases",     "f1-hlsc",
                              "f2-hlsc",          "convexity",
                              "intersection-identity", "hlsc-failure",
                              "interior-ball",    "vlsc"};
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(rep.sections[i].name == expected[i]);
        CHECK(rep.sections[i].passed);
        CHECK(rep.sections[i].failures == 0);
        CHECK(rep.sections[i].checks > 0);
    }
    // Certificates ride along in the sections that produce them.
    CHECK(rep.sections[1].certificates.size() == cfg.x_grid.size());
    CHECK_FALSE(rep.sections[5].certificates.empty());
    for (const auto& cert : rep.sections[5].certificates) CHECK(cert.all_checks_pass());
}

TEST_CASE("suite reports are deterministic and flag unusable grid values") {
    Config cfg;
    cfg.K = 12;
    cfg.n = 40;
    cfg.x_grid = {0.05, 0.2, 0.55};
    cfg.seed = 7;

    const SuiteReport a = run_proposition_suite(cfg);
    const SuiteReport b = run_proposition_suite(cfg);
    CHECK(render_json(to_json(a)) == render_json(to_json(b)));

    CHECK(a.all_pass);
    CHECK_FALSE(a.warnings.empty());
    bool mentions = false;
    for (const auto& w : a.warnings) mentions = mentions || w.find("0.55") != std::string::npos;
    CHECK(mentions);
}

TEST_CASE("suite surfaces failures instead of hiding them") {
    // A coarse bisection tolerance makes every measured distance land on a
    // dyadic grid point a few multiples of 1e-3 above the true value, so the
    // excess bound for the first family must overshoot its linear gate.
    Config cfg;
    cfg.K = 12;
    cfg.n = 30;
    cfg.x_grid = {0.2};
    cfg.bisect_tol = 1e-2;
    const SuiteReport rep = run_proposition_suite(cfg);
    bool f1_failed = false;
    for (const auto& sec : rep.sections)
        if (sec.name == "f1-hlsc") f1_failed = !sec.passed && sec.failures > 0;
    CHECK(f1_failed);
    CHECK_FALSE(rep.all_pass);
}
