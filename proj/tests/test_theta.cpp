#include "critcyc/cm.hpp"
#include "critcyc/theta.hpp"
#include "helpers.hpp"

using namespace critcyc;
using testutil::close_to;
using testutil::rel_gap;

// Reference values below were computed independently with 50-digit ball
// arithmetic and frozen at 22 significant digits.

TEST_CASE("series values against frozen references") {
    CHECK_THAT(theta(0.0, {0.0, 1.0}), close_to(1.086434811213308014575, 1e-15));
    CHECK_THAT(theta(0.25, {0.0, 1.0}), close_to(0.9999930253152875820093, 1e-15));
    CHECK_THAT(theta({0.3, 0.1}, {0.2, 1.1}),
               close_to({1.004661336727415078069, -0.04637452143953455508588}, 1e-15));
    CHECK_THAT(theta(0.125, {0.0, 0.5}), close_to(1.293985090961062458782, 1e-15));
    CHECK_THAT(theta_even(0.0, {0.0, 1.0}), close_to(1.003734885487739091048, 1e-15));
    CHECK_THAT(theta_odd(0.0, {0.0, 1.0}), close_to(0.4157606025960270323145, 1e-15));
    CHECK_THAT(phi({0.0, 1.0}), close_to(std::sqrt(2.0) - 1.0, 1e-15));
    CHECK_THAT(theta_half(1, 0, 0.0, {0.0, 1.0}),
               close_to(0.9135791381561168214072, 1e-15));
    CHECK_THAT(theta_half(0, 1, 0.0, {0.0, 1.0}),
               close_to(0.9135791381561168214072, 1e-15));
    CHECK_THAT(theta_half(1, 1, 0.3, {0.0, 0.7}),
               close_to(-0.9293423392939475785298, 1e-15));
}

TEST_CASE("domain validation and the truncation guard") {
    CHECK_THROWS_AS(theta(0.0, {0.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(theta(0.0, {0.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(theta({0.0, 2.0}, {0.0, 1.0}), std::domain_error);  // beyond z_im_cap
    ThetaConfig tight;
    tight.max_terms = 50;
    CHECK_THROWS_AS(theta(0.0, {0.0, 1e-4}, tight), std::length_error);
    CHECK_THROWS_AS(theta_raw(0.0, {0.0, -1.0}, 10), std::domain_error);
}

TEST_CASE("parity pieces and their relatives") {
    const cplx tau{0.21, 0.73};
    const cplx z{0.13, 0.05};
    CHECK(rel_gap(theta(z, tau / 2.0), theta_even(z, tau) + theta_odd(z, tau)) <= 1e-13);
    CHECK(rel_gap(theta_even(z, tau), theta(2.0 * z, 2.0 * tau)) <= 1e-13);
    // theta_half(0,0) is theta itself; theta_half(1,1) vanishes at z = 0.
    CHECK(rel_gap(theta_half(0, 0, z, tau), theta(z, tau)) <= 1e-13);
    CHECK(std::abs(theta_half(1, 1, 0.0, tau)) <= 1e-13);
    CHECK_THROWS_AS(theta_half(2, 0, 0.0, tau), std::invalid_argument);
}

TEST_CASE("quasi-period reduction matches the direct sum") {
    ThetaConfig cfg;
    cfg.z_im_cap = 5.0;
    const cplx tau{0.3, 1.0};
    const cplx z{0.1, 2.0};  // reduction kicks in with n = 2
    const cplx reduced = theta(z, tau, cfg);
    const cplx direct = theta_raw(z, tau, 60);  // plenty of terms for mu = 2
    CHECK(rel_gap(reduced, direct) <= 1e-12);
    // And the quasi-period relation itself: theta(z + tau) = e^{-i pi tau - 2 pi i z} theta(z).
    const cplx z0{0.37, 0.0};
    const cplx lhs = theta(z0 + tau, tau, cfg);
    const cplx factor = std::exp(cplx{0.0, -std::numbers::pi} * (tau + 2.0 * z0));
    CHECK(rel_gap(lhs, factor * theta(z0, tau, cfg)) <= 1e-12);
}

TEST_CASE("two-variable addition identity") {
    const AdditionCheck c = check_addition({0.11, 0.04}, {-0.27, 0.09}, {0.4, 0.9});
    CHECK(c.abs_err <= 1e-13 * std::max(1.0, std::abs(c.lhs)));
}

TEST_CASE("division-point averaging identity") {
    for (int64 d : {3, 5, 9}) {
        const IsogenyCheck c = check_isogeny(d, {0.3, 0.8});
        INFO("d=" << d);
        CHECK(c.max_abs_err <= 1e-12 * std::max(1.0, std::abs(c.sum_even)));
    }
    CHECK_THROWS_AS(check_isogeny(4, {0.0, 1.0}), std::domain_error);
}

TEST_CASE("transformation law on fixed matrices") {
    const cplx tau{0.37, 0.58};

    const TransformCheck t1 = transform_theta_constant({1, 0, 2, 1}, tau);
    CHECK(t1.root_of_unity == cplx{1.0, 0.0});
    CHECK(t1.rel_err <= 1e-12);

    // delta < 0 exercises the negative-denominator Jacobi convention.
    const TransformCheck t2 = transform_theta_constant({-1, 0, 2, -1}, tau);
    CHECK(t2.root_of_unity == cplx{0.0, -1.0});
    CHECK(t2.rel_err <= 1e-12);

    // The matrix attached to the worked splitting d = 7 = 4 + 3, k = 1, p = 2.
    const TransformCheck t3 = transform_theta_constant(sigma_matrix(7, 4, 3, 1, 2), tau);
    CHECK(t3.rel_err <= 1e-12);

    CHECK_THROWS_AS(transform_theta_constant({1, 2, 0, 1}, tau), std::domain_error);
    CHECK_THROWS_AS(transform_theta_constant({1, 0, -2, 1}, tau), std::domain_error);
    CHECK_THROWS_AS(transform_theta_constant({1, 1, 1, 2}, tau), std::domain_error);
}

TEST_CASE("families at lattice points are critical") {
    const cplx tau = fundamental_tau(5, 1, 4).value();
    const cplx lam{1.0, 2.0};

    const CyclicFunction f = critical_family(5, 0.1375, tau);
    CHECK(residual_report(f, lam).relative <= 1e-9);
    CHECK_THAT(estimate_lambda(f), close_to(lam, 1e-9));

    // A sample point with large imaginary part goes through the reduction path.
    const CyclicFunction g = critical_family(5, {0.1, 0.9}, tau);
    CHECK(residual_report(g, lam).relative <= 1e-7);

    CHECK_THROWS_AS(critical_family(4, 0.1, tau), std::domain_error);
}

TEST_CASE("theta-constant criterion accepts lattice points and nothing else") {
    const auto at_cm = theta_constant_criterion(5, fundamental_tau(5, 1, 4).value());
    REQUIRE(at_cm.has_value());
    CHECK_THAT(*at_cm, close_to({1.0, 2.0}, 1e-9));

    const auto at_cm7 = theta_constant_criterion(7, associated_tau(7, 4, 3, 1, 2).value());
    REQUIRE(at_cm7.has_value());
    CHECK_THAT(*at_cm7, close_to({-2.0, -std::sqrt(3.0)}, 1e-8));

    CHECK_FALSE(theta_constant_criterion(5, {0.3, 0.8}).has_value());
    CHECK_FALSE(theta_constant_criterion(7, {0.0, 1.0}).has_value());
    CHECK_THROWS_AS(theta_constant_criterion(4, {0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(theta_constant_criterion(5, {0.0, -1.0}), std::domain_error);
}

TEST_CASE("doubling the truncation index moves nothing beyond the tail bound") {
    ThetaConfig cfg;
    for (const cplx tau : {cplx{0.17, 0.031}, cplx{-0.4, 0.9}, cplx{0.05, 3.0}}) {
        const cplx z{0.05, 0.01};
        const int64 M = detail::series_radius(z.imag(), tau.imag(), cfg);
        const double gap = std::abs(theta_raw(z, tau, M) - theta_raw(z, tau, 2 * M));
        INFO("Im tau = " << tau.imag());
        CHECK(gap <= 2.0 * cfg.tail_bound);
    }
}

TEST_CASE("truncation index grows as the lattice flattens") {
    CHECK(theta_terms(0.0, {0.0, 0.01}) > theta_terms(0.0, {0.0, 1.0}));
    CHECK(theta_terms({0.0, 0.9}, {0.0, 1.0}) > theta_terms(0.0, {0.0, 1.0}));
}
