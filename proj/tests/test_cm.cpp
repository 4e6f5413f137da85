#include "critcyc/cm.hpp"
#include "helpers.hpp"

using namespace critcyc;
using testutil::close_to;

TEST_CASE("the two admissibility gates coincide") {
    int64 admissible = 0;
    for (int64 d = 3; d <= 99; d += 2)
        for (int64 a = 1; a < d; ++a) {
            INFO("d=" << d << " a=" << a);
            CHECK(congruence_gate(d, a) == integrality_gate(d, a));
            if (integrality_gate(d, a)) ++admissible;
        }
    CHECK(admissible == 600);
    // Out-of-range first summands are rejected, not miscomputed.
    CHECK_FALSE(congruence_gate(9, 0));
    CHECK_FALSE(congruence_gate(9, 9));
    CHECK_THROWS_AS(congruence_gate(8, 1), std::domain_error);
}

TEST_CASE("splitting enumeration matches the known tables") {
    using P = std::vector<std::pair<int64, int64>>;
    auto as_pairs = [](const std::vector<CMPair>& v) {
        P out;
        for (const CMPair& p : v) out.emplace_back(p.a, p.b);
        return out;
    };
    CHECK(as_pairs(enumerate_pairs(3)) == P{});
    CHECK(as_pairs(enumerate_pairs(5)) == P{{1, 4}});
    CHECK(as_pairs(enumerate_pairs(7)) == P{{4, 3}});
    CHECK(as_pairs(enumerate_pairs(9)) == P{{1, 8}, {5, 4}});
    CHECK(as_pairs(enumerate_pairs(11)) == P{{4, 7}, {8, 3}});
    CHECK(as_pairs(enumerate_pairs(13)) == P{{1, 12}, {5, 8}, {9, 4}});
    CHECK(as_pairs(enumerate_pairs(15)) == P{{4, 11}, {8, 7}, {12, 3}});
    CHECK(as_pairs(enumerate_pairs(17)) == P{{1, 16}, {5, 12}, {9, 8}, {13, 4}});
    CHECK(as_pairs(enumerate_pairs(25)) ==
          P{{1, 24}, {5, 20}, {9, 16}, {13, 12}, {17, 8}, {21, 4}});
}

TEST_CASE("lattice parameters for the reference splittings") {
    CHECK(cm_m0(5, 1, 4) == -7);
    CHECK(cm_m0(7, 4, 3) == -12);
    CHECK(cm_m0(9, 1, 8) == -22);
    CHECK(cm_m0(9, 5, 4) == -20);
    CHECK(cm_n0(5, 1, 4) == 2);
    CHECK(cm_n0(7, 4, 3) == 3);
    CHECK(cm_n0(9, 1, 8) == 6);
    CHECK(cm_n0(9, 5, 4) == 5);
    // N_k = d^2 k^2 + 2 m_0 k + N_0, checked against the printed polynomials.
    for (int64 k = -4; k <= 4; ++k) {
        CHECK(cm_nk(5, 1, 4, k) == 25 * k * k - 14 * k + 2);
        CHECK(cm_nk(7, 4, 3, k) == 49 * k * k - 24 * k + 3);
        CHECK(cm_nk(9, 1, 8, k) == 81 * k * k - 44 * k + 6);
        CHECK(cm_nk(9, 5, 4, k) == 81 * k * k - 40 * k + 5);
    }
    // 16 N_0 = d^2 - 2(a-b) + 1 across the whole range of the gates.
    for (int64 d = 3; d <= 99; d += 2)
        for (const CMPair& p : enumerate_pairs(d))
            CHECK(16 * cm_n0(p.d, p.a, p.b) == d * d - 2 * (p.a - p.b) + 1);
    CHECK_THROWS_AS(cm_m0(9, 2, 7), std::domain_error);  // fails the gate
}

TEST_CASE("lattice points in exact form") {
    const CMTau t0 = fundamental_tau(5, 1, 4);
    CHECK(t0 == CMTau{-7, 1, 25});
    CHECK_THAT(t0.value(), close_to({-7.0 / 25.0, 1.0 / 25.0}, 1e-16));
    CHECK(t0.str() == "(-7 + i)/25");

    const CMTau t = associated_tau(7, 4, 3, 1, 2);
    CHECK(t == CMTau{37, 3, 98});
    CHECK(t.str() == "(37 + i*sqrt(3))/98");
    CHECK_THAT(t.value(), close_to({37.0 / 98.0, std::sqrt(3.0) / 98.0}, 1e-16));

    CHECK(associated_tau(9, 5, 4, 1, 2) == CMTau{61, 5, 162});
    CHECK(associated_tau(5, 1, 4, 0, 1) == fundamental_tau(5, 1, 4));
    CHECK_THROWS_AS(associated_tau(7, 4, 3, 1, 5), std::domain_error);   // 5 does not divide 28
    CHECK_THROWS_AS(associated_tau(7, 4, 3, 1, -2), std::domain_error);  // p must be positive
}

TEST_CASE("sign character on divisor pairs") {
    CHECK(sign_epsilon(0, 1) == 1);
    CHECK(sign_epsilon(1, 2) == -1);  // (2|3)
    CHECK(sign_epsilon(1, 7) == 1);   // (7|3) = (1|3)
    CHECK(sign_epsilon(-1, 3) == jacobi_symbol(3, -5));
    CHECK_THROWS_AS(sign_epsilon(1, 0), std::domain_error);
    // On genuine divisor pairs the character never vanishes:
    // 16 N_k = 1 mod (4k-1) makes p and 4k-1 coprime.
    for (int64 d = 5; d <= 13; d += 2)
        for (const CMPair& pr : enumerate_pairs(d))
            for (int64 k = -3; k <= 3; ++k) {
                CHECK(mod_floor(16 * cm_nk(pr.d, pr.a, pr.b, k), std::abs(4 * k - 1)) ==
                      mod_floor(1, std::abs(4 * k - 1)));
                for (int64 p : divisors(cm_nk(pr.d, pr.a, pr.b, k)))
                    CHECK(sign_epsilon(k, p) != 0);
            }
}

TEST_CASE("normalizing matrices") {
    const SigmaMatrix s = sigma_matrix(7, 4, 3, 1, 2);
    CHECK(s.alpha == 149);
    CHECK(s.beta == -56);
    CHECK(s.gamma == 8);
    CHECK(s.delta == -3);
    CHECK(s.det() == 1);
    for (int64 d = 5; d <= 17; d += 2)
        for (const CMPair& pr : enumerate_pairs(d))
            for (int64 k = -2; k <= 2; ++k)
                for (int64 p : divisors(cm_nk(pr.d, pr.a, pr.b, k))) {
                    if (p > 60) break;
                    const SigmaMatrix m = sigma_matrix(pr.d, pr.a, pr.b, k, p);
                    const int64 nk = cm_nk(pr.d, pr.a, pr.b, k);
                    INFO("d=" << d << " a=" << pr.a << " k=" << k << " p=" << p);
                    CHECK(m.det() == 1);
                    CHECK(m.alpha * m.delta == 1 - 16 * nk);
                    CHECK(m.gamma == 4 * p);
                    CHECK(m.delta == 1 - 4 * k);
                    // sigma moves the lattice point to the doubled point.
                    const cplx tau = associated_tau(pr.d, pr.a, pr.b, k, p).value();
                    const cplx moved = m.apply(tau);
                    const cplx doubled = static_cast<double>(d * d) * tau;
                    CHECK(std::abs(moved - doubled) <= 1e-10 * std::max(1.0, std::abs(doubled)));
                }
    CHECK_THROWS_AS(sigma_matrix(7, 4, 3, 1, 3), std::domain_error);  // 3 does not divide 28
}

TEST_CASE("critical values in closed form and through the matrix") {
    CHECK(critical_value_exact(5, 1, 4, 0, 1) == SurdValue::gaussian(1, 2));
    CHECK_THAT(critical_value_exact(7, 4, 3, 1, 2).value(),
               close_to({-2.0, -std::sqrt(3.0)}, 1e-15));
    CHECK_THAT(critical_value_exact(9, 5, 4, 1, 2).value(),
               close_to({-std::sqrt(5.0), -2.0}, 1e-15));
    CHECK(critical_value_exact(13, 9, 4, -1, 3) == SurdValue::gaussian(-3, -2));

    // The analytic formula through sigma reproduces the exact values.
    for (int64 d = 5; d <= 13; d += 2)
        for (const CMPair& pr : enumerate_pairs(d))
            for (int64 k = -2; k <= 2; ++k)
                for (int64 p : divisors(cm_nk(pr.d, pr.a, pr.b, k))) {
                    if (p > 40) break;
                    const cplx tau = associated_tau(pr.d, pr.a, pr.b, k, p).value();
                    const cplx via_sigma =
                        critical_value_from_sigma(sigma_matrix(pr.d, pr.a, pr.b, k, p), tau);
                    const cplx exact = critical_value_exact(pr.d, pr.a, pr.b, k, p).value();
                    INFO("d=" << d << " a=" << pr.a << " k=" << k << " p=" << p);
                    CHECK(std::abs(via_sigma - exact) <= 1e-11);
                }

    // Domain validation of the analytic formula.
    const SigmaMatrix good = sigma_matrix(7, 4, 3, 1, 2);
    const cplx tau = associated_tau(7, 4, 3, 1, 2).value();
    CHECK_THROWS_AS(critical_value_from_sigma(good, std::conj(tau)), std::domain_error);
    CHECK_THROWS_AS(critical_value_from_sigma({1, 2, 0, 1}, tau), std::domain_error);
    CHECK_THROWS_AS(critical_value_from_sigma({2, 1, 1, 1}, tau), std::domain_error);
}

TEST_CASE("modulus of the base value") {
    for (int64 d = 5; d <= 99; d += 2)
        for (const CMPair& pr : enumerate_pairs(d)) {
            const double m = std::abs(lambda_zero(pr.a, pr.b).value());
            CHECK(std::abs(m - std::sqrt(static_cast<double>(d))) <= 1e-12);
            CHECK(m <= static_cast<double>(d));
        }
}

TEST_CASE("negative-sign existence criterion on frozen cases") {
    // Attained:
    for (auto [a, b] : std::initializer_list<std::pair<int64, int64>>{
             {4, 3}, {5, 4}, {8, 3}, {5, 8}, {9, 4}, {5, 12}, {13, 4}, {4, 11}, {8, 7}, {12, 3}})
        CHECK(negative_sign_exists(a, b));
    // Not attained:
    for (auto [a, b] : std::initializer_list<std::pair<int64, int64>>{
             {1, 4}, {1, 8}, {4, 7}, {1, 12}, {1, 16}, {9, 8}, {81, 12}})
        CHECK_FALSE(negative_sign_exists(a, b));
    CHECK_THROWS_AS(negative_sign_exists(2, 7), std::domain_error);
}

TEST_CASE("witness search agrees with the criterion") {
    const auto w = search_negative_sign(7, 4, 3);
    REQUIRE(w.has_value());
    CHECK(*w == std::pair<int64, int64>{1, 2});
    CHECK(sign_epsilon(w->first, w->second) == -1);

    CHECK_FALSE(search_negative_sign(17, 1, 16).has_value());
    CHECK_FALSE(search_negative_sign(5, 1, 4, 20, 400).has_value());

    for (int64 d = 5; d <= 25; d += 2)
        for (const CMPair& pr : enumerate_pairs(d)) {
            INFO("d=" << d << " a=" << pr.a);
            CHECK(search_negative_sign(pr.d, pr.a, pr.b, 25, 500).has_value() ==
                  negative_sign_exists(pr.a, pr.b));
        }
    CHECK_THROWS_AS(search_negative_sign(7, 4, 3, -1, 10), std::invalid_argument);
}

TEST_CASE("gaussian integer values") {
    const GaussianValue g = gaussian_integer_value(1, 2);
    CHECK(g.d == 5);
    CHECK(g.pair.a == 1);
    CHECK(g.pair.b == 4);
    CHECK(g.lambda == SurdValue::gaussian(1, 2));
    CHECK_THAT(g.lambda.value(), close_to({1.0, 2.0}, 1e-16));

    const GaussianValue h = gaussian_integer_value(3, -2);
    CHECK(h.d == 13);
    CHECK_THAT(h.lambda.value(), close_to({3.0, -2.0}, 1e-16));

    CHECK_THROWS_AS(gaussian_integer_value(2, 1), std::domain_error);  // parity is wrong
    CHECK_THROWS_AS(gaussian_integer_value(3, 0), std::domain_error);
}
