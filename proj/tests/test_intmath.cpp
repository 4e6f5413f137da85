#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "critcyc/intmath.hpp"

using namespace critcyc;

namespace {

/// Euler-criterion reference for the Legendre symbol, odd prime n.
int legendre_reference(int64 a, int64 n) {
    a = mod_floor(a, n);
    if (a == 0) return 0;
    int64 r = 1, base = a, e = (n - 1) / 2;
    while (e > 0) {
        if (e & 1) r = r * base % n;
        base = base * base % n;
        e >>= 1;
    }
    return r == 1 ? 1 : (r == n - 1 ? -1 : 0);
}

}  // namespace

TEST_CASE("integer square roots") {
    CHECK(isqrt_floor(0) == 0);
    CHECK(isqrt_floor(1) == 1);
    CHECK(isqrt_floor(2) == 1);
    CHECK(isqrt_floor(3) == 1);
    CHECK(isqrt_floor(4) == 2);
    CHECK(isqrt_floor(15) == 3);
    CHECK(isqrt_floor(16) == 4);
    CHECK(isqrt_floor(999999999999LL) == 999999);
    CHECK(isqrt_floor(1000000000000LL) == 1000000);
    CHECK(isqrt_floor(1000000000001LL) == 1000000);
    CHECK_THROWS_AS(isqrt_floor(-1), std::domain_error);

    CHECK(is_perfect_square(0));
    CHECK(is_perfect_square(1));
    CHECK_FALSE(is_perfect_square(2));
    CHECK(is_perfect_square(144));
    CHECK_FALSE(is_perfect_square(-4));
    int64 root = 0;
    CHECK(is_perfect_square(49, &root));
    CHECK(root == 7);
    CHECK_FALSE(is_perfect_square(50, &root));
    CHECK(root == 7);
}

TEST_CASE("jacobi symbol against the Euler criterion on primes") {
    for (int64 n : {3, 5, 7, 11, 13, 17, 19, 23, 29})
        for (int64 a = -5; a < 2 * n; ++a)
            CHECK(jacobi_symbol(a, n) == legendre_reference(a, n));
}

TEST_CASE("jacobi symbol conventions and identities") {
    // Unit denominators and the negative-denominator convention.
    CHECK(jacobi_symbol(7, 1) == 1);
    CHECK(jacobi_symbol(0, 1) == 1);
    CHECK(jacobi_symbol(7, -1) == 1);
    CHECK(jacobi_symbol(5, -3) == jacobi_symbol(5, 3));
    CHECK(jacobi_symbol(2, -7) == jacobi_symbol(2, 7));
    // Shared factors give 0.
    CHECK(jacobi_symbol(6, 9) == 0);
    CHECK(jacobi_symbol(0, 3) == 0);
    // Even or zero denominators are rejected.
    CHECK_THROWS_AS(jacobi_symbol(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, 0), std::invalid_argument);
    // Multiplicativity in the denominator.
    for (int64 m : {3, 5, 7, 9, 11})
        for (int64 n : {3, 5, 7, 9, 13})
            for (int64 a = 0; a < 15; ++a)
                CHECK(jacobi_symbol(a, m * n) == jacobi_symbol(a, m) * jacobi_symbol(a, n));
    // Periodicity in the numerator.
    for (int64 n : {3, 15, 21})
        for (int64 a = 0; a < 12; ++a)
            CHECK(jacobi_symbol(a, n) == jacobi_symbol(a + 4 * n, n));
    // Second supplement: (2|n) depends on n mod 8.
    CHECK(jacobi_symbol(2, 7) == 1);
    CHECK(jacobi_symbol(2, 17) == 1);
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(2, 5) == -1);
}

TEST_CASE("divisor enumeration") {
    CHECK(prime_divisors(360) == std::vector<int64>{2, 3, 5});
    CHECK(prime_divisors(1) == std::vector<int64>{});
    CHECK(prime_divisors(97) == std::vector<int64>{97});
    CHECK_THROWS_AS(prime_divisors(0), std::domain_error);

    CHECK(divisors(36) == std::vector<int64>{1, 2, 3, 4, 6, 9, 12, 18, 36});
    CHECK(divisors(1) == std::vector<int64>{1});
    CHECK(divisors(28) == std::vector<int64>{1, 2, 4, 7, 14, 28});
    CHECK_THROWS_AS(divisors(-3), std::domain_error);
    // Ascending order is part of the contract (callers early-break on it).
    const auto ds = divisors(720);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    int64 sum = 0;
    for (int64 v : ds) sum += v;
    CHECK(sum == 2418);  // sigma(720)
}

TEST_CASE("modular arithmetic") {
    CHECK(mod_floor(-7, 5) == 3);
    CHECK(mod_floor(7, 5) == 2);
    CHECK(mod_floor(-10, 5) == 0);
    CHECK_THROWS_AS(mod_floor(1, 0), std::invalid_argument);

    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, 2) == 1);
    CHECK(mod_inverse(-1, 5) == 4);
    for (int64 m : {5, 7, 9, 26})
        for (int64 a = 1; a < m; ++a)
            if (std::gcd(a, m) == 1) CHECK(mod_floor(a * mod_inverse(a, m), m) == 1);
    CHECK_THROWS_AS(mod_inverse(3, 9), std::domain_error);
    CHECK_THROWS_AS(mod_inverse(2, 1), std::invalid_argument);
}
