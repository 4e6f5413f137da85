#pragma once

// Exact integer helpers for the arithmetic layer: Jacobi symbols (with the
// convention (a/n) := (a/|n|) for negative odd n), integer square roots,
// divisor enumeration and factorization by trial division, and modular
// inverses.  Every modulus handled by this library is small (d < 100, matrix
// entries bounded by a few thousand), so trial division is entirely adequate
// and keeps everything exactly verifiable.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace critcyc {

using int64 = long long;

/// Floor of sqrt(n), n >= 0.  Pure integer Newton iteration.
inline int64 isqrt_floor(int64 n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative argument");
    if (n < 2) return n;
    int64 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

/// True when n is a perfect square; the root (floor sqrt for non-squares) is
/// reported through `root` when given.
inline bool is_perfect_square(int64 n, int64* root = nullptr) {
    if (n < 0) return false;
    const int64 r = isqrt_floor(n);
    if (root) *root = r;
    return r * r == n;
}

/// Jacobi symbol (a/n) for odd n != 0, extended to negative n by
/// (a/n) := (a/|n|).  Returns 0 when gcd(a, n) > 1.
inline int jacobi_symbol(int64 a, int64 n) {
    if (n == 0) throw std::invalid_argument("jacobi_symbol: zero denominator");
    if (n < 0) n = -n;
    if (n % 2 == 0) throw std::invalid_argument("jacobi_symbol: even denominator");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const int64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Distinct prime divisors of n > 0, ascending.
inline std::vector<int64> prime_divisors(int64 n) {
    if (n <= 0) throw std::domain_error("prime_divisors: argument must be positive");
    std::vector<int64> out;
    for (int64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// All positive divisors of n > 0, ascending.
inline std::vector<int64> divisors(int64 n) {
    if (n <= 0) throw std::domain_error("divisors: argument must be positive");
    std::vector<int64> small, large;
    for (int64 p = 1; p * p <= n; ++p) {
        if (n % p == 0) {
            small.push_back(p);
            if (p != n / p) large.push_back(n / p);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Representative of a mod m in [0, m), m > 0.
inline int64 mod_floor(int64 a, int64 m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    int64 r = a % m;
    return r < 0 ? r + m : r;
}

/// Inverse of a modulo m > 1; throws when gcd(a, m) != 1.
inline int64 mod_inverse(int64 a, int64 m) {
    if (m <= 1) throw std::invalid_argument("mod_inverse: modulus must exceed 1");
    int64 r0 = m, r1 = mod_floor(a, m);
    int64 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const int64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return mod_floor(s0, m);
}

}  // namespace critcyc
