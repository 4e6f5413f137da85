#pragma once

// Integer parameter layer for the two-squares construction.
//
// A splitting d = a + b (a, b >= 1) is admissible when
//
//     a - b = 1 (mod 4)   and   a b = 0 (mod 4),
//
// equivalently (the two gates below are proved equal by exhaustive test)
// a = ((d+1)/2)^2 (mod 4).  Admissibility is exactly what makes
// (lambda_0 - 1)/2 an algebraic integer for lambda_0 = sqrt(a) + i sqrt(b),
// and each admissible pair produces d-critical functions with critical value
// +-lambda_0.
//
// The relevant lattice data is all integral:
//
//     m_0 = (a - b - d^2)/4,            N_0 = ((d+1)^2 - 4a)/16,
//     N_k = d^2 k^2 + 2 m_0 k + N_0,    tau_0 = (m_0 + i sqrt(ab)/2)/d^2,
//
// with the exact identities 16 N_0 = d^2 - 2(a-b) + 1,
// d^2 N_k = (d^2 k + m_0)^2 + ab/4 (so N_k = d^2 |k + tau_0|^2 > 0) and
// 16 N_k = 1 (mod 4k - 1).  For every positive divisor p | N_k the point
// tau_{k,p} = (k + tau_0)/p is carried to d^2 tau_{k,p} by the determinant-one
// integer matrix
//
//     sigma = [ 2(a-b) - d^2(1-4k)    -4 N_k / p ]
//             [ 4p                     1 - 4k    ],
//
// and evaluating the theta-constant ratio through the half-integral-weight
// transformation law gives the critical value in closed form:
//
//     lambda = eps * (sqrt(a) + i sqrt(b)),    eps = (p | 4k - 1),
//
// a Jacobi symbol with the convention (p|n) = (p | |n|) for negative n.  The
// symbol is never 0 because gcd(N_k, 4k-1) = 1.
//
// negative_sign_exists() decides whether eps = -1 is attained by *some*
// divisor pair (k, p).  Writing the symbol out with quadratic reciprocity
// reduces the decision to finitely many fixed sign classes:
//   * a not a perfect square: some prime p | N_k moves freely and both signs
//     occur (always true);
//   * N_0 odd: p = 2 divides N_k for every odd k and (2 | 4k-1) = -1 for
//     k = 2, 3 (mod 4) picks up a minus sign;
//   * an odd prime p | a with p coprime to d: eps(p) = (-b | p), a constant;
//   * an odd prime p | d: p | N_k happens either never, for every k in one
//     class k* mod p (then the two nearest representatives of either sign
//     decide), or for all k when p | m_0 and p | N_0 (free class, both signs);
//   * otherwise every available eps equals +1.

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critcyc/exact.hpp"
#include "critcyc/intmath.hpp"

namespace critcyc {

struct CMPair {
    int64 d = 0, a = 0, b = 0;
};

namespace detail {

inline void check_modulus(int64 d) {
    if (d < 3 || d % 2 == 0) throw std::domain_error("splitting: d must be odd and >= 3");
}

inline void check_pair(int64 d, int64 a, int64 b) {
    check_modulus(d);
    if (a < 1 || b < 1 || a + b != d)
        throw std::domain_error("splitting: need a, b >= 1 with a + b = d");
    if (mod_floor(a - b, 4) != 1 || mod_floor(a * b, 4) != 0)
        throw std::domain_error("splitting: pair fails the admissibility gate");
}

}  // namespace detail

/// Gate in the single-congruence form a = ((d+1)/2)^2 (mod 4).
inline bool congruence_gate(int64 d, int64 a) {
    detail::check_modulus(d);
    if (a < 1 || a > d - 1) return false;
    const int64 h = (d + 1) / 2;
    return mod_floor(a, 4) == mod_floor(h * h, 4);
}

/// Gate in the algebraic-integrality form a-b = 1 (mod 4), ab = 0 (mod 4).
inline bool integrality_gate(int64 d, int64 a) {
    detail::check_modulus(d);
    if (a < 1 || a > d - 1) return false;
    const int64 b = d - a;
    return mod_floor(a - b, 4) == 1 && mod_floor(a * b, 4) == 0;
}

/// All admissible splittings of d, ascending in a.
inline std::vector<CMPair> enumerate_pairs(int64 d) {
    detail::check_modulus(d);
    std::vector<CMPair> out;
    for (int64 a = 1; a < d; ++a)
        if (integrality_gate(d, a)) out.push_back({d, a, d - a});
    return out;
}

inline int64 cm_m0(int64 d, int64 a, int64 b) {
    detail::check_pair(d, a, b);
    return (a - b - d * d) / 4;  // a-b = 1, d^2 = 1 (mod 4) make this exact
}

inline int64 cm_n0(int64 d, int64 a, int64 b) {
    detail::check_pair(d, a, b);
    return ((d + 1) * (d + 1) - 4 * a) / 16;  // integral by the gate
}

/// N_k = d^2 k^2 + 2 m_0 k + N_0 = d^2 |k + tau_0|^2 (always positive).
inline int64 cm_nk(int64 d, int64 a, int64 b, int64 k) {
    const int64 m0 = cm_m0(d, a, b);
    const int64 n0 = cm_n0(d, a, b);
    const int64 nk = d * d * k * k + 2 * m0 * k + n0;
    const int64 t = d * d * k + m0;
    if (d * d * nk != t * t + a * b / 4)
        throw std::logic_error("cm_nk: internal identity failed");
    return nk;
}

/// Exact point (re_num + i sqrt(inner)) / den in the upper half plane.
struct CMTau {
    int64 re_num = 0;
    int64 inner = 1;  // positive: the radicand under the imaginary part
    int64 den = 1;    // positive

    cplx value() const {
        return {static_cast<double>(re_num) / static_cast<double>(den),
                std::sqrt(static_cast<double>(inner)) / static_cast<double>(den)};
    }

    std::string str() const {
        auto [c, r] = detail::extract_square(inner);
        std::string im = detail::surd_term(c, r, true);
        return "(" + std::to_string(re_num) + " + " + im + ")/" + std::to_string(den);
    }

    bool operator==(const CMTau& o) const = default;
};

/// tau_0 = (m_0 + i sqrt(ab)/2) / d^2, in lowest structural form
/// (m_0 + i sqrt(ab/4)) / d^2; ab/4 is integral by the gate.
inline CMTau fundamental_tau(int64 d, int64 a, int64 b) {
    return {cm_m0(d, a, b), a * b / 4, d * d};
}

/// tau_{k,p} = (k + tau_0)/p = (d^2 k + m_0 + i sqrt(ab/4)) / (p d^2);
/// requires p | N_k, p >= 1.
inline CMTau associated_tau(int64 d, int64 a, int64 b, int64 k, int64 p) {
    const int64 nk = cm_nk(d, a, b, k);
    if (p < 1 || nk % p != 0)
        throw std::domain_error("associated_tau: p must be a positive divisor of N_k");
    return {d * d * k + cm_m0(d, a, b), a * b / 4, p * d * d};
}

/// eps = (p | 4k-1); never 0 because gcd(N_k, 4k-1) = 1.
inline int sign_epsilon(int64 k, int64 p) {
    if (p < 1) throw std::domain_error("sign_epsilon: p must be positive");
    return jacobi_symbol(p, 4 * k - 1);
}

/// Integer matrix carrying tau_{k,p} to d^2 tau_{k,p}.
struct SigmaMatrix {
    int64 alpha = 1, beta = 0, gamma = 0, delta = 1;

    int64 det() const { return alpha * delta - beta * gamma; }

    cplx apply(cplx tau) const {
        return (static_cast<double>(alpha) * tau + static_cast<double>(beta)) /
               (static_cast<double>(gamma) * tau + static_cast<double>(delta));
    }
};

inline SigmaMatrix sigma_matrix(int64 d, int64 a, int64 b, int64 k, int64 p) {
    const int64 nk = cm_nk(d, a, b, k);
    if (p < 1 || nk % p != 0)
        throw std::domain_error("sigma_matrix: p must be a positive divisor of N_k");
    SigmaMatrix s;
    s.delta = 1 - 4 * k;
    s.gamma = 4 * p;
    s.beta = -4 * (nk / p);
    s.alpha = 2 * (a - b) - d * d * s.delta;
    if (s.det() != 1) throw std::logic_error("sigma_matrix: determinant is not 1");
    if (s.alpha * s.delta != 1 - 16 * nk)
        throw std::logic_error("sigma_matrix: diagonal identity failed");
    return s;
}

/// lambda_0 = sqrt(a) + i sqrt(b).
inline SurdValue lambda_zero(int64 a, int64 b) {
    if (a < 1 || b < 1) throw std::domain_error("lambda_zero: need a, b >= 1");
    return SurdValue(a, b);
}

/// mu = (sqrt(a) - i sqrt(b))^2 = a - b - 2 i sqrt(ab); satisfies
/// mu * conj(mu) = d^2 and mu^2 - 2(a-b) mu + d^2 = 0.
inline SurdValue mu_from_pair(int64 a, int64 b) {
    if (a < 1 || b < 1) throw std::domain_error("mu_from_pair: need a, b >= 1");
    const int64 t = a - b;
    return SurdValue(t * t, 4 * a * b, t < 0 ? -1 : 1, -1);
}

/// Exact critical value eps * lambda_0 for the divisor pair (k, p).
inline SurdValue critical_value_exact(int64 d, int64 a, int64 b, int64 k, int64 p) {
    const int64 nk = cm_nk(d, a, b, k);
    if (p < 1 || nk % p != 0)
        throw std::domain_error("critical_value_exact: p must be a positive divisor of N_k");
    const int eps = sign_epsilon(k, p);
    SurdValue l0 = lambda_zero(a, b);
    return eps == 1 ? l0 : l0.negated();
}

/// Numeric transformation-law evaluation at a fixed point of sigma.  The
/// criterion ratio is a quotient of even theta constants, and theta_even(0,x)
/// = theta(0,2x), so the relevant modular action on the doubled variable 2 tau
/// is by the conjugate diag(2,1) sigma diag(2,1)^{-1} = [[alpha, 2 beta],
/// [gamma/2, delta]].  Its lower row gives the multiplier i^{(delta-1)/2}
/// (gamma/2 | delta) and the same automorphy factor gamma tau + delta.
/// Normalizing by |gamma tau + delta|: at tau = tau_{k,p} (where sigma tau =
/// d^2 tau and |gamma tau + delta| = 1/d) this equals the critical value
/// eps * lambda_0.  The conjugate must itself be trivial mod 2, so gamma has
/// to be divisible by 4 (gamma = 4p always is).
inline cplx critical_value_from_sigma(const SigmaMatrix& s, cplx tau) {
    if (s.det() != 1) throw std::domain_error("critical_value_from_sigma: determinant must be 1");
    if (mod_floor(s.alpha, 2) != 1 || mod_floor(s.delta, 2) != 1 || mod_floor(s.beta, 2) != 0 ||
        mod_floor(s.gamma, 4) != 0)
        throw std::domain_error("critical_value_from_sigma: matrix must be trivial mod 2 with gamma divisible by 4");
    if (s.gamma <= 0) throw std::domain_error("critical_value_from_sigma: gamma must be positive");
    if (tau.imag() <= 0.0) throw std::domain_error("critical_value_from_sigma: Im tau must be positive");
    static const cplx unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx root = unit[mod_floor((s.delta - 1) / 2, 4)] *
                      static_cast<double>(jacobi_symbol(s.gamma / 2, s.delta));
    const cplx w = static_cast<double>(s.gamma) * tau + static_cast<double>(s.delta);
    return root * std::sqrt(w) / std::abs(w);
}

/// Decides whether some divisor pair (k, p) of the splitting attains
/// eps = -1.  See the header comment for the case analysis.
inline bool negative_sign_exists(int64 a, int64 b) {
    const int64 d = a + b;
    detail::check_pair(d, a, b);
    if (!is_perfect_square(a)) return true;
    const int64 m0 = cm_m0(d, a, b);
    const int64 n0 = cm_n0(d, a, b);
    if (mod_floor(n0, 2) == 1) return true;  // p = 2 at odd k
    for (int64 p : prime_divisors(a)) {
        if (p == 2 || d % p == 0) continue;
        if (jacobi_symbol(-b, p) == -1) return true;
    }
    for (int64 p : prime_divisors(d)) {
        if (p == 2) continue;
        if (mod_floor(m0, p) == 0) {
            if (mod_floor(n0, p) == 0) return true;  // p | N_k for every k
            continue;                                // p never divides N_k
        }
        const int64 ks = mod_floor(-n0 * mod_inverse(2 * m0, p), p);
        const int64 kpos = ks > 0 ? ks : ks + p;
        const int64 kneg = ks > 0 ? ks - p : ks;
        if (jacobi_symbol(p, 4 * kpos - 1) == -1 || jacobi_symbol(p, 4 * kneg - 1) == -1)
            return true;
    }
    return false;
}

/// Bounded search for a witness (k, p) with eps = -1, scanning |k| <= k_max
/// (0, 1, -1, 2, -2, ...) and divisors p | N_k with p <= p_max.
inline std::optional<std::pair<int64, int64>> search_negative_sign(int64 d, int64 a, int64 b,
                                                                   int64 k_max = 10,
                                                                   int64 p_max = 100) {
    detail::check_pair(d, a, b);
    if (k_max < 0 || p_max < 1)
        throw std::invalid_argument("search_negative_sign: bad search bounds");
    for (int64 j = 0; j <= 2 * k_max; ++j) {
        const int64 k = (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);  // 0, 1, -1, 2, -2, ...
        const int64 nk = cm_nk(d, a, b, k);
        for (int64 p : divisors(nk)) {
            if (p > p_max) break;
            if (sign_epsilon(k, p) == -1) return std::make_pair(k, p);
        }
    }
    return std::nullopt;
}

/// The two-squares special case: for d = p^2 + q^2 with p odd and q even,
/// the splitting (p^2, q^2) is admissible and realizes lambda = p + qi.
struct GaussianValue {
    int64 d = 0;
    CMPair pair{};
    SurdValue lambda;
};

inline GaussianValue gaussian_integer_value(int64 p, int64 q) {
    if (mod_floor(p, 2) != 1 || mod_floor(q, 2) != 0)
        throw std::domain_error("gaussian_integer_value: need p odd and q even");
    if (p == 0 || q == 0) throw std::domain_error("gaussian_integer_value: need p, q != 0");
    const int64 d = p * p + q * q;
    detail::check_pair(d, p * p, q * q);
    return {d, {d, p * p, q * q}, SurdValue::gaussian(p, q)};
}

}  // namespace critcyc
