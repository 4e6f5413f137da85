#pragma once

// Closed-form critical pairs and the induction maps between cyclic groups.
//
// Constant-tail family.  For odd d >= 3 put f(0) = 1 and f(k) = alpha for all
// k != 0.  The criticality equation collapses to
//
//     (d-1) alpha^2 + (d-1) alpha + 2 = 0        (tail roots), or
//     alpha in {0, 1}                            (delta and constant cases),
//
// with critical value lambda = 1 (alpha = 0, the delta function at 0),
// lambda = d (alpha = 1, the constant function), and for the tail roots
// lambda_eps = (d - 3 + eps*sqrt((d-1)(d-9)))/2.  The two tail values are an
// exact norm pair: lambda_+ * lambda_- = d.
//
// Gauss parabola.  f(k) = (-1)^k e^{i pi k^2 / d} is well defined mod d (for
// odd d) and critical with lambda the quadratic Gauss sum: sqrt(d) when d = 1
// mod 4 and i*sqrt(d) when d = 3 mod 4.  The twisted version f(k) =
// e^{2 pi i c k^2 / d}, gcd(c, d) = 1, has lambda = (2c|d) * eps_d * sqrt(d)
// (Jacobi symbol, eps_d = 1 or i per d mod 4), which reaches the opposite
// sign of sqrt(d) whenever (2c|d) = -1.
//
// Induction maps.  Criticality propagates along the obvious group maps:
//   * subgroup: extend f on Z/d by zero to Z/(m d) (supported on multiples of
//     m); lambda is unchanged.
//   * quotient: pull f back along the reduction Z/(m d) -> Z/d; lambda
//     multiplies by m.
//   * product: for coprime moduli, f(k) = f1(k) f2(k) on Z/(d1 d2); lambda
//     multiplies.
//   * conjugation realizes the conjugate value, dilation by a unit and global
//     scaling change nothing.

#include <complex>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "critcyc/cyclic.hpp"
#include "critcyc/exact.hpp"

namespace critcyc {

/// A function together with the critical value it was built for.  The exact
/// forms are carried along when the construction knows them.
struct CriticalPair {
    CyclicFunction f;
    cplx lambda;
    std::string provenance;
    std::optional<SurdValue> lambda_surd{};
    std::optional<TailValue> lambda_tail{};

    int64 modulus() const { return f.modulus(); }
};

enum class TailVariant { zero, one, plus, minus };

inline const char* tail_variant_name(TailVariant v) {
    switch (v) {
        case TailVariant::zero: return "zero";
        case TailVariant::one: return "one";
        case TailVariant::plus: return "plus";
        case TailVariant::minus: return "minus";
    }
    return "?";
}

/// The four members of the constant-tail family on Z/dZ.
inline CriticalPair constant_tail(int64 d, TailVariant v) {
    if (d < 3 || d % 2 == 0)
        throw std::domain_error("constant_tail: d must be odd and >= 3");
    cplx alpha, lambda;
    std::optional<SurdValue> surd;
    std::optional<TailValue> tail;
    switch (v) {
        case TailVariant::zero:
            alpha = 0.0;
            lambda = 1.0;
            surd = SurdValue(1, 0);
            break;
        case TailVariant::one:
            alpha = 1.0;
            lambda = static_cast<double>(d);
            surd = SurdValue(d * d, 0);
            break;
        case TailVariant::plus:
        case TailVariant::minus: {
            TailValue t(d, v == TailVariant::plus ? 1 : -1);
            alpha = t.alpha();
            lambda = t.value();
            tail = t;
            break;
        }
    }
    CyclicFunction f(d);
    f[0] = 1.0;
    for (int64 k = 1; k < d; ++k) f[k] = alpha;
    return {std::move(f), lambda,
            "constant_tail(d=" + std::to_string(d) + ",variant=" + tail_variant_name(v) + ")",
            surd, tail};
}

/// f(k) = (-1)^k e^{i pi k^2 / d}; lambda is the quadratic Gauss sum of d.
inline CriticalPair gauss_parabola(int64 d) {
    if (d < 3 || d % 2 == 0)
        throw std::domain_error("gauss_parabola: d must be odd and >= 3");
    auto f = CyclicFunction::from_generator(d, [d](int64 k) {
        const double ang = std::numbers::pi * static_cast<double>(k * k) / static_cast<double>(d);
        const double s = (k % 2 == 0) ? 1.0 : -1.0;
        return cplx{s * std::cos(ang), s * std::sin(ang)};
    });
    SurdValue surd = (d % 4 == 1) ? SurdValue(d, 0) : SurdValue(0, d);
    return {std::move(f), surd.value(), "gauss_parabola(d=" + std::to_string(d) + ")", surd, {}};
}

/// f(k) = e^{2 pi i c k^2 / d}, gcd(c, d) = 1; lambda = (2c|d) eps_d sqrt(d).
inline CriticalPair gauss_parabola_twisted(int64 d, int64 c) {
    if (d < 3 || d % 2 == 0)
        throw std::domain_error("gauss_parabola_twisted: d must be odd and >= 3");
    if (std::gcd(mod_floor(c, d), d) != 1)
        throw std::domain_error("gauss_parabola_twisted: twist must be a unit mod d");
    auto f = CyclicFunction::from_generator(d, [d, c](int64 k) {
        const int64 e = mod_floor(c * k * k, d);
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
        return cplx{std::cos(ang), std::sin(ang)};
    });
    const int s = jacobi_symbol(2 * c, d);
    SurdValue surd = (d % 4 == 1) ? SurdValue(d, 0, s) : SurdValue(0, d, 1, s);
    return {std::move(f), surd.value(),
            "gauss_parabola_twisted(d=" + std::to_string(d) + ",c=" + std::to_string(c) + ")",
            surd, {}};
}

/// Conjugate pair: (conj f, conj lambda).
inline CriticalPair conjugate_pair(const CriticalPair& p) {
    auto f = CyclicFunction::from_generator(p.f.modulus(), [&p](int64 k) { return std::conj(p.f[k]); });
    std::optional<SurdValue> surd;
    if (p.lambda_surd) surd = p.lambda_surd->conjugated();
    std::optional<TailValue> tail;
    if (p.lambda_tail) tail = p.lambda_tail->conjugated_if_complex();
    return {std::move(f), std::conj(p.lambda), "conjugate(" + p.provenance + ")", surd, tail};
}

/// Dilation f(k) -> f(u k) for a unit u mod d; lambda is unchanged.
inline CriticalPair dilate(const CriticalPair& p, int64 u) {
    const int64 d = p.f.modulus();
    if (std::gcd(mod_floor(u, d), d) != 1)
        throw std::domain_error("dilate: factor must be a unit mod d");
    auto f = CyclicFunction::from_generator(d, [&p, u](int64 k) { return p.f[u * k]; });
    return {std::move(f), p.lambda, "dilate(" + p.provenance + ",u=" + std::to_string(u) + ")",
            p.lambda_surd, p.lambda_tail};
}

/// Extends f by zero onto the index-m subgroup of Z/(m d); lambda unchanged.
inline CriticalPair induce_subgroup(const CriticalPair& p, int64 d_new) {
    const int64 d = p.f.modulus();
    if (d_new % d != 0 || d_new % 2 == 0 || d_new < d)
        throw std::domain_error("induce_subgroup: target modulus must be an odd multiple of the source");
    const int64 m = d_new / d;
    CyclicFunction f(d_new);
    for (int64 t = 0; t < d; ++t) f[m * t] = p.f[t];
    return {std::move(f), p.lambda,
            "subgroup(d=" + std::to_string(d_new) + ",from=" + p.provenance + ")",
            p.lambda_surd, p.lambda_tail};
}

/// Pulls f back along the reduction Z/d_new -> Z/d; lambda multiplies by m.
inline CriticalPair induce_quotient(const CriticalPair& p, int64 d_new) {
    const int64 d = p.f.modulus();
    if (d_new % d != 0 || d_new % 2 == 0 || d_new < d)
        throw std::domain_error("induce_quotient: target modulus must be an odd multiple of the source");
    const int64 m = d_new / d;
    auto f = CyclicFunction::from_generator(d_new, [&p](int64 k) { return p.f[k]; });
    std::optional<SurdValue> surd;
    if (p.lambda_surd) surd = p.lambda_surd->scaled(m);
    return {std::move(f), static_cast<double>(m) * p.lambda,
            "quotient(d=" + std::to_string(d_new) + ",from=" + p.provenance + ")", surd, {}};
}

/// Pointwise product on Z/(d1 d2) for coprime d1, d2; lambda multiplies.
inline CriticalPair induce_product(const CriticalPair& p1, const CriticalPair& p2) {
    const int64 d1 = p1.f.modulus(), d2 = p2.f.modulus();
    if (std::gcd(d1, d2) != 1)
        throw std::domain_error("induce_product: moduli must be coprime");
    const int64 d = d1 * d2;
    auto f = CyclicFunction::from_generator(d, [&](int64 k) { return p1.f[k] * p2.f[k]; });
    // Exact form survives when one factor's value is a plain integer.
    std::optional<SurdValue> surd;
    auto integral = [](const std::optional<SurdValue>& s) -> std::optional<int64> {
        if (!s || s->b != 0) return std::nullopt;
        int64 r = 0;
        if (!is_perfect_square(s->a, &r)) return std::nullopt;
        return s->sign_a * r;
    };
    if (p1.lambda_surd && p2.lambda_surd) {
        if (auto n = integral(p1.lambda_surd); n && *n != 0)
            surd = p2.lambda_surd->scaled(*n);
        else if (auto m = integral(p2.lambda_surd); m && *m != 0)
            surd = p1.lambda_surd->scaled(*m);
    }
    return {std::move(f), p1.lambda * p2.lambda,
            "product(" + p1.provenance + "," + p2.provenance + ")", surd, {}};
}

}  // namespace critcyc
