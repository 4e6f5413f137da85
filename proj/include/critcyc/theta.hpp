#pragma once

// Jacobi theta series and the theta-constant machinery for building critical
// families on Z/dZ.
//
//     theta(z, tau) = sum_{m in Z} exp(i pi tau m^2 + 2 pi i m z),  Im tau > 0.
//
// Parity pieces carry the weight exp(i pi (tau/2) m^2), so that
// theta(z, tau/2) = theta_even(z, tau) + theta_odd(z, tau):
//
//     theta_even(z, tau) = sum over even m  (equals theta(2z, 2tau)),
//     theta_odd(z, tau)  = sum over odd m.
//
// Both are computed as direct parity sub-sums rather than via differences of
// full sums; theta_odd decays like exp(-pi Im tau / 8) for tall tau and a
// subtractive formula would lose exactly that many digits.
//
// Half-characteristics, a, b in {0, 1}:
//
//     theta_half(a,b; z, tau) = sum_m exp(i pi tau (m + a/2)^2
//                                         + 2 pi i (m + a/2)(z + b/2)).
//
// Truncation.  |exp(i pi tau m^2 + 2 pi i m z)| = exp(-pi y m^2 - 2 pi m Im z)
// with y = Im tau, so with mu = |Im z| / y every term at |m| >= M is bounded
// by exp(-pi y m (m - 2 mu)), and for M >= 2 mu + t, m(m - 2mu) >= (m - 2mu)^2
// for m >= M.  Comparing the two discarded tails with a Gaussian integral:
//
//     sum_{|m| >= M} |term| <= 2 sum_{s >= t} exp(-pi y s^2)
//                           <= 2 exp(-pi y t^2) (1 + 1/(2 pi y t)).
//
// series_radius() picks t so this bound is <= tail_bound (closed-form start,
// then grow until the verified bound holds), so the absolute truncation error
// of any reported sum is <= tail_bound, and recomputing with twice as many
// terms can move a value by at most 2 * tail_bound.  Terms are accumulated in
// the symmetric order m = 0, -1, +1, -2, +2, ... so that enlarging M only
// appends terms.  No lower cutoff is imposed on Im tau; the cost guard is
// max_terms (the bound above gives M ~ sqrt(ln(1/tail_bound) / (pi y)) +
// 2 |Im z| / y terms).
//
// Quasi-periodicity.  theta(z + n tau, tau) = exp(-i pi tau n^2 - 2 pi i n z)
// * theta(z, tau).  theta() uses this with n = round(Im z / y) to reduce the
// summation point into |Im z'| <= y/2 before summing, multiplying the
// prefactor back afterwards; the prefactor grows like exp(pi (Im z)^2 / y)
// and may legitimately overflow to inf for extreme arguments.
// critical_family() builds the whole family f(l) = theta(z + l/d, tau) from
// one reduction and *drops* the common prefactor, keeping only the unimodular
// per-entry phase exp(-2 pi i n l / d); a global scale affects neither
// criticality nor the critical value, and this keeps the family finite (and
// its entries O(1)) at any admissible parameter.
//
// The input domain is |Im z| <= z_im_cap and Im tau > 0; violations throw
// std::domain_error, and a truncation radius beyond max_terms throws
// std::length_error.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "critcyc/cm.hpp"
#include "critcyc/cyclic.hpp"

namespace critcyc {

struct ThetaConfig {
    double tail_bound = 1e-14;    // absolute truncation error per evaluation
    std::size_t max_terms = 1000000;  // refuse series longer than this
    double z_im_cap = 1.0;        // admissible |Im z|
};

namespace detail {

enum class Parity { all, even, odd };

inline void check_domain(cplx z, cplx tau, const ThetaConfig& cfg) {
    if (!(tau.imag() > 0.0))
        throw std::domain_error("theta: Im tau must be positive");
    if (!(std::abs(z.imag()) <= cfg.z_im_cap))
        throw std::domain_error("theta: |Im z| exceeds the configured cap");
}

/// Smallest tail radius t with 2 exp(-pi y t^2)(1 + 1/(2 pi y t)) <= bound.
inline double tail_radius(double y, double bound) {
    const double L = std::log(16.0 / bound);
    double t = std::sqrt(std::max(L, 1.0) / (std::numbers::pi * y));
    auto tail = [y](double s) {
        const double q = std::numbers::pi * y * s;
        return 2.0 * std::exp(-q * s) * (1.0 + 1.0 / (2.0 * q));
    };
    while (tail(t) > bound) t *= 1.125;
    return t;
}

/// Truncation index for sum_m exp(i pi T m^2 + 2 pi i m Z).
inline int64 series_radius(double im_Z, double im_T, const ThetaConfig& cfg) {
    const double mu = std::abs(im_Z) / im_T;
    const double t = tail_radius(im_T, cfg.tail_bound);
    const double M = 2.0 * mu + t + 1.0;
    if (2.0 * M + 1.0 > static_cast<double>(cfg.max_terms))
        throw std::length_error("theta: truncation needs more than max_terms terms");
    return static_cast<int64>(std::ceil(M));
}

/// One series term exp(i pi (T u^2 + 2 u W)).  The oscillatory phase
/// Re(T) u^2 + 2 Re(W) u is reduced mod 2 with exact products (fma residues),
/// because the plain complex exponential loses ulp(Re(T) u^2) ~ 1e-16 |x| u^2
/// radians of phase, which is visible once u reaches a few hundred (small
/// Im T forces exactly such truncation radii).  u^2 must be exactly
/// representable: true for integers and half-integers with |u| <= 2^24.
inline cplx series_term(cplx T, cplx W, double u) {
    const double u2 = u * u;
    const double mag = -std::numbers::pi * (T.imag() * u2 + 2.0 * u * W.imag());
    const double p1 = T.real() * u2;
    const double e1 = std::fma(T.real(), u2, -p1);
    const double w2 = 2.0 * W.real();
    const double p2 = w2 * u;
    const double e2 = std::fma(w2, u, -p2);
    const double r = std::fmod(p1, 2.0) + std::fmod(p2, 2.0) + (e1 + e2);
    return std::polar(std::exp(mag), std::numbers::pi * r);
}

/// Direct sum over m = 0, -1, +1, -2, +2, ..., |m| <= M, restricted to the
/// given parity class.  No reduction, no domain checks.
inline cplx series(cplx Z, cplx T, Parity par, int64 M) {
    auto term = [&](int64 m) { return series_term(T, Z, static_cast<double>(m)); };
    cplx s = (par == Parity::odd) ? cplx{0.0, 0.0} : term(0);
    for (int64 m = 1; m <= M; ++m) {
        if (par == Parity::even && (m % 2) != 0) continue;
        if (par == Parity::odd && (m % 2) == 0) continue;
        s += term(-m);
        s += term(m);
    }
    return s;
}

inline cplx series_auto(cplx Z, cplx T, Parity par, const ThetaConfig& cfg) {
    return series(Z, T, par, series_radius(Z.imag(), T.imag(), cfg));
}

}  // namespace detail

/// Truncation index theta() would use at (z, tau); inspection hook.
inline int64 theta_terms(cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    detail::check_domain(z, tau, cfg);
    return detail::series_radius(z.imag(), tau.imag(), cfg);
}

/// Raw truncated series sum_{|m| <= M} exp(i pi tau m^2 + 2 pi i m z) with an
/// explicit truncation index and optional parity restriction (parity sums use
/// the weight exp(i pi (tau/2) m^2)).  For soundness experiments; theta() and
/// friends pick M from the configured tail bound.
inline cplx theta_raw(cplx z, cplx tau, int64 M) {
    if (!(tau.imag() > 0.0)) throw std::domain_error("theta_raw: Im tau must be positive");
    return detail::series(z, tau, detail::Parity::all, M);
}

/// theta(z, tau) with quasi-period reduction of Im z (see header comment).
inline cplx theta(cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    detail::check_domain(z, tau, cfg);
    const double y = tau.imag();
    const int64 n = std::llround(z.imag() / y);
    if (n == 0) return detail::series_auto(z, tau, detail::Parity::all, cfg);
    const double nd = static_cast<double>(n);
    const cplx zr = z - nd * tau;
    const cplx prefactor = detail::series_term(-tau, -zr, nd);
    return prefactor * detail::series_auto(zr, tau, detail::Parity::all, cfg);
}

/// Even-parity piece: sum over even m of exp(i pi (tau/2) m^2 + 2 pi i m z).
inline cplx theta_even(cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    detail::check_domain(z, tau, cfg);
    return detail::series_auto(z, tau / 2.0, detail::Parity::even, cfg);
}

/// Odd-parity piece: sum over odd m of exp(i pi (tau/2) m^2 + 2 pi i m z).
inline cplx theta_odd(cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    detail::check_domain(z, tau, cfg);
    return detail::series_auto(z, tau / 2.0, detail::Parity::odd, cfg);
}

/// Half-characteristic theta, a, b in {0, 1}.
inline cplx theta_half(int a, int b, cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1))
        throw std::invalid_argument("theta_half: characteristics must be 0 or 1");
    detail::check_domain(z, tau, cfg);
    const int64 M = detail::series_radius(z.imag(), tau.imag(), cfg) + 1;
    const double ah = a / 2.0, bh = b / 2.0;
    cplx s = 0.0;
    for (int64 j = 0; j <= 2 * M; ++j) {
        const int64 m = (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);  // 0, 1, -1, 2, -2, ...
        const double md = static_cast<double>(m) + ah;
        s += detail::series_term(tau, z + bh, md);
    }
    return s;
}

/// phi(tau) = theta_odd(0, tau) / theta_even(0, tau); theta constants do not
/// vanish on the upper half plane, so this is always defined.
inline cplx phi(cplx tau, const ThetaConfig& cfg = {}) {
    return theta_odd(0.0, tau, cfg) / theta_even(0.0, tau, cfg);
}

/// psi(tau) = [1 + phi^2, 1 - phi^2, 2 phi]: a point on the conic
/// x0^2 = x1^2 + x2^2, proportional to the squared theta constants
/// [theta_half(0,0)^2, theta_half(0,1)^2, theta_half(1,0)^2] at z = 0.
inline std::array<cplx, 3> psi(cplx tau, const ThetaConfig& cfg = {}) {
    const cplx p = phi(tau, cfg);
    return {1.0 + p * p, 1.0 - p * p, 2.0 * p};
}

/// Two-variable addition identity:
/// theta(z+w) theta(z-w) = theta_even(z) theta_even(w) + theta_odd(z) theta_odd(w).
struct AdditionCheck {
    cplx lhs, rhs;
    double abs_err;
};

inline AdditionCheck check_addition(cplx z, cplx w, cplx tau, const ThetaConfig& cfg = {}) {
    const cplx lhs = theta(z + w, tau, cfg) * theta(z - w, tau, cfg);
    const cplx rhs = theta_even(z, tau, cfg) * theta_even(w, tau, cfg) +
                     theta_odd(z, tau, cfg) * theta_odd(w, tau, cfg);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

/// Averaging identity over d-division points, both parities:
/// sum_{l mod d} theta_par(l/d, tau) = d * theta_par(0, d^2 tau).
struct IsogenyCheck {
    cplx sum_even, scaled_even, sum_odd, scaled_odd;
    double max_abs_err;
};

inline IsogenyCheck check_isogeny(int64 d, cplx tau, const ThetaConfig& cfg = {}) {
    if (d < 1 || d % 2 == 0) throw std::domain_error("check_isogeny: d must be odd and positive");
    IsogenyCheck c{0.0, 0.0, 0.0, 0.0, 0.0};
    for (int64 l = 0; l < d; ++l) {
        const cplx zl = static_cast<double>(l) / static_cast<double>(d);
        c.sum_even += theta_even(zl, tau, cfg);
        c.sum_odd += theta_odd(zl, tau, cfg);
    }
    const double dd = static_cast<double>(d);
    c.scaled_even = dd * theta_even(0.0, dd * dd * tau, cfg);
    c.scaled_odd = dd * theta_odd(0.0, dd * dd * tau, cfg);
    c.max_abs_err = std::max(std::abs(c.sum_even - c.scaled_even),
                             std::abs(c.sum_odd - c.scaled_odd));
    return c;
}

/// Half-integral-weight transformation law for the theta constant: for an
/// integer matrix sigma = [[alpha, beta], [gamma, delta]], det 1, trivial
/// mod 2, gamma > 0,
///
///     theta(0, sigma tau) = i^{(delta-1)/2} (gamma|delta)
///                           * sqrt(gamma tau + delta) * theta(0, tau),
///
/// with the Jacobi-symbol convention (gamma|delta) = (gamma | |delta|) for
/// negative delta, the power of i taken mod 4, and the principal square root
/// (non-negative real part).
struct TransformCheck {
    cplx actual;         // theta(0, sigma tau)
    cplx predicted;      // multiplier * theta(0, tau)
    cplx multiplier;     // root_of_unity * sqrt(gamma tau + delta)
    cplx root_of_unity;  // i^{(delta-1)/2} (gamma|delta), one of {1, i, -1, -i}
    double rel_err;      // |actual - predicted| / max(1, |actual|)
};

inline TransformCheck transform_theta_constant(const SigmaMatrix& s, cplx tau,
                                               const ThetaConfig& cfg = {}) {
    if (s.det() != 1) throw std::domain_error("transform_theta_constant: determinant must be 1");
    if (mod_floor(s.alpha, 2) != 1 || mod_floor(s.delta, 2) != 1 ||
        mod_floor(s.beta, 2) != 0 || mod_floor(s.gamma, 2) != 0)
        throw std::domain_error("transform_theta_constant: matrix must be trivial mod 2");
    if (s.gamma <= 0) throw std::domain_error("transform_theta_constant: gamma must be positive");
    if (!(tau.imag() > 0.0)) throw std::domain_error("transform_theta_constant: Im tau must be positive");
    static const cplx unit[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    TransformCheck c;
    c.root_of_unity = unit[mod_floor((s.delta - 1) / 2, 4)] *
                      static_cast<double>(jacobi_symbol(s.gamma, s.delta));
    const cplx w = static_cast<double>(s.gamma) * tau + static_cast<double>(s.delta);
    c.multiplier = c.root_of_unity * std::sqrt(w);
    c.actual = theta(0.0, s.apply(tau), cfg);
    c.predicted = c.multiplier * theta(0.0, tau, cfg);
    c.rel_err = std::abs(c.actual - c.predicted) / std::max(1.0, std::abs(c.actual));
    return c;
}

/// The theta family f(l) = theta(z + l/d, tau), l = 0..d-1, returned up to
/// one global non-zero factor (the common quasi-period prefactor is dropped;
/// the per-entry unimodular phase is kept).  Criticality and the critical
/// value are invariant under global scaling.
inline CyclicFunction critical_family(int64 d, cplx z, cplx tau, const ThetaConfig& cfg = {}) {
    if (d < 1 || d % 2 == 0)
        throw std::domain_error("critical_family: d must be odd and positive");
    detail::check_domain(z, tau, cfg);
    const double y = tau.imag();
    const int64 n = std::llround(z.imag() / y);
    const cplx zr = z - static_cast<double>(n) * tau;
    CyclicFunction f(d);
    const double phase_step = -2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(d);
    for (int64 l = 0; l < d; ++l) {
        const cplx zl = zr + static_cast<double>(l) / static_cast<double>(d);
        const cplx phase = cplx{std::cos(phase_step * static_cast<double>(l)),
                                std::sin(phase_step * static_cast<double>(l))};
        f[l] = phase * detail::series_auto(zl, tau, detail::Parity::all, cfg);
    }
    return f;
}

/// Theta-constant criterion: the family at tau is critical iff the two
/// parity ratios agree, in which case their common value is the critical
/// value:
///
///     lambda = d * theta_even(0, d^2 tau) / theta_even(0, tau)
///            = d * theta_odd(0, d^2 tau) / theta_odd(0, tau).
///
/// Returns the averaged ratio when the two sides agree to the given relative
/// tolerance, std::nullopt otherwise.
inline std::optional<cplx> theta_constant_criterion(int64 d, cplx tau, double tol = 1e-9,
                                                    const ThetaConfig& cfg = {}) {
    if (d < 1 || d % 2 == 0)
        throw std::domain_error("theta_constant_criterion: d must be odd and positive");
    if (!(tau.imag() > 0.0))
        throw std::domain_error("theta_constant_criterion: Im tau must be positive");
    const double dd = static_cast<double>(d);
    const cplx big = dd * dd * tau;
    const cplx r_even = dd * theta_even(0.0, big, cfg) / theta_even(0.0, tau, cfg);
    const cplx r_odd = dd * theta_odd(0.0, big, cfg) / theta_odd(0.0, tau, cfg);
    const double scale = std::max({1.0, std::abs(r_even), std::abs(r_odd)});
    if (std::abs(r_even - r_odd) > tol * scale) return std::nullopt;
    return (r_even + r_odd) / 2.0;
}

}  // namespace critcyc
