#pragma once

// Exact forms for the algebraic numbers that occur as critical values.
//
// SurdValue represents s_a*sqrt(a) + s_b*i*sqrt(b) with integer radicands
// a, b >= 0 and signs s_a, s_b in {+1, -1}.  This covers every value produced
// by the two-squares construction (sqrt(a) + i sqrt(b) up to sign), every
// Gaussian integer p + qi (radicands p^2, q^2), and the quadratic Gauss sums.
// Values compare exactly: two SurdValues are equal iff their normalized
// components match, no floating point involved.
//
// TailValue represents the pair of critical values attached to the one-
// parameter deformation of the constant function,
//
//     lambda_eps = (d - 3 + eps*sqrt(D)) / 2,   D = (d-1)(d-9),  eps = +-1,
//
// together with the deformation parameter alpha_eps = (1-d-eps*sqrt(D)) /
// (2(d-1)).  For d < 9 the discriminant is negative and sqrt(D) means
// i*sqrt(|D|), which makes the two values a conjugate pair.  Note D is always
// divisible by 4 (both factors are even), so the printable normal form is
// (d-3)/2 + eps*c*sqrt(r) with D/4 = c^2 r.

#include <cmath>
#include <complex>
#include <string>

#include "critcyc/intmath.hpp"

namespace critcyc {

using cplx = std::complex<double>;

namespace detail {

/// Splits n >= 0 as c^2 * r with r squarefree; returns {c, r}.
inline std::pair<int64, int64> extract_square(int64 n) {
    int64 c = 1, r = n;
    for (int64 p = 2; p * p <= r; ++p) {
        while (r % (p * p) == 0) {
            r /= p * p;
            c *= p;
        }
    }
    return {c, r};
}

/// Renders c*sqrt(r) (already square-extracted) without a leading sign.
inline std::string surd_term(int64 c, int64 r, bool imaginary) {
    std::string s;
    if (r == 1) {
        if (!imaginary) return std::to_string(c);
        return c == 1 ? "i" : std::to_string(c) + "i";
    }
    if (c != 1) s += std::to_string(c) + "*";
    if (imaginary) s += "i*";
    s += "sqrt(" + std::to_string(r) + ")";
    return s;
}

}  // namespace detail

/// Exact value s_a*sqrt(a) + s_b*i*sqrt(b), radicands >= 0.
struct SurdValue {
    int64 a = 0;
    int64 b = 0;
    int sign_a = 1;
    int sign_b = 1;

    SurdValue() = default;
    SurdValue(int64 ra, int64 rb, int sa = 1, int sb = 1) : a(ra), b(rb), sign_a(sa), sign_b(sb) {
        if (a < 0 || b < 0) throw std::invalid_argument("SurdValue: negative radicand");
        if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
            throw std::invalid_argument("SurdValue: signs must be +-1");
        if (a == 0) sign_a = 1;
        if (b == 0) sign_b = 1;
    }

    /// The Gaussian integer p + qi.
    static SurdValue gaussian(int64 p, int64 q) {
        return SurdValue(p * p, q * q, p < 0 ? -1 : 1, q < 0 ? -1 : 1);
    }

    cplx value() const {
        return {sign_a * std::sqrt(static_cast<double>(a)), sign_b * std::sqrt(static_cast<double>(b))};
    }

    SurdValue conjugated() const { return SurdValue(a, b, sign_a, -sign_b); }
    SurdValue negated() const { return SurdValue(a, b, -sign_a, -sign_b); }

    /// Multiplication by a non-zero integer m (radicands scale by m^2).
    SurdValue scaled(int64 m) const {
        if (m == 0) throw std::invalid_argument("SurdValue::scaled: zero factor");
        const int s = m < 0 ? -1 : 1;
        return SurdValue(a * m * m, b * m * m, s * sign_a, s * sign_b);
    }

    bool operator==(const SurdValue& o) const {
        return a == o.a && b == o.b && sign_a == o.sign_a && sign_b == o.sign_b;
    }

    /// "2*sqrt(2) - i*sqrt(3)" style rendering with square parts extracted.
    std::string str() const {
        if (a == 0 && b == 0) return "0";
        std::string s;
        if (a != 0) {
            auto [c, r] = detail::extract_square(a);
            if (sign_a < 0) s += "-";
            s += detail::surd_term(c, r, false);
        }
        if (b != 0) {
            auto [c, r] = detail::extract_square(b);
            if (!s.empty())
                s += sign_b < 0 ? " - " : " + ";
            else if (sign_b < 0)
                s += "-";
            s += detail::surd_term(c, r, true);
        }
        return s;
    }
};

/// Exact tail value lambda_eps = (d-3+eps*sqrt((d-1)(d-9)))/2 for odd d >= 3.
struct TailValue {
    int64 d = 3;
    int eps = 1;

    TailValue() = default;
    TailValue(int64 dd, int e) : d(dd), eps(e) {
        if (d < 3 || d % 2 == 0) throw std::invalid_argument("TailValue: d must be odd and >= 3");
        if (eps != 1 && eps != -1) throw std::invalid_argument("TailValue: eps must be +-1");
    }

    int64 discriminant() const { return (d - 1) * (d - 9); }

    /// sqrt(D) with the convention sqrt(D) = i*sqrt(|D|) for D < 0.
    cplx sqrt_discriminant() const {
        const int64 D = discriminant();
        if (D >= 0) return {std::sqrt(static_cast<double>(D)), 0.0};
        return {0.0, std::sqrt(static_cast<double>(-D))};
    }

    cplx value() const {
        return (static_cast<double>(d - 3) + static_cast<double>(eps) * sqrt_discriminant()) / 2.0;
    }

    /// The deformation parameter alpha_eps = (1-d-eps*sqrt(D))/(2(d-1)).
    cplx alpha() const {
        return (static_cast<double>(1 - d) - static_cast<double>(eps) * sqrt_discriminant()) /
               (2.0 * static_cast<double>(d - 1));
    }

    TailValue conjugated_if_complex() const {
        return discriminant() < 0 ? TailValue(d, -eps) : *this;
    }

    bool operator==(const TailValue& o) const { return d == o.d && eps == o.eps; }

    /// "(d-3)/2 +- c*sqrt(r)" rendering; D/4 = c^2 r is always integral.
    std::string str() const {
        const int64 m = (d - 3) / 2;
        const int64 D4 = discriminant() / 4;
        if (D4 == 0) return std::to_string(m);
        auto [c, r] = detail::extract_square(D4 < 0 ? -D4 : D4);
        std::string s = std::to_string(m);
        s += eps < 0 ? " - " : " + ";
        s += detail::surd_term(c, r, D4 < 0);
        return s;
    }
};

}  // namespace critcyc
