#pragma once

// Complex-valued functions on Z/dZ (d odd) and the convolution-square
// residual machinery.
//
// A non-zero f : Z/dZ -> C is called lambda-critical when its convolution
// square agrees with lambda times its pointwise square at even arguments:
//
//     (f * f)(2k) = sum_l f(k+l) f(k-l) = lambda f(k)^2   for all k.
//
// Since d is odd, doubling is a bijection mod d, so this constrains the
// function at every point.  The residual R(k) = (f*f)(2k) - lambda f(k)^2
// measures the failure; criticality is judged by the scale-free quantity
// max_k |R(k)| / (max_k |f(k)|)^2, which is invariant under f -> c f,
// lambda -> lambda.
//
// A half system G+ is any subset with Z/dZ = {0} u G+ u (-G+) (disjointly).
// Folding the full residual over l <-> -l gives
//
//     R(k) = 2 * [ sum_{l in G+} f(k+l) f(k-l) - ((lambda-1)/2) f(k)^2 ],
//
// so residual_half() below equals residual()/2 pointwise for every valid
// half system, not just the standard one {1, ..., (d-1)/2}.
//
// The discrete Fourier transform used here is fhat(j) = sum_x f(x) e^{+2 pi i
// j x / d} with no normalization, so dft(dft(f))(x) = d * f(-x) and
// sum |fhat|^2 = d * sum |f|^2.  If f is lambda-critical with lambda != 0,
// then fhat is (d/lambda)-critical.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "critcyc/intmath.hpp"

namespace critcyc {

using cplx = std::complex<double>;

class CyclicFunction {
  public:
    explicit CyclicFunction(int64 modulus) : d_(checked(modulus)), v_(static_cast<size_t>(modulus)) {}

    CyclicFunction(int64 modulus, std::vector<cplx> values) : d_(checked(modulus)), v_(std::move(values)) {
        if (v_.size() != static_cast<size_t>(d_))
            throw std::invalid_argument("CyclicFunction: value count does not match modulus");
    }

    /// Builds f from a generator g evaluated at k = 0, ..., d-1.
    template <typename Gen>
    static CyclicFunction from_generator(int64 d, Gen&& g) {
        CyclicFunction f(d);
        for (int64 k = 0; k < d; ++k) f.v_[static_cast<size_t>(k)] = g(k);
        return f;
    }

    int64 modulus() const { return d_; }

    /// Index access for arbitrary integers, reduced mod d.
    cplx& operator[](int64 k) { return v_[static_cast<size_t>(mod_floor(k, d_))]; }
    const cplx& operator[](int64 k) const { return v_[static_cast<size_t>(mod_floor(k, d_))]; }

    const std::vector<cplx>& values() const { return v_; }

    bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](cplx c) { return c == cplx{0.0, 0.0}; });
    }

  private:
    static int64 checked(int64 d) {
        if (d < 1 || d % 2 == 0)
            throw std::invalid_argument("CyclicFunction: modulus must be odd and positive");
        return d;
    }

    int64 d_;
    std::vector<cplx> v_;
};

/// Largest |f(k)|.
inline double max_abs(const CyclicFunction& f) {
    double m = 0.0;
    for (const cplx& c : f.values()) m = std::max(m, std::abs(c));
    return m;
}

/// Cyclic convolution (f * g)(t) = sum_l f(l) g(t-l); O(d^2), exact enough at
/// the sizes this library works with.
inline CyclicFunction convolve(const CyclicFunction& f, const CyclicFunction& g) {
    if (f.modulus() != g.modulus())
        throw std::invalid_argument("convolve: moduli differ");
    const int64 d = f.modulus();
    CyclicFunction h(d);
    for (int64 t = 0; t < d; ++t) {
        cplx s = 0.0;
        for (int64 l = 0; l < d; ++l) s += f[l] * g[t - l];
        h[t] = s;
    }
    return h;
}

/// Discrete Fourier transform fhat(j) = sum_x f(x) e^{+2 pi i j x / d}.
inline CyclicFunction dft(const CyclicFunction& f) {
    const int64 d = f.modulus();
    CyclicFunction out(d);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (int64 j = 0; j < d; ++j) {
        cplx s = 0.0;
        for (int64 x = 0; x < d; ++x) {
            const double ang = step * static_cast<double>(mod_floor(j * x, d));
            s += f[x] * cplx{std::cos(ang), std::sin(ang)};
        }
        out[j] = s;
    }
    return out;
}

/// Full residual R(k) = sum_l f(k+l) f(k-l) - lambda f(k)^2.
inline std::vector<cplx> residual(const CyclicFunction& f, cplx lambda) {
    const int64 d = f.modulus();
    std::vector<cplx> r(static_cast<size_t>(d));
    for (int64 k = 0; k < d; ++k) {
        cplx s = 0.0;
        for (int64 l = 0; l < d; ++l) s += f[k + l] * f[k - l];
        r[static_cast<size_t>(k)] = s - lambda * f[k] * f[k];
    }
    return r;
}

/// The standard half system {1, ..., (d-1)/2}.
inline std::vector<int64> default_half_system(int64 d) {
    std::vector<int64> g;
    for (int64 l = 1; l <= (d - 1) / 2; ++l) g.push_back(l);
    return g;
}

/// True when plus_set together with its negatives and 0 tiles Z/dZ exactly.
inline bool is_valid_half_system(int64 d, const std::vector<int64>& plus_set) {
    if (d < 1 || d % 2 == 0) return false;
    if (plus_set.size() != static_cast<size_t>((d - 1) / 2)) return false;
    std::vector<char> seen(static_cast<size_t>(d), 0);
    seen[0] = 1;
    for (int64 l : plus_set) {
        const int64 lp = mod_floor(l, d);
        const int64 lm = mod_floor(-l, d);
        if (lp == 0 || seen[static_cast<size_t>(lp)] || seen[static_cast<size_t>(lm)]) return false;
        seen[static_cast<size_t>(lp)] = 1;
        seen[static_cast<size_t>(lm)] = 1;
    }
    return true;
}

/// Half residual H(k) = sum_{l in G+} f(k+l) f(k-l) - ((lambda-1)/2) f(k)^2.
/// Equals residual()/2 pointwise for every valid half system G+.
inline std::vector<cplx> residual_half(const CyclicFunction& f, cplx lambda,
                                       const std::vector<int64>& plus_set) {
    const int64 d = f.modulus();
    if (!is_valid_half_system(d, plus_set))
        throw std::invalid_argument("residual_half: plus_set is not a half system mod d");
    std::vector<cplx> r(static_cast<size_t>(d));
    for (int64 k = 0; k < d; ++k) {
        cplx s = 0.0;
        for (int64 l : plus_set) s += f[k + l] * f[k - l];
        r[static_cast<size_t>(k)] = s - (lambda - 1.0) / 2.0 * f[k] * f[k];
    }
    return r;
}

/// Scale-free summary of a residual vector.
struct ResidualReport {
    double max_abs = 0.0;   // max_k |R(k)|
    double scale = 0.0;     // (max_k |f(k)|)^2
    double relative = 0.0;  // max_abs / scale (inf for the zero function)
    int64 argmax = 0;       // smallest k attaining max_abs
};

inline ResidualReport residual_report(const CyclicFunction& f, cplx lambda) {
    const auto r = residual(f, lambda);
    ResidualReport rep;
    for (int64 k = 0; k < f.modulus(); ++k) {
        const double v = std::abs(r[static_cast<size_t>(k)]);
        if (v > rep.max_abs) {
            rep.max_abs = v;
            rep.argmax = k;
        }
    }
    const double m = max_abs(f);
    rep.scale = m * m;
    rep.relative = rep.scale > 0.0 ? rep.max_abs / rep.scale : std::numeric_limits<double>::infinity();
    return rep;
}

/// Relative criticality test; the zero function is never critical.
inline bool is_critical(const CyclicFunction& f, cplx lambda, double tol = 1e-9) {
    if (f.is_zero()) return false;
    return residual_report(f, lambda).relative <= tol;
}

/// Reads lambda off a function assumed critical: (f*f)(2k*) / f(k*)^2 at the
/// peak k* = argmax |f(k)| (ties resolved to the smallest index).
inline cplx estimate_lambda(const CyclicFunction& f) {
    if (f.is_zero()) throw std::domain_error("estimate_lambda: zero function");
    const int64 d = f.modulus();
    int64 kstar = 0;
    double best = -1.0;
    for (int64 k = 0; k < d; ++k) {
        const double v = std::abs(f[k]);
        if (v > best) {
            best = v;
            kstar = k;
        }
    }
    cplx s = 0.0;
    for (int64 l = 0; l < d; ++l) s += f[kstar + l] * f[kstar - l];
    return s / (f[kstar] * f[kstar]);
}

}  // namespace critcyc
