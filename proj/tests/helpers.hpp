#pragma once

// Shared test helpers: closeness assertions for complex values.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <sstream>

#include "critcyc/cyclic.hpp"

namespace testutil {

using critcyc::cplx;

/// |x - y| <= tol, with a useful failure message.
class CloseTo : public Catch::Matchers::MatcherBase<cplx> {
  public:
    CloseTo(cplx target, double tol) : target_(target), tol_(tol) {}
    bool match(const cplx& v) const override { return std::abs(v - target_) <= tol_; }
    std::string describe() const override {
        std::ostringstream os;
        os.precision(17);
        os << "is within " << tol_ << " of (" << target_.real() << ", " << target_.imag() << ")";
        return os.str();
    }

  private:
    cplx target_;
    double tol_;
};

inline CloseTo close_to(cplx target, double tol = 1e-12) { return CloseTo(target, tol); }

/// Relative closeness against max(1, |x|, |y|).
inline double rel_gap(cplx x, cplx y) {
    return std::abs(x - y) / std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace testutil
