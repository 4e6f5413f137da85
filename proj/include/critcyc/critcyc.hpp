#pragma once

// Umbrella header: the whole library in one include.
//
// The library constructs and verifies critical points of the quadratic
// functional equation
//
//     sum_l f(k+l) f(k-l) = lambda f(k)^2        on Z/dZ, d odd,
//
// through three layers: exact integer/surd arithmetic (intmath, exact),
// finite cyclic analysis (cyclic, constructions, fixtures), and analytic
// theta machinery with complex-multiplication parameters (theta, cm).
// checks.hpp bundles the end-to-end self-checks; io.hpp has the parsing,
// formatting and configuration helpers shared with the command-line tool.

#include "critcyc/intmath.hpp"
#include "critcyc/exact.hpp"
#include "critcyc/cyclic.hpp"
#include "critcyc/constructions.hpp"
#include "critcyc/cm.hpp"
#include "critcyc/theta.hpp"
#include "critcyc/fixtures.hpp"
#include "critcyc/io.hpp"
#include "critcyc/checks.hpp"
