#pragma once

// Catalogs of the known critical values for small odd moduli, each entry
// paired with a realization route through the constructions in this library.
//
// For d = 3, 5, 7, 9, 11, 13 the catalogs are complete: the listed values are
// exactly the critical values that exist on Z/dZ (4, 6, 8, 15, 20 and 18 of
// them respectively).  The d = 15 and d = 17 catalogs list the known values
// but are not claimed complete.
//
// Every entry carries a route:
//   * constant/tail entries come from the constant-tail family,
//   * gauss entries from the Gauss parabola and its twist,
//   * theorem entries from the theta family at the CM point of an admissible
//     splitting (a, b), with the negative sign reached through a divisor pair
//     (k, p) of Jacobi symbol -1 found by search_negative_sign(),
//   * subgroup/quotient/product entries by induction from smaller moduli,
//   * deferred entries are values known to occur whose constructions fall
//     outside the scope of this library; realize_fixtures() reports them
//     without building a function.

#include <optional>
#include <string>
#include <vector>

#include "critcyc/constructions.hpp"
#include "critcyc/theta.hpp"

namespace critcyc {

enum class Route {
    constant_zero,
    constant_one,
    tail_plus,
    tail_minus,
    gauss,
    gauss_conj,
    gauss_twisted,
    theorem,
    theorem_conj,
    theorem_neg,
    theorem_neg_conj,
    subgroup,
    quotient,
    product,
    deferred,
};

inline const char* route_name(Route r) {
    switch (r) {
        case Route::constant_zero: return "constant_zero";
        case Route::constant_one: return "constant_one";
        case Route::tail_plus: return "tail_plus";
        case Route::tail_minus: return "tail_minus";
        case Route::gauss: return "gauss";
        case Route::gauss_conj: return "gauss_conj";
        case Route::gauss_twisted: return "gauss_twisted";
        case Route::theorem: return "theorem";
        case Route::theorem_conj: return "theorem_conj";
        case Route::theorem_neg: return "theorem_neg";
        case Route::theorem_neg_conj: return "theorem_neg_conj";
        case Route::subgroup: return "subgroup";
        case Route::quotient: return "quotient";
        case Route::product: return "product";
        case Route::deferred: return "deferred";
    }
    return "?";
}

struct FixtureEntry {
    std::string label;
    cplx lambda;
    Route route = Route::deferred;
    // Route parameters:
    //   theorem*:          p1 = a, p2 = b
    //   gauss_twisted:     p1 = twist c
    //   subgroup/quotient: p1 = source modulus, p2 = source entry index
    //   product:           (p1, p2) and (p3, p4) = source modulus/index pairs
    int64 p1 = 0, p2 = 0, p3 = 0, p4 = 0;
};

struct FixtureList {
    int64 d = 0;
    bool complete = false;
    std::vector<FixtureEntry> entries;
};

/// Catalog size for the moduli whose lists are complete.
inline std::optional<int64> expected_fixture_count(int64 d) {
    switch (d) {
        case 3: return 4;
        case 5: return 6;
        case 7: return 8;
        case 9: return 15;
        case 11: return 20;
        case 13: return 18;
        default: return std::nullopt;
    }
}

namespace detail {

inline FixtureEntry surd_entry(SurdValue s, Route r, int64 p1 = 0, int64 p2 = 0, int64 p3 = 0,
                               int64 p4 = 0) {
    return {s.str(), s.value(), r, p1, p2, p3, p4};
}

inline FixtureEntry tail_entry(int64 d, int eps) {
    TailValue t(d, eps);
    return {t.str(), t.value(), eps > 0 ? Route::tail_plus : Route::tail_minus};
}

/// The four theorem-route entries (+lambda_0, +conj, -lambda_0, -conj).
inline void theorem_block(std::vector<FixtureEntry>& out, int64 a, int64 b, bool with_negative) {
    const SurdValue l0 = lambda_zero(a, b);
    out.push_back(surd_entry(l0, Route::theorem, a, b));
    out.push_back(surd_entry(l0.conjugated(), Route::theorem_conj, a, b));
    if (with_negative) {
        out.push_back(surd_entry(l0.negated(), Route::theorem_neg, a, b));
        out.push_back(surd_entry(l0.negated().conjugated(), Route::theorem_neg_conj, a, b));
    }
}

inline FixtureEntry deferred_entry(std::string label, cplx lambda) {
    return {std::move(label), lambda, Route::deferred};
}

}  // namespace detail

inline FixtureList fixture_list(int64 d);

namespace detail {

inline FixtureList fixture_list_15() {
    FixtureList out{15, false, {}};
    auto& e = out.entries;
    e.push_back(tail_entry(15, +1));  // 6 + sqrt(21)
    e.push_back(tail_entry(15, -1));
    theorem_block(e, 4, 11, true);
    theorem_block(e, 8, 7, true);
    theorem_block(e, 12, 3, true);
    // Products of the complete d = 3 and d = 5 catalogs (coprime moduli).
    const FixtureList f3 = fixture_list(3);
    const FixtureList f5 = fixture_list(5);
    auto known = [&e](cplx v) {
        for (const auto& x : e)
            if (std::abs(x.lambda - v) <= 1e-9 * std::max(1.0, std::abs(v))) return true;
        return false;
    };
    for (int64 i = 0; i < static_cast<int64>(f3.entries.size()); ++i) {
        for (int64 j = 0; j < static_cast<int64>(f5.entries.size()); ++j) {
            const cplx v = f3.entries[static_cast<size_t>(i)].lambda *
                           f5.entries[static_cast<size_t>(j)].lambda;
            if (known(v)) continue;
            std::string label = "(" + f3.entries[static_cast<size_t>(i)].label + ")*(" +
                                f5.entries[static_cast<size_t>(j)].label + ")";
            e.push_back({std::move(label), v, Route::product, 3, i, 5, j});
        }
    }
    // Known values without an in-scope construction.
    e.push_back(deferred_entry("-3", {-3.0, 0.0}));
    e.push_back(deferred_entry("-5", {-5.0, 0.0}));
    const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    for (int eps : {+1, -1})
        for (int s1 : {+1, -1})
            for (int s2 : {+1, -1}) {
                const double re = s1 * 2.0 * std::sqrt(2.0 - eps * s3);
                const double im = s2 * (2.0 + eps * s3);
                std::string label = std::string(s1 < 0 ? "-" : "") + "2*sqrt(2" +
                                    (eps > 0 ? "-" : "+") + "sqrt(3)) " + (s2 < 0 ? "-" : "+") +
                                    " (2" + (eps > 0 ? "+" : "-") + "sqrt(3))i";
                e.push_back(deferred_entry(std::move(label), {re, im}));
            }
    for (int eps : {+1, -1})
        for (int s2 : {+1, -1}) {
            const double re = 1.0 + eps * s5;
            const double im = s2 * std::sqrt(9.0 - 2.0 * eps * s5);
            std::string label = std::string("(1") + (eps > 0 ? "+" : "-") + "sqrt(5)) " +
                                (s2 < 0 ? "-" : "+") + " i*sqrt(9" + (eps > 0 ? "-" : "+") +
                                "2*sqrt(5))";
            e.push_back(deferred_entry(std::move(label), {re, im}));
        }
    // Note: the eight quartic products (+-)(sqrt(3) +- i sqrt(2))(sqrt(2) +- i)
    // coincide exactly with the nested-surd family above, since
    // (sqrt(6) -+ sqrt(2))^2 = 4 (2 -+ sqrt(3)); the catalog keeps one entry
    // per value, in the nested-surd form.
    return out;
}

}  // namespace detail

/// The catalog for d in {3, 5, 7, 9, 11, 13, 15, 17}.
inline FixtureList fixture_list(int64 d) {
    using detail::deferred_entry;
    using detail::surd_entry;
    using detail::tail_entry;
    using detail::theorem_block;
    FixtureList out{d, true, {}};
    auto& e = out.entries;
    switch (d) {
        case 3:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(9, 0), Route::constant_one));
            e.push_back(surd_entry(SurdValue(0, 3), Route::gauss));
            e.push_back(surd_entry(SurdValue(0, 3, 1, -1), Route::gauss_conj));
            break;
        case 5:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(25, 0), Route::constant_one));
            e.push_back(surd_entry(SurdValue(5, 0), Route::gauss));
            e.push_back(surd_entry(SurdValue(5, 0, -1), Route::gauss_twisted, 1));
            e.push_back(tail_entry(5, +1));  // 1 + 2i
            e.push_back(tail_entry(5, -1));
            break;
        case 7:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(49, 0), Route::constant_one));
            e.push_back(surd_entry(SurdValue(0, 7), Route::gauss));
            e.push_back(surd_entry(SurdValue(0, 7, 1, -1), Route::gauss_conj));
            theorem_block(e, 4, 3, true);  // +-2 +- i sqrt(3)
            break;
        case 9:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(81, 0), Route::constant_one));
            e.push_back(surd_entry(SurdValue(9, 0), Route::gauss));
            // Induced from d = 3: subgroup keeps lambda, quotient scales by 3.
            e.push_back(surd_entry(SurdValue(0, 3), Route::subgroup, 3, 2));
            e.push_back(surd_entry(SurdValue(0, 3, 1, -1), Route::subgroup, 3, 3));
            e.push_back(surd_entry(SurdValue(0, 27), Route::quotient, 3, 2));
            e.push_back(surd_entry(SurdValue(0, 27, 1, -1), Route::quotient, 3, 3));
            theorem_block(e, 1, 8, false);  // 1 +- 2i sqrt(2)
            e.push_back(deferred_entry("-1 + 2*i*sqrt(2)", {-1.0, 2.0 * std::sqrt(2.0)}));
            e.push_back(deferred_entry("-1 - 2*i*sqrt(2)", {-1.0, -2.0 * std::sqrt(2.0)}));
            theorem_block(e, 5, 4, true);  // +-sqrt(5) +- 2i
            break;
        case 11:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(121, 0), Route::constant_one));
            e.push_back(tail_entry(11, +1));  // 4 + sqrt(5)
            e.push_back(tail_entry(11, -1));
            e.push_back(surd_entry(SurdValue(0, 11), Route::gauss));
            e.push_back(surd_entry(SurdValue(0, 11, 1, -1), Route::gauss_conj));
            theorem_block(e, 4, 7, false);  // 2 +- i sqrt(7)
            theorem_block(e, 8, 3, true);   // +-2 sqrt(2) +- i sqrt(3)
            for (int eps : {+1, -1})
                for (int s0 : {+1, -1})
                    for (int s2 : {+1, -1}) {
                        const double re = s0 * (1.0 + eps * std::sqrt(5.0));
                        const double im = s2 * std::sqrt(5.0 - 2.0 * eps * std::sqrt(5.0));
                        std::string label = std::string(s0 < 0 ? "-" : "") + "(1" +
                                            (eps > 0 ? "+" : "-") + "sqrt(5)) " +
                                            (s2 < 0 ? "-" : "+") + " i*sqrt(5" +
                                            (eps > 0 ? "-" : "+") + "2*sqrt(5))";
                        e.push_back(deferred_entry(std::move(label), {re, im}));
                    }
            break;
        case 13:
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(169, 0), Route::constant_one));
            e.push_back(tail_entry(13, +1));  // 5 + 2 sqrt(3)
            e.push_back(tail_entry(13, -1));
            e.push_back(surd_entry(SurdValue(13, 0), Route::gauss));
            e.push_back(surd_entry(SurdValue(13, 0, -1), Route::gauss_twisted, 1));
            theorem_block(e, 1, 12, false);  // 1 +- 2i sqrt(3)
            e.push_back(deferred_entry("-1 + 2*i*sqrt(3)", {-1.0, 2.0 * std::sqrt(3.0)}));
            e.push_back(deferred_entry("-1 - 2*i*sqrt(3)", {-1.0, -2.0 * std::sqrt(3.0)}));
            theorem_block(e, 5, 8, true);  // +-sqrt(5) +- 2i sqrt(2)
            theorem_block(e, 9, 4, true);  // +-3 +- 2i
            break;
        case 15:
            return detail::fixture_list_15();
        case 17:
            out.complete = false;
            e.push_back(surd_entry(SurdValue(1, 0), Route::constant_zero));
            e.push_back(surd_entry(SurdValue(289, 0), Route::constant_one));
            e.push_back(tail_entry(17, +1));  // 7 + 4 sqrt(2)
            e.push_back(tail_entry(17, -1));
            e.push_back(surd_entry(SurdValue(17, 0), Route::gauss));
            e.push_back(surd_entry(SurdValue(17, 0, -1), Route::gauss_twisted, 3));
            theorem_block(e, 1, 16, false);  // 1 +- 4i
            e.push_back(deferred_entry("-1 + 4i", {-1.0, 4.0}));
            e.push_back(deferred_entry("-1 - 4i", {-1.0, -4.0}));
            theorem_block(e, 5, 12, true);  // +-sqrt(5) +- 2i sqrt(3)
            theorem_block(e, 9, 8, false);  // 3 +- 2i sqrt(2)
            theorem_block(e, 13, 4, true);  // +-sqrt(13) +- 2i
            for (int eps : {+1, -1})
                for (int s0 : {+1, -1})
                    for (int s2 : {+1, -1}) {
                        const double re = s0 * (1.0 + eps * 2.0 * std::sqrt(2.0));
                        const double im = s2 * 2.0 * std::sqrt(2.0 - eps * std::sqrt(2.0));
                        std::string label = std::string(s0 < 0 ? "-" : "") + "(1" +
                                            (eps > 0 ? "+" : "-") + "2*sqrt(2)) " +
                                            (s2 < 0 ? "-" : "+") + " 2*i*sqrt(2" +
                                            (eps > 0 ? "-" : "+") + "sqrt(2))";
                        e.push_back(deferred_entry(std::move(label), {re, im}));
                    }
            break;
        default:
            throw std::domain_error("fixture_list: no catalog for this modulus");
    }
    return out;
}

/// Sample point used when building theta families for fixture realization;
/// real, so the family values stay O(1) and away from theta zeros.
inline constexpr double kFamilySample = 0.1375;

/// Builds the function realizing a catalog entry; throws std::logic_error on
/// a deferred entry.
inline CriticalPair build_fixture(int64 d, const FixtureEntry& entry, const ThetaConfig& cfg = {});

namespace detail {

inline CriticalPair build_source(int64 d_src, int64 index, const ThetaConfig& cfg) {
    const FixtureList src = fixture_list(d_src);
    if (index < 0 || index >= static_cast<int64>(src.entries.size()))
        throw std::logic_error("build_fixture: bad source index");
    return build_fixture(d_src, src.entries[static_cast<size_t>(index)], cfg);
}

inline CriticalPair build_theorem(int64 d, int64 a, int64 b, bool negative, const ThetaConfig& cfg) {
    CMTau tau{};
    SurdValue lam = lambda_zero(a, b);
    std::string prov;
    if (!negative) {
        tau = fundamental_tau(d, a, b);
        prov = "theta_family(d=" + std::to_string(d) + ",a=" + std::to_string(a) +
               ",b=" + std::to_string(b) + ",k=0,p=1)";
    } else {
        const auto w = search_negative_sign(d, a, b, 25, 500);
        if (!w) throw std::logic_error("build_fixture: no negative-sign witness within bounds");
        tau = associated_tau(d, a, b, w->first, w->second);
        lam = lam.negated();
        prov = "theta_family(d=" + std::to_string(d) + ",a=" + std::to_string(a) +
               ",b=" + std::to_string(b) + ",k=" + std::to_string(w->first) +
               ",p=" + std::to_string(w->second) + ")";
    }
    CyclicFunction f = critical_family(d, kFamilySample, tau.value(), cfg);
    return {std::move(f), lam.value(), std::move(prov), lam, {}};
}

}  // namespace detail

inline CriticalPair build_fixture(int64 d, const FixtureEntry& entry, const ThetaConfig& cfg) {
    switch (entry.route) {
        case Route::constant_zero: return constant_tail(d, TailVariant::zero);
        case Route::constant_one: return constant_tail(d, TailVariant::one);
        case Route::tail_plus: return constant_tail(d, TailVariant::plus);
        case Route::tail_minus: return constant_tail(d, TailVariant::minus);
        case Route::gauss: return gauss_parabola(d);
        case Route::gauss_conj: return conjugate_pair(gauss_parabola(d));
        case Route::gauss_twisted: return gauss_parabola_twisted(d, entry.p1);
        case Route::theorem: return detail::build_theorem(d, entry.p1, entry.p2, false, cfg);
        case Route::theorem_conj:
            return conjugate_pair(detail::build_theorem(d, entry.p1, entry.p2, false, cfg));
        case Route::theorem_neg: return detail::build_theorem(d, entry.p1, entry.p2, true, cfg);
        case Route::theorem_neg_conj:
            return conjugate_pair(detail::build_theorem(d, entry.p1, entry.p2, true, cfg));
        case Route::subgroup:
            return induce_subgroup(detail::build_source(entry.p1, entry.p2, cfg), d);
        case Route::quotient:
            return induce_quotient(detail::build_source(entry.p1, entry.p2, cfg), d);
        case Route::product:
            return induce_product(detail::build_source(entry.p1, entry.p2, cfg),
                                  detail::build_source(entry.p3, entry.p4, cfg));
        case Route::deferred:
            throw std::logic_error("build_fixture: entry has no in-scope construction");
    }
    throw std::logic_error("build_fixture: unknown route");
}

struct RealizedFixture {
    FixtureEntry entry;
    std::optional<CriticalPair> pair;  // empty for deferred entries
    ResidualReport report{};           // residual against the catalog value
    double lambda_err = 0.0;           // |built lambda - catalog lambda|
};

struct RealizedList {
    int64 d = 0;
    bool complete = false;
    std::vector<RealizedFixture> entries;
    int64 realized_count = 0;
    int64 deferred_count = 0;
};

/// Builds every realizable entry of the catalog and measures it against the
/// cataloged critical value.
inline RealizedList realize_fixtures(int64 d, const ThetaConfig& cfg = {}) {
    const FixtureList list = fixture_list(d);
    RealizedList out{list.d, list.complete, {}, 0, 0};
    for (const FixtureEntry& entry : list.entries) {
        RealizedFixture r{entry, std::nullopt, {}, 0.0};
        if (entry.route == Route::deferred) {
            ++out.deferred_count;
        } else {
            CriticalPair p = build_fixture(d, entry, cfg);
            r.report = residual_report(p.f, entry.lambda);
            r.lambda_err = std::abs(p.lambda - entry.lambda);
            r.pair = std::move(p);
            ++out.realized_count;
        }
        out.entries.push_back(std::move(r));
    }
    return out;
}

}  // namespace critcyc
