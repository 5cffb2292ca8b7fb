#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

// Data model for a decorated SNC configuration: the numerical record of a
// reduced simple-normal-crossing surface fibre (components, double curves,
// triple points) together with validation of its internal arithmetic.

namespace snc {

using Int = std::int64_t;

/// Numerical invariants of one irreducible component of the central fibre.
struct ComponentSurface {
    Int id = 0;
    bool strict_transform = false;
    Int b1 = 0;   // first Betti number, must be even
    Int b2 = 0;   // second Betti number
    Int h20 = 0;  // Hodge number h^{2,0}
    Int k2 = 0;   // self-intersection of the canonical class

    bool operator==(const ComponentSurface&) const = default;
};

/// One connected component of a pairwise intersection E_a ∩ E_b.
struct DoubleCurve {
    Int id = 0;
    Int comp_a = 0;  // comp_a < comp_b
    Int comp_b = 0;
    Int b1 = 0;            // = 2 * genus
    Int self_int_in_a = 0;  // self-intersection of the curve inside comp_a
    Int self_int_in_b = 0;

    bool operator==(const DoubleCurve&) const = default;
};

/// A point where three components meet, recorded through its three curves.
struct TriplePoint {
    Int id = 0;
    Int curve_ab = 0;
    Int curve_ac = 0;
    Int curve_bc = 0;

    bool operator==(const TriplePoint&) const = default;
};

/// Optional observed invariants of the generic fibre, for cross-checking.
struct GenericFiberData {
    Int b1 = 0;
    Int b2 = 0;
    Int k2 = 0;
    Int chi_O = 0;

    bool operator==(const GenericFiberData&) const = default;
};

struct Configuration {
    std::string name;
    std::vector<ComponentSurface> components;
    std::vector<DoubleCurve> double_curves;
    std::vector<TriplePoint> triple_points;
    std::optional<GenericFiberData> generic_fiber;

    bool operator==(const Configuration&) const = default;

    const ComponentSurface* component(Int id) const {
        for (const auto& c : components)
            if (c.id == id) return &c;
        return nullptr;
    }
    const DoubleCurve* curve(Int id) const {
        for (const auto& c : double_curves)
            if (c.id == id) return &c;
        return nullptr;
    }
};

struct ValidationIssue {
    std::string code;
    std::string detail;

    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;

    bool ok() const { return errors.empty(); }
};

/// Derived Hodge-theoretic invariants of a single component.
struct HodgeSummary {
    Int h10 = 0;
    Int h11 = 0;
    Int chi_top = 0;
    Int chi_O = 0;

    bool operator==(const HodgeSummary&) const = default;
};

inline HodgeSummary hodge_summary(const ComponentSurface& c) {
    HodgeSummary h;
    h.h10 = c.b1 / 2;
    h.h11 = c.b2 - 2 * c.h20;
    h.chi_top = 2 - 2 * c.b1 + c.b2;
    h.chi_O = 1 - h.h10 + c.h20;
    return h;
}

inline Int chi_top_of_curve(const DoubleCurve& c) { return 2 - c.b1; }
inline Int chi_O_of_curve(const DoubleCurve& c) { return 1 - c.b1 / 2; }

/// Number of triple points lying on the given curve.
inline Int triple_points_on_curve(const Configuration& cfg, Int curve_id) {
    Int n = 0;
    for (const auto& t : cfg.triple_points)
        if (t.curve_ab == curve_id || t.curve_ac == curve_id || t.curve_bc == curve_id) ++n;
    return n;
}

/// self_int_in_a + self_int_in_b + (#incident triple points); zero iff the
/// curve satisfies the triple point formula.
inline Int triple_point_formula_residual(const Configuration& cfg, Int curve_id) {
    const DoubleCurve* c = cfg.curve(curve_id);
    if (!c) return 0;  // dangling references are a validation concern
    return c->self_int_in_a + c->self_int_in_b + triple_points_on_curve(cfg, curve_id);
}

/// Number of triple points whose three components include component i.
inline Int triple_points_through_component(const Configuration& cfg, Int comp_id) {
    Int n = 0;
    for (const auto& t : cfg.triple_points) {
        const DoubleCurve* ab = cfg.curve(t.curve_ab);
        if (!ab) continue;
        const DoubleCurve* ac = cfg.curve(t.curve_ac);
        const DoubleCurve* bc = cfg.curve(t.curve_bc);
        std::unordered_set<Int> comps{ab->comp_a, ab->comp_b};
        if (ac) { comps.insert(ac->comp_a); comps.insert(ac->comp_b); }
        if (bc) { comps.insert(bc->comp_a); comps.insert(bc->comp_b); }
        if (comps.count(comp_id)) ++n;
    }
    return n;
}

/// E_i^3 from numerical fibre-triviality: the fibre class restricts to zero
/// on E_i, so E_i^3 = sum of self-intersections of the double curves inside
/// E_i plus twice the number of triple points through E_i.
inline Int component_cubed(const Configuration& cfg, Int comp_id) {
    Int s = 0;
    for (const auto& c : cfg.double_curves) {
        if (c.comp_a == comp_id) s += c.self_int_in_a;
        if (c.comp_b == comp_id) s += c.self_int_in_b;
    }
    return s + 2 * triple_points_through_component(cfg, comp_id);
}

/// Sum over ordered pairs (i, j != i) of the self-intersections inside E_i of
/// the double curves between i and j; each curve contributes both sides.
inline Int ordered_selfint_sum(const Configuration& cfg) {
    Int s = 0;
    for (const auto& c : cfg.double_curves) s += c.self_int_in_a + c.self_int_in_b;
    return s;
}

inline Int sum_component_cubed(const Configuration& cfg) {
    Int s = 0;
    for (const auto& c : cfg.components) s += component_cubed(cfg, c.id);
    return s;
}

enum class TpfPolicy { Strict, Lenient };

/// Checks every structural and arithmetic invariant of the configuration.
/// Never stops at the first violation. Under TpfPolicy::Lenient, triple point
/// formula violations are demoted to warnings.
inline ValidationReport validate(const Configuration& cfg,
                                 TpfPolicy tpf = TpfPolicy::Strict) {
    ValidationReport r;
    auto err = [&](std::string code, std::string detail) {
        r.errors.push_back({std::move(code), std::move(detail)});
    };

    // id uniqueness per kind
    auto check_dups = [&](auto& items, const char* kind) {
        std::unordered_set<Int> seen;
        for (const auto& it : items)
            if (!seen.insert(it.id).second)
                err("DUPLICATE_ID", std::string(kind) + " id " + std::to_string(it.id));
    };
    check_dups(cfg.components, "component");
    check_dups(cfg.double_curves, "double_curve");
    check_dups(cfg.triple_points, "triple_point");

    // exactly one strict transform, with id 0
    Int strict_count = 0;
    for (const auto& c : cfg.components) {
        if (c.strict_transform) {
            ++strict_count;
            if (c.id != 0)
                err("MISSING_STRICT_TRANSFORM",
                    "strict transform must have id 0, found id " + std::to_string(c.id));
        }
    }
    if (strict_count == 0)
        err("MISSING_STRICT_TRANSFORM", "no component marked strict_transform");
    else if (strict_count > 1)
        err("MULTIPLE_STRICT_TRANSFORM",
            std::to_string(strict_count) + " components marked strict_transform");

    for (const auto& c : cfg.components) {
        if (c.id < 0)
            err("NEGATIVE_VALUE", "component id " + std::to_string(c.id));
        if (c.b1 < 0 || c.b2 < 0 || c.h20 < 0)
            err("NEGATIVE_VALUE", "component " + std::to_string(c.id) + " Betti/Hodge numbers");
        if (c.b1 % 2 != 0)
            err("ODD_B1", "component " + std::to_string(c.id));
        if (c.b2 - 2 * c.h20 < 0)
            err("H20_RANGE",
                "component " + std::to_string(c.id) + ": h20 = " + std::to_string(c.h20) +
                    " exceeds b2/2");
        HodgeSummary h = hodge_summary(c);
        Int lhs = 12 * h.chi_O;
        Int rhs = c.k2 + h.chi_top;
        if (lhs != rhs)
            err("NOETHER_VIOLATION", "component " + std::to_string(c.id) + ": 12*chi_O = " +
                                         std::to_string(lhs) + " but K^2 + chi_top = " +
                                         std::to_string(rhs));
    }

    for (const auto& c : cfg.double_curves) {
        if (c.id < 0) err("NEGATIVE_VALUE", "double_curve id " + std::to_string(c.id));
        if (c.b1 < 0)
            err("NEGATIVE_VALUE", "double_curve " + std::to_string(c.id) + " b1");
        if (c.b1 % 2 != 0) err("ODD_B1", "double_curve " + std::to_string(c.id));
        if (c.comp_a == c.comp_b)
            err("SELF_PAIR", "double_curve " + std::to_string(c.id) +
                                 " joins component " + std::to_string(c.comp_a) + " to itself");
        else if (c.comp_a > c.comp_b)
            err("UNORDERED_PAIR", "double_curve " + std::to_string(c.id) +
                                      ": comp_a must be smaller than comp_b");
        for (Int cid : {c.comp_a, c.comp_b})
            if (!cfg.component(cid))
                err("DANGLING_REFERENCE", "double_curve " + std::to_string(c.id) +
                                              " references component " + std::to_string(cid));
    }

    for (const auto& t : cfg.triple_points) {
        if (t.id < 0) err("NEGATIVE_VALUE", "triple_point id " + std::to_string(t.id));
        const DoubleCurve* ab = cfg.curve(t.curve_ab);
        const DoubleCurve* ac = cfg.curve(t.curve_ac);
        const DoubleCurve* bc = cfg.curve(t.curve_bc);
        bool dangling = false;
        for (auto [cid, ptr] : {std::pair{t.curve_ab, ab}, {t.curve_ac, ac}, {t.curve_bc, bc}})
            if (!ptr) {
                err("DANGLING_REFERENCE", "triple_point " + std::to_string(t.id) +
                                              " references curve " + std::to_string(cid));
                dangling = true;
            }
        if (dangling) continue;
        // the three curves must realize the pairs {a,b}, {a,c}, {b,c} for
        // distinct components a < b < c
        Int a = ab->comp_a, b = ab->comp_b;
        bool ok = ac->comp_a == a && bc->comp_a == b && ac->comp_b == bc->comp_b &&
                  ac->comp_b != a && ac->comp_b != b;
        if (!ok)
            err("BAD_TRIPLE", "triple_point " + std::to_string(t.id) +
                                  ": curves do not form a triangle on three components");
    }

    if (cfg.generic_fiber) {
        const auto& g = *cfg.generic_fiber;
        Int lhs = 12 * g.chi_O;
        Int rhs = g.k2 + (2 - 2 * g.b1 + g.b2);
        if (lhs != rhs)
            err("NOETHER_VIOLATION", "generic_fiber: 12*chi_O = " + std::to_string(lhs) +
                                         " but K^2 + chi_top = " + std::to_string(rhs));
    }

    // triple point formula per curve; needs resolvable references
    if (r.errors.empty()) {
        for (const auto& c : cfg.double_curves) {
            Int res = triple_point_formula_residual(cfg, c.id);
            if (res != 0) {
                ValidationIssue v{"TPF_VIOLATION",
                                  "double_curve " + std::to_string(c.id) +
                                      ": residual " + std::to_string(res)};
                if (tpf == TpfPolicy::Strict)
                    r.errors.push_back(v);
                else
                    r.warnings.push_back(v);
            }
        }
    }
    return r;
}

}  // namespace snc
