#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "snc/config.hpp"
#include "snc/constraints.hpp"
#include "snc/io.hpp"

// Bounded exhaustive search for admissible configurations: every candidate
// within the bounds is generated in a fixed deterministic order, validated,
// run through the constraint catalogue, canonicalized up to relabeling of
// the exceptional components, and streamed out if it passes everything.

namespace snc {

struct EnumerationBounds {
    Int max_components = 2;
    Int b1_max = 0;
    Int b2_max = 2;
    Int selfint_min = -1;
    Int selfint_max = 1;
    Int max_curves = 1;
    Int max_triple_points = 0;
    Int candidate_cap = 10'000'000;
};

struct EnumerationResult {
    Int emitted = 0;
    Int examined = 0;
    std::optional<std::string> error;  // SEARCH_SPACE_TOO_LARGE(...)
};

namespace enum_detail {

struct ComponentTuple {
    Int b1, b2, h20, k2;
};

// all Noether-consistent (b1, b2, h20) tuples within bounds, k2 derived
inline std::vector<ComponentTuple> component_tuples(const EnumerationBounds& b) {
    std::vector<ComponentTuple> out;
    for (Int b1 = 0; b1 <= b.b1_max; b1 += 2)
        for (Int b2 = 0; b2 <= b.b2_max; ++b2)
            for (Int h20 = 0; 2 * h20 <= b2; ++h20) {
                Int chi_O = 1 - b1 / 2 + h20;
                Int chi_top = 2 - 2 * b1 + b2;
                out.push_back({b1, b2, h20, 12 * chi_O - chi_top});
            }
    return out;
}

struct CurveTuple {
    Int comp_a, comp_b, b1, sa, sb;

    auto key() const { return std::tie(comp_a, comp_b, b1, sa, sb); }
    bool operator==(const CurveTuple&) const = default;
};

inline std::vector<CurveTuple> curve_domain(const EnumerationBounds& b, Int n_comp) {
    std::vector<CurveTuple> out;
    for (Int a = 0; a < n_comp; ++a)
        for (Int c = a + 1; c < n_comp; ++c)
            for (Int b1 = 0; b1 <= b.b1_max; b1 += 2)
                for (Int sa = b.selfint_min; sa <= b.selfint_max; ++sa)
                    for (Int sb = b.selfint_min; sb <= b.selfint_max; ++sb)
                        out.push_back({a, c, b1, sa, sb});
    return out;
}

// triple of curve indices realizing the pairs {a,b}, {a,c}, {b,c}; stored in
// role order (ab, ac, bc)
struct Triangle {
    Int ab, ac, bc;
};

inline std::vector<Triangle> triangle_domain(const std::vector<CurveTuple>& curves) {
    std::vector<Triangle> out;
    Int n = static_cast<Int>(curves.size());
    for (Int i = 0; i < n; ++i)
        for (Int j = i + 1; j < n; ++j)
            for (Int k = j + 1; k < n; ++k) {
                std::array<Int, 3> idx{i, j, k};
                // try all role assignments; pairs must be {a,b},{a,c},{b,c}
                std::sort(idx.begin(), idx.end());
                do {
                    const auto& u = curves[static_cast<size_t>(idx[0])];
                    const auto& v = curves[static_cast<size_t>(idx[1])];
                    const auto& w = curves[static_cast<size_t>(idx[2])];
                    if (u.comp_a == v.comp_a && w.comp_a == u.comp_b &&
                        v.comp_b == w.comp_b && v.comp_b != u.comp_a &&
                        v.comp_b != u.comp_b) {
                        out.push_back({idx[0], idx[1], idx[2]});
                        break;
                    }
                } while (std::next_permutation(idx.begin(), idx.end()));
            }
    return out;
}

// capped multiplication, saturating at cap+1
inline Int cap_mul(Int a, Int b, Int cap) {
    if (a == 0 || b == 0) return 0;
    if (a > (cap + 1) / b) return cap + 1;
    return a * b;
}

inline Int estimate_candidates(const EnumerationBounds& b) {
    Int cap = b.candidate_cap;
    Int ct = static_cast<Int>(component_tuples(b).size());
    Int total = 0;
    for (Int n = 1; n <= b.max_components; ++n) {
        Int comp_choices = 1;
        for (Int i = 0; i < n; ++i) comp_choices = cap_mul(comp_choices, ct, cap);
        Int cd = static_cast<Int>(curve_domain(b, n).size());
        Int curve_choices = 1, pow = 1;
        for (Int c = 1; c <= b.max_curves; ++c) {
            pow = cap_mul(pow, cd, cap);
            curve_choices = std::min(curve_choices + pow, cap + 1);
        }
        Int tri_max = std::max<Int>(Int{1}, b.max_curves * b.max_curves * b.max_curves);
        Int tri_choices = 1;
        pow = 1;
        for (Int t = 1; t <= b.max_triple_points; ++t) {
            pow = cap_mul(pow, tri_max, cap);
            tri_choices = std::min(tri_choices + pow, cap + 1);
        }
        Int per_n = cap_mul(cap_mul(comp_choices, curve_choices, cap), tri_choices, cap);
        total = std::min(total + per_n, cap + 1);
    }
    return total;
}

inline Configuration make_candidate(const std::vector<ComponentTuple>& comps,
                                    const std::vector<CurveTuple>& curves,
                                    const std::vector<Triangle>& tris) {
    Configuration cfg;
    for (Int i = 0; i < static_cast<Int>(comps.size()); ++i) {
        const auto& t = comps[static_cast<size_t>(i)];
        cfg.components.push_back({i, i == 0, t.b1, t.b2, t.h20, t.k2});
    }
    for (Int i = 0; i < static_cast<Int>(curves.size()); ++i) {
        const auto& c = curves[static_cast<size_t>(i)];
        cfg.double_curves.push_back({i, c.comp_a, c.comp_b, c.b1, c.sa, c.sb});
    }
    for (Int i = 0; i < static_cast<Int>(tris.size()); ++i) {
        const auto& t = tris[static_cast<size_t>(i)];
        cfg.triple_points.push_back({i, t.ab, t.ac, t.bc});
    }
    return cfg;
}

// relabels components by perm (perm[old_id] = new_id, perm[0] = 0), then
// renormalizes curve and triple-point order and ids; returns the compact
// serialization used as an isomorphism-class key
inline std::string relabeled_key(const Configuration& cfg, const std::vector<Int>& perm) {
    Configuration out;
    out.components = cfg.components;
    for (auto& c : out.components) c.id = perm[static_cast<size_t>(c.id)];
    std::sort(out.components.begin(), out.components.end(),
              [](const auto& x, const auto& y) { return x.id < y.id; });

    struct Tagged {
        DoubleCurve c;
        Int old_id;
    };
    std::vector<Tagged> curves;
    for (const auto& c : cfg.double_curves) {
        DoubleCurve d = c;
        d.comp_a = perm[static_cast<size_t>(c.comp_a)];
        d.comp_b = perm[static_cast<size_t>(c.comp_b)];
        if (d.comp_a > d.comp_b) {
            std::swap(d.comp_a, d.comp_b);
            std::swap(d.self_int_in_a, d.self_int_in_b);
        }
        curves.push_back({d, c.id});
    }
    std::sort(curves.begin(), curves.end(), [](const Tagged& x, const Tagged& y) {
        auto kx = std::tie(x.c.comp_a, x.c.comp_b, x.c.b1, x.c.self_int_in_a, x.c.self_int_in_b,
                           x.old_id);
        auto ky = std::tie(y.c.comp_a, y.c.comp_b, y.c.b1, y.c.self_int_in_a, y.c.self_int_in_b,
                           y.old_id);
        return kx < ky;
    });
    std::vector<Int> curve_map(cfg.double_curves.size() + 16, -1);
    for (Int i = 0; i < static_cast<Int>(curves.size()); ++i) {
        auto& t = curves[static_cast<size_t>(i)];
        if (static_cast<size_t>(t.old_id) >= curve_map.size())
            curve_map.resize(static_cast<size_t>(t.old_id) + 1, -1);
        curve_map[static_cast<size_t>(t.old_id)] = i;
        t.c.id = i;
        out.double_curves.push_back(t.c);
    }

    for (const auto& t : cfg.triple_points) {
        std::array<Int, 3> ids{curve_map[static_cast<size_t>(t.curve_ab)],
                               curve_map[static_cast<size_t>(t.curve_ac)],
                               curve_map[static_cast<size_t>(t.curve_bc)]};
        // re-derive the role order from the relabeled component pairs
        std::sort(ids.begin(), ids.end());
        TriplePoint tp{0, ids[0], ids[1], ids[2]};
        do {
            const auto& u = out.double_curves[static_cast<size_t>(ids[0])];
            const auto& v = out.double_curves[static_cast<size_t>(ids[1])];
            const auto& w = out.double_curves[static_cast<size_t>(ids[2])];
            if (u.comp_a == v.comp_a && w.comp_a == u.comp_b && v.comp_b == w.comp_b) {
                tp = {0, ids[0], ids[1], ids[2]};
                break;
            }
        } while (std::next_permutation(ids.begin(), ids.end()));
        out.triple_points.push_back(tp);
    }
    std::sort(out.triple_points.begin(), out.triple_points.end(),
              [](const TriplePoint& x, const TriplePoint& y) {
                  return std::tie(x.curve_ab, x.curve_ac, x.curve_bc) <
                         std::tie(y.curve_ab, y.curve_ac, y.curve_bc);
              });
    for (Int i = 0; i < static_cast<Int>(out.triple_points.size()); ++i)
        out.triple_points[static_cast<size_t>(i)].id = i;

    return serialize_compact(out);
}

// true iff cfg is the lexicographically least representative of its orbit
// under relabeling of the exceptional components
inline bool is_canonical(const Configuration& cfg) {
    Int n = static_cast<Int>(cfg.components.size());
    std::vector<Int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::string self_key = relabeled_key(cfg, perm);
    while (std::next_permutation(perm.begin() + 1, perm.end()))
        if (relabeled_key(cfg, perm) < self_key) return false;
    return true;
}

}  // namespace enum_detail

/// Streams every admissible configuration within bounds to `out`, one compact
/// canonical JSON document per line. Deterministic across runs.
inline EnumerationResult enumerate_configs(const EnumerationBounds& bounds, std::ostream& out) {
    using namespace enum_detail;
    EnumerationResult res;

    Int estimate = estimate_candidates(bounds);
    if (estimate > bounds.candidate_cap) {
        res.error = "SEARCH_SPACE_TOO_LARGE(>" + std::to_string(bounds.candidate_cap) + ")";
        return res;
    }

    auto tuples = component_tuples(bounds);

    auto consider = [&](const std::vector<ComponentTuple>& comps,
                        const std::vector<CurveTuple>& curves,
                        const std::vector<Triangle>& tris) {
        ++res.examined;
        Configuration cfg = make_candidate(comps, curves, tris);
        if (!validate(cfg, TpfPolicy::Strict).ok()) return;
        if (!is_canonical(cfg)) return;
        ConstraintReport rep = check_all(cfg);
        if (!rep.all_pass()) return;
        cfg.name = "enum-" + std::to_string(res.emitted);
        out << serialize_compact(cfg) << "\n";
        ++res.emitted;
    };

    for (Int n = 1; n <= bounds.max_components; ++n) {
        std::vector<ComponentTuple> comps;
        auto curve_dom = curve_domain(bounds, n);

        // chosen curve index sequences are non-decreasing, which fixes the
        // generation order and avoids permuted duplicates of the curve list
        std::vector<CurveTuple> curves;
        std::function<void()> choose_triples_and_emit = [&]() {
            auto tri_dom = triangle_domain(curves);
            std::vector<Triangle> tris;
            std::function<void(Int)> rec_t = [&](Int from) {
                consider(comps, curves, tris);
                if (static_cast<Int>(tris.size()) == bounds.max_triple_points) return;
                for (Int i = from; i < static_cast<Int>(tri_dom.size()); ++i) {
                    tris.push_back(tri_dom[static_cast<size_t>(i)]);
                    rec_t(i);
                    tris.pop_back();
                }
            };
            rec_t(0);
        };
        std::function<void(Int)> rec_c = [&](Int from) {
            choose_triples_and_emit();
            if (static_cast<Int>(curves.size()) == bounds.max_curves) return;
            for (Int i = from; i < static_cast<Int>(curve_dom.size()); ++i) {
                curves.push_back(curve_dom[static_cast<size_t>(i)]);
                rec_c(i);
                curves.pop_back();
            }
        };
        std::function<void()> rec_comp = [&]() {
            if (static_cast<Int>(comps.size()) == n) {
                rec_c(0);
                return;
            }
            for (const auto& t : tuples) {
                comps.push_back(t);
                rec_comp();
                comps.pop_back();
            }
        };
        rec_comp();
    }
    return res;
}

}  // namespace snc
