#pragma once

#include <array>

#include "snc/config.hpp"

// Stratum-level cohomology dimension tables for E(1) (surfaces), E(2)
// (double curves) and E(3) (triple points), and the Euler-characteristic
// bookkeeping they feed.

namespace snc {

/// dims[n-1][m] = total m-th Betti number of the depth-n stratum E(n).
struct StrataTable {
    std::array<std::array<Int, 5>, 3> dims{};

    Int at(int depth, int degree) const { return dims[static_cast<size_t>(depth - 1)][static_cast<size_t>(degree)]; }
};

inline StrataTable strata_cohomology(const Configuration& cfg) {
    StrataTable t;
    for (const auto& c : cfg.components) {
        t.dims[0][0] += 1;
        t.dims[0][1] += c.b1;
        t.dims[0][2] += c.b2;
        t.dims[0][3] += c.b1;  // Poincare duality per component
        t.dims[0][4] += 1;
    }
    for (const auto& c : cfg.double_curves) {
        t.dims[1][0] += 1;
        t.dims[1][1] += c.b1;
        t.dims[1][2] += 1;
    }
    t.dims[2][0] = static_cast<Int>(cfg.triple_points.size());
    return t;
}

/// chi(O_E) by inclusion-exclusion over the strata.
inline Int chi_O_central_fibre(const Configuration& cfg) {
    Int s = 0;
    for (const auto& c : cfg.components) s += hodge_summary(c).chi_O;
    for (const auto& c : cfg.double_curves) s -= chi_O_of_curve(c);
    return s + static_cast<Int>(cfg.triple_points.size());
}

inline Int chi_top_central_fibre(const Configuration& cfg) {
    Int s = 0;
    for (const auto& c : cfg.components) s += hodge_summary(c).chi_top;
    for (const auto& c : cfg.double_curves) s -= chi_top_of_curve(c);
    return s + static_cast<Int>(cfg.triple_points.size());
}

/// chi_top of the nearby fibre: each depth-n open stratum of the central
/// fibre is covered n times, so chi = sum of chi of the open depth-1 strata.
inline Int chi_top_nearby_fibre(const Configuration& cfg) {
    Int s = 0;
    for (const auto& c : cfg.components) s += hodge_summary(c).chi_top;
    for (const auto& c : cfg.double_curves) s -= 2 * chi_top_of_curve(c);
    return s + 3 * static_cast<Int>(cfg.triple_points.size());
}

}  // namespace snc
