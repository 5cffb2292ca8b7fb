#pragma once

#include <string>
#include <vector>

#include "snc/config.hpp"
#include "snc/dual_complex.hpp"
#include "snc/strata.hpp"

// First page of the weight spectral sequence of the degeneration, assembled
// as a dimension grid with Tate-twist annotations, plus the dimension
// constraints forced by trivial monodromy and the resulting generic-fibre
// predictions.

namespace snc {

/// One direct summand H^m(E(n))(-twist) placed in a cell of the first page.
struct PageSummand {
    int depth = 0;      // n: stratum depth
    int degree = 0;     // m: cohomological degree
    Int twist = 0;      // Tate twist, recorded as -twist
    Int dimension = 0;

    bool operator==(const PageSummand&) const = default;
};

struct SteenbrinkPage {
    static constexpr int col_min = -2;
    static constexpr int col_max = 2;
    static constexpr int row_max = 4;

    // cells[col - col_min][row]
    std::vector<PageSummand> cells[5][5];

    const std::vector<PageSummand>& cell(int col, int row) const {
        return cells[col - col_min][row];
    }
    Int cell_dimension(int col, int row) const {
        Int d = 0;
        for (const auto& s : cell(col, row)) d += s.dimension;
        return d;
    }
};

/// Populates the grid from the indexing law of the first page: the cell in
/// column -r, row q+r collects H^{q-r-2k}(E(r+2k+1)) with twist -(r+k) for
/// all k >= max(0, -r).
inline SteenbrinkPage build_e1_page(const Configuration& cfg) {
    StrataTable st = strata_cohomology(cfg);
    SteenbrinkPage page;
    for (int col = SteenbrinkPage::col_min; col <= SteenbrinkPage::col_max; ++col) {
        int r = -col;
        for (int row = 0; row <= SteenbrinkPage::row_max; ++row) {
            int q = row - r;
            for (int k = std::max(0, -r);; ++k) {
                int depth = r + 2 * k + 1;
                int degree = q - r - 2 * k;
                if (degree < 0) break;
                if (depth < 1 || depth > 3) {
                    if (depth > 3) break;
                    continue;
                }
                Int dim = st.at(depth, degree <= 4 ? degree : 4);
                if (degree > 4) dim = 0;
                // keep zero-dimension summands out of the grid
                if (dim != 0)
                    page.cells[col - SteenbrinkPage::col_min][row].push_back(
                        {depth, degree, static_cast<Int>(r + k), dim});
            }
        }
    }
    return page;
}

inline Int page_euler_characteristic(const SteenbrinkPage& page) {
    Int s = 0;
    for (int col = SteenbrinkPage::col_min; col <= SteenbrinkPage::col_max; ++col)
        for (int row = 0; row <= SteenbrinkPage::row_max; ++row) {
            Int d = page.cell_dimension(col, row);
            s += ((col + row) % 2 == 0) ? d : -d;
        }
    return s;
}

enum class ConditionKind { Equality, Inequality };

struct MonodromyCondition {
    std::string id;
    ConditionKind kind = ConditionKind::Equality;
    Int lhs = 0;
    Int rhs = 0;
    bool satisfied = false;
    std::string description;
};

/// Predicted second Betti number of the nearby fibre from the middle row of
/// the page concentrating in column 0.
inline Int predicted_b2(const Configuration& cfg) {
    StrataTable st = strata_cohomology(cfg);
    return st.at(1, 2) + st.at(3, 0) - 2 * st.at(2, 0);
}

/// The dimension equalities/inequalities forced on the first page by trivial
/// monodromy (second page concentrated in column 0, converging to the
/// cohomology of a connected smooth projective surface).
inline std::vector<MonodromyCondition> trivial_monodromy_conditions(const Configuration& cfg) {
    StrataTable st = strata_cohomology(cfg);
    const ComponentSurface* e0 = cfg.component(0);
    Int b1_e0 = e0 ? e0->b1 : 0;
    std::vector<MonodromyCondition> out;

    BettiVector bv = rational_betti(build_dual_complex(cfg));
    Int r0_residual = (bv.b0 - 1) + bv.b1 + bv.b2;
    out.push_back({"R0", ConditionKind::Equality, r0_residual, 0, r0_residual == 0,
                   "bottom row exact: dual complex has the rational homology of a point"});

    Int r4 = st.at(1, 0) - st.at(2, 0) + st.at(3, 0);
    out.push_back({"R4", ConditionKind::Equality, r4, 1, r4 == 1,
                   "top row exact with H^4 of the fibre one-dimensional"});

    Int r1 = st.at(1, 1) - st.at(2, 1);
    out.push_back({"R1", ConditionKind::Equality, r1, b1_e0, r1 == b1_e0,
                   "row 1 surjective: b1 of the fibre equals b1 of the strict transform"});
    out.push_back({"R1i", ConditionKind::Inequality, st.at(2, 1), st.at(1, 1),
                   st.at(2, 1) <= st.at(1, 1),
                   "row 1: H^1(E(1)) -> H^1(E(2)) surjective"});

    out.push_back({"R3", ConditionKind::Equality, r1, b1_e0, r1 == b1_e0,
                   "row 3, dual to row 1"});

    Int b2p = predicted_b2(cfg);
    out.push_back({"R2", ConditionKind::Inequality, b2p, 0, b2p >= 0,
                   "row 2 exact at column 0: predicted b2 of the fibre is non-negative"});
    return out;
}

struct FibrePrediction {
    Int b0 = 1;
    Int b1 = 0;
    Int b2 = 0;
    Int b3 = 0;
    Int b4 = 1;
    Int k2 = 0;
    Int chi_O = 0;
    Int chi_top = 0;
    bool noether_consistent = false;
};

/// Predicted invariants of the generic fibre; b2 may come out negative on
/// inadmissible input and is reported as-is.
inline FibrePrediction predict_generic_fibre(const Configuration& cfg) {
    FibrePrediction p;
    const ComponentSurface* e0 = cfg.component(0);
    p.b1 = p.b3 = e0 ? e0->b1 : 0;
    p.b2 = predicted_b2(cfg);
    p.chi_top = page_euler_characteristic(build_e1_page(cfg));
    p.k2 = (e0 ? e0->k2 + e0->b2 : 0) - p.b2;
    p.chi_O = chi_O_central_fibre(cfg);
    p.noether_consistent = (12 * p.chi_O == p.k2 + p.chi_top);
    return p;
}

}  // namespace snc
