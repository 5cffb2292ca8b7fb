#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snc/config.hpp"

// Dual complex of an SNC configuration (vertices = components, edges = double
// curves, triangles = triple points) and its rational homology via exact
// fraction-free rank computation.

namespace snc {

using BigInt = boost::multiprecision::cpp_int;

/// A Delta-complex: parallel edges between the same vertex pair are allowed,
/// loops are not.
struct DualComplex {
    struct Edge {
        Int id;
        Int tail;  // tail < head
        Int head;
    };
    struct Triangle {
        Int id;
        Int edge_ab;  // indices into edges, on vertices a < b < c
        Int edge_ac;
        Int edge_bc;
    };

    Int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
};

struct BettiVector {
    Int b0 = 0;
    Int b1 = 0;
    Int b2 = 0;

    bool operator==(const BettiVector&) const = default;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
    Int rows = 0;
    Int cols = 0;
    std::vector<BigInt> a;

    IntMatrix(Int r, Int c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    BigInt& at(Int r, Int c) { return a[static_cast<size_t>(r * cols + c)]; }
    const BigInt& at(Int r, Int c) const { return a[static_cast<size_t>(r * cols + c)]; }
};

inline DualComplex build_dual_complex(const Configuration& cfg) {
    DualComplex dc;
    dc.vertex_count = static_cast<Int>(cfg.components.size());

    // dense reindexing of component and curve ids
    std::map<Int, Int> comp_index;
    for (const auto& c : cfg.components)
        comp_index.emplace(c.id, static_cast<Int>(comp_index.size()));
    std::map<Int, Int> curve_index;
    for (const auto& c : cfg.double_curves) {
        Int idx = static_cast<Int>(dc.edges.size());
        curve_index.emplace(c.id, idx);
        dc.edges.push_back({idx, comp_index.at(c.comp_a), comp_index.at(c.comp_b)});
    }
    for (const auto& t : cfg.triple_points) {
        Int idx = static_cast<Int>(dc.triangles.size());
        dc.triangles.push_back({idx, curve_index.at(t.curve_ab), curve_index.at(t.curve_ac),
                                curve_index.at(t.curve_bc)});
    }
    return dc;
}

/// Cellular boundary matrix in degree k. Columns are k-cells, rows are
/// (k-1)-cells. d(edge u->v) = v - u; d(triangle on a<b<c) = bc - ac + ab.
inline IntMatrix boundary_matrix(const DualComplex& dc, int k) {
    if (k == 1) {
        IntMatrix m(dc.vertex_count, static_cast<Int>(dc.edges.size()));
        for (Int j = 0; j < static_cast<Int>(dc.edges.size()); ++j) {
            m.at(dc.edges[static_cast<size_t>(j)].tail, j) -= 1;
            m.at(dc.edges[static_cast<size_t>(j)].head, j) += 1;
        }
        return m;
    }
    if (k == 2) {
        IntMatrix m(static_cast<Int>(dc.edges.size()),
                    static_cast<Int>(dc.triangles.size()));
        for (Int j = 0; j < static_cast<Int>(dc.triangles.size()); ++j) {
            const auto& t = dc.triangles[static_cast<size_t>(j)];
            m.at(t.edge_ab, j) += 1;
            m.at(t.edge_ac, j) -= 1;
            m.at(t.edge_bc, j) += 1;
        }
        return m;
    }
    throw std::invalid_argument("BAD_DEGREE: boundary_matrix expects k in {1,2}");
}

/// Exact rank by fraction-free (Bareiss) elimination.
inline Int exact_rank(IntMatrix m) {
    Int rank = 0;
    BigInt prev = 1;
    for (Int col = 0; col < m.cols && rank < m.rows; ++col) {
        Int pivot = -1;
        for (Int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (Int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        for (Int r = rank + 1; r < m.rows; ++r) {
            for (Int c = col + 1; c < m.cols; ++c)
                m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
            m.at(r, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

inline BettiVector rational_betti(const DualComplex& dc) {
    Int v = dc.vertex_count;
    Int e = static_cast<Int>(dc.edges.size());
    Int t = static_cast<Int>(dc.triangles.size());
    Int r1 = exact_rank(boundary_matrix(dc, 1));
    Int r2 = exact_rank(boundary_matrix(dc, 2));
    return {v - r1, (e - r1) - r2, t - r2};
}

inline bool is_q_homology_point(const DualComplex& dc) {
    return rational_betti(dc) == BettiVector{1, 0, 0};
}

}  // namespace snc
