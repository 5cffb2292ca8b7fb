#pragma once

// Independent reference for rational homology of a Delta-complex: plain
// Gaussian elimination over boost::rational, with a union-find cross-check
// for b0. Deliberately shares no code with snc::exact_rank.

#include <numeric>
#include <vector>

#include <boost/rational.hpp>

#include "snc/dual_complex.hpp"

namespace oracle {

using Rat = boost::rational<long long>;
using Mat = std::vector<std::vector<Rat>>;

inline long long rank_gauss(Mat m) {
    if (m.empty() || m[0].empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == Rat(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Rat p = m[rank][col];
        for (size_t c = col; c < cols; ++c) m[rank][c] /= p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == Rat(0)) continue;
            Rat f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

inline Mat to_rational(const snc::IntMatrix& m) {
    Mat out(static_cast<size_t>(m.rows), std::vector<Rat>(static_cast<size_t>(m.cols)));
    for (snc::Int r = 0; r < m.rows; ++r)
        for (snc::Int c = 0; c < m.cols; ++c)
            out[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                Rat(m.at(r, c).convert_to<long long>());
    return out;
}

inline snc::BettiVector betti_reference(const snc::DualComplex& dc) {
    long long v = dc.vertex_count;
    long long e = static_cast<long long>(dc.edges.size());
    long long t = static_cast<long long>(dc.triangles.size());
    long long r1 = rank_gauss(to_rational(snc::boundary_matrix(dc, 1)));
    long long r2 = rank_gauss(to_rational(snc::boundary_matrix(dc, 2)));
    return {v - r1, (e - r1) - r2, t - r2};
}

inline long long components_union_find(const snc::DualComplex& dc) {
    std::vector<long long> parent(static_cast<size_t>(dc.vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long long(long long)> find = [&](long long x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const auto& e : dc.edges) parent[static_cast<size_t>(find(e.tail))] = find(e.head);
    long long n = 0;
    for (long long i = 0; i < dc.vertex_count; ++i)
        if (find(i) == i) ++n;
    return n;
}

}  // namespace oracle
