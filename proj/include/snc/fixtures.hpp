#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snc/config.hpp"

// Built-in example configurations. FIX-A is a smooth family; FIX-B is the
// compactified blow-up of a trivial family along a rational curve; FIX-C has
// a 3-cycle dual complex; FIX-D swaps a K3-numerics component into FIX-B;
// FIX-E is a triangle of components with one triple point.

namespace snc {

inline Configuration fixture_a() {
    Configuration cfg;
    cfg.name = "FIX-A";
    cfg.components = {{0, true, 0, 1, 0, 9}};
    return cfg;
}

inline Configuration fixture_b() {
    Configuration cfg;
    cfg.name = "FIX-B";
    cfg.components = {{0, true, 0, 1, 0, 9}, {1, false, 0, 2, 0, 8}};
    cfg.double_curves = {{0, 0, 1, 0, 1, -1}};
    return cfg;
}

inline Configuration fixture_c() {
    Configuration cfg;
    cfg.name = "FIX-C";
    // three components joined in a cycle; exceptional components carry
    // b2 = 4 so the b2 prediction stays non-negative
    cfg.components = {{0, true, 0, 1, 0, 9}, {1, false, 0, 4, 0, 6}, {2, false, 0, 4, 0, 6}};
    cfg.double_curves = {{0, 0, 1, 0, 0, 0}, {1, 0, 2, 0, 0, 0}, {2, 1, 2, 0, 0, 0}};
    return cfg;
}

inline Configuration fixture_d() {
    Configuration cfg;
    cfg.name = "FIX-D";
    cfg.components = {{0, true, 0, 1, 0, 9}, {1, false, 0, 22, 1, 0}};
    cfg.double_curves = {{0, 0, 1, 0, 1, -1}};
    return cfg;
}

inline Configuration fixture_e() {
    Configuration cfg;
    cfg.name = "FIX-E";
    cfg.components = {{0, true, 0, 1, 0, 9}, {1, false, 0, 1, 0, 9}, {2, false, 0, 1, 0, 9}};
    cfg.double_curves = {
        {0, 0, 1, 0, 0, -1},  // C_01
        {1, 0, 2, 0, -1, 0},  // C_02
        {2, 1, 2, 0, 0, -1},  // C_12
    };
    cfg.triple_points = {{0, 0, 1, 2}};
    return cfg;
}

inline std::optional<Configuration> builtin_fixture(const std::string& name) {
    if (name == "FIX-A") return fixture_a();
    if (name == "FIX-B") return fixture_b();
    if (name == "FIX-C") return fixture_c();
    if (name == "FIX-D") return fixture_d();
    if (name == "FIX-E") return fixture_e();
    return std::nullopt;
}

inline std::vector<std::string> fixture_names() {
    return {"FIX-A", "FIX-B", "FIX-C", "FIX-D", "FIX-E"};
}

}  // namespace snc
