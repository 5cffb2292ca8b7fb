#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "snc/enumerate.hpp"
#include "snc/fixtures.hpp"

using namespace snc;

namespace {

std::pair<std::string, EnumerationResult> run(const EnumerationBounds& b) {
    std::ostringstream os;
    auto res = enumerate_configs(b, os);
    return {os.str(), res};
}

bool stream_contains_shape_of(const std::string& stream, const Configuration& want) {
    std::istringstream is(stream);
    std::string line;
    while (std::getline(is, line)) {
        auto parsed = parse_configuration(line);
        if (!parsed.ok()) continue;
        Configuration got = *parsed.config;
        got.name = want.name;
        if (got == want) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("single-component bounds emit smooth families") {
    EnumerationBounds b;
    b.max_components = 1;
    b.b2_max = 1;
    b.b1_max = 0;
    b.max_curves = 0;
    auto [stream, res] = run(b);
    CHECK(!res.error);
    CHECK(res.emitted >= 1);
    CHECK(stream_contains_shape_of(stream, fixture_a()));
}

TEST_CASE("FIX-B is found when the bounds admit it") {
    EnumerationBounds b;
    b.max_components = 2;
    b.b2_max = 2;
    b.b1_max = 0;
    b.selfint_min = -1;
    b.selfint_max = 1;
    b.max_curves = 1;
    b.max_triple_points = 0;
    auto [stream, res] = run(b);
    CHECK(!res.error);
    CHECK(stream_contains_shape_of(stream, fixture_b()));
}

TEST_CASE("no 3-cycle configuration is ever emitted") {
    EnumerationBounds b;
    b.max_components = 3;
    b.b2_max = 1;
    b.b1_max = 0;
    b.selfint_min = 0;
    b.selfint_max = 0;
    b.max_curves = 3;
    b.max_triple_points = 0;
    auto [stream, res] = run(b);
    CHECK(!res.error);
    std::istringstream is(stream);
    std::string line;
    while (std::getline(is, line)) {
        auto cfg = *parse_configuration(line).config;
        auto bv = rational_betti(build_dual_complex(cfg));
        CHECK(bv.b1 == 0);  // a 3-cycle would have b1 = 1 and fail C1
    }
}

TEST_CASE("two runs with identical bounds are byte-identical") {
    EnumerationBounds b;
    b.max_components = 2;
    b.b2_max = 2;
    b.max_curves = 1;
    auto [s1, r1] = run(b);
    auto [s2, r2] = run(b);
    CHECK(!r1.error);
    CHECK(s1 == s2);
    CHECK(r1.emitted == r2.emitted);
}

TEST_CASE("isomorphic relabelings are emitted once") {
    // two exceptional components with an asymmetric pair of tuples would
    // otherwise appear twice, once per labeling
    EnumerationBounds b;
    b.max_components = 3;
    b.b2_max = 1;
    b.max_curves = 2;
    b.selfint_min = 0;
    b.selfint_max = 0;
    auto [stream, res] = run(b);
    CHECK(!res.error);
    std::istringstream is(stream);
    std::string line;
    std::vector<Configuration> seen;
    while (std::getline(is, line)) {
        Configuration cfg = *parse_configuration(line).config;
        cfg.name.clear();
        for (const auto& other : seen) {
            // no two emitted configurations may differ only by a relabeling
            // of components 1..n-1
            std::vector<Int> perm(cfg.components.size());
            std::iota(perm.begin(), perm.end(), 0);
            if (other.components.size() == cfg.components.size()) {
                do {
                    CHECK(enum_detail::relabeled_key(cfg, perm) !=
                          enum_detail::relabeled_key(other,
                                                     [&] {
                                                         std::vector<Int> id(perm.size());
                                                         std::iota(id.begin(), id.end(), 0);
                                                         return id;
                                                     }()));
                } while (std::next_permutation(perm.begin() + 1, perm.end()));
            }
        }
        seen.push_back(cfg);
    }
    CHECK(!seen.empty());
}

TEST_CASE("oversized search space is refused") {
    EnumerationBounds b;
    b.max_components = 6;
    b.b2_max = 30;
    b.b1_max = 10;
    b.selfint_min = -10;
    b.selfint_max = 10;
    b.max_curves = 10;
    b.max_triple_points = 5;
    std::ostringstream os;
    auto res = enumerate_configs(b, os);
    REQUIRE(res.error.has_value());
    CHECK(res.error->find("SEARCH_SPACE_TOO_LARGE") != std::string::npos);
    CHECK(os.str().empty());
}
