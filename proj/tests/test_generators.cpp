#include <catch2/catch_amalgamated.hpp>

#include "coxsurf/catalog.hpp"
#include "coxsurf/generators.hpp"

using namespace coxsurf;

TEST_CASE("generator counts equal the presentation column counts") {
    const std::vector<std::pair<std::string, int>> expected = {
        {"X_22", 13},  {"X_211", 13},  {"X_411", 15}, {"X_9111", 19},
        {"X_33", 13},  {"X_321", 13},  {"X_8211", 18}, {"X_44", 13},
        {"X_431", 13}, {"X_222", 15},  {"X_141", 14}, {"X_6321", 17},
        {"X_11a", 14}, {"X_5511", 15}, {"X_4422", 20}, {"X_3333", 21}};
    for (const auto& [name, n] : expected) {
        auto s = load_surface(name);
        auto g = minimal_generators(s);
        INFO(name);
        CHECK(g.size() == n);
    }
}

TEST_CASE("X_411 generator structure") {
    auto s = load_surface("X_411");
    auto g = minimal_generators(s);
    CHECK(g.size() == 15);
    // six generators of degree not supported on exceptional curves
    CHECK(g.t_count() == 6);
    // the first column is the (-2)-curve of class e0-e1-e2-e3
    CHECK(g.entries[0].label == "Th1^1");
    auto dm = degree_matrix(g, MatrixBasis::E);
    CHECK(dm.cols[0] == std::array<long, 10>{1, -1, -1, -1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("paper basis has unit S columns and matches the reference") {
    for (const auto& name : surface_names()) {
        auto s = load_surface(name);
        auto g = minimal_generators(s);
        auto dm = degree_matrix(g, MatrixBasis::Paper);
        INFO(name);
        for (int k = 0; k < 9; ++k) {
            const auto& col = dm.cols[dm.sblock + k];
            CHECK(col[0] == 0);
            int ones = 0, other = 0;
            for (int r = 1; r < 10; ++r) {
                if (col[r] == 1) ++ones;
                else if (col[r] != 0) ++other;
            }
            CHECK(ones == 1);
            CHECK(other == 0);
        }
        auto ref = catalog_matrix(s, MatrixBasis::Paper);
        auto perm = match_paper_matrix(dm, ref);
        REQUIRE(perm.has_value());
        // a permutation, kind-respecting
        std::vector<char> seen(dm.ncols(), 0);
        for (int c = 0; c < dm.ncols(); ++c) {
            CHECK(!seen[(*perm)[c]]);
            seen[(*perm)[c]] = 1;
            CHECK(dm.kinds[c] == ref.kinds[(*perm)[c]]);
        }
    }
}

TEST_CASE("match_paper_matrix negative and trivial cases") {
    auto s = load_surface("X_411");
    auto dm = catalog_matrix(s, MatrixBasis::Paper);
    auto self = match_paper_matrix(dm, dm);
    REQUIRE(self.has_value());
    // identity is found first
    for (int c = 0; c < dm.ncols(); ++c) CHECK((*self)[c] == c);

    auto other = catalog_matrix(load_surface("X_141"), MatrixBasis::Paper);
    CHECK_FALSE(match_paper_matrix(dm, other).has_value());

    // e-basis input is rejected
    auto ebasis = catalog_matrix(s, MatrixBasis::E);
    CHECK_FALSE(match_paper_matrix(ebasis, dm).has_value());
}

TEST_CASE("fiber columns sum to the anticanonical column") {
    for (const auto& name : surface_names()) {
        auto s = load_surface(name);
        auto g = minimal_generators(s);
        for (int f = 1; f <= int(s.fiber_types.size()); ++f) {
            const FiberGraph& fg = fiber_graph(s.fiber_types[f - 1]);
            if (fg.ncomp == 0) continue;
            DivisorClass sum;
            auto comps = s.fiber_components(f);
            for (int i = 0; i < fg.ncomp; ++i)
                sum = sum + long(fg.mult[i]) * s.curves[comps[i]].cls;
            CHECK(sum == anticanonical_class());
        }
    }
}
