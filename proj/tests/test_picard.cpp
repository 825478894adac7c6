#include <catch2/catch_amalgamated.hpp>

#include "coxsurf/catalog.hpp"
#include "coxsurf/picard.hpp"

using namespace coxsurf;

namespace {
DivisorClass dc(std::initializer_list<long> v) {
    DivisorClass d;
    int i = 0;
    for (long x : v) d[i++] = x;
    return d;
}
} // namespace

TEST_CASE("intersection pairing") {
    DivisorClass e0 = dc({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(intersect(e0, e0) == 1);
    DivisorClass K = canonical_class();
    CHECK(intersect(K, K) == 0);
    // fiber . fiber-component
    DivisorClass theta1 = dc({1, -1, -1, -1, 0, 0, 0, 0, 0, 0});
    CHECK(intersect(anticanonical_class(), theta1) == 0);
    CHECK(anticanonical_class() == dc({3, -1, -1, -1, -1, -1, -1, -1, -1, -1}));
}

TEST_CASE("lattice is unimodular of signature (1,9)") {
    // Gram matrix of the basis is diag(1,-1,...,-1)
    long det = 1;
    for (int i = 0; i < 10; ++i) {
        DivisorClass ei;
        ei[i] = 1;
        for (int j = 0; j < 10; ++j) {
            DivisorClass ej;
            ej[j] = 1;
            long g = intersect(ei, ej);
            CHECK(g == (i == j ? (i == 0 ? 1 : -1) : 0));
        }
        det *= intersect(ei, ei);
    }
    CHECK(det == -1);
}

TEST_CASE("riemann roch") {
    CHECK(riemann_roch_chi(DivisorClass{}) == 1);
    CHECK(riemann_roch_chi(anticanonical_class()) == 1);
    CHECK(riemann_roch_chi(dc({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})) == 3);
}

TEST_CASE("nef test and harbourne cases against the catalog") {
    auto s = load_surface("X_411");
    auto curves = s.curve_classes();
    DivisorClass mk = anticanonical_class();
    CHECK(is_nef(mk, curves));
    CHECK_FALSE(is_nef(s.curves[0].cls, curves));  // a (-2)-curve
    DivisorClass e0 = dc({1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(is_nef(e0, curves));

    CHECK(harbourne_h1(mk, curves).h1 == 1);
    CHECK(harbourne_h1(2 * mk, curves).h1 == 2);
    CHECK(harbourne_h1(e0, curves).h1 == 0);
    CHECK(harbourne_h1(DivisorClass{}, curves).h1 == 0);
    // -K.D = 1 needs section data: -K + P0 with P0 = e5
    DivisorClass p0 = dc({0, 0, 0, 0, 0, 1, 0, 0, 0, 0});
    auto res = harbourne_h1(mk + p0, curves);
    CHECK(res.needs_section_data);
    CHECK_FALSE(res.h1.has_value());
    CHECK_THROWS_AS(harbourne_h1(s.curves[0].cls, curves), std::invalid_argument);
}

TEST_CASE("section classes have the expected numerology") {
    for (const auto& name : surface_names()) {
        auto s = load_surface(name);
        for (const auto& c : s.curves) {
            if (!c.is_section) continue;
            CHECK(self_intersection(c.cls) == -1);
            CHECK(intersect(c.cls, canonical_class()) == -1);
            CHECK(intersect(c.cls, anticanonical_class()) == 1);
        }
    }
}
