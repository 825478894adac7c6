#include <catch2/catch_amalgamated.hpp>

#include "coxsurf/catalog.hpp"

using namespace coxsurf;

TEST_CASE("all sixteen descriptors load and validate") {
    for (const auto& name : surface_names()) {
        auto s = load_surface(name);
        CHECK(s.name == name);
        auto rep = validate_surface(s);
        INFO(name << "\n" << rep.str());
        CHECK(rep.ok());
    }
}

TEST_CASE("headline catalog facts") {
    auto x3333 = load_surface("X_3333");
    CHECK(x3333.mw_n == 3);
    CHECK(x3333.mw_m == 3);
    CHECK(x3333.fiber_types == std::vector<std::string>{"I3", "I3", "I3", "I3"});
    CHECK(x3333.field == "Q(e)");

    auto x411 = load_surface("X_411");
    const CurveRecord* th1 = x411.find_curve("Th1^1");
    REQUIRE(th1);
    DivisorClass expect;
    expect.c = {1, -1, -1, -1, 0, 0, 0, 0, 0, 0};
    CHECK(th1->cls == expect);

    auto x22 = load_surface("X_22");
    CHECK(x22.fiber_types == std::vector<std::string>{"II*", "II"});
    CHECK(x22.mw_order() == 1);

    // X_6321: 11 components + 6 sections
    auto x6321 = load_surface("X_6321");
    CHECK(x6321.curves.size() == 17);
    CHECK(x6321.section_indices().size() == 6);
}

TEST_CASE("column counts match the presentation table") {
    const std::map<std::string, int> expected = {
        {"X_22", 13},  {"X_211", 13},  {"X_411", 15}, {"X_9111", 19},
        {"X_33", 13},  {"X_321", 13},  {"X_8211", 18}, {"X_44", 13},
        {"X_431", 13}, {"X_222", 15},  {"X_141", 14}, {"X_6321", 17},
        {"X_11a", 14}, {"X_5511", 15}, {"X_4422", 20}, {"X_3333", 21}};
    for (const auto& [name, n] : expected) {
        auto s = load_surface(name);
        CHECK(s.ncols() == n);
        CHECK(s.ncols() - s.sblock + 1 == 9);
    }
}

TEST_CASE("pencil members") {
    auto x3333 = load_surface("X_3333");
    auto plane = make_plane_ring();
    auto at0 = pencil_member<Rational>(x3333, Rational(0), plane);
    CHECK(at0 == parse_poly<Rational>(plane, "x0^3+x1^3+x2^3"));

    auto x411 = load_surface("X_411");
    CHECK(pencil_member<Rational>(x411, Rational(0), plane) ==
          parse_poly<Rational>(plane, "x0^2*x1+x2^3+x1^2*x2"));
    // t = infinity gives the other pencil generator
    CHECK(pencil_member<Rational>(x411, std::nullopt, plane) ==
          parse_poly<Rational>(plane, "x1*x2^2"));
    // A + 0*B = A holds for every surface
    for (const auto& name : surface_names()) {
        auto s = load_surface(name);
        auto a = pencil_member<Rational>(s, Rational(0), plane);
        CHECK_FALSE(a.is_zero());
    }
    // the symbolic parameter is specialized in computations
    auto x11a = load_surface("X_11a");
    REQUIRE(x11a.param.has_value());
    CHECK(pencil_member<Rational>(x11a, std::nullopt, plane) ==
          parse_poly<Rational>(plane, "x0^2*x1-2*x0^2*x2"));
}

TEST_CASE("validator flags corrupted data") {
    auto s = load_surface("X_411");
    // make two sections meet
    auto bad = s;
    for (auto& c : bad.curves)
        if (c.label == "P1") c.cls = bad.find_curve("P0")->cls;
    auto rep = validate_surface(bad);
    CHECK_FALSE(rep.ok());
    bool saw_disjoint = false;
    for (const auto& i : rep.issues)
        if (i.check == "disjoint" || i.check == "mw" || i.check == "incidence")
            saw_disjoint = true;
    CHECK(saw_disjoint);

    // break a fiber sum
    auto bad2 = s;
    bad2.curves[0].cls[1] += 1;
    CHECK_FALSE(validate_surface(bad2).ok());

    CHECK_THROWS_AS(load_surface("NOPE"), DataError);
}
