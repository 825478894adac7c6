#ifndef COXSURF_SURFACE_HPP
#define COXSURF_SURFACE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxsurf/picard.hpp"

namespace coxsurf {

/// Kodaira fiber type: component multiplicities and intersection graph.
/// Theta_0 is by convention the component met by the zero section.
struct FiberGraph {
    int ncomp = 0;
    std::vector<int> mult;
    std::vector<std::array<int, 3>> edges;  // {i, j, intersection number}
    int euler = 0;
};

inline const FiberGraph& fiber_graph(const std::string& type) {
    static const std::map<std::string, FiberGraph> table = [] {
        std::map<std::string, FiberGraph> t;
        auto cycle = [](int n) {
            FiberGraph g;
            g.ncomp = n;
            g.mult.assign(n, 1);
            if (n == 2) g.edges = {{0, 1, 2}};
            else
                for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, 1});
            g.euler = n;
            return g;
        };
        auto star = [](int n) {
            // I*_n: legs Theta_0, Theta_1 on Theta_2, chain to Theta_{n+2},
            // legs Theta_{n+3}, Theta_{n+4}
            FiberGraph g;
            g.ncomp = n + 5;
            g.mult.assign(n + 5, 2);
            g.mult[0] = g.mult[1] = g.mult[n + 3] = g.mult[n + 4] = 1;
            g.edges = {{0, 2, 1}, {1, 2, 1}};
            for (int i = 2; i < n + 2; ++i) g.edges.push_back({i, i + 1, 1});
            g.edges.push_back({n + 2, n + 3, 1});
            g.edges.push_back({n + 2, n + 4, 1});
            g.euler = n + 6;
            return g;
        };
        t["I1"] = {0, {}, {}, 1};
        for (int n = 2; n <= 9; ++n) t["I" + std::to_string(n)] = cycle(n);
        for (int n = 0; n <= 4; ++n) t["I" + std::to_string(n) + "*"] = star(n);
        t["II"] = {0, {}, {}, 2};
        t["III"] = {2, {1, 1}, {{0, 1, 2}}, 3};
        t["IV"] = {3, {1, 1, 1}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}, 4};
        t["II*"] = {9,
                    {1, 2, 3, 4, 5, 6, 4, 2, 3},
                    {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}, {5, 8, 1}},
                    10};
        t["III*"] = {8,
                     {1, 2, 3, 4, 3, 2, 1, 2},
                     {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {3, 7, 1}},
                     9};
        t["IV*"] = {7,
                    {1, 2, 3, 2, 1, 2, 1},
                    {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {5, 6, 1}},
                    8};
        return t;
    }();
    auto it = table.find(type);
    if (it == table.end()) throw DataError("unknown Kodaira fiber type '" + type + "'");
    return it->second;
}

enum class ColumnKind { Curve, ConicBundle, FiberClass, TypeIV };

inline std::string kind_name(ColumnKind k) {
    switch (k) {
    case ColumnKind::Curve: return "curve";
    case ColumnKind::ConicBundle: return "conic";
    case ColumnKind::FiberClass: return "fiber";
    case ColumnKind::TypeIV: return "iv";
    }
    return "?";
}

/// One labeled negative curve of the surface.
struct CurveRecord {
    std::string label;  // "Th3^1", "P0", "Q1", "P2+Q1", ...
    DivisorClass cls;
    bool is_section = false;
    int fiber = 0;   // 1-based, sections: 0
    int theta = -1;  // component index within its fiber
    int mw_a = 0, mw_b = 0;  // section coefficients: a*P1 + b*Q1
};

/// One column of the Cox presentation (Table-layout order).
struct GenColumn {
    ColumnKind kind;
    DivisorClass cls;
    int curve = -1;  // index into curves when kind == Curve
};

struct SurfaceDescriptor {
    std::string name;
    std::string field;  // "Q" or "Q(e)"
    int mw_n = 1, mw_m = 1;
    std::vector<std::string> fiber_types;
    std::string pencil_a, pencil_b;
    std::optional<std::pair<std::string, std::string>> param;  // e.g. ("a","2")
    std::vector<CurveRecord> curves;
    std::vector<GenColumn> columns;
    int sblock = 0;  // 1-based index of the first exceptional (S) column
    std::vector<std::string> smap;  // plane sections s_i, one per T column; may be empty

    int ncols() const { return int(columns.size()); }
    int t_count() const { return sblock - 1; }

    int mw_order() const { return mw_n * mw_m; }

    const CurveRecord* find_curve(const std::string& label) const {
        for (const auto& c : curves)
            if (c.label == label) return &c;
        return nullptr;
    }

    /// curve indices of fiber f ordered by theta
    std::vector<int> fiber_components(int f) const {
        const FiberGraph& g = fiber_graph(fiber_types.at(f - 1));
        std::vector<int> out(g.ncomp, -1);
        for (int i = 0; i < int(curves.size()); ++i)
            if (curves[i].fiber == f) out.at(curves[i].theta) = i;
        return out;
    }

    std::vector<int> section_indices() const {
        std::vector<int> out;
        for (int i = 0; i < int(curves.size()); ++i)
            if (curves[i].is_section) out.push_back(i);
        return out;
    }

    std::vector<DivisorClass> curve_classes() const {
        std::vector<DivisorClass> out;
        out.reserve(curves.size());
        for (const auto& c : curves) out.push_back(c.cls);
        return out;
    }
};

/// The sixteen extremal surfaces, in the presentation-table order.
inline const std::vector<std::string>& surface_names() {
    static const std::vector<std::string> names = {
        "X_22",  "X_211", "X_411",  "X_9111", "X_33",   "X_321", "X_8211", "X_44",
        "X_431", "X_222", "X_141",  "X_6321", "X_11a",  "X_5511", "X_4422", "X_3333"};
    return names;
}

} // namespace coxsurf

#endif
