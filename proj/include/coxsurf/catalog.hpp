#ifndef COXSURF_CATALOG_HPP
#define COXSURF_CATALOG_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxsurf/poly_io.hpp"
#include "coxsurf/surface.hpp"

namespace coxsurf {

#ifndef COXSURF_BUNDLED_DATA
#define COXSURF_BUNDLED_DATA ""
#endif

/// flag > COXSURF_DATA environment variable > bundled default
inline std::string resolve_data_dir(const std::string& flag_value = "") {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("COXSURF_DATA"); env && *env) return env;
    return COXSURF_BUNDLED_DATA;
}

namespace catdetail {

inline bool parse_section_label(const std::string& label, int& a, int& b) {
    // P0, P3, Q2, P1+Q2
    auto read = [](const std::string& s, int& val) {
        if (s.size() < 2 || (s[0] != 'P' && s[0] != 'Q')) return false;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        val = std::stoi(s.substr(1));
        return true;
    };
    a = b = 0;
    auto plus = label.find('+');
    if (plus == std::string::npos) {
        int v;
        if (!read(label, v)) return false;
        (label[0] == 'P' ? a : b) = v;
        return true;
    }
    std::string l = label.substr(0, plus), r = label.substr(plus + 1);
    int va, vb;
    if (!read(l, va) || !read(r, vb) || l[0] != 'P' || r[0] != 'Q') return false;
    a = va;
    b = vb;
    return true;
}

inline bool parse_theta_label(const std::string& label, int& theta, int& fiber) {
    // Th<i>^<f>
    if (label.rfind("Th", 0) != 0) return false;
    auto caret = label.find('^');
    if (caret == std::string::npos) return false;
    try {
        theta = std::stoi(label.substr(2, caret - 2));
        fiber = std::stoi(label.substr(caret + 1));
    } catch (...) {
        return false;
    }
    return true;
}

} // namespace catdetail

inline SurfaceDescriptor load_surface_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open surface file '" + path + "'");
    SurfaceDescriptor s;
    std::string line;
    int lineno = 0;
    std::map<int, std::string> smap_entries;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        auto fail = [&](const std::string& why) {
            throw DataError(path + ":" + std::to_string(lineno) + ": " + why);
        };
        if (key == "name") ls >> s.name;
        else if (key == "field") ls >> s.field;
        else if (key == "mw") {
            if (!(ls >> s.mw_n >> s.mw_m)) fail("bad mw line");
        } else if (key == "fibers") {
            std::string t;
            while (ls >> t) s.fiber_types.push_back(t);
        } else if (key == "pencil_a") {
            std::getline(ls, s.pencil_a);
        } else if (key == "pencil_b") {
            std::getline(ls, s.pencil_b);
        } else if (key == "param") {
            std::string n, v;
            if (!(ls >> n >> v)) fail("bad param line");
            s.param = {n, v};
        } else if (key == "columns") {
            int n;
            ls >> n;
        } else if (key == "sblock") {
            if (!(ls >> s.sblock)) fail("bad sblock");
        } else if (key == "col") {
            int idx;
            std::string kind, label;
            if (!(ls >> idx >> kind >> label)) fail("bad col line");
            GenColumn col;
            for (int i = 0; i < 10; ++i)
                if (!(ls >> col.cls[i])) fail("bad class vector");
            if (kind == "curve") col.kind = ColumnKind::Curve;
            else if (kind == "conic") col.kind = ColumnKind::ConicBundle;
            else if (kind == "fiber") col.kind = ColumnKind::FiberClass;
            else if (kind == "iv") col.kind = ColumnKind::TypeIV;
            else fail("unknown column kind '" + kind + "'");
            if (col.kind == ColumnKind::Curve) {
                CurveRecord c;
                c.label = label;
                c.cls = col.cls;
                if (catdetail::parse_section_label(label, c.mw_a, c.mw_b)) {
                    c.is_section = true;
                } else if (catdetail::parse_theta_label(label, c.theta, c.fiber)) {
                    c.is_section = false;
                } else {
                    fail("unparsable curve label '" + label + "'");
                }
                col.curve = int(s.curves.size());
                s.curves.push_back(std::move(c));
            }
            if (int(s.columns.size()) + 1 != idx) fail("column indices out of order");
            s.columns.push_back(std::move(col));
        } else if (key == "section") {
            std::string label;
            int a, b;
            if (!(ls >> label >> a >> b)) fail("bad section line");
            bool found = false;
            for (auto& c : s.curves)
                if (c.label == label) {
                    c.mw_a = a;
                    c.mw_b = b;
                    found = true;
                }
            if (!found) fail("section label '" + label + "' has no curve");
        } else if (key == "smap") {
            int idx;
            if (!(ls >> idx)) fail("bad smap line");
            std::string rest;
            std::getline(ls, rest);
            smap_entries[idx] = rest;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!smap_entries.empty()) {
        int m = s.t_count();
        if (int(smap_entries.size()) != m)
            throw DataError(path + ": smap incomplete (" + std::to_string(smap_entries.size()) +
                            " of " + std::to_string(m) + ")");
        for (int i = 1; i <= m; ++i) s.smap.push_back(smap_entries.at(i));
    }
    if (s.name.empty() || s.columns.empty() || s.sblock == 0)
        throw DataError(path + ": incomplete surface file");
    return s;
}

inline SurfaceDescriptor load_surface(const std::string& name, const std::string& data_dir = "") {
    std::string dir = resolve_data_dir(data_dir);
    return load_surface_file(dir + "/surfaces/" + name + ".surf");
}

// ---------------------------------------------------------------------------
// validation

struct ValidationIssue {
    std::string check;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    void add(const std::string& check, const std::string& message) {
        issues.push_back({check, message});
    }
    std::string str() const {
        std::string s;
        for (const auto& i : issues) s += "[" + i.check + "] " + i.message + "\n";
        return s;
    }
};

/// Known section/fiber-component incidences, checked verbatim.
inline const std::vector<std::array<std::string, 2>>* known_incidences(const std::string& name) {
    using Row = std::vector<std::array<std::string, 2>>;
    static const std::map<std::string, Row> table = {
        {"X_411", {{"P1", "Th8^1"}}},
        {"X_9111", {{"P1", "Th3^1"}}},
        {"X_33", {{"P1", "Th6^1"}, {"P1", "Th1^2"}}},
        {"X_321", {{"P1", "Th6^1"}, {"P1", "Th1^2"}}},
        {"X_8211", {{"P1", "Th2^1"}, {"P1", "Th1^2"}}},
        {"X_44", {{"P1", "Th6^1"}, {"P1", "Th1^2"}}},
        {"X_431", {{"P1", "Th6^1"}, {"P1", "Th1^2"}}},
        {"X_222",
         {{"P1", "Th1^1"}, {"P1", "Th1^2"}, {"P1", "Th1^3"},
          {"Q1", "Th6^1"}, {"Q1", "Th1^2"}, {"Q1", "Th0^3"}}},
        {"X_141", {{"P1", "Th5^1"}, {"P1", "Th1^2"}}},
        {"X_6321", {{"P1", "Th1^1"}, {"P1", "Th1^2"}, {"P1", "Th1^3"}}},
        {"X_11a", {{"P1", "Th1^1"}, {"P1", "Th1^2"}, {"Q1", "Th3^1"}, {"Q1", "Th3^2"}}},
        {"X_5511", {{"P1", "Th1^1"}, {"P1", "Th2^2"}}},
        {"X_4422",
         {{"P1", "Th1^1"}, {"P1", "Th1^2"}, {"P1", "Th1^3"}, {"P1", "Th0^4"},
          {"Q1", "Th2^1"}, {"Q1", "Th0^2"}, {"Q1", "Th1^3"}, {"Q1", "Th1^4"}}},
        {"X_3333",
         {{"P1", "Th1^1"}, {"P1", "Th1^2"}, {"P1", "Th1^3"}, {"P1", "Th0^4"},
          {"Q1", "Th1^1"}, {"Q1", "Th2^2"}, {"Q1", "Th0^3"}, {"Q1", "Th1^4"}}},
    };
    auto it = table.find(name);
    return it == table.end() ? nullptr : &it->second;
}

inline ValidationReport validate_surface(const SurfaceDescriptor& s) {
    ValidationReport rep;
    const DivisorClass minus_k = anticanonical_class();

    // (f) curve count: fiber components plus Mordell-Weil order
    int expected = s.mw_order();
    int euler = 0;
    for (const auto& t : s.fiber_types) {
        const FiberGraph& g = fiber_graph(t);
        expected += g.ncomp;
        euler += g.euler;
    }
    if (int(s.curves.size()) != expected)
        rep.add("count", s.name + ": " + std::to_string(s.curves.size()) + " curves, expected " +
                             std::to_string(expected));
    if (euler != 12)
        rep.add("euler", s.name + ": fiber Euler numbers sum to " + std::to_string(euler));

    // (b) numerical type of each curve
    const DivisorClass k = canonical_class();
    for (const auto& c : s.curves) {
        long sq = self_intersection(c.cls), kd = intersect(k, c.cls);
        if (c.is_section && !(sq == -1 && kd == -1))
            rep.add("square", s.name + ": section " + c.label + " has D2=" + std::to_string(sq) +
                                  ", K.D=" + std::to_string(kd));
        if (!c.is_section && !(sq == -2 && kd == 0))
            rep.add("square", s.name + ": component " + c.label + " has D2=" + std::to_string(sq) +
                                  ", K.D=" + std::to_string(kd));
    }

    // (a) per fiber: weighted component sum equals -K; graph matches the type
    for (int f = 1; f <= int(s.fiber_types.size()); ++f) {
        const FiberGraph& g = fiber_graph(s.fiber_types[f - 1]);
        if (g.ncomp == 0) continue;
        std::vector<int> comp;
        try {
            comp = s.fiber_components(f);
        } catch (const std::exception&) {
            rep.add("fiber", s.name + ": fiber " + std::to_string(f) + " component labels broken");
            continue;
        }
        bool missing = false;
        for (int i : comp)
            if (i < 0) missing = true;
        if (missing) {
            rep.add("fiber", s.name + ": fiber " + std::to_string(f) + " has missing components");
            continue;
        }
        DivisorClass sum;
        for (int i = 0; i < g.ncomp; ++i) sum = sum + long(g.mult[i]) * s.curves[comp[i]].cls;
        if (sum != minus_k)
            rep.add("fibersum", s.name + ": fiber " + std::to_string(f) + " weighted sum " +
                                    sum.str() + " != -K");
        // intersection graph, including zero entries
        std::map<std::pair<int, int>, int> want;
        for (const auto& e : g.edges) want[{std::min(e[0], e[1]), std::max(e[0], e[1])}] = e[2];
        for (int i = 0; i < g.ncomp; ++i)
            for (int j = i + 1; j < g.ncomp; ++j) {
                auto it = want.find({i, j});
                long expect = it == want.end() ? 0 : it->second;
                long got = intersect(s.curves[comp[i]].cls, s.curves[comp[j]].cls);
                if (got != expect)
                    rep.add("graph", s.name + ": fiber " + std::to_string(f) + " Th" +
                                         std::to_string(i) + ".Th" + std::to_string(j) + " = " +
                                         std::to_string(got) + ", expected " +
                                         std::to_string(expect));
            }
        // components of distinct fibers never meet
        for (int f2 = f + 1; f2 <= int(s.fiber_types.size()); ++f2) {
            for (const auto& c1 : s.curves)
                for (const auto& c2 : s.curves)
                    if (c1.fiber == f && c2.fiber == f2 && !c1.is_section && !c2.is_section)
                        if (intersect(c1.cls, c2.cls) != 0)
                            rep.add("graph", s.name + ": " + c1.label + " meets " + c2.label);
        }
    }

    // (e) sections pairwise disjoint; (d) one simple incidence per fiber,
    // on a multiplicity-one component, with P0 on Theta_0
    auto secs = s.section_indices();
    for (std::size_t i = 0; i < secs.size(); ++i)
        for (std::size_t j = i + 1; j < secs.size(); ++j) {
            long v = intersect(s.curves[secs[i]].cls, s.curves[secs[j]].cls);
            if (v != 0)
                rep.add("disjoint", s.name + ": sections " + s.curves[secs[i]].label + ", " +
                                        s.curves[secs[j]].label + " meet (" + std::to_string(v) +
                                        ")");
        }
    for (int si : secs) {
        const auto& sec = s.curves[si];
        for (int f = 1; f <= int(s.fiber_types.size()); ++f) {
            const FiberGraph& g = fiber_graph(s.fiber_types[f - 1]);
            if (g.ncomp == 0) continue;
            auto comp = s.fiber_components(f);
            int hits = 0, where = -1;
            for (int i = 0; i < g.ncomp; ++i) {
                long v = intersect(sec.cls, s.curves[comp[i]].cls);
                if (v < 0 || v > 1) {
                    rep.add("incidence", s.name + ": " + sec.label + "." +
                                             s.curves[comp[i]].label + " = " + std::to_string(v));
                } else if (v == 1) {
                    ++hits;
                    where = i;
                }
            }
            if (hits != 1)
                rep.add("incidence", s.name + ": section " + sec.label + " meets fiber " +
                                         std::to_string(f) + " in " + std::to_string(hits) +
                                         " components");
            else {
                if (g.mult[where] != 1)
                    rep.add("incidence", s.name + ": section " + sec.label +
                                             " meets a multiple component of fiber " +
                                             std::to_string(f));
                if (sec.mw_a == 0 && sec.mw_b == 0 && where != 0)
                    rep.add("incidence",
                            s.name + ": zero section off Th0 of fiber " + std::to_string(f));
            }
        }
    }

    // (c) the published incidence subset, verbatim
    if (const auto* rows = known_incidences(s.name)) {
        for (const auto& [sec, comp] : *rows) {
            const CurveRecord* a = s.find_curve(sec);
            const CurveRecord* b = s.find_curve(comp);
            if (!a || !b) {
                rep.add("table3", s.name + ": missing labels " + sec + ", " + comp);
                continue;
            }
            if (intersect(a->cls, b->cls) != 1)
                rep.add("table3", s.name + ": " + sec + "." + comp + " != 1");
        }
    }

    // Mordell-Weil labels form the full group Z/n + Z/m
    {
        std::map<std::pair<int, int>, int> seen;
        for (int si : secs) {
            const auto& c = s.curves[si];
            int aa = ((c.mw_a % s.mw_n) + s.mw_n) % s.mw_n;
            int bb = ((c.mw_b % s.mw_m) + s.mw_m) % s.mw_m;
            seen[{aa, bb}]++;
        }
        if (int(seen.size()) != s.mw_order())
            rep.add("mw", s.name + ": section labels do not exhaust the Mordell-Weil group");
        for (const auto& [key, n] : seen)
            if (n != 1) rep.add("mw", s.name + ": duplicate Mordell-Weil label");
    }

    // columns: the S block must consist of 9 curves with unimodular degrees
    if (s.ncols() - s.sblock + 1 != 9)
        rep.add("sblock", s.name + ": S block is not 9 columns");

    return rep;
}

/// Parse a plane polynomial attached to the surface (pencil forms, section
/// maps), specializing the symbolic parameter when one is declared.
template <class F>
Polynomial<F> parse_plane_poly(const SurfaceDescriptor& s, const std::string& src,
                               const RingPtr& plane) {
    if (!s.param) return parse_poly<F>(plane, src);
    RingPtr ext = make_ring({"x0", "x1", "x2", s.param->first});
    auto p = parse_poly<F>(ext, src);
    std::map<int, Polynomial<F>> sub;
    for (int i = 0; i < 3; ++i) sub[i] = Polynomial<F>::variable(plane, i);
    sub[3] = Polynomial<F>::constant(plane, F(Rational::parse(s.param->second)));
    return p.substitute(sub);
}

/// A + t*B (or B at t = infinity), over the surface coefficient field.
template <class F>
Polynomial<F> pencil_member(const SurfaceDescriptor& s, const std::optional<F>& t,
                            const RingPtr& plane) {
    auto A = parse_plane_poly<F>(s, s.pencil_a, plane);
    auto B = parse_plane_poly<F>(s, s.pencil_b, plane);
    if (!t) return B;
    return A + B.scaled(*t);
}

} // namespace coxsurf

#endif
