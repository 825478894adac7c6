#ifndef COXSURF_GENERATORS_HPP
#define COXSURF_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coxsurf/curve_geometry.hpp"
#include "coxsurf/rational.hpp"

namespace coxsurf {

struct GeneratorEntry {
    std::string label;  // curve label, or "-" for the computed classes
    ColumnKind kind;
    DivisorClass cls;
};

/// Minimal Cox-ring generator set in presentation order.  The final nine
/// entries are the designated exceptional (S) generators, whose degrees
/// form a basis of the K_S summand.
struct GeneratorSet {
    std::vector<GeneratorEntry> entries;
    int sblock = 0;  // 0-based index of the first S entry

    int size() const { return int(entries.size()); }
    int t_count() const { return sblock; }
};

/// Assemble the minimal generators: every negative curve, one class of
/// degree -K when the elliptic fibration has a unique reducible fiber, one
/// class per conic bundle with a unique reducible fiber, and the nef
/// classes of square one contracting a length-nine chain.  The result is
/// ordered like the catalog presentation; any disagreement between the
/// computed classes and the catalog columns is a data error.
inline GeneratorSet minimal_generators(const SurfaceDescriptor& s) {
    struct Item {
        ColumnKind kind;
        DivisorClass cls;
        int curve = -1;
        bool used = false;
    };
    std::vector<Item> items;
    for (int i = 0; i < int(s.curves.size()); ++i)
        items.push_back({ColumnKind::Curve, s.curves[i].cls, i, false});
    if (reducible_fiber_count(s) == 1)
        items.push_back({ColumnKind::FiberClass, anticanonical_class(), -1, false});
    for (const auto& cb : conic_bundles_with_unique_reducible_fiber(s))
        items.push_back({ColumnKind::ConicBundle, cb.cls, -1, false});
    for (const auto& d : type_iv_generator_divisors(s))
        items.push_back({ColumnKind::TypeIV, d, -1, false});

    if (int(items.size()) != s.ncols())
        throw DataError(s.name + ": computed " + std::to_string(items.size()) +
                        " generators, catalog has " + std::to_string(s.ncols()) + " columns");

    GeneratorSet out;
    out.sblock = s.sblock - 1;
    for (const auto& col : s.columns) {
        int found = -1;
        for (int i = 0; i < int(items.size()); ++i) {
            if (items[i].used || items[i].kind != col.kind) continue;
            if (col.kind == ColumnKind::Curve ? items[i].curve == col.curve
                                              : items[i].cls == col.cls) {
                found = i;
                break;
            }
        }
        if (found < 0)
            throw DataError(s.name + ": catalog column " + col.cls.str() +
                            " not produced by the generator enumeration");
        items[found].used = true;
        std::string label = col.kind == ColumnKind::Curve ? s.curves[col.curve].label : "-";
        out.entries.push_back({label, col.kind, col.cls});
    }
    return out;
}

enum class MatrixBasis { E, Paper };

/// Degrees of the generators as a 10 x N integer matrix.  In the e-basis
/// the rows are plain class coordinates; in the paper basis the first row
/// is the e0-coefficient and the lower nine rows are coordinates in the
/// basis of K_S given by the S-generator degrees, so every S column is a
/// unit vector.
struct DegreeMatrix {
    MatrixBasis basis = MatrixBasis::E;
    std::vector<std::array<long, 10>> cols;
    std::vector<ColumnKind> kinds;
    int sblock = 0;

    int ncols() const { return int(cols.size()); }

    std::string str() const {
        std::string out;
        for (int r = 0; r < 10; ++r) {
            for (int c = 0; c < ncols(); ++c) {
                out += std::to_string(cols[c][r]);
                out += (c + 1 == ncols()) ? "\n" : " ";
            }
        }
        return out;
    }
};

namespace gendetail {

/// Solve M x = rhs over the integers, where M is the unimodular 9x9 matrix
/// of S-degree coordinates (rows e1..e9).
class SBasisSolver {
public:
    explicit SBasisSolver(const std::vector<DivisorClass>& sdegs) {
        if (sdegs.size() != 9) throw DataError("S block must have nine columns");
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) m_[r][c] = Rational(sdegs[c][r + 1]);
        // LU-style elimination with full row pivoting, exact over Q
        for (int c = 0; c < 9; ++c) id_[c][c] = Rational(1);
        for (int col = 0; col < 9; ++col) {
            int piv = -1;
            for (int r = col; r < 9; ++r)
                if (!m_[r][col].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) throw DataError("S degrees do not form a basis");
            std::swap(m_[piv], m_[col]);
            std::swap(id_[piv], id_[col]);
            Rational inv = m_[col][col].inverse();
            for (int c = 0; c < 9; ++c) {
                m_[col][c] *= inv;
                id_[col][c] *= inv;
            }
            for (int r = 0; r < 9; ++r) {
                if (r == col || m_[r][col].is_zero()) continue;
                Rational f = m_[r][col];
                for (int c = 0; c < 9; ++c) {
                    m_[r][c] -= f * m_[col][c];
                    id_[r][c] -= f * id_[col][c];
                }
            }
        }
    }

    /// coordinates of (cls - d*e0) in the S-degree basis; must be integral
    std::array<long, 9> solve(const DivisorClass& cls) const {
        std::array<long, 9> out{};
        for (int r = 0; r < 9; ++r) {
            Rational acc;
            for (int c = 0; c < 9; ++c) acc += id_[r][c] * Rational(cls[c + 1]);
            if (acc.denominator() != 1)
                throw DataError("class is not integral in the S-degree basis");
            out[r] = acc.numerator().get_si();
        }
        return out;
    }

private:
    std::array<std::array<Rational, 9>, 9> m_{};
    std::array<std::array<Rational, 9>, 9> id_{};
};

} // namespace gendetail

inline DegreeMatrix degree_matrix(const GeneratorSet& g, MatrixBasis basis) {
    DegreeMatrix dm;
    dm.basis = basis;
    dm.sblock = g.sblock;
    for (const auto& e : g.entries) dm.kinds.push_back(e.kind);
    if (basis == MatrixBasis::E) {
        for (const auto& e : g.entries) dm.cols.push_back(e.cls.c);
        return dm;
    }
    std::vector<DivisorClass> sdegs;
    for (int i = g.sblock; i < g.size(); ++i) sdegs.push_back(g.entries[i].cls);
    gendetail::SBasisSolver solver(sdegs);
    for (const auto& e : g.entries) {
        std::array<long, 10> col{};
        col[0] = e.cls[0];
        auto cs = solver.solve(e.cls);
        for (int r = 0; r < 9; ++r) col[r + 1] = cs[r];
        dm.cols.push_back(col);
    }
    return dm;
}

/// Find a column permutation (computed -> reference) together with a row
/// permutation of the K_S block making the two paper-basis matrices equal;
/// kinds must correspond.  Returns the column permutation, or nothing.
inline std::optional<std::vector<int>> match_paper_matrix(const DegreeMatrix& computed,
                                                          const DegreeMatrix& reference) {
    if (computed.basis != MatrixBasis::Paper || reference.basis != MatrixBasis::Paper)
        return std::nullopt;
    if (computed.ncols() != reference.ncols() || computed.sblock != reference.sblock)
        return std::nullopt;
    const int n = computed.ncols(), sb = computed.sblock;

    auto unit_row = [](const std::array<long, 10>& col) {
        int row = -1;
        for (int r = 1; r < 10; ++r) {
            if (col[r] == 0) continue;
            if (col[r] != 1 || row != -1) return -1;
            row = r;
        }
        return col[0] == 0 ? row : -1;
    };
    std::array<int, 9> crow{}, rrow{};
    for (int k = 0; k < 9; ++k) {
        crow[k] = unit_row(computed.cols[sb + k]);
        rrow[k] = unit_row(reference.cols[sb + k]);
        if (crow[k] < 0 || rrow[k] < 0) return std::nullopt;
    }

    // invariant under K_S row permutations: (kind, e0-coefficient,
    // multiset of lower coordinates)
    auto profile = [](const DegreeMatrix& m, int c) {
        std::vector<long> p(m.cols[c].begin() + 1, m.cols[c].end());
        std::sort(p.begin(), p.end());
        return std::tuple(m.kinds[c], m.cols[c][0], p);
    };
    {
        std::vector<decltype(profile(computed, 0))> a, b;
        for (int c = 0; c < sb; ++c) {
            a.push_back(profile(computed, c));
            b.push_back(profile(reference, c));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    std::vector<int> sperm(9);
    std::iota(sperm.begin(), sperm.end(), 0);
    do {
        // sperm: computed S column k matches reference S column sperm[k]
        std::array<int, 10> rho{};  // computed row -> reference row
        rho[0] = 0;
        for (int k = 0; k < 9; ++k) rho[crow[k]] = rrow[sperm[k]];
        // transform computed T columns and match them greedily
        std::vector<char> taken(sb, 0);
        std::vector<int> perm(n, -1);
        bool ok = true;
        for (int c = 0; c < sb && ok; ++c) {
            std::array<long, 10> t{};
            for (int r = 0; r < 10; ++r) t[rho[r]] = computed.cols[c][r];
            ok = false;
            for (int rc = 0; rc < sb; ++rc) {
                if (taken[rc] || reference.kinds[rc] != computed.kinds[c]) continue;
                if (reference.cols[rc] == t) {
                    taken[rc] = 1;
                    perm[c] = rc;
                    ok = true;
                    break;
                }
            }
        }
        if (ok) {
            for (int k = 0; k < 9; ++k) perm[sb + k] = sb + sperm[k];
            return perm;
        }
    } while (std::next_permutation(sperm.begin(), sperm.end()));
    return std::nullopt;
}

/// Catalog columns as a DegreeMatrix (the published reference layout).
inline DegreeMatrix catalog_matrix(const SurfaceDescriptor& s, MatrixBasis basis) {
    GeneratorSet g;
    g.sblock = s.sblock - 1;
    for (const auto& col : s.columns) {
        std::string label = col.kind == ColumnKind::Curve ? s.curves[col.curve].label : "-";
        g.entries.push_back({label, col.kind, col.cls});
    }
    return degree_matrix(g, basis);
}

} // namespace coxsurf

#endif
