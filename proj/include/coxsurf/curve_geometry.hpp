#ifndef COXSURF_CURVE_GEOMETRY_HPP
#define COXSURF_CURVE_GEOMETRY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxsurf/rational.hpp"
#include "coxsurf/surface.hpp"

namespace coxsurf {

/// Curves of the surface orthogonal to D (indices into s.curves).
inline std::vector<int> orthogonal_complement(const DivisorClass& d, const SurfaceDescriptor& s) {
    std::vector<int> out;
    for (int i = 0; i < int(s.curves.size()); ++i)
        if (intersect(d, s.curves[i].cls) == 0) out.push_back(i);
    return out;
}

enum class CurveSetShape { GeneralizedMinusOne, GeneralizedMinusTwo, Neither };

struct CurveSetClassification {
    CurveSetShape shape = CurveSetShape::Neither;
    /// For a generalized (-1)-curve: component order along the chain, the
    /// (-1)-curve last.
    std::vector<int> chain;
};

namespace curvedetail {

inline bool connected(const std::vector<DivisorClass>& cs) {
    if (cs.empty()) return false;
    std::vector<char> seen(cs.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < int(cs.size()); ++w)
            if (!seen[w] && intersect(cs[v], cs[w]) > 0) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline bool negative_definite(const std::vector<DivisorClass>& cs) {
    // Sylvester: (-1)^k det_k > 0 for all leading principal minors
    const int n = int(cs.size());
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = Rational(intersect(cs[i], cs[j]));
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        // Gaussian elimination tracking the determinant
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!g[r][k].is_zero()) { pivot = r; break; }
        if (pivot < 0) return false;  // singular
        if (pivot != k) {
            std::swap(g[pivot], g[k]);
            det = -det;
        }
        det *= g[k][k];
        // sign of leading minor det_{k+1} so far: product of pivots
        if ((k % 2 == 0) ? det.sgn() >= 0 : det.sgn() <= 0) return false;
        for (int r = k + 1; r < n; ++r) {
            Rational f = g[r][k] / g[k][k];
            for (int c = k; c < n; ++c) g[r][c] -= f * g[k][c];
        }
    }
    return true;
}

} // namespace curvedetail

/// Recognize a connected negative-definite configuration as a generalized
/// (-2)-curve (all components (-2), a Dynkin tree) or a generalized
/// (-1)-curve (a chain of (-2)-curves ending in a single (-1)-curve, or
/// one (-1)-curve alone).  Violated preconditions are reported as errors.
inline CurveSetClassification classify_curve_set(const std::vector<DivisorClass>& cs) {
    if (!curvedetail::connected(cs))
        throw std::invalid_argument("classify_curve_set: configuration not connected");
    if (!curvedetail::negative_definite(cs))
        throw std::invalid_argument("classify_curve_set: intersection form not negative definite");

    std::vector<int> minus_one;
    for (int i = 0; i < int(cs.size()); ++i) {
        long sq = self_intersection(cs[i]);
        if (sq == -1) minus_one.push_back(i);
        else if (sq != -2) return {CurveSetShape::Neither, {}};
    }

    if (minus_one.empty()) return {CurveSetShape::GeneralizedMinusTwo, {}};
    if (minus_one.size() > 1) return {CurveSetShape::Neither, {}};

    // must be a simple chain with the (-1)-curve at one extreme
    const int n = int(cs.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long v = intersect(cs[i], cs[j]);
            if (v > 1) return {CurveSetShape::Neither, {}};
            if (v == 1) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    int e = minus_one[0];
    if (n == 1) return {CurveSetShape::GeneralizedMinusOne, {e}};
    if (adj[e].size() != 1) return {CurveSetShape::Neither, {}};
    std::vector<int> chain = {e};
    int prev = e, cur = adj[e][0];
    while (true) {
        chain.push_back(cur);
        std::vector<int> next;
        for (int w : adj[cur])
            if (w != prev) next.push_back(w);
        if (next.size() > 1) return {CurveSetShape::Neither, {}};
        if (next.empty()) break;
        prev = cur;
        cur = next[0];
    }
    if (int(chain.size()) != n) return {CurveSetShape::Neither, {}};
    std::reverse(chain.begin(), chain.end());  // (-1)-curve last
    return {CurveSetShape::GeneralizedMinusOne, chain};
}

/// A conic-bundle class together with the weighted support of one
/// reducible member (curve index, multiplicity).
struct ConicBundle {
    DivisorClass cls;
    std::vector<std::pair<int, int>> support;
};

namespace curvedetail {

/// Enumerate reducible conic-bundle members: either a chain of (-2)-curves
/// with distinct (-1)-curves at the two ends (all multiplicity one), or a
/// multiplicity-2 chain ending in a multiplicity-2 (-1)-curve with two
/// multiplicity-1 (-2)-curves attached at the other end.
inline std::vector<ConicBundle> reducible_conic_members(const SurfaceDescriptor& s) {
    const int n = int(s.curves.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && intersect(s.curves[i].cls, s.curves[j].cls) == 1) adj[i].push_back(j);

    auto is_section = [&](int i) { return s.curves[i].is_section; };
    std::vector<ConicBundle> found;

    auto push = [&](std::vector<std::pair<int, int>> support) {
        DivisorClass d;
        for (const auto& [i, m] : support) d = d + long(m) * s.curves[i].cls;
        if (self_intersection(d) != 0) return;
        if (intersect(anticanonical_class(), d) != 2) return;
        found.push_back({d, std::move(support)});
    };

    // chains of (-2)-curves between two sections
    for (int a = 0; a < n; ++a) {
        if (!is_section(a)) continue;
        // depth-first over simple (-2)-paths starting beside `a`
        std::vector<int> path;
        std::vector<char> used(n, 0);
        std::function<void(int)> walk = [&](int v) {
            path.push_back(v);
            used[v] = 1;
            for (int w : adj[v]) {
                if (is_section(w)) {
                    if (w > a) {  // each pair once
                        std::vector<std::pair<int, int>> sup;
                        sup.push_back({a, 1});
                        for (int p : path) sup.push_back({p, 1});
                        sup.push_back({w, 1});
                        // interior curves must meet only their chain
                        // neighbours inside the support; the class test
                        // in push() rejects anything else
                        push(std::move(sup));
                    }
                } else if (!used[w]) {
                    walk(w);
                }
            }
            used[v] = 0;
            path.pop_back();
        };
        for (int v : adj[a])
            if (!is_section(v)) walk(v);
    }

    // doubled chains: two mult-1 (-2)-curves at one end, (-1)-curve doubled;
    // the (-2)-chain between them may be empty
    for (int e = 0; e < n; ++e) {
        if (!is_section(e)) continue;
        for (std::size_t x = 0; x < adj[e].size(); ++x)
            for (std::size_t y = x + 1; y < adj[e].size(); ++y) {
                int u = adj[e][x], v = adj[e][y];
                if (is_section(u) || is_section(v)) continue;
                push({{e, 2}, {u, 1}, {v, 1}});
            }
        for (int c0 : adj[e]) {
            if (is_section(c0)) continue;
            // extend a simple (-2)-chain from c0 away from e
            std::vector<int> chain = {c0};
            std::vector<char> used(n, 0);
            used[c0] = 1;
            std::function<void(int)> grow = [&](int head) {
                // try to close: two distinct (-2)-curves meeting the head
                for (std::size_t x = 0; x < adj[head].size(); ++x)
                    for (std::size_t y = x + 1; y < adj[head].size(); ++y) {
                        int u = adj[head][x], v = adj[head][y];
                        if (is_section(u) || is_section(v)) continue;
                        if (used[u] || used[v] || u == e || v == e) continue;
                        std::vector<std::pair<int, int>> sup;
                        sup.push_back({e, 2});
                        for (int p : chain) sup.push_back({p, 2});
                        sup.push_back({u, 1});
                        sup.push_back({v, 1});
                        push(std::move(sup));
                    }
                for (int w : adj[head]) {
                    if (is_section(w) || used[w] || w == e) continue;
                    used[w] = 1;
                    chain.push_back(w);
                    grow(w);
                    chain.pop_back();
                    used[w] = 0;
                }
            };
            grow(c0);
        }
    }
    return found;
}

} // namespace curvedetail

/// Conic bundles whose rational fibration has a unique reducible fiber;
/// exactly these contribute Cox-ring generators.
inline std::vector<ConicBundle> conic_bundles_with_unique_reducible_fiber(
    const SurfaceDescriptor& s) {
    auto members = curvedetail::reducible_conic_members(s);
    std::map<DivisorClass, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < members.size(); ++i) {
        // canonicalize support for deduplication
        auto& sup = members[i].support;
        std::sort(sup.begin(), sup.end());
        by_class[members[i].cls].push_back(i);
    }
    std::vector<ConicBundle> out;
    for (auto& [cls, idxs] : by_class) {
        std::set<std::vector<std::pair<int, int>>> distinct;
        for (auto i : idxs) distinct.insert(members[i].support);
        if (distinct.size() == 1) out.push_back(members[idxs[0]]);
    }
    return out;
}

/// Nef classes with D^2 = 1 and -K.D = 3 whose orthogonal complement
/// contains a generalized (-1)-curve with nine components.  These give the
/// remaining Cox-ring generators (pull-backs of lines under a blow-down
/// contracting a length-nine chain).
inline std::vector<DivisorClass> type_iv_generator_divisors(const SurfaceDescriptor& s) {
    auto curves = s.curve_classes();
    std::vector<DivisorClass> out;

    // enumerate b in Z^9 with sum(b) = 3d-3, sum(b^2) = d^2-1, |b_i| <= 3
    for (long d = 1; d <= 4; ++d) {
        long need_sum = 3 * d - 3, need_sq = d * d - 1;
        DivisorClass cand;
        cand[0] = d;
        std::function<void(int, long, long)> rec = [&](int pos, long sum, long sq) {
            if (sq > need_sq) return;
            if (pos == 10) {
                if (sum != need_sum || sq != need_sq) return;
                bool nef = true;
                for (const auto& c : curves)
                    if (intersect(cand, c) < 0) nef = false;
                if (!nef) return;
                // orthogonal complement must contain a 9-component
                // generalized (-1)-curve
                auto perp = orthogonal_complement(cand, s);
                if (perp.size() < 9) return;
                // split into connected components
                std::vector<char> seen(perp.size(), 0);
                for (std::size_t st = 0; st < perp.size(); ++st) {
                    if (seen[st]) continue;
                    std::vector<std::size_t> comp = {st};
                    seen[st] = 1;
                    for (std::size_t qi = 0; qi < comp.size(); ++qi)
                        for (std::size_t w = 0; w < perp.size(); ++w)
                            if (!seen[w] &&
                                intersect(s.curves[perp[comp[qi]]].cls, s.curves[perp[w]].cls) > 0) {
                                seen[w] = 1;
                                comp.push_back(w);
                            }
                    if (comp.size() != 9) continue;
                    std::vector<DivisorClass> cfg;
                    for (auto ci : comp) cfg.push_back(s.curves[perp[ci]].cls);
                    try {
                        auto cls = classify_curve_set(cfg);
                        if (cls.shape == CurveSetShape::GeneralizedMinusOne &&
                            cls.chain.size() == 9) {
                            out.push_back(cand);
                            return;
                        }
                    } catch (const std::invalid_argument&) {
                    }
                }
                return;
            }
            long remaining = 10 - pos;
            for (long b = -3; b <= 3; ++b) {
                // crude pruning: remaining coordinates can still reach the sum
                long lo = sum + b - 3 * (remaining - 1), hi = sum + b + 3 * (remaining - 1);
                if (need_sum < lo || need_sum > hi) continue;
                cand[pos] = -b;
                rec(pos + 1, sum + b, sq + b * b);
            }
            cand[pos] = 0;
        };
        rec(1, 0, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Count of reducible fibers of the elliptic fibration itself.
inline int reducible_fiber_count(const SurfaceDescriptor& s) {
    int n = 0;
    for (const auto& t : s.fiber_types)
        if (fiber_graph(t).ncomp > 0) ++n;
    return n;
}

} // namespace coxsurf

#endif
