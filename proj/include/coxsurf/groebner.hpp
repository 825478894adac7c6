#ifndef COXSURF_GROEBNER_HPP
#define COXSURF_GROEBNER_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "coxsurf/poly_io.hpp"
#include "coxsurf/polynomial.hpp"

namespace coxsurf {

struct GroebnerConfig {
    long budget = 1'000'000;  // reduction steps per basis computation
    std::string stage = "groebner";
};

namespace gbdetail {

template <class F>
using TermVec = std::vector<Term<F>>;  // sorted descending by the active order

template <class F>
TermVec<F> to_ordered(const Polynomial<F>& p, const MonomialOrder& o) {
    TermVec<F> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&](const Term<F>& a, const Term<F>& b) { return o.greater(a.mono, b.mono); });
    return v;
}

template <class F>
Polynomial<F> from_ordered(const RingPtr& ring, const TermVec<F>& v) {
    return Polynomial<F>::from_terms(ring, v);
}

/// r = p - c * m * g, assuming both inputs sorted by o.
template <class F>
TermVec<F> sub_scaled(const TermVec<F>& p, const TermVec<F>& g, const Monomial& m, const F& c,
                      const MonomialOrder& o) {
    TermVec<F> r;
    r.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < p.size() || j < g.size()) {
        if (j == g.size()) {
            r.push_back(p[i++]);
            continue;
        }
        Monomial gm = g[j].mono * m;
        if (i == p.size()) {
            r.push_back({std::move(gm), -(g[j].coeff * c)});
            ++j;
            continue;
        }
        int cmp = o.compare(p[i].mono, gm);
        if (cmp > 0) r.push_back(p[i++]);
        else if (cmp < 0) {
            r.push_back({std::move(gm), -(g[j].coeff * c)});
            ++j;
        } else {
            F s = p[i].coeff - g[j].coeff * c;
            if (!s.is_zero()) r.push_back({p[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    return r;
}

template <class F>
struct BasisElem {
    TermVec<F> poly;  // monic, sorted descending
    Monomial lt;
};

template <class F>
class Engine {
public:
    Engine(RingPtr ring, MonomialOrder order, GroebnerConfig cfg)
        : ring_(std::move(ring)), order_(std::move(order)), cfg_(std::move(cfg)) {}

    /// Full normal form against the current basis; deterministic
    /// (first dividing basis element in index order wins).
    TermVec<F> reduce(TermVec<F> p, bool full = true) {
        TermVec<F> out;
        while (!p.empty()) {
            int gi = find_reductor(p.front().mono);
            if (gi < 0) {
                if (!full) return stitch(std::move(out), std::move(p));
                out.push_back(p.front());
                p.erase(p.begin());
                continue;
            }
            step();
            const auto& g = basis_[gi];
            Monomial q = p.front().mono.div(g.lt);
            p = sub_scaled(p, g.poly, q, p.front().coeff, order_);
        }
        return stitch(std::move(out), std::move(p));
    }

    /// Install polynomials as reducers without running completion.
    void load(const std::vector<Polynomial<F>>& polys) {
        for (const auto& g : polys)
            if (!g.is_zero()) insert(to_ordered(g, order_));
    }

    void run(const std::vector<Polynomial<F>>& gens) {
        for (const auto& g : gens) insert(to_ordered(g, order_));
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j) push_pair(int(i), int(j));

        while (!pairs_.empty()) {
            auto [deg, i, j] = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            pending_.erase({i, j});
            const Monomial &li = basis_[i].lt, &lj = basis_[j].lt;
            if (li.coprime(lj)) continue;  // Buchberger product criterion
            Monomial L = lcm(li, lj);
            if (chain_criterion(i, j, L)) continue;
            TermVec<F> s = spair(i, j, L);
            TermVec<F> r = reduce(std::move(s));
            if (!r.empty()) {
                int k = insert(std::move(r));
                for (int t = 0; t < k; ++t) push_pair(t, k);
            }
        }
        make_reduced();
    }

    std::vector<Polynomial<F>> result() const {
        std::vector<Polynomial<F>> out;
        out.reserve(basis_.size());
        for (const auto& b : basis_) out.push_back(from_ordered(ring_, b.poly));
        return out;
    }

    long steps() const { return steps_; }

private:
    static TermVec<F> stitch(TermVec<F> a, TermVec<F> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    void step() {
        if (++steps_ > cfg_.budget) throw BudgetExceeded(cfg_.stage, cfg_.budget);
    }

    int find_reductor(const Monomial& m) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].lt.divides(m)) return int(i);
        return -1;
    }

    int insert(TermVec<F> p) {
        F lc = p.front().coeff;
        if (!lc.is_one()) {
            F inv = F::one() / lc;
            for (auto& t : p) t.coeff = t.coeff * inv;
        }
        Monomial lt = p.front().mono;
        basis_.push_back({std::move(p), std::move(lt)});
        return int(basis_.size()) - 1;
    }

    void push_pair(int i, int j) {
        Monomial L = lcm(basis_[i].lt, basis_[j].lt);
        pairs_.insert({L.degree(), i, j});
        pending_.insert({i, j});
    }

    bool chain_criterion(int i, int j, const Monomial& L) const {
        for (int k = 0; k < int(basis_.size()); ++k) {
            if (k == i || k == j) continue;
            if (!basis_[k].lt.divides(L)) continue;
            auto key = [](int a, int b) { return std::pair<int, int>{std::min(a, b), std::max(a, b)}; };
            if (!pending_.count(key(i, k)) && !pending_.count(key(j, k))) return true;
        }
        return false;
    }

    TermVec<F> spair(int i, int j, const Monomial& L) {
        // basis elements are monic
        Monomial qi = L.div(basis_[i].lt);
        TermVec<F> fi;
        fi.reserve(basis_[i].poly.size());
        for (const auto& t : basis_[i].poly) fi.push_back({t.mono * qi, t.coeff});
        Monomial qj = L.div(basis_[j].lt);
        return sub_scaled(fi, basis_[j].poly, qj, F::one(), order_);
    }

    void make_reduced() {
        // minimal generating set of the leading term ideal
        std::vector<int> keep;
        for (int i = 0; i < int(basis_.size()); ++i) {
            bool redundant = false;
            for (int j = 0; j < int(basis_.size()) && !redundant; ++j) {
                if (i == j) continue;
                if (basis_[j].lt.divides(basis_[i].lt)) {
                    // break ties so exactly one of equal leading terms survives
                    if (basis_[i].lt == basis_[j].lt) redundant = j < i;
                    else redundant = true;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        std::vector<BasisElem<F>> min_basis;
        for (int i : keep) min_basis.push_back(std::move(basis_[i]));
        basis_ = std::move(min_basis);
        tail_reduce();
        std::sort(basis_.begin(), basis_.end(), [&](const BasisElem<F>& a, const BasisElem<F>& b) {
            return order_.less(a.lt, b.lt);
        });
    }

    void tail_reduce() {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            BasisElem<F> self = std::move(basis_[i]);
            basis_.erase(basis_.begin() + i);
            TermVec<F> r = reduce(std::move(self.poly));
            if (r.empty()) {
                --i;
                continue;
            }
            F lc = r.front().coeff;
            if (!lc.is_one()) {
                F inv = F::one() / lc;
                for (auto& t : r) t.coeff = t.coeff * inv;
            }
            Monomial lt = r.front().mono;
            basis_.insert(basis_.begin() + i, {std::move(r), std::move(lt)});
        }
    }

    RingPtr ring_;
    MonomialOrder order_;
    GroebnerConfig cfg_;
    std::vector<BasisElem<F>> basis_;
    std::set<std::tuple<long, int, int>> pairs_;
    std::set<std::pair<int, int>> pending_;
    long steps_ = 0;
};

} // namespace gbdetail

/// Reduced Groebner basis of the given generators (unique for the order).
template <class F>
std::vector<Polynomial<F>> groebner_basis(const RingPtr& ring,
                                          const std::vector<Polynomial<F>>& gens,
                                          const MonomialOrder& order,
                                          const GroebnerConfig& cfg = {}) {
    std::vector<Polynomial<F>> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return {};
    gbdetail::Engine<F> eng(ring, order, cfg);
    eng.run(nz);
    return eng.result();
}

/// Finitely generated ideal with cached reduced Groebner bases per order.
template <class F>
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial<F>> gens)
        : ring_(std::move(ring)), gens_(std::move(gens)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& generators() const { return gens_; }

    const std::vector<Polynomial<F>>& basis(const MonomialOrder& order,
                                            const GroebnerConfig& cfg = {}) const {
        auto it = cache_.find(order.key());
        if (it != cache_.end()) return it->second;
        auto gb = groebner_basis(ring_, gens_, order, cfg);
        return cache_.emplace(order.key(), std::move(gb)).first->second;
    }

private:
    RingPtr ring_;
    std::vector<Polynomial<F>> gens_;
    mutable std::map<std::string, std::vector<Polynomial<F>>> cache_;
};

/// Unique remainder of p modulo the reduced basis of I.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const Ideal<F>& I, const MonomialOrder& order,
                          const GroebnerConfig& cfg = {}) {
    require_same_ring(p.ring(), I.ring(), "normal_form");
    const auto& gb = I.basis(order, cfg);
    gbdetail::Engine<F> eng(p.ring(), order, cfg);
    eng.load(gb);
    auto r = eng.reduce(gbdetail::to_ordered(p, order));
    return gbdetail::from_ordered(p.ring(), r);
}

template <class F>
bool membership(const Polynomial<F>& p, const Ideal<F>& I,
                const MonomialOrder& order = MonomialOrder::grevlex(),
                const GroebnerConfig& cfg = {}) {
    return normal_form(p, I, order, cfg).is_zero();
}

/// S-polynomial (for property tests of basis closure).
template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& order) {
    const auto& ltf = f.leading_term(order);
    const auto& ltg = g.leading_term(order);
    Monomial L = lcm(ltf.mono, ltg.mono);
    auto a = f.times_monomial(L.div(ltf.mono), F::one() / ltf.coeff);
    auto b = g.times_monomial(L.div(ltg.mono), F::one() / ltg.coeff);
    return a - b;
}

/// true iff the reduced bases for `order` coincide.
template <class F>
bool ideals_equal(const Ideal<F>& I, const Ideal<F>& J,
                  const MonomialOrder& order = MonomialOrder::grevlex(),
                  const GroebnerConfig& cfg = {}) {
    require_same_ring(I.ring(), J.ring(), "ideals_equal");
    return I.basis(order, cfg) == J.basis(order, cfg);
}

/// Kernel of the ring map T_i -> images[i].  Images live in their own ring;
/// the result lives in t_ring.  Every returned generator is checked to
/// substitute to zero.
template <class F>
Ideal<F> ring_map_kernel(const RingPtr& t_ring, const std::vector<Polynomial<F>>& images,
                         const GroebnerConfig& cfg = {},
                         const std::vector<long>* expected_degrees = nullptr) {
    if (images.empty()) throw std::invalid_argument("ring_map_kernel: no images");
    RingPtr x_ring = images.front().ring();
    const std::size_t m = t_ring->nvars(), n = x_ring->nvars();
    if (m != images.size()) throw std::invalid_argument("ring_map_kernel: arity mismatch");
    if (expected_degrees) {
        for (std::size_t i = 0; i < images.size(); ++i) {
            long d = (*expected_degrees)[i];
            for (const auto& t : images[i].terms())
                if (t.mono.degree() != d)
                    throw std::invalid_argument(
                        "ring_map_kernel: image " + std::to_string(i + 1) +
                        " not homogeneous of degree " + std::to_string(d));
        }
    }

    std::vector<std::string> vars = t_ring->vars();
    for (const auto& v : x_ring->vars()) vars.push_back(v);
    RingPtr joint = make_ring(std::move(vars));

    std::vector<int> tmap(m), xmap(n);
    for (std::size_t i = 0; i < m; ++i) tmap[i] = int(i);
    for (std::size_t j = 0; j < n; ++j) xmap[j] = int(m + j);

    std::vector<char> elim(m + n, 0);
    for (std::size_t j = 0; j < n; ++j) elim[m + j] = 1;

    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < m; ++i) {
        require_same_ring(x_ring, images[i].ring(), "ring_map_kernel");
        gens.push_back(Polynomial<F>::variable(joint, int(i)) - images[i].rebase(joint, xmap));
    }

    auto gb = groebner_basis(joint, gens, MonomialOrder::block(elim), cfg);

    std::vector<int> back(m + n, -1);
    for (std::size_t i = 0; i < m; ++i) back[i] = int(i);
    std::vector<Polynomial<F>> kernel;
    for (const auto& g : gb)
        if (![&] {
                for (const auto& t : g.terms())
                    if (t.mono.uses_any(elim)) return true;
                return false;
            }())
            kernel.push_back(g.rebase(t_ring, back));

    // exact invariant, not a sampled one: each generator maps to zero
    std::map<int, Polynomial<F>> sub;
    for (std::size_t i = 0; i < m; ++i) sub[int(i)] = images[i];
    for (const auto& g : kernel)
        if (!g.substitute(sub).is_zero())
            throw std::logic_error("ring_map_kernel: generator does not substitute to zero");

    return Ideal<F>(t_ring, std::move(kernel));
}

/// Saturation I : f^inf via an inverse variable w with w*f - 1, then
/// elimination of w.
template <class F>
Ideal<F> saturate(const Ideal<F>& I, const Polynomial<F>& f, const GroebnerConfig& cfg = {}) {
    require_same_ring(I.ring(), f.ring(), "saturate");
    if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
    const RingPtr& ring = I.ring();
    const std::size_t n = ring->nvars();
    std::vector<std::string> vars = ring->vars();
    vars.push_back("_w");
    RingPtr ext = make_ring(std::move(vars));

    std::vector<int> fwd(n);
    for (std::size_t i = 0; i < n; ++i) fwd[i] = int(i);

    std::vector<Polynomial<F>> gens;
    for (const auto& g : I.generators()) gens.push_back(g.rebase(ext, fwd));
    gens.push_back(Polynomial<F>::variable(ext, int(n)) * f.rebase(ext, fwd) -
                   Polynomial<F>::constant(ext, F::one()));

    std::vector<char> elim(n + 1, 0);
    elim[n] = 1;
    auto gb = groebner_basis(ext, gens, MonomialOrder::block(elim), cfg);

    std::vector<int> back(n + 1, -1);
    for (std::size_t i = 0; i < n; ++i) back[i] = int(i);
    std::vector<Polynomial<F>> out;
    for (const auto& g : gb) {
        bool uses_w = false;
        for (const auto& t : g.terms())
            if (t.mono.exponent(int(n)) > 0) uses_w = true;
        if (!uses_w) out.push_back(g.rebase(ring, back));
    }
    return Ideal<F>(ring, std::move(out));
}

namespace gbdetail {
inline int min_hitting_set(const std::vector<std::vector<int>>& supports, int depth, int best,
                           std::vector<char>& hit) {
    // find first support not yet hit
    const std::vector<int>* branch = nullptr;
    for (const auto& s : supports) {
        bool ok = false;
        for (int v : s)
            if (hit[v]) ok = true;
        if (!ok) {
            branch = &s;
            break;
        }
    }
    if (!branch) return depth;
    if (depth + 1 >= best) return best;  // prune
    for (int v : *branch) {
        hit[v] = 1;
        best = std::min(best, min_hitting_set(supports, depth + 1, best, hit));
        hit[v] = 0;
    }
    return best;
}
} // namespace gbdetail

/// Krull dimension of R/I, computed combinatorially from the leading-term
/// ideal: the largest variable subset meeting no leading-monomial support.
template <class F>
int krull_dimension(const Ideal<F>& I, const MonomialOrder& order = MonomialOrder::grevlex(),
                    const GroebnerConfig& cfg = {}) {
    const auto& gb = I.basis(order, cfg);
    int n = int(I.ring()->nvars());
    if (gb.empty()) return n;
    std::vector<std::vector<int>> supports;
    for (const auto& g : gb) {
        const auto& lt = g.leading_term(order).mono;
        if (lt.is_one()) throw std::invalid_argument("krull_dimension: ideal is the unit ideal");
        std::vector<int> s;
        for (const auto& [v, k] : lt.entries()) s.push_back(v);
        supports.push_back(std::move(s));
    }
    std::vector<char> hit(n, 0);
    int h = gbdetail::min_hitting_set(supports, 0, n + 1, hit);
    return n - h;
}

} // namespace coxsurf

#endif
