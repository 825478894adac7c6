#ifndef COXSURF_POLYNOMIAL_HPP
#define COXSURF_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "coxsurf/cyclotomic.hpp"
#include "coxsurf/monomial.hpp"
#include "coxsurf/monomial_order.hpp"
#include "coxsurf/rational.hpp"
#include "coxsurf/ring.hpp"

namespace coxsurf {

template <class F>
struct Term {
    Monomial mono;
    F coeff;
};

namespace detail {
/// canonical term order for storage: plain grevlex, descending
inline const MonomialOrder& canonical_order() {
    static const MonomialOrder o = MonomialOrder::grevlex();
    return o;
}
struct CanonGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return canonical_order().greater(a, b);
    }
};
} // namespace detail

/// Sparse multivariate polynomial over an exact field F.  Terms are kept
/// in canonical (grevlex-descending) order with nonzero coefficients, so
/// equal polynomials have identical representations.
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, F c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({Monomial(), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr ring, int idx, int exp = 1) {
        Polynomial p(std::move(ring));
        p.terms_.push_back({Monomial::var(idx, exp), F::one()});
        return p;
    }

    static Polynomial from_terms(RingPtr ring, std::vector<Term<F>> terms) {
        std::map<Monomial, F, detail::CanonGreater> acc;
        for (auto& t : terms) {
            auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
            if (!fresh) {
                it->second += t.coeff;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        Polynomial p(std::move(ring));
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool uses_var(int v) const {
        for (const auto& t : terms_)
            if (t.mono.exponent(v) > 0) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly add");
        Polynomial r(a.ring_);
        const auto& greater = detail::canonical_order();
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size()) r.terms_.push_back(a.terms_[i++]);
            else if (i == a.terms_.size()) r.terms_.push_back(b.terms_[j++]);
            else {
                int c = greater.compare(a.terms_[i].mono, b.terms_[j].mono);
                if (c > 0) r.terms_.push_back(a.terms_[i++]);
                else if (c < 0) r.terms_.push_back(b.terms_[j++]);
                else {
                    F s = a.terms_[i].coeff + b.terms_[j].coeff;
                    if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                    ++i, ++j;
                }
            }
        }
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly mul");
        std::map<Monomial, F, detail::CanonGreater> acc;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono * tb.mono;
                F c = ta.coeff * tb.coeff;
                auto [it, fresh] = acc.try_emplace(std::move(m), c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        Polynomial r(a.ring_);
        for (auto& [m, c] : acc) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial scaled(const F& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const F& c) const {
        if (c.is_zero()) return Polynomial(ring_);
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial pow(int k) const {
        Polynomial r = constant(ring_, F::one());
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ != b.ring_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Leading term with respect to an arbitrary order.
    const Term<F>& leading_term(const MonomialOrder& o) const {
        const Term<F>* best = &terms_.front();
        for (const auto& t : terms_)
            if (o.greater(t.mono, best->mono)) best = &t;
        return *best;
    }

    /// Ring homomorphism determined by variable images.  Every variable
    /// occurring in the polynomial must be mapped; images share one ring.
    Polynomial substitute(const std::map<int, Polynomial>& images) const {
        RingPtr target;
        for (const auto& [v, img] : images) {
            if (!target) target = img.ring();
            else require_same_ring(target, img.ring(), "substitute");
        }
        if (!target) target = ring_;
        Polynomial r = zero(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (const auto& [v, k] : t.mono.entries()) {
                auto it = images.find(v);
                if (it == images.end())
                    throw UnmappedVariable("substitute: no image for variable '" +
                                           ring_->var_name(v) + "'");
                prod = prod * it->second.pow(k);
            }
            r = r + prod;
        }
        return r;
    }

    /// Rename variables into another ring: images[v] = index in target.
    Polynomial rebase(const RingPtr& target, const std::vector<int>& var_map) const {
        Polynomial r(target);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<Monomial::Entry> es;
            for (const auto& [v, k] : t.mono.entries()) {
                if (var_map[v] < 0)
                    throw UnmappedVariable("rebase: variable '" + ring_->var_name(v) +
                                           "' has no image");
                es.push_back({var_map[v], k});
            }
            r.terms_.push_back({Monomial(std::move(es)), t.coeff});
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term<F>& x, const Term<F>& y) {
            return detail::canonical_order().greater(x.mono, y.mono);
        });
        return r;
    }

private:
    RingPtr ring_;
    std::vector<Term<F>> terms_;
};

/// rational content of a coefficient, used to keep polynomials primitive
inline void content_accumulate(const Rational& c, mpz_class& num_gcd, mpz_class& den_lcm) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
}
inline void content_accumulate(const Cyclotomic3& c, mpz_class& num_gcd, mpz_class& den_lcm) {
    content_accumulate(c.re(), num_gcd, den_lcm);
    content_accumulate(c.eps_part(), num_gcd, den_lcm);
}
inline Rational scale_for(const Rational&, const mpz_class& g, const mpz_class& l) {
    return Rational(mpq_class(l, g));
}
inline Cyclotomic3 scale_for(const Cyclotomic3&, const mpz_class& g, const mpz_class& l) {
    return Cyclotomic3(Rational(mpq_class(l, g)));
}

/// Divide out the rational content (primitive part, sign left untouched).
template <class F>
Polynomial<F> primitive_part(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    mpz_class g = 0, l = 1;
    for (const auto& t : p.terms()) content_accumulate(t.coeff, g, l);
    if (g == 0) return p;
    F s = scale_for(p.terms().front().coeff, g, l);
    if (s.is_one()) return p;
    return p.scaled(s);
}

using QPoly = Polynomial<Rational>;
using EPoly = Polynomial<Cyclotomic3>;

} // namespace coxsurf

#endif
