#ifndef COXSURF_MONOMIAL_ORDER_HPP
#define COXSURF_MONOMIAL_ORDER_HPP

#include <string>
#include <vector>

#include "coxsurf/monomial.hpp"

namespace coxsurf {

/// Total monomial orders: graded reverse lexicographic (optionally with
/// positive variable weights), lexicographic, and block elimination
/// (grevlex on the eliminated block first, then grevlex on the rest).
/// Variable index 0 is the largest variable for tie-breaking purposes.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }

    static MonomialOrder grevlex_weighted(std::vector<long> weights) {
        MonomialOrder o(Kind::Grevlex);
        o.weights_ = std::move(weights);
        return o;
    }

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }

    /// mask[v] != 0 marks v as eliminated; any monomial containing an
    /// eliminated variable ranks above any monomial free of them.
    static MonomialOrder block(std::vector<char> elim_mask) {
        MonomialOrder o(Kind::Block);
        o.elim_ = std::move(elim_mask);
        return o;
    }

    Kind kind() const { return kind_; }
    const std::vector<char>& elim_mask() const { return elim_; }

    /// <0 if a < b, 0 if equal, >0 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
        case Kind::Lex: return cmp_lex(a, b);
        case Kind::Grevlex: return cmp_grevlex(a, b, nullptr);
        case Kind::Block: {
            int c = cmp_grevlex(a, b, &elim_, /*inside=*/true);
            if (c != 0) return c;
            return cmp_grevlex(a, b, &elim_, /*inside=*/false);
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable identifier used as a cache key for Groebner bases.
    std::string key() const {
        switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::Grevlex: {
            if (weights_.empty()) return "grevlex";
            std::string s = "wgrevlex:";
            for (long w : weights_) s += std::to_string(w) + ",";
            return s;
        }
        case Kind::Block: {
            std::string s = "block:";
            for (char c : elim_) s += c ? '1' : '0';
            return s;
        }
        }
        return "?";
    }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    long wdeg(const Monomial& m, const std::vector<char>* mask, bool inside) const {
        long d = 0;
        for (const auto& [v, k] : m.entries()) {
            if (mask) {
                bool in = v < int(mask->size()) && (*mask)[v];
                if (in != inside) continue;
            }
            long w = (kind_ == Kind::Grevlex && v < int(weights_.size())) ? weights_[v] : 1;
            d += w * k;
        }
        return d;
    }

    int cmp_grevlex(const Monomial& a, const Monomial& b, const std::vector<char>* mask,
                    bool inside = true) const {
        long da = wdeg(a, mask, inside), db = wdeg(b, mask, inside);
        if (da != db) return da < db ? -1 : 1;
        // reverse lex tie break: the largest variable index where exponents
        // differ decides; smaller exponent there means larger monomial
        const auto& ea = a.entries();
        const auto& eb = b.entries();
        auto ia = ea.rbegin();
        auto ib = eb.rbegin();
        auto skip = [&](auto& it, auto end) {
            while (it != end && mask) {
                bool in = it->first < int(mask->size()) && (*mask)[it->first];
                if (in == inside) break;
                ++it;
            }
        };
        while (true) {
            skip(ia, ea.rend());
            skip(ib, eb.rend());
            bool ea_done = (ia == ea.rend()), eb_done = (ib == eb.rend());
            if (ea_done && eb_done) return 0;
            if (ea_done) return 1;  // b has an extra high-index variable -> b smaller
            if (eb_done) return -1;
            if (ia->first != ib->first) {
                // the one owning the higher index has positive exponent there
                return ia->first > ib->first ? -1 : 1;
            }
            if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
            ++ia;
            ++ib;
        }
    }

    static int cmp_lex(const Monomial& a, const Monomial& b) {
        const auto& ea = a.entries();
        const auto& eb = b.entries();
        std::size_t i = 0, j = 0;
        while (i < ea.size() || j < eb.size()) {
            if (j == eb.size()) return 1;
            if (i == ea.size()) return -1;
            if (ea[i].first != eb[j].first) return ea[i].first < eb[j].first ? 1 : -1;
            if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
            ++i;
            ++j;
        }
        return 0;
    }

    Kind kind_;
    std::vector<char> elim_;
    std::vector<long> weights_;
};

/// spec-level comparator entry point
inline int compare_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

} // namespace coxsurf

#endif
