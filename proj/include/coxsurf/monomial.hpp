#ifndef COXSURF_MONOMIAL_HPP
#define COXSURF_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace coxsurf {

/// Sparse monomial: (variable index, exponent) pairs, sorted by variable,
/// exponents strictly positive.  The empty monomial is 1.
class Monomial {
public:
    using Entry = std::pair<int, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries) : e_(std::move(entries)) { normalize(); }

    static Monomial var(int idx, int exp = 1) {
        Monomial m;
        if (exp > 0) m.e_.push_back({idx, exp});
        return m;
    }

    bool is_one() const { return e_.empty(); }
    const std::vector<Entry>& entries() const { return e_; }

    int exponent(int var) const {
        for (const auto& [v, k] : e_)
            if (v == var) return k;
        return 0;
    }

    long degree() const {
        long d = 0;
        for (const auto& [v, k] : e_) d += k;
        return d;
    }

    template <class Pred>
    long degree_where(Pred in_block) const {
        long d = 0;
        for (const auto& [v, k] : e_)
            if (in_block(v)) d += k;
        return d;
    }

    bool uses_any(const std::vector<char>& mask) const {
        for (const auto& [v, k] : e_)
            if (v < int(mask.size()) && mask[v]) return true;
        return false;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.e_.reserve(a.e_.size() + b.e_.size());
        merge(a, b, r, [](int x, int y) { return x + y; });
        return r;
    }

    bool divides(const Monomial& b) const {
        auto it = b.e_.begin();
        for (const auto& [v, k] : e_) {
            while (it != b.e_.end() && it->first < v) ++it;
            if (it == b.e_.end() || it->first != v || it->second < k) return false;
        }
        return true;
    }

    /// this / b; caller must ensure b divides this.
    Monomial div(const Monomial& b) const {
        Monomial r;
        merge(*this, b, r, [](int x, int y) { return x - y; });
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        merge(a, b, r, [](int x, int y) { return std::max(x, y); },
              /*absorb=*/true);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        auto ia = a.e_.begin();
        for (const auto& [v, k] : b.e_) {
            while (ia != a.e_.end() && ia->first < v) ++ia;
            if (ia != a.e_.end() && ia->first == v) {
                int g = std::min(ia->second, k);
                if (g > 0) r.e_.push_back({v, g});
            }
        }
        return r;
    }

    bool coprime(const Monomial& b) const { return gcd(*this, b).is_one(); }

    Monomial pow(int k) const {
        Monomial r;
        if (k <= 0) return r;
        r.e_ = e_;
        for (auto& [v, ex] : r.e_) ex *= k;
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    /// Arbitrary total order for container keys (not a monomial order).
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    void normalize() {
        std::sort(e_.begin(), e_.end());
        std::vector<Entry> out;
        for (const auto& [v, k] : e_) {
            if (!out.empty() && out.back().first == v) out.back().second += k;
            else out.push_back({v, k});
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Entry& p) { return p.second == 0; }),
                  out.end());
        e_ = std::move(out);
    }

    template <class Op>
    static void merge(const Monomial& a, const Monomial& b, Monomial& r, Op op,
                      bool absorb = false) {
        auto ia = a.e_.begin(), ib = b.e_.begin();
        while (ia != a.e_.end() || ib != b.e_.end()) {
            if (ib == b.e_.end() || (ia != a.e_.end() && ia->first < ib->first)) {
                int val = absorb ? ia->second : op(ia->second, 0);
                if (val != 0) r.e_.push_back({ia->first, val});
                ++ia;
            } else if (ia == a.e_.end() || ib->first < ia->first) {
                int val = absorb ? ib->second : op(0, ib->second);
                if (val != 0) r.e_.push_back({ib->first, val});
                ++ib;
            } else {
                int val = op(ia->second, ib->second);
                if (val != 0) r.e_.push_back({ia->first, val});
                ++ia;
                ++ib;
            }
        }
    }

    std::vector<Entry> e_;
};

} // namespace coxsurf

#endif
