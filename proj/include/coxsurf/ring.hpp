#ifndef COXSURF_RING_HPP
#define COXSURF_RING_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "coxsurf/errors.hpp"

namespace coxsurf {

/// Shared context for polynomials: an ordered list of variable names.
/// Polynomials may only be combined when they share the same Ring object.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t nvars() const { return vars_.size(); }
    const std::string& var_name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& vars() const { return vars_; }

    /// Index of a variable name, or -1.
    int var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        return it == vars_.end() ? -1 : int(it - vars_.begin());
    }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

/// T1..Tm, S1..Sn
inline RingPtr make_ts_ring(int m, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= m; ++i) v.push_back("T" + std::to_string(i));
    for (int j = 1; j <= n; ++j) v.push_back("S" + std::to_string(j));
    return make_ring(std::move(v));
}

inline RingPtr make_t_ring(int m) { return make_ts_ring(m, 0); }

inline RingPtr make_plane_ring() { return make_ring({"x0", "x1", "x2"}); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (a != b) throw ContextMismatch(std::string(op) + ": operands from different rings");
}

} // namespace coxsurf

#endif
