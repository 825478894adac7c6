#ifndef COXSURF_CYCLOTOMIC_HPP
#define COXSURF_CYCLOTOMIC_HPP

#include <string>

#include "coxsurf/rational.hpp"

namespace coxsurf {

/// Element a + b*eps of Q(eps), where eps is a primitive cube root of
/// unity: eps^2 + eps + 1 = 0.  Products are reduced with eps^2 = -1 - eps,
/// so the representation (a, b) is canonical.
class Cyclotomic3 {
public:
    Cyclotomic3() = default;
    Cyclotomic3(long n) : a_(n) {}
    Cyclotomic3(Rational a) : a_(std::move(a)) {}
    Cyclotomic3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyclotomic3 epsilon() { return Cyclotomic3(Rational(0), Rational(1)); }

    const Rational& re() const { return a_; }
    const Rational& eps_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    Cyclotomic3 operator-() const { return Cyclotomic3(-a_, -b_); }
    Cyclotomic3& operator+=(const Cyclotomic3& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Cyclotomic3& operator-=(const Cyclotomic3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Cyclotomic3& operator*=(const Cyclotomic3& o) {
        // (a + b e)(c + d e) = ac + (ad + bc) e + bd e^2,  e^2 = -1 - e
        Rational ac = a_ * o.a_, bd = b_ * o.b_;
        Rational mid = a_ * o.b_ + b_ * o.a_;
        a_ = ac - bd;
        b_ = mid - bd;
        return *this;
    }
    Cyclotomic3& operator/=(const Cyclotomic3& o) { return *this *= o.inverse(); }

    friend Cyclotomic3 operator+(Cyclotomic3 a, const Cyclotomic3& b) { return a += b; }
    friend Cyclotomic3 operator-(Cyclotomic3 a, const Cyclotomic3& b) { return a -= b; }
    friend Cyclotomic3 operator*(Cyclotomic3 a, const Cyclotomic3& b) { return a *= b; }
    friend Cyclotomic3 operator/(Cyclotomic3 a, const Cyclotomic3& b) { return a /= b; }

    /// Field norm N(a + b e) = a^2 - ab + b^2; zero only at zero.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Cyclotomic3 inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(eps)");
        // conjugate is a + b e^2 = (a - b) - b e
        Rational n = norm();
        return Cyclotomic3((a_ - b_) / n, -b_ / n);
    }

    friend bool operator==(const Cyclotomic3& x, const Cyclotomic3& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Cyclotomic3& x, const Cyclotomic3& y) { return !(x == y); }

    /// "3/2+e", "-e", "2", "1-2e"
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str();
        if (b_.sgn() > 0 && !s.empty()) s += "+";
        if (b_ == Rational(-1)) s += "-";
        else if (!b_.is_one()) s += b_.str();
        s += "e";
        return s;
    }

    static Cyclotomic3 zero() { return Cyclotomic3(); }
    static Cyclotomic3 one() { return Cyclotomic3(1); }
    static const char* field_name() { return "Q(e)"; }

private:
    Rational a_, b_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic3& z) { return os << z.str(); }

} // namespace coxsurf

#endif
