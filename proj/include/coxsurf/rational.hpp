#ifndef COXSURF_RATIONAL_HPP
#define COXSURF_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "coxsurf/errors.hpp"

namespace coxsurf {

/// Arbitrary-precision rational number, always kept canonical:
/// gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "n", "-n", "n/m".
    static Rational parse(const std::string& s) {
        try {
            mpq_class q(s);
            if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal: '" + s + "'");
        }
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return ::sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Decimal-free text form: "7", "-3/2".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static const char* field_name() { return "Q"; }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace coxsurf

#include <ostream>

namespace coxsurf {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
} // namespace coxsurf

#endif
