#ifndef COXSURF_POLY_IO_HPP
#define COXSURF_POLY_IO_HPP

#include <cctype>
#include <string>
#include <type_traits>
#include <vector>

#include "coxsurf/polynomial.hpp"

namespace coxsurf {

// Expression grammar shared by pencils, section maps and relation ideals:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := uint ['/' uint] | name | '(' expr ')'
// Coefficients are integers, rationals p/q and (over Q(e)) the symbol `e`
// with e^2 + e + 1 = 0.

namespace detail {

template <class F>
F epsilon_value() {
    if constexpr (std::is_same_v<F, Cyclotomic3>) return Cyclotomic3::epsilon();
    else throw ParseError("'e' is only a coefficient over Q(e)");
}

template <class F>
class PolyParser {
public:
    PolyParser(RingPtr ring, const std::string& src) : ring_(std::move(ring)), s_(src) {}

    Polynomial<F> run() {
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input at '" + rest() + "'");
        return p;
    }

private:
    Polynomial<F> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Polynomial<F> acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial<F> t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial<F> factor() {
        Polynomial<F> base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            long k = integer();
            if (k < 0) throw ParseError("negative exponent");
            base = base.pow(int(k));
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial<F> p = expr();
            skip_ws();
            if (get() != ')') throw ParseError("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                num += "/" + digits();
            }
            Polynomial<F> k = Polynomial<F>::constant(ring_, F(Rational::parse(num)));
            // juxtaposed epsilon: "1e", "-1/9e"
            if (peek() == 'e' && !next_is_ident_char()) {
                get();
                k = k.scaled(epsilon_value<F>());
            }
            return k;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name == "e") return Polynomial<F>::constant(ring_, epsilon_value<F>());
            int v = ring_->var_index(name);
            if (v < 0) throw ParseError("unknown variable '" + name + "'");
            return Polynomial<F>::variable(ring_, v);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'");
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { get(); neg = true; }
        std::string d = digits();
        long v = std::stol(d);
        return neg ? -v : v;
    }

    std::string digits() {
        skip_ws();
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        if (d.empty()) throw ParseError("expected number at '" + rest() + "'");
        return d;
    }

    std::string ident() {
        std::string d;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') d += get();
        return d;
    }

    bool next_is_ident_char() const {
        if (pos_ + 1 >= s_.size()) return false;
        char c = s_[pos_ + 1];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    std::string rest() const { return s_.substr(pos_, 12); }

    RingPtr ring_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

inline bool coeff_is_negative(const Rational& c) { return c.sgn() < 0; }
inline Rational coeff_abs(const Rational& c) { return c.sgn() < 0 ? -c : c; }
inline std::string coeff_str(const Rational& c, bool in_product) {
    (void)in_product;
    return c.str();
}
inline bool coeff_is_negative(const Cyclotomic3& c) {
    return c.eps_part().is_zero() && c.re().sgn() < 0;
}
inline Cyclotomic3 coeff_abs(const Cyclotomic3& c) { return coeff_is_negative(c) ? -c : c; }
inline std::string coeff_str(const Cyclotomic3& c, bool in_product) {
    std::string s = c.str();
    bool composite = !c.eps_part().is_zero() && !(c.re().is_zero() && c.eps_part().is_one());
    if (in_product && composite) return "(" + s + ")";
    return s;
}

} // namespace detail

template <class F>
Polynomial<F> parse_poly(const RingPtr& ring, const std::string& src) {
    return detail::PolyParser<F>(ring, src).run();
}

template <class F>
std::string poly_to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        F c = t.coeff;
        bool neg = detail::coeff_is_negative(c);
        if (neg) c = detail::coeff_abs(c);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (const auto& [v, k] : t.mono.entries()) {
            if (!mono.empty()) mono += "*";
            mono += p.ring()->var_name(v);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) {
            out += detail::coeff_str(c, false);
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += detail::coeff_str(c, true) + "*" + mono;
        }
    }
    return out;
}

} // namespace coxsurf

#endif
