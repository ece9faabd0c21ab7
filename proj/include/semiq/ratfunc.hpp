#ifndef SEMIQ_RATFUNC_HPP
#define SEMIQ_RATFUNC_HPP

#include <string>

#include "semiq/poly.hpp"

namespace semiq {

// Univariate rational function over Q, stored as a quotient of integer
// polynomials in canonical form: numerator and denominator coprime, no common
// integer content, denominator with positive leading coefficient. Equality of
// canonical forms is plain structural equality.
class RatFunc {
public:
    RatFunc() = default; // zero
    RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_int(long v) { return RatFunc(ZPoly::constant(Int(v)), one_poly()); }
    static RatFunc from_rat(const Rat& q) {
        return RatFunc(ZPoly::constant(Int(q.get_num())), ZPoly::constant(Int(q.get_den())));
    }
    // x^k for k of either sign
    static RatFunc monomial(long k);
    static RatFunc variable() { return monomial(1); }

    bool is_zero() const { return num_.is_zero(); }
    // constant in the symbol, i.e. an element of Q
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    Rat constant_value() const; // throws if not constant

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    // Substitute a rational value for the symbol. Throws PoleError if the
    // denominator vanishes there.
    Rat evaluate(const Rat& x) const;

    std::string to_string(const std::string& var = "x") const;

private:
    static const ZPoly& one_poly();
    void normalize();
    ZPoly num_;
    ZPoly den_{std::vector<Int>{Int(1)}};
};

} // namespace semiq

#endif
