#include "semiq/ratfunc.hpp"

#include "semiq/errors.hpp"

namespace semiq {

const ZPoly& RatFunc::one_poly() {
    static const ZPoly one = ZPoly::constant(Int(1));
    return one;
}

RatFunc RatFunc::monomial(long k) {
    if (k >= 0) return RatFunc(ZPoly::monomial(Int(1), static_cast<int>(k)), one_poly());
    return RatFunc(one_poly(), ZPoly::monomial(Int(1), static_cast<int>(-k)));
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw PoleError("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = one_poly();
        return;
    }
    ZPoly g = zpoly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int c = int_gcd(cn, cd);
    if (c < 0) c = -c;
    if (c > 1) {
        ZPoly n2, d2;
        std::vector<Int> nc(num_.coeffs()), dc(den_.coeffs());
        for (auto& x : nc) x /= c;
        for (auto& x : dc) x /= c;
        num_ = ZPoly(std::move(nc));
        den_ = ZPoly(std::move(dc));
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw ValidationError("RatFunc is not constant");
    if (is_zero()) return Rat(0);
    return make_rat(num_.coeff(0), den_.coeff(0));
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw PoleError("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw PoleError("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return from_int(1);
    RatFunc base = e > 0 ? *this : inverse();
    long n = e > 0 ? e : -e;
    RatFunc acc = from_int(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Rat RatFunc::evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d == 0) throw PoleError("RatFunc: pole at evaluation point");
    return num_.evaluate(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (den_ == one_poly()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace semiq
