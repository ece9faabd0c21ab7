#include "semiq/poly.hpp"

#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
} // namespace

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::constant(Int v) {
    ZPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

ZPoly ZPoly::monomial(const Int& coeff, int deg) {
    ZPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Int(0));
        p.c_[deg] = coeff;
    }
    return p;
}

const Int& ZPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[i];
}

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(c));
}

ZPoly ZPoly::scaled(const Int& k) const {
    if (k == 0) return ZPoly();
    ZPoly r(*this);
    for (auto& x : r.c_) x *= k;
    return r;
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) g = int_gcd(g, x);
    if (g != 0 && leading() < 0) g = -g;
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Int g = content();
    ZPoly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

ZPoly ZPoly::exact_div(const ZPoly& b) const {
    if (b.is_zero()) throw PoleError("ZPoly::exact_div by zero");
    if (is_zero()) return ZPoly();
    // Divide over Q and check the quotient is integral with zero remainder.
    QPoly qa = QPoly::from_z(*this), qb = QPoly::from_z(b), q, r;
    qa.divrem(qb, q, r);
    if (!r.is_zero()) throw ConsistencyError("ZPoly::exact_div: nonzero remainder");
    std::vector<Int> c(q.degree() + 1);
    for (int i = 0; i <= q.degree(); ++i) {
        const Rat& x = q.coeff(i);
        if (!is_integer(x)) throw ConsistencyError("ZPoly::exact_div: non-integral quotient");
        c[i] = x.get_num();
    }
    return ZPoly(std::move(c));
}

Rat ZPoly::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Int mag = abs(a);
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.is_zero()) return v.is_zero() ? v : v.primitive_part();
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // primitive pseudo-remainder step
        ZPoly r = u.scaled(int_pow(v.leading(), u.degree() - v.degree() + 1));
        QPoly q, rem;
        QPoly::from_z(r).divrem(QPoly::from_z(v), q, rem);
        std::vector<Int> rc(rem.degree() + 1);
        for (int i = 0; i <= rem.degree(); ++i) {
            const Rat& x = rem.coeff(i);
            if (!is_integer(x)) throw ConsistencyError("pseudo-remainder not integral");
            rc[i] = x.get_num();
        }
        ZPoly rz{std::move(rc)};
        u = v;
        v = rz.is_zero() ? ZPoly() : rz.primitive_part();
    }
    if (!u.is_zero() && u.leading() < 0) u = -u;
    return u;
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::constant(Rat v) {
    QPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

QPoly QPoly::from_z(const ZPoly& p) {
    std::vector<Rat> c(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) c[i] = Rat(p.coeff(i));
    return QPoly(std::move(c));
}

const Rat& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[i];
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rat& k) const {
    if (k == 0) return QPoly();
    QPoly r(*this);
    for (auto& x : r.c_) x *= k;
    return r;
}

void QPoly::divrem(const QPoly& b, QPoly& q, QPoly& r) const {
    if (b.is_zero()) throw PoleError("QPoly::divrem by zero");
    std::vector<Rat> rem = c_;
    int db = b.degree();
    const Rat& lb = b.leading();
    std::vector<Rat> quo;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quo.assign(dr - db + 1, Rat(0));
    while (dr >= db) {
        if (rem[dr] != 0) {
            Rat f = rem[dr] / lb;
            quo[dr - db] = f;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
        }
        --dr;
    }
    q = QPoly(std::move(quo));
    r = QPoly(std::move(rem));
}

} // namespace semiq
