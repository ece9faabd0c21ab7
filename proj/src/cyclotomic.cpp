#include "semiq/cyclotomic.hpp"

#include <map>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

const ZPoly& cyclotomic_polynomial(long ell) {
    static std::map<long, ZPoly> cache;
    if (ell < 1) throw ValidationError("cyclotomic order must be >= 1");
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    // Phi_ell = (x^ell - 1) / prod_{d | ell, d < ell} Phi_d
    std::vector<Int> xn(ell + 1, Int(0));
    xn[0] = -1;
    xn[ell] = 1;
    ZPoly num{std::move(xn)};
    for (long d = 1; d < ell; ++d) {
        if (ell % d != 0) continue;
        num = num.exact_div(cyclotomic_polynomial(d));
    }
    return cache.emplace(ell, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(long ell, std::vector<Rat> coeffs) : ell_(ell), c_(std::move(coeffs)) {
    if (ell_ < 1) throw ValidationError("cyclotomic order must be >= 1");
    reduce();
}

Cyclotomic Cyclotomic::from_rat(long ell, const Rat& q) {
    Cyclotomic r(ell);
    if (q != 0) r.c_.push_back(q);
    return r;
}

Cyclotomic Cyclotomic::floating(const Rat& q) {
    Cyclotomic r;
    if (q != 0) r.c_.push_back(q);
    return r;
}

Cyclotomic Cyclotomic::zeta_pow(long ell, long k) {
    k %= ell;
    if (k < 0) k += ell;
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = 1;
    return Cyclotomic(ell, std::move(c));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw ValidationError("cyclotomic element is not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

void Cyclotomic::reduce() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (ell_ == 0) {
        if (c_.size() > 1) throw ConsistencyError("floating rational with degree > 0");
        return;
    }
    const ZPoly& phi = cyclotomic_polynomial(ell_);
    if (static_cast<int>(c_.size()) - 1 >= phi.degree()) {
        QPoly q, r;
        QPoly{std::vector<Rat>(c_)}.divrem(QPoly::from_z(phi), q, r);
        c_.assign(r.coeffs().begin(), r.coeffs().end());
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long Cyclotomic::match_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ell_ == 0) return b.ell_;
    if (b.ell_ == 0 || a.ell_ == b.ell_) return a.ell_;
    throw ValidationError("mixing cyclotomic fields of different orders");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    r.ell_ = Cyclotomic::match_order(a, b);
    r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.reduce();
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic r;
    r.ell_ = Cyclotomic::match_order(a, b);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.reduce();
    return r;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.ell_ != 0 && b.ell_ != 0 && a.ell_ != b.ell_) return false;
    return (a - b).is_zero();
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw PoleError("Cyclotomic: inverse of zero");
    if (ell_ == 0 || is_rational()) {
        Cyclotomic r(*this);
        r.c_.assign(1, Rat(1) / rational_value());
        return r;
    }
    // extended Euclid in Q[v]: u*this + w*Phi = 1
    QPoly a{std::vector<Rat>(c_)};
    QPoly b = QPoly::from_z(cyclotomic_polynomial(ell_));
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(Rat(1)), s1;
    while (!r1.is_zero()) {
        QPoly q, r;
        r0.divrem(r1, q, r);
        QPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    if (r0.degree() != 0) throw ConsistencyError("cyclotomic inverse: gcd not constant");
    QPoly u = s0.scaled(Rat(1) / r0.coeff(0));
    return Cyclotomic(ell_, std::vector<Rat>(u.coeffs()));
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e >= 0 ? *this : inverse();
    long n = e >= 0 ? e : -e;
    Cyclotomic acc = from_rat(ell_ == 0 ? 1 : ell_, Rat(1));
    acc.ell_ = ell_;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Cyclotomic::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    return os.str();
}

Cyclotomic evaluate_at_zeta(const ZPoly& p, long ell) {
    Cyclotomic acc(ell);
    Cyclotomic z = Cyclotomic::zeta_pow(ell, 1);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * z + Cyclotomic::from_rat(ell, Rat(p.coeff(i)));
    }
    return acc;
}

} // namespace semiq
