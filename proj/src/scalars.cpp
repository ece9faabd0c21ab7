#include "semiq/scalars.hpp"

#include "semiq/errors.hpp"

namespace semiq {

bool QScalar::is_rational_constant() const {
    return is_generic() ? gen_.is_constant() : cyc_.is_rational();
}

Rat QScalar::rational_value() const {
    return is_generic() ? gen_.constant_value() : cyc_.rational_value();
}

const RatFunc& QScalar::generic() const {
    if (!is_generic()) throw ValidationError("QScalar is not in generic mode");
    return gen_;
}

const Cyclotomic& QScalar::cyclotomic() const {
    if (!is_cyclotomic()) throw ValidationError("QScalar is not in cyclotomic mode");
    return cyc_;
}

void QScalar::align(QScalar& a, QScalar& b) {
    if (a.mode_ == b.mode_) return;
    QScalar& gen = a.is_generic() ? a : b;
    QScalar& cyc = a.is_generic() ? b : a;
    if (!gen.gen_.is_constant())
        throw ValidationError("mixing generic and cyclotomic quantum scalars");
    gen.cyc_ = Cyclotomic::from_rat(cyc.cyc_.order() == 0 ? 1 : cyc.cyc_.order(),
                                    gen.gen_.constant_value());
    gen.gen_ = RatFunc();
    gen.mode_ = Mode::cyclotomic;
}

QScalar QScalar::operator-() const {
    return is_generic() ? QScalar(-gen_) : QScalar(-cyc_);
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    QScalar x = a, y = b;
    QScalar::align(x, y);
    return x.is_generic() ? QScalar(x.gen_ + y.gen_) : QScalar(x.cyc_ + y.cyc_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar x = a, y = b;
    QScalar::align(x, y);
    return x.is_generic() ? QScalar(x.gen_ * y.gen_) : QScalar(x.cyc_ * y.cyc_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
    QScalar x = a, y = b;
    QScalar::align(x, y);
    return x.is_generic() ? QScalar(x.gen_ / y.gen_) : QScalar(x.cyc_ / y.cyc_);
}

bool operator==(const QScalar& a, const QScalar& b) {
    QScalar x = a, y = b;
    QScalar::align(x, y);
    return x.is_generic() ? x.gen_ == y.gen_ : x.cyc_ == y.cyc_;
}

QScalar QScalar::inverse() const {
    return is_generic() ? QScalar(gen_.inverse()) : QScalar(cyc_.inverse());
}

std::string QScalar::to_string() const {
    return is_generic() ? gen_.to_string("v") : cyc_.to_string();
}

QScalar QuantumContext::v_power(long k) const {
    return cyclotomic ? QScalar::zeta_pow(ell, k) : QScalar::v_pow(k);
}

namespace {

// generic-mode [n] with v_i = v^d, as a rational function of v
RatFunc generic_qint(long n, long d) {
    RatFunc num = RatFunc::monomial(d * n) - RatFunc::monomial(-d * n);
    RatFunc den = RatFunc::monomial(d) - RatFunc::monomial(-d);
    return num / den;
}

} // namespace

QScalar quantum_integer(long n, long i, const QuantumContext& ctx) {
    long d = ctx.d.at(i);
    if (!ctx.cyclotomic) return QScalar(generic_qint(n, d));
    // v_i = zeta^d; the denominator vanishes only when v_i = +-1.
    Cyclotomic vi = Cyclotomic::zeta_pow(ctx.ell, d);
    Cyclotomic den = vi - vi.inverse();
    if (den.is_zero()) throw PoleError("quantum_integer: v_i = +-1 at this root of unity");
    return QScalar((vi.pow(n) - vi.pow(-n)) / den);
}

QScalar quantum_factorial(long n, long i, const QuantumContext& ctx) {
    if (n < 0) throw ValidationError("quantum_factorial: negative n");
    QScalar acc = ctx.one();
    for (long s = 1; s <= n; ++s) acc *= quantum_integer(s, i, ctx);
    return acc;
}

QScalar quantum_binomial(long n, long m, long i, const QuantumContext& ctx) {
    if (m < 0 || m > n) throw ValidationError("quantum_binomial requires 0 <= m <= n");
    long d = ctx.d.at(i);
    RatFunc acc = RatFunc::from_int(1);
    // [n]! / ([m]! [n-m]!) = prod_{s=1..m} [n-m+s]/[s], formed generically
    for (long s = 1; s <= m; ++s) acc *= generic_qint(n - m + s, d) / generic_qint(s, d);
    QScalar gen{acc};
    if (!ctx.cyclotomic) return gen;
    // Gaussian binomials are Laurent polynomials, so specialization never hits
    // a pole; if it does, the canonical form upstream is broken.
    try {
        return specialize(gen, ctx.ell);
    } catch (const PoleError&) {
        throw ConsistencyError("quantum_binomial: specialization pole");
    }
}

QScalar specialize(const QScalar& x, long ell) {
    const RatFunc& f = x.generic();
    Cyclotomic den = evaluate_at_zeta(f.den(), ell);
    if (den.is_zero()) throw PoleError("specialize: denominator vanishes at zeta");
    return QScalar(evaluate_at_zeta(f.num(), ell) / den);
}

} // namespace semiq
