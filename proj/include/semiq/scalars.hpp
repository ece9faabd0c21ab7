#ifndef SEMIQ_SCALARS_HPP
#define SEMIQ_SCALARS_HPP

#include <string>
#include <vector>

#include "semiq/cyclotomic.hpp"
#include "semiq/linalg.hpp"
#include "semiq/ratfunc.hpp"

namespace semiq {

// Element of Q(kappa): rational functions in the transcendental level symbol.
// Rational levels embed as the constants, so one type serves the symbolic and
// numeric modes everywhere.
class LevelScalar {
public:
    LevelScalar() = default;
    explicit LevelScalar(RatFunc f) : f_(std::move(f)) {}
    static LevelScalar kappa() { return LevelScalar(RatFunc::variable()); }
    static LevelScalar from_int(long v) { return LevelScalar(RatFunc::from_int(v)); }
    static LevelScalar from_rat(const Rat& q) { return LevelScalar(RatFunc::from_rat(q)); }

    bool is_zero() const { return f_.is_zero(); }
    bool is_rational() const { return f_.is_constant(); }
    Rat rational_value() const { return f_.constant_value(); }
    const RatFunc& func() const { return f_; }

    LevelScalar operator-() const { return LevelScalar(-f_); }
    friend LevelScalar operator+(const LevelScalar& a, const LevelScalar& b) { return LevelScalar(a.f_ + b.f_); }
    friend LevelScalar operator-(const LevelScalar& a, const LevelScalar& b) { return LevelScalar(a.f_ - b.f_); }
    friend LevelScalar operator*(const LevelScalar& a, const LevelScalar& b) { return LevelScalar(a.f_ * b.f_); }
    friend LevelScalar operator/(const LevelScalar& a, const LevelScalar& b) { return LevelScalar(a.f_ / b.f_); }
    LevelScalar& operator+=(const LevelScalar& o) { f_ += o.f_; return *this; }
    LevelScalar& operator-=(const LevelScalar& o) { f_ -= o.f_; return *this; }
    LevelScalar& operator*=(const LevelScalar& o) { f_ *= o.f_; return *this; }
    LevelScalar& operator/=(const LevelScalar& o) { f_ /= o.f_; return *this; }
    friend bool operator==(const LevelScalar& a, const LevelScalar& b) { return a.f_ == b.f_; }

    LevelScalar inverse() const { return LevelScalar(f_.inverse()); }
    std::string to_string() const { return f_.to_string("k"); }

private:
    RatFunc f_;
};

inline bool is_rational(const LevelScalar& x) { return x.is_rational(); }

// Element of Q(v) (generic quantum parameter) or of Q(zeta_ell) (root-of-unity
// mode). Rational constants float freely between the two modes; any other
// cross-mode arithmetic is an error.
class QScalar {
public:
    QScalar() : mode_(Mode::generic) {}
    explicit QScalar(RatFunc f) : mode_(Mode::generic), gen_(std::move(f)) {}
    explicit QScalar(Cyclotomic c) : mode_(Mode::cyclotomic), cyc_(std::move(c)) {}

    static QScalar from_int(long n) { return QScalar(RatFunc::from_int(n)); }
    static QScalar from_rat(const Rat& q) { return QScalar(RatFunc::from_rat(q)); }
    static QScalar v_pow(long k) { return QScalar(RatFunc::monomial(k)); } // v^k, generic
    static QScalar zeta_pow(long ell, long k) { return QScalar(Cyclotomic::zeta_pow(ell, k)); }

    bool is_generic() const { return mode_ == Mode::generic; }
    bool is_cyclotomic() const { return mode_ == Mode::cyclotomic; }
    bool is_zero() const { return is_generic() ? gen_.is_zero() : cyc_.is_zero(); }
    bool is_rational_constant() const;
    Rat rational_value() const;

    const RatFunc& generic() const;
    const Cyclotomic& cyclotomic() const;

    QScalar operator-() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
    friend bool operator==(const QScalar& a, const QScalar& b);

    QScalar inverse() const;
    std::string to_string() const;

private:
    enum class Mode { generic, cyclotomic };
    // Align the two operands' modes, promoting rational constants.
    static void align(QScalar& a, QScalar& b);
    Mode mode_;
    RatFunc gen_;
    Cyclotomic cyc_;
};

// Quantum-parameter context: which mode scalars live in and the symmetrizers
// d_i fixing v_i = v^{d_i}.
struct QuantumContext {
    bool cyclotomic = false;
    long ell = 0; // root-of-unity order in cyclotomic mode
    std::vector<long> d;

    QScalar v_power(long k) const; // v^k resp. zeta^k
    QScalar vi(long i) const { return v_power(d.at(i)); }
    QScalar zero() const { return cyclotomic ? QScalar(Cyclotomic(ell)) : QScalar(); }
    QScalar one() const {
        return cyclotomic ? QScalar(Cyclotomic::from_rat(ell, Rat(1))) : QScalar::from_int(1);
    }
};

// [n]_i = (v_i^n - v_i^{-n})/(v_i - v_i^{-1})
QScalar quantum_integer(long n, long i, const QuantumContext& ctx);

// [n]_i! = prod_{s=1..n} [s]_i
QScalar quantum_factorial(long n, long i, const QuantumContext& ctx);

// [n m]_i = [n]_i! / ([m]_i! [n-m]_i!). In cyclotomic mode the generic rational
// function is formed first and specialized afterwards, so intermediate zero
// factorials never produce 0/0.
QScalar quantum_binomial(long n, long m, long i, const QuantumContext& ctx);

// Image of a generic-mode scalar under v -> zeta_ell.
QScalar specialize(const QScalar& x, long ell);

template <>
struct FieldTraits<RatFunc> {
    static RatFunc one() { return RatFunc::from_int(1); }
};

template <>
struct FieldTraits<LevelScalar> {
    static LevelScalar one() { return LevelScalar::from_int(1); }
};

template <>
struct FieldTraits<QScalar> {
    static QScalar one() { return QScalar::from_int(1); }
};

template <>
struct FieldTraits<Cyclotomic> {
    static Cyclotomic one() { return Cyclotomic::floating(Rat(1)); }
};

} // namespace semiq

#endif
