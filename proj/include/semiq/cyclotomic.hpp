#ifndef SEMIQ_CYCLOTOMIC_HPP
#define SEMIQ_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "semiq/poly.hpp"

namespace semiq {

// The l-th cyclotomic polynomial, computed once and cached.
const ZPoly& cyclotomic_polynomial(long ell);

// Element of Q(zeta_ell) = Q[v]/Phi_ell(v), stored reduced mod Phi_ell.
// Reduction mod the cyclotomic polynomial (rather than v^ell - 1) keeps the
// ring a field, so ranks and inverses are unambiguous.
class Cyclotomic {
public:
    Cyclotomic() : ell_(0) {} // zero in an order-agnostic sense; fixes order on first use
    explicit Cyclotomic(long ell) : ell_(ell) {} // zero of Q(zeta_ell)
    Cyclotomic(long ell, std::vector<Rat> coeffs);

    static Cyclotomic from_rat(long ell, const Rat& q);
    static Cyclotomic zeta_pow(long ell, long k); // zeta^k, any sign of k
    // rational constant with the field order left open until first contact
    static Cyclotomic floating(const Rat& q);

    long order() const { return ell_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // throws if not rational

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    const std::vector<Rat>& coeffs() const { return c_; }
    std::string to_string() const;

private:
    static long match_order(const Cyclotomic& a, const Cyclotomic& b);
    void reduce();
    long ell_;            // 0 means "rational constant, order not yet pinned"
    std::vector<Rat> c_;  // degree < phi(ell); for ell_ == 0 size <= 1
};

// Image of an integer polynomial in v under v -> zeta_ell.
Cyclotomic evaluate_at_zeta(const ZPoly& p, long ell);

} // namespace semiq

#endif
