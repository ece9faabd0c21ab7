#ifndef SEMIQ_POLY_HPP
#define SEMIQ_POLY_HPP

#include <vector>

#include "semiq/numeric.hpp"

namespace semiq {

// Dense univariate polynomial over Z. Coefficient i is the coefficient of x^i;
// the vector never ends in a zero. The zero polynomial is the empty vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(Int v);
    static ZPoly monomial(const Int& coeff, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& coeff(int i) const;
    const Int& leading() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    ZPoly scaled(const Int& k) const;

    // gcd of the coefficients, with the sign of the leading coefficient.
    Int content() const;
    ZPoly primitive_part() const;

    // Exact division; throws ConsistencyError if b does not divide *this.
    ZPoly exact_div(const ZPoly& b) const;

    Rat evaluate(const Rat& x) const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Int> c_;
};

// Primitive polynomial gcd via the primitive pseudo-remainder sequence.
// Result is primitive with positive leading coefficient (or zero).
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// Dense univariate polynomial over Q; used for Euclidean division where we
// genuinely need field coefficients (cyclotomic reduction and inverses).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static QPoly constant(Rat v);
    static QPoly from_z(const ZPoly& p);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const;
    const Rat& leading() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    QPoly scaled(const Rat& k) const;

    // Euclidean division: *this = q*b + r with deg r < deg b.
    void divrem(const QPoly& b, QPoly& q, QPoly& r) const;

private:
    void trim();
    std::vector<Rat> c_;
};

} // namespace semiq

#endif
