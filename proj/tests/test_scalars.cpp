#include "doctest.h"

#include "semiq/errors.hpp"
#include "semiq/scalars.hpp"

using namespace semiq;

namespace {

RatFunc random_ratfunc(Rng& rng) {
    auto poly = [&](int maxdeg) {
        std::vector<Int> c(rng.range(1, maxdeg + 1));
        for (auto& x : c) x = Int(rng.range(-6, 6));
        return ZPoly(std::move(c));
    };
    ZPoly den;
    while (den.is_zero()) den = poly(3);
    return RatFunc(poly(3), den);
}

Cyclotomic random_cyclo(Rng& rng, long ell) {
    Cyclotomic acc(ell);
    for (int k = 0; k < 3; ++k)
        acc += Cyclotomic::zeta_pow(ell, rng.range(0, ell - 1)) *
               Cyclotomic::from_rat(ell, rng.rat(6));
    return acc;
}

} // namespace

TEST_CASE("rational function canonical form") {
    RatFunc x = RatFunc::variable();
    // (2k + 4)/(k + 2) canonicalizes to the constant 2
    RatFunc f = (RatFunc::from_int(2) * x + RatFunc::from_int(4)) / (x + RatFunc::from_int(2));
    CHECK(f.is_constant());
    CHECK(f.constant_value() == 2);

    // canonicalization is idempotent: rebuilding from the stored num/den is a no-op
    RatFunc g = random_ratfunc(*new Rng(7));
    RatFunc re(g.num(), g.den());
    CHECK(g == re);

    // denominator sign pinned positive
    RatFunc h = RatFunc::from_int(1) / (RatFunc::from_int(-2) * x);
    CHECK(h.den().leading() > 0);

    CHECK_THROWS_AS(RatFunc(ZPoly::constant(Int(1)), ZPoly()), PoleError);
}

TEST_CASE("LevelScalar is_rational") {
    LevelScalar k = LevelScalar::kappa();
    CHECK_FALSE(is_rational(k + LevelScalar::from_int(1)));
    CHECK(is_rational(LevelScalar::from_int(3)));
    LevelScalar two = (LevelScalar::from_int(2) * k + LevelScalar::from_int(4)) /
                      (k + LevelScalar::from_int(2));
    CHECK(is_rational(two));
    CHECK(two.rational_value() == 2);
}

TEST_CASE("field laws: 1000 random triples in Q(kappa)") {
    Rng rng(12345);
    for (int t = 0; t < 1000; ++t) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc::from_int(1));
        CHECK(a + (-a) == RatFunc());
    }
}

TEST_CASE("field laws: 1000 random triples in Q(zeta_5) and Q(zeta_12)") {
    for (long ell : {5L, 12L}) {
        Rng rng(777 + ell);
        for (int t = 0; t < 500; ++t) {
            Cyclotomic a = random_cyclo(rng, ell), b = random_cyclo(rng, ell),
                       c = random_cyclo(rng, ell);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic::from_rat(ell, Rat(1)));
        }
    }
}

TEST_CASE("cyclotomic basics") {
    // 1 + z + z^2 = 0 in Q(zeta_3)
    Cyclotomic s = Cyclotomic::from_rat(3, Rat(1)) + Cyclotomic::zeta_pow(3, 1) +
                   Cyclotomic::zeta_pow(3, 2);
    CHECK(s.is_zero());
    // zeta_5^5 = 1
    CHECK(Cyclotomic::zeta_pow(5, 1).pow(5) == Cyclotomic::from_rat(5, Rat(1)));
    // reduction mod Phi_ell, not v^ell - 1: no zero divisors
    Cyclotomic a = Cyclotomic::zeta_pow(6, 1) - Cyclotomic::from_rat(6, Rat(1));
    CHECK_FALSE(a.is_zero());
    CHECK(a * a.inverse() == Cyclotomic::from_rat(6, Rat(1)));
}

TEST_CASE("quantum integers") {
    QuantumContext gen{false, 0, {1}};
    CHECK(quantum_integer(1, 0, gen) == QScalar::from_int(1));
    // [2] = v + v^{-1}
    CHECK(quantum_integer(2, 0, gen) == QScalar::v_pow(1) + QScalar::v_pow(-1));
    // [-n] = -[n]
    CHECK(quantum_integer(-3, 0, gen) == -quantum_integer(3, 0, gen));

    QuantumContext cyc3{true, 3, {1}};
    CHECK(quantum_integer(3, 0, cyc3).is_zero());
    CHECK(quantum_integer(2, 0, cyc3) == QScalar::zeta_pow(3, 1) + QScalar::zeta_pow(3, -1));

    // v_i = +-1 pole: ell = 1 makes v = 1
    QuantumContext cyc1{true, 1, {1}};
    CHECK_THROWS_AS(quantum_integer(2, 0, cyc1), PoleError);
}

TEST_CASE("quantum binomials") {
    QuantumContext gen{false, 0, {1}};
    CHECK(quantum_binomial(5, 0, 0, gen) == QScalar::from_int(1));
    CHECK(quantum_binomial(2, 1, 0, gen) == QScalar::v_pow(1) + QScalar::v_pow(-1));
    // [3 1] specializes to 0 at zeta_3 (it is [3]_v)
    QuantumContext cyc3{true, 3, {1}};
    CHECK(quantum_binomial(3, 1, 0, cyc3).is_zero());
    CHECK_THROWS_AS(quantum_binomial(3, 4, 0, gen), ValidationError);
}

TEST_CASE("quantum binomial against the q-binomial product oracle") {
    // prod_{k=0}^{n-1} (1 + v^{2k} t) = sum_m v^{m(m-1)+m(n-m)} [n m]_v t^m.
    // Expand the product as a polynomial in t with RatFunc coefficients and
    // compare coefficient by coefficient.
    QuantumContext gen{false, 0, {1}};
    Rng rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        long n = rng.range(0, 8);
        std::vector<RatFunc> coeff(n + 1);
        coeff[0] = RatFunc::from_int(1);
        for (long k = 0; k < n; ++k) {
            // multiply by (1 + v^{2k} t)
            for (long m = std::min(k + 1, n); m >= 1; --m)
                coeff[m] = coeff[m] + coeff[m - 1] * RatFunc::monomial(2 * k);
        }
        long m = rng.range(0, n);
        RatFunc expected = coeff[m] * RatFunc::monomial(-(m * (m - 1) + m * (n - m)));
        CHECK(quantum_binomial(n, m, 0, gen) == QScalar(expected));
    }
}

TEST_CASE("specialize") {
    QScalar v2 = QScalar::v_pow(2);
    CHECK(specialize(v2, 3) == QScalar::zeta_pow(3, 2));
    // [3]_v as a rational function, specialized at zeta_3, vanishes
    QuantumContext gen{false, 0, {1}};
    CHECK(specialize(quantum_integer(3, 0, gen), 3).is_zero());
    // 1/(v^3 - 1) has a pole at zeta_3
    QScalar f = QScalar::from_int(1) / (QScalar::v_pow(3) - QScalar::from_int(1));
    CHECK_THROWS_AS(specialize(f, 3), PoleError);
}

TEST_CASE("mode mixing rules") {
    QScalar gen_const = QScalar::from_rat(make_rat(3, 2));
    QScalar zc = QScalar::zeta_pow(5, 1);
    CHECK((gen_const + zc) - zc == QScalar::from_rat(make_rat(3, 2)));
    QScalar vnc = QScalar::v_pow(1);
    CHECK_THROWS_AS(vnc + zc, ValidationError);
}
