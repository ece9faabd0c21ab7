#ifndef SEMIQ_NUMERIC_HPP
#define SEMIQ_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace semiq {

// GMP supplies the raw integer/rational substrate; everything downstream
// (polynomials, rational functions, cyclotomic fields) is ours.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("Int does not fit in long");
    return n.get_si();
}

inline long rat_to_long(const Rat& q) {
    if (!is_integer(q)) throw std::overflow_error("Rat is not an integer");
    return to_long(Int(q.get_num()));
}

// Deterministic splitmix64 PRNG for the property suites; seeded from config.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat rat(long bound = 20) {
        long num = range(-bound, bound);
        long den = range(1, bound);
        return make_rat(num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace semiq

#endif
