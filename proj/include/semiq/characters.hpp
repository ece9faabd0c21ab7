#ifndef SEMIQ_CHARACTERS_HPP
#define SEMIQ_CHARACTERS_HPP

#include <map>

#include "semiq/root_datum.hpp"

namespace semiq {

// Truncation window for character series: energy drops up to max_energy,
// root-lattice drops up to height max_height.
struct Trunc {
    long max_energy = 0;
    long max_height = 0;

    friend bool operator==(const Trunc& a, const Trunc& b) {
        return a.max_energy == b.max_energy && a.max_height == b.max_height;
    }
};

// Drop from the highest weight: energy drop n >= 0 and a root-lattice vector
// (simple-root coordinates, negative entries allowed at positive energy).
struct DropKey {
    long n = 0;
    std::vector<long> beta;

    friend bool operator<(const DropKey& a, const DropKey& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.beta < b.beta;
    }
    friend bool operator==(const DropKey& a, const DropKey& b) {
        return a.n == b.n && a.beta == b.beta;
    }
};

// Formal character truncated to a finite drop window. Keys are drops from the
// base highest weight; indexing by drops keeps the level symbol out of the
// index and makes the truncation well-defined. A key is retained iff it can
// occur in a product of positive-affine-root factors within the window:
//   0 <= n <= N,  beta_i >= -n * theta_i,  ht(beta) <= D + (N - n) * ht(theta).
// Mixed-truncation arithmetic is rejected, never silently coerced.
class CharacterSeries {
public:
    CharacterSeries(const RootDatum& rd, AffineWeight base, Trunc trunc);

    const RootDatum& root_datum() const { return *rd_; }
    const AffineWeight& base() const { return base_; }
    const Trunc& trunc() const { return trunc_; }
    const std::map<DropKey, long long>& coeffs() const { return coeffs_; }

    bool keep(const DropKey& k) const;
    long long coeff(const DropKey& k) const;
    long long coeff(long n, std::vector<long> beta) const;
    void set_coeff(const DropKey& k, long long v);

    // multiply by (1 - e^{-(m, gamma)})^{-mult}, the factor contributed by a
    // positive affine root / free generator of that weight
    void multiply_geometric(long m, const std::vector<long>& gamma, int mult);
    // multiply by a finite polynomial supported at energy 0 (finite character)
    void multiply_finite(const std::map<std::vector<long>, long long>& poly);

    void add_scaled(const CharacterSeries& other, long long scale);

    // reinterpret a series based at base.finite as one based at new_finite;
    // the shift new_finite - base.finite must be a nonnegative root vector
    CharacterSeries rebased(const Weight& new_finite, const Trunc& target) const;

    bool same_window(const CharacterSeries& other) const;
    friend bool operator==(const CharacterSeries& a, const CharacterSeries& b);

    bool nonnegative() const;
    void prune_zeros();

private:
    const RootDatum* rd_;
    AffineWeight base_;
    Trunc trunc_;
    std::map<DropKey, long long> coeffs_;
};

CharacterSeries verma_character(const RootDatum& rd, const Weight& lambda,
                                const LevelScalar& kappa, const Trunc& trunc);

CharacterSeries wakimoto_character(const RootDatum& rd, const Weight& lambda,
                                   const LevelScalar& kappa, const Trunc& trunc);

CharacterSeries fock_character(const RootDatum& rd, const Weight& mu, const LevelScalar& level,
                               const Trunc& trunc);

CharacterSeries weyl_module_character(const RootDatum& rd, const Weight& lambda,
                                      const LevelScalar& kappa, const Trunc& trunc);

// identity on series; module-level duals assert character preservation through it
CharacterSeries contragredient_character(const CharacterSeries& c);

// true iff sum_w (-1)^{l(w)} ch M_{w.lambda} = ch V_lambda within the window
bool bgg_euler_check(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                     const Trunc& trunc, bool corrupt_sign = false);

} // namespace semiq

#endif
