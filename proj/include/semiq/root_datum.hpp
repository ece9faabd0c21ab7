#ifndef SEMIQ_ROOT_DATUM_HPP
#define SEMIQ_ROOT_DATUM_HPP

#include <map>
#include <string>
#include <vector>

#include "semiq/scalars.hpp"

namespace semiq {

// Weight in the fundamental-weight basis: coordinate i is <w, coroot_i>.
struct Weight {
    std::vector<Rat> c;

    Weight() = default;
    explicit Weight(std::vector<Rat> coords) : c(std::move(coords)) {}
    static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, Rat(0))); }

    int rank() const { return static_cast<int>(c.size()); }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
    Weight operator-() const;
    Weight scaled(const Rat& k) const;
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

    bool is_zero() const;
    bool is_integral() const;
    std::string to_string() const;
};

// Coweight in the simple-coroot basis: mu_check = sum_i c[i] * coroot_i, so
// <w, mu_check> = sum_i c[i] * w_i. Weights and coweights share coordinate
// machinery but never convert implicitly; phi_kappa is the only bridge.
struct Coweight {
    std::vector<Rat> c;

    Coweight() = default;
    explicit Coweight(std::vector<Rat> coords) : c(std::move(coords)) {}
    static Coweight zero(int rank) { return Coweight(std::vector<Rat>(rank, Rat(0))); }

    friend Coweight operator+(const Coweight& a, const Coweight& b);
    Coweight operator-() const;
    Coweight scaled(const Rat& k) const;
    friend bool operator==(const Coweight& a, const Coweight& b) { return a.c == b.c; }

    bool is_zero() const;
};

// Weight with coordinates in Q(kappa); phi_kappa lands here.
using KWeight = std::vector<LevelScalar>;

KWeight kweight_from(const Weight& w);
KWeight kweight_add(const KWeight& a, const KWeight& b);
bool kweight_eq(const KWeight& a, const KWeight& b);

// Affine Kac-Moody weight (n, mu, level): energy, finite part, level scalar.
struct AffineWeight {
    long energy = 0;
    Weight finite;
    LevelScalar level;

    AffineWeight() = default;
    AffineWeight(long n, Weight mu, LevelScalar lv)
        : energy(n), finite(std::move(mu)), level(std::move(lv)) {}

    friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
        return a.energy == b.energy && a.finite == b.finite && a.level == b.level;
    }
    std::string to_string() const;
};

// Positive root of the affine Kac-Moody algebra. Imaginary roots (n, 0) carry
// multiplicity = rank; real roots have multiplicity 1.
struct AffineRoot {
    long energy = 0;
    Weight finite;                 // a finite root, or zero for imaginary roots
    std::vector<long> root_coords; // finite part in the simple-root basis
    int multiplicity = 1;
    bool imaginary = false;
};

struct WeylElt {
    std::vector<int> word; // reduced word in simple reflections
    int length = 0;
    std::vector<std::vector<long>> mat; // action on fundamental coordinates
};

// Affine Weyl group element  t_{translation} * w.
struct AffineWeylElt {
    Coweight translation;
    int weyl_index = 0;
};

class RootDatum {
public:
    static const RootDatum& preset(const std::string& name); // A1, A2, B2

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    long cartan(int i, int j) const { return cartan_[i][j]; } // <alpha_j, coroot_i>
    long sym(int i) const { return d_[i]; }                   // d_i, with d_i a_ij = d_j a_ji
    const std::vector<long>& syms() const { return d_; }
    long dual_coxeter() const { return hvee_; }
    LevelScalar critical_level() const { return LevelScalar::from_int(-hvee_); }

    const Weight& rho() const { return rho_; }
    const Weight& simple_root(int i) const { return simple_roots_[i]; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<std::vector<long>>& positive_root_coords() const { return pos_root_coords_; }
    const std::vector<long>& highest_root_coords() const { return theta_coords_; }
    long highest_root_height() const { return theta_height_; }

    // Weyl group
    const std::vector<WeylElt>& weyl() const { return weyl_; }
    int weyl_order() const { return static_cast<int>(weyl_.size()); }
    int w0() const { return w0_index_; }
    int weyl_multiply(int a, int b) const { return weyl_mult_[a][b]; } // index of w_a w_b
    int weyl_inverse(int a) const;
    Weight act(int w, const Weight& mu) const;
    Coweight act_coweight(int w, const Coweight& cw) const;
    // (t_a w_a)(t_b w_b) = t_{a + w_a b} (w_a w_b)
    AffineWeylElt affine_multiply(const AffineWeylElt& a, const AffineWeylElt& b) const;
    std::map<int, std::vector<int>> weyl_by_length() const;

    // finite dot action  w . mu = w(mu + rho) - rho
    Weight dot(int w, const Weight& mu) const;

    // pairings and forms
    Rat pairing(const Weight& mu, const Coweight& cw) const; // <mu, cw>
    Rat coroot_pairing(const Weight& mu, int i) const { return mu.c[i]; }
    // short-roots-norm-2 form and the invariant form normalized to
    // (theta, theta) = 2; both symmetric W-invariant forms on weights.
    Rat q_form(const Weight& a, const Weight& b) const;
    Rat st_form(const Weight& a, const Weight& b) const;
    LevelScalar kappa_form(const Weight& a, const Weight& b, const LevelScalar& kappa) const;
    // form on coweights normalized so (coroot_i, coroot_j) = d_i <alpha_i, coroot_j>
    Rat st_form_coweights(const Coweight& a, const Coweight& b) const;

    // affine extension of the st form on (energy, finite, level) triples,
    // pairing energy against level:
    //   ((n1,m1,k1),(n2,m2,k2)) = (m1,m2)_st + n1 k2 + n2 k1
    LevelScalar affine_form(const AffineWeight& a, const AffineWeight& b) const;

    // the isomorphism t -> t* at non-critical kappa:
    //   (lambda, phi_kappa(mu_check))_{kappa - kappa_crit} = <lambda, mu_check>
    KWeight phi_kappa(const Coweight& cw, const LevelScalar& kappa) const;

    // full affine dot action; needs non-critical kappa when translation != 0
    KWeight dot_action(const AffineWeylElt& we, const Weight& mu, const LevelScalar& kappa) const;

    std::vector<AffineRoot> positive_affine_roots(long max_energy) const;

    bool is_dominant(const Weight& mu) const;
    bool is_dominant_coweight(const Coweight& cw) const;

    // weight multiplicities of the irreducible V_lambda, keyed by the drop
    // lambda - mu in simple-root coordinates (Freudenthal recursion)
    std::map<std::vector<long>, long> finite_multiplicities(const Weight& lambda) const;
    Int finite_dimension(const Weight& lambda) const; // Weyl dimension formula

    // root-basis coordinates of a weight (solves the Cartan system); throws if
    // the weight is not in the rational root span (never, for full-rank data)
    std::vector<Rat> to_root_basis(const Weight& mu) const;
    Weight from_root_basis(const std::vector<Rat>& coords) const;
    Weight from_root_basis_long(const std::vector<long>& coords) const;

    // symmetrizer attached to the coroot side: (coroot_i, coroot_i)_st / 2
    Rat coroot_sym(int i) const { return st_norm_ / Rat(d_[i]); }

    static Weight act_matrix(const std::vector<std::vector<long>>& m, const Weight& mu);

    QuantumContext quantum_context(bool cyclotomic = false, long ell = 0) const;

private:
    RootDatum(std::string name, std::vector<std::vector<long>> cartan, std::vector<long> d,
              long hvee);
    void build();

    std::string name_;
    int rank_ = 0;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    long hvee_ = 0;
    Rat st_norm_ = 1; // (theta,theta)_q / 2

    std::vector<Weight> simple_roots_;
    Weight rho_;
    std::vector<Weight> positive_roots_;
    std::vector<std::vector<long>> pos_root_coords_;
    std::vector<long> theta_coords_;
    long theta_height_ = 0;

    std::vector<WeylElt> weyl_;
    std::vector<std::vector<int>> weyl_mult_;
    int w0_index_ = 0;

    std::vector<std::vector<Rat>> gram_q_;     // (omega_i, omega_j)_q
    std::vector<std::vector<Rat>> gram_q_inv_; // inverse of gram_q_
};

} // namespace semiq

#endif
