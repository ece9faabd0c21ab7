#ifndef SEMIQ_QUANTUM_MODULES_HPP
#define SEMIQ_QUANTUM_MODULES_HPP

#include <map>
#include <optional>
#include <vector>

#include "semiq/quantum_algebra.hpp"

namespace semiq {

// Lambda-graded module with exact generator actions. The torus acts through
// the grading (K_i on weight mu is the scalar v_i^{<mu, coroot_i>}), so only
// the E_i / F_i matrices are materialized. Weights are absolute, in
// fundamental coordinates.
class WeightModule {
public:
    using WKey = std::vector<Rat>;

    WeightModule(const RootDatum& rd, QuantumContext ctx, Weight highest)
        : rd_(&rd), ctx_(std::move(ctx)), highest_(std::move(highest)) {}

    const RootDatum& root_datum() const { return *rd_; }
    const QuantumContext& context() const { return ctx_; }
    const Weight& highest() const { return highest_; }

    // complete modules store every nonzero weight space; truncated ones may
    // clip below the stored window
    bool complete() const { return complete_; }
    void mark_complete() { complete_ = true; }

    // true if the weight is stored or is genuinely outside the support cone
    // (some coordinate of highest - mu fails to be a nonnegative integer);
    // false only at the truncation boundary of an incomplete module
    bool accounted(const Weight& mu) const;

    const std::map<WKey, int>& weights() const { return dims_; }
    int dim(const Weight& mu) const;
    long long total_dim() const;

    void set_dim(const Weight& mu, int d);
    void set_E(int i, const Weight& from, Matrix<QScalar> m);
    void set_F(int i, const Weight& from, Matrix<QScalar> m);

    // action matrices; empty optional when source or target space is zero
    std::optional<Matrix<QScalar>> E(int i, const Weight& from) const;
    std::optional<Matrix<QScalar>> F(int i, const Weight& from) const;

    // apply a generator to a vector supported at one weight
    std::vector<QScalar> apply_E(int i, const Weight& from, const std::vector<QScalar>& v) const;
    std::vector<QScalar> apply_F(int i, const Weight& from, const std::vector<QScalar>& v) const;

    Weight weight_plus_alpha(int i, const Weight& mu) const { return mu + rd_->simple_root(i); }
    Weight weight_minus_alpha(int i, const Weight& mu) const { return mu - rd_->simple_root(i); }

private:
    const RootDatum* rd_;
    QuantumContext ctx_;
    Weight highest_;
    bool complete_ = false;
    std::map<WKey, int> dims_;
    std::map<std::pair<int, WKey>, Matrix<QScalar>> eact_, fact_;
};

// one-dimensional trivial module at weight zero
WeightModule trivial_module(const RootDatum& rd, const QuantumContext& ctx);

// Verma module of highest weight lambda, truncated to root-lattice drops of
// height <= depth. Basis per drop: the KD quotient basis of words in the F
// generators; E-actions computed by straightening against the commutation
// relations, with the torus part supplied by the grading.
WeightModule quantum_verma(const RootDatum& rd, const Weight& lambda, const QuantumContext& ctx,
                           long depth);

// finite-dimensional Weyl module: quotient of the Verma by the submodule
// generated by F_i^{<lambda, coroot_i> + 1} (highest vector); generic mode
WeightModule quantum_weyl(const RootDatum& rd, const Weight& lambda, const QuantumContext& ctx);

// Contragredient dual: graded dual with the action twisted by the transpose
// anti-automorphism E_i <-> F_i, K fixed. Preserves characters; the dual of
// the Weyl module with highest weight lambda again has highest weight lambda
// and lowest weight w0(lambda).
WeightModule contragredient_dual_q(const WeightModule& m);

// Hopf-algebra dual, twisted by the antipode alone. Reflects characters
// (ch D(M) at mu equals ch M at -mu); sends the class of the Weyl module of
// highest weight lambda to the one of highest weight -w0(lambda).
WeightModule hopf_dual_q(const WeightModule& m);

// dimension of the intertwiner space Hom(a, b) within the common weight window
int hom_dimension(const WeightModule& a, const WeightModule& b);

// check the defining relations on every stored weight space: commutators
// [E_i, F_j] = delta_ij [<mu, coroot_i>]_{v_i}, E- and F-Serre operators
bool check_module_relations(const WeightModule& m);

// characters agree as maps weight -> dimension
bool same_character(const WeightModule& a, const WeightModule& b);
// ch b(mu) == ch a(-mu)
bool reflected_character(const WeightModule& a, const WeightModule& b);

// BGG resolution  0 -> M_{w0.lambda} -> ... -> M_lambda -> V_lambda -> 0
// truncated to absolute drops of height <= depth from lambda.
struct BGGComplex {
    explicit BGGComplex(WeightModule weyl) : weyl_module(std::move(weyl)) {}

    const RootDatum* rd = nullptr;
    Weight lambda;
    long depth = 0;
    // terms by cohomological-opposite index: position i holds the summands of
    // length i, each a Verma module based at w . lambda
    std::vector<std::vector<int>> weyl_by_len; // Weyl-group indices per length
    std::vector<std::vector<WeightModule>> terms;
    WeightModule weyl_module; // the augmentation target
    // differential d_i : term_i -> term_{i-1}, stored per absolute weight
    // (basis: concatenation of the summand bases at that weight)
    std::vector<std::map<WeightModule::WKey, Matrix<QScalar>>> diffs;
    // augmentation term_0 -> weyl_module per weight
    std::map<WeightModule::WKey, Matrix<QScalar>> augment;

    // all absolute weights lambda - beta, ht(beta) <= depth
    std::vector<Weight> window_weights;
    const std::vector<Weight>& window() const { return window_weights; }
    // dimension of summand-concatenated term i at weight mu
    int term_dim(int i, const Weight& mu) const;

    bool d_squared_zero() const;
    // exact at every index > 0 and H_0 = Weyl module, within the window
    bool exact() const;
};

BGGComplex quantum_bgg(const RootDatum& rd, const Weight& lambda, const QuantumContext& ctx,
                       long depth, bool corrupt_sign = false);

} // namespace semiq

#endif
