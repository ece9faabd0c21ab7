#ifndef SEMIQ_SEMIINF_HPP
#define SEMIQ_SEMIINF_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "semiq/cohomology.hpp"
#include "semiq/root_datum.hpp"

namespace semiq {

// ---------------------------------------------------------------------------
// sl2 slices: finite-truncation realizations of level-kappa modules over the
// affine algebra, with straightening-based mode actions. Scalars live in
// Q(kappa); rational levels embed as constants.
// ---------------------------------------------------------------------------

enum class SliceFlavor { Weyl, Wakimoto };

// Monomial basis element: exponent list over mode keys (sorted), applied to a
// top vector (Weyl flavor) or the Fock vacuum (Wakimoto flavor).
struct SliceMonomial {
    // key encodes (species, mode index); exponents > 0
    std::vector<std::pair<int, int>> powers;
    int top = 0;

    friend bool operator<(const SliceMonomial& a, const SliceMonomial& b) {
        if (a.top != b.top) return a.top < b.top;
        return a.powers < b.powers;
    }
    friend bool operator==(const SliceMonomial& a, const SliceMonomial& b) {
        return a.top == b.top && a.powers == b.powers;
    }
};

using SliceVector = std::map<SliceMonomial, LevelScalar>;

// Truncated sl2 module slice at level `level` with highest weight coordinate
// lambda = <lambda, coroot>. The Weyl flavor is the induced module on the
// (lambda+1)-dimensional top; the Wakimoto flavor is the free-field module
// on the beta-gamma system tensor a Heisenberg Fock space.
class Sl2Slice {
public:
    // weight_depth caps the energy-free a*_0 direction of the Wakimoto flavor
    // (the Weyl flavor is weight-bounded by the energy window on its own)
    Sl2Slice(SliceFlavor flavor, long lambda, LevelScalar level, long max_energy,
             long weight_depth = -1);

    SliceFlavor flavor() const { return flavor_; }
    long lambda() const { return lambda_; }
    const LevelScalar& level() const { return level_; }
    long max_energy() const { return max_energy_; }

    const std::vector<SliceMonomial>& basis() const { return basis_; }
    int index_of(const SliceMonomial& m) const;
    long energy_drop(const SliceMonomial& m) const;
    long weight_coord(const SliceMonomial& m) const; // <wt, coroot>

    // action of x tensor t^n for x in {e, h, f}; vectors outside the
    // truncation are clipped only in the energy-raising direction, which the
    // BRST construction never needs beyond the window
    SliceVector apply(int gen, long n, const SliceVector& v) const;
    SliceVector apply(int gen, long n, const SliceMonomial& m) const;

    // invariant check: [x_a, y_b] = [x,y]_{a+b} + a delta_{a+b,0} (x,y)_st kappa
    // on every basis monomial whose intermediates stay inside the window
    bool check_commutation(long a_mode, long b_mode, int xgen, int ygen) const;

private:
    void enumerate_basis();
    SliceVector mult_negative(int key, const SliceMonomial& m, const LevelScalar& coeff) const;
    SliceVector apply_weyl(int gen, long n, const SliceMonomial& m,
                           const LevelScalar& coeff) const;
    // Wakimoto primitives
    SliceVector apply_wak_op(int species, long n, const SliceMonomial& m,
                             const LevelScalar& coeff) const;
    SliceVector apply_wak(int gen, long n, const SliceMonomial& m) const;

    SliceFlavor flavor_;
    long lambda_;
    LevelScalar level_;
    long max_energy_;
    long weight_depth_;
    std::vector<SliceMonomial> basis_;
    std::map<SliceMonomial, int> index_;
};

// ---------------------------------------------------------------------------
// ghost wedge factor for the abelian nilpotent loop algebra
// ---------------------------------------------------------------------------

struct GhostMonomial {
    std::vector<long> cochain; // e*-indices, >= 0, strictly increasing
    std::vector<long> chain;   // loop-chain indices, >= 1, strictly increasing

    long energy_drop() const;
    long weight_coord() const; // in <., coroot> units (alpha = 2)
    int ghost_number() const { return static_cast<int>(cochain.size() - chain.size()); }

    friend bool operator<(const GhostMonomial& a, const GhostMonomial& b) {
        if (a.cochain != b.cochain) return a.cochain < b.cochain;
        return a.chain < b.chain;
    }
};

std::vector<GhostMonomial> enumerate_ghosts(long max_energy);

// wedge e*_n from the left; returns sign, or nullopt if it annihilates
std::optional<std::pair<int, GhostMonomial>> ghost_wedge(const GhostMonomial& g, long n);
// contract the chain factor with index n; nullopt if absent
std::optional<std::pair<int, GhostMonomial>> ghost_contract(const GhostMonomial& g, long n);

// ---------------------------------------------------------------------------
// the truncated BRST complex and its cohomology
// ---------------------------------------------------------------------------

struct Trunc2 {
    long energy = 0;
    long depth = 0; // root-lattice drop bound for reporting / minimality rules
};

struct BrstBlockKey {
    long energy_drop;  // total energy drop >= 0
    long weight;       // total <., coroot> coordinate
    friend bool operator<(const BrstBlockKey& a, const BrstBlockKey& b) {
        if (a.energy_drop != b.energy_drop) return a.energy_drop < b.energy_drop;
        return a.weight < b.weight;
    }
};

struct BrstBlock {
    std::map<int, int> dims;     // ghost number -> dimension
    std::map<int, int> homology; // ghost number -> cohomology dimension
    bool complete = true;        // every contributing basis vector enumerated
};

struct FockSummand {
    long base_energy = 0; // energy drop of the highest weight
    long weight = 0;      // <mu, coroot>
    long mult = 0;
};

struct BrstResult {
    SliceFlavor flavor = SliceFlavor::Weyl;
    long lambda = 0;
    LevelScalar level;
    Trunc2 trunc;
    std::map<BrstBlockKey, BrstBlock> blocks;
    // Fock decomposition of the cohomology, per ghost number
    std::map<int, std::vector<FockSummand>> fock;
    bool fock_exact = true; // residual vanished within the window
};

// Build the complex for the slice, verify d*d = 0 exactly on every block,
// compute blockwise cohomology by exact rank, and decompose it into Fock
// characters by triangular elimination from the top. corrupt_vacuum shifts
// the ghost vacuum weight (negative-control knob); corrupt_sign damages one
// differential entry.
BrstResult brst_complex(SliceFlavor flavor, long lambda, const LevelScalar& level,
                        const Trunc2& trunc, bool corrupt_vacuum = false,
                        bool corrupt_sign = false);

// multiplicity of the Fock module with weight coordinate w in ghost degree g,
// summed over base energies
long fock_multiplicity(const BrstResult& r, int g, long w);

struct MainFormulaReport {
    bool passed = false;
    std::vector<std::string> detail;
    std::map<long, BrstResult> brst;      // per lambda
    std::map<long, CohTable> quantum;     // per lambda
};

// Weyl-slice BRST cohomology at symbolic kappa decomposes as the Fock module
// at lambda in degree 0 plus the one at s.lambda in degree 1, matching the
// quantum nilpotent cohomology under pi_mu -> C_mu.
MainFormulaReport verify_main_formula(const std::vector<long>& lambdas, const Trunc2& trunc,
                                      bool corrupt_vacuum = false, bool corrupt_sign = false);

struct SpotCheckReport {
    bool passed = false;
    std::vector<std::string> detail;
    // comparison table rows: (ghost degree, weight coordinate, brst mult, quantum dim)
    std::vector<std::array<long, 4>> rows;
};

// positive rational level against the root-of-unity quantum cohomology:
// kappa with kappa - kappa_crit = ell / 2, quantum side over the rank-1
// Lusztig algebra at a primitive ell-th root of unity
SpotCheckReport positive_level_spot_check(long lambda, long ell, const Trunc2& trunc);

// the rational positive level matching a given odd ell (minimal dictionary)
Rat level_for_ell(long ell);

} // namespace semiq

#endif
