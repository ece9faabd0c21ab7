#ifndef SEMIQ_KAC_KAZHDAN_HPP
#define SEMIQ_KAC_KAZHDAN_HPP

#include <optional>
#include <vector>

#include "semiq/root_datum.hpp"

namespace semiq {

// One admissible step of a singular-weight chain: to = from - b * root, with
// the step condition  b * (root, root) = 2 * (root, from + rho_hat)  holding
// exactly at the stated b.
struct ChainStep {
    AffineRoot root;
    long b = 0;
    AffineWeight from;
    AffineWeight to;
};

struct KKReport {
    bool passed = false;
    std::vector<AffineWeight> candidates; // every reachable singular weight
    std::vector<AffineWeight> witnesses;  // candidates of the excluded shape
    std::vector<ChainStep> steps;         // one reaching step per new candidate
    bool used_imaginary_steps = false;
    // every candidate is of the form (-n, lambda - beta) with beta >= 0
    bool all_drops_nonnegative = true;
    long max_energy = 0;
    long max_depth = 0;
};

// Smallest positive integer b solving the step condition for this root at
// this weight, if one exists. For zero-norm (imaginary) roots the condition
// degenerates: no solution unless the right side vanishes, in which case any
// b works and 1 is returned. In symbolic mode a solution that depends on
// kappa is no solution.
std::optional<long> step_condition(const RootDatum& rd, const AffineWeight& mu,
                                   const AffineRoot& root);

// All weights reachable from (0, lambda, kappa) by chains of admissible steps
// within the cutoffs: accumulated energy drop <= max_energy, finite drop with
// every root coordinate in [-max_depth, max_depth]. Breadth-first with
// memoized visited weights; monotone in the cutoffs.
KKReport singular_candidates(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                             long max_energy, long max_depth);

// Decision procedure: no candidate may combine negative energy with a finite
// part lambda + beta for nonzero beta >= 0. Witnesses list the violators.
KKReport wakimoto_verma_check(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                              long max_energy, long max_depth);

// A coordinate threshold t such that every dominant integral lambda with
// <lambda, coroot_i> >= t for all i is "sufficiently dominant" for the given
// cutoffs at any negative level: within the window, no admissible step can
// move the finite part up along a negated root.
long sufficient_dominance_threshold(const RootDatum& rd, long max_energy, long max_depth);

} // namespace semiq

#endif
