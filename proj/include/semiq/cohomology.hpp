#ifndef SEMIQ_COHOMOLOGY_HPP
#define SEMIQ_COHOMOLOGY_HPP

#include <string>

#include "semiq/quantum_modules.hpp"

namespace semiq {

// graded cohomology dimensions: degree -> weight -> dim (zeros omitted)
struct CohTable {
    std::map<int, std::map<std::vector<Rat>, int>> h;

    int dim(int degree, const Weight& mu) const;
    void set(int degree, const Weight& mu, int d);
    friend bool operator==(const CohTable& a, const CohTable& b) { return a.h == b.h; }
    std::string to_string() const;
};

// the closed form: H^i picks up one line C_{w.lambda} for each w of length i
CohTable closed_form_quantum_inv(const RootDatum& rd, const Weight& lambda);

// Route 1: nilpotent cohomology of the Weyl module through the BGG
// resolution. Dualizing the resolution termwise (contragredient, character
// preserving) yields a co-resolution of the self-dual Weyl module by duals of
// Vermas, whose invariants are computable as F-coinvariants of the original
// terms; the cohomology of that induced complex is reported per weight.
// With corrupt_check = true the structural d*d = 0 verification is skipped
// and a deliberately damaged coinvariant space is used (negative control).
CohTable coh_via_bgg(const RootDatum& rd, const Weight& lambda, const QuantumContext& ctx,
                     long depth, bool corrupt = false);

enum class AMode {
    generic_rank1, // polynomial algebra on one generator (A1, generic)
    generic_rank2, // weight-truncated minimal free resolution (A2, generic)
    small_rank1,   // truncated polynomial algebra, 2-periodic resolution
    lusztig_rank1, // truncated algebra tensor divided-power polynomial part
};

// Route 2: Ext_A(trivial, M) from an explicit free resolution of the trivial
// module, truncated by weight height. max_degree caps the reported
// cohomological degree (the root-of-unity resolutions are periodic).
CohTable coh_via_resolution(AMode mode, const WeightModule& m, long weight_depth, int max_degree,
                            long ell = 0);

struct QInvReport {
    bool passed = false;
    std::vector<std::string> mismatches;
    std::map<std::string, CohTable> tables; // keyed by lambda label and route
};

// both routes against the closed form, for each lambda in the list
QInvReport verify_quantum_inv(const RootDatum& rd, const std::vector<Weight>& lambdas,
                              const QuantumContext& ctx, bool corrupt = false);

} // namespace semiq

#endif
