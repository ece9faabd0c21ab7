#ifndef SEMIQ_KL_LABELS_HPP
#define SEMIQ_KL_LABELS_HPP

#include <string>

#include "semiq/root_datum.hpp"

namespace semiq {

enum class LabelKind {
    Verma,
    DualVerma,
    Weyl,
    DualWeyl,
    WakimotoStar,
    WakimotoW0,
    Fock,
    QuantumVerma,
    QuantumWeyl,
    DualQuantumWeyl,
};

std::string kind_name(LabelKind k);

// Label of a standard object: kind, weight (Q(kappa)-valued coordinates so
// that coweight translations can act), level for the affine kinds, and a
// homological shift. No module is ever materialized here.
struct ModuleLabel {
    LabelKind kind = LabelKind::Verma;
    KWeight weight;
    LevelScalar level;    // meaningful for affine kinds only
    bool quantum = false; // quantum kinds carry no level scalar
    long shift = 0;

    friend bool operator==(const ModuleLabel& a, const ModuleLabel& b) {
        return a.kind == b.kind && kweight_eq(a.weight, b.weight) &&
               (a.quantum ? b.quantum : (!b.quantum && a.level == b.level)) &&
               a.shift == b.shift;
    }
    std::string to_string(const RootDatum& rd) const;
};

ModuleLabel make_affine_label(LabelKind kind, const Weight& w, const LevelScalar& level,
                              long shift = 0);
ModuleLabel make_quantum_label(LabelKind kind, const Weight& w, long shift = 0);

// reflected level kappa' = -kappa - 2 h_vee
LevelScalar reflect_level(const RootDatum& rd, const LevelScalar& kappa);

// Iwahori-equivariant duality on Verma labels:
//   (Verma, mu, kappa', s) -> (Verma, -mu + 2 rho, kappa, -s + dim(G/B)).
// The shift composes contravariantly, so applying the functor twice cancels
// the dim(G/B) shifts and returns the original label.
ModuleLabel dual_I(const RootDatum& rd, const ModuleLabel& label);

// G(O)-equivariant duality on Weyl labels:
//   (Weyl, lambda, kappa', s) -> (Weyl, -w0(lambda), kappa, -s).
ModuleLabel dual_GO(const RootDatum& rd, const ModuleLabel& label);

// Hopf dual on quantum labels: QuantumWeyl(lambda) <-> DualQuantumWeyl(-w0 lambda).
ModuleLabel dual_q(const RootDatum& rd, const ModuleLabel& label);

// Kazhdan-Lusztig functor on Weyl labels. kl_negative requires a negative (or
// symbolic) level and sends Weyl(lambda, kappa') to QuantumWeyl(lambda);
// kl_positive requires a positive (or symbolic) level and is determined by
// the commuting square kl_positive o dual_GO = dual_q o kl_negative, which
// evaluates to Weyl(mu, kappa) -> DualQuantumWeyl(mu).
ModuleLabel kl_negative(const RootDatum& rd, const ModuleLabel& label);
ModuleLabel kl_positive(const RootDatum& rd, const ModuleLabel& label);

enum class ConvFlavor { Star, Shriek };

// Convolution weight shift on Wakimoto labels: the *-kind convolves with
// j_{-mu_check,*} and the w0-kind with j_{-mu_check,!}, both shifting the
// highest weight by -phi_kappa(mu_check); `up` applies the inverse shift.
// mu_check must be dominant.
ModuleLabel wakimoto_convolution(const RootDatum& rd, const ModuleLabel& label,
                                 const Coweight& mu_check, ConvFlavor flavor, bool up = false);

} // namespace semiq

#endif
