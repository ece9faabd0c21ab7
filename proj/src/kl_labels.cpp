#include "semiq/kl_labels.hpp"

#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

std::string kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::Verma: return "verma";
        case LabelKind::DualVerma: return "dual-verma";
        case LabelKind::Weyl: return "weyl";
        case LabelKind::DualWeyl: return "dual-weyl";
        case LabelKind::WakimotoStar: return "wakimoto-*";
        case LabelKind::WakimotoW0: return "wakimoto-w0";
        case LabelKind::Fock: return "fock";
        case LabelKind::QuantumVerma: return "quantum-verma";
        case LabelKind::QuantumWeyl: return "quantum-weyl";
        case LabelKind::DualQuantumWeyl: return "dual-quantum-weyl";
    }
    return "?";
}

std::string ModuleLabel::to_string(const RootDatum&) const {
    std::ostringstream os;
    os << kind_name(kind) << "[";
    for (size_t i = 0; i < weight.size(); ++i) {
        if (i) os << ",";
        os << weight[i].to_string();
    }
    os << "]";
    if (!quantum) os << "@" << level.to_string();
    if (shift != 0) os << "[" << shift << "]";
    return os.str();
}

ModuleLabel make_affine_label(LabelKind kind, const Weight& w, const LevelScalar& level,
                              long shift) {
    ModuleLabel l;
    l.kind = kind;
    l.weight = kweight_from(w);
    l.level = level;
    l.shift = shift;
    return l;
}

ModuleLabel make_quantum_label(LabelKind kind, const Weight& w, long shift) {
    ModuleLabel l;
    l.kind = kind;
    l.weight = kweight_from(w);
    l.quantum = true;
    l.shift = shift;
    return l;
}

LevelScalar reflect_level(const RootDatum& rd, const LevelScalar& kappa) {
    return -kappa - LevelScalar::from_int(2 * rd.dual_coxeter());
}

namespace {

KWeight act_kweight(const RootDatum& rd, int w, const KWeight& kw) {
    const auto& m = rd.weyl()[w].mat;
    KWeight out(rd.rank(), LevelScalar());
    for (int i = 0; i < rd.rank(); ++i)
        for (int j = 0; j < rd.rank(); ++j)
            out[i] += LevelScalar::from_int(m[i][j]) * kw[j];
    return out;
}

KWeight negate_kweight(const KWeight& kw) {
    KWeight out = kw;
    for (auto& x : out) x = -x;
    return out;
}

bool kweight_dominant_integral(const KWeight& kw) {
    for (const auto& x : kw) {
        if (!x.is_rational()) return false;
        Rat v = x.rational_value();
        if (v < 0 || !is_integer(v)) return false;
    }
    return true;
}

bool level_possibly_negative(const RootDatum& rd, const LevelScalar& level) {
    // negative means kappa + h_vee not a nonnegative rational; symbolic levels
    // are irrational and qualify
    if (!level.is_rational()) return true;
    return level.rational_value() + Rat(rd.dual_coxeter()) < 0;
}

bool level_possibly_positive(const RootDatum& rd, const LevelScalar& level) {
    if (!level.is_rational()) return true;
    return level.rational_value() + Rat(rd.dual_coxeter()) > 0;
}

} // namespace

ModuleLabel dual_I(const RootDatum& rd, const ModuleLabel& label) {
    if (label.kind != LabelKind::Verma) throw ValidationError("dual_I acts on Verma labels");
    ModuleLabel out = label;
    out.level = reflect_level(rd, label.level);
    out.weight = kweight_add(negate_kweight(label.weight),
                             kweight_from(rd.rho() + rd.rho()));
    out.shift = -label.shift + static_cast<long>(rd.positive_roots().size());
    return out;
}

ModuleLabel dual_GO(const RootDatum& rd, const ModuleLabel& label) {
    if (label.kind != LabelKind::Weyl) throw ValidationError("dual_GO acts on Weyl labels");
    if (!kweight_dominant_integral(label.weight))
        throw ValidationError("dual_GO requires a dominant integral weight");
    ModuleLabel out = label;
    out.level = reflect_level(rd, label.level);
    out.weight = negate_kweight(act_kweight(rd, rd.w0(), label.weight));
    out.shift = -label.shift;
    return out;
}

ModuleLabel dual_q(const RootDatum& rd, const ModuleLabel& label) {
    ModuleLabel out = label;
    if (label.kind == LabelKind::QuantumWeyl) out.kind = LabelKind::DualQuantumWeyl;
    else if (label.kind == LabelKind::DualQuantumWeyl) out.kind = LabelKind::QuantumWeyl;
    else throw ValidationError("dual_q acts on quantum Weyl labels");
    out.weight = negate_kweight(act_kweight(rd, rd.w0(), label.weight));
    out.shift = -label.shift;
    return out;
}

ModuleLabel kl_negative(const RootDatum& rd, const ModuleLabel& label) {
    if (label.kind != LabelKind::Weyl) throw ValidationError("kl_negative acts on Weyl labels");
    if (!level_possibly_negative(rd, label.level))
        throw ValidationError("kl_negative requires a negative level");
    ModuleLabel out;
    out.kind = LabelKind::QuantumWeyl;
    out.weight = label.weight;
    out.quantum = true;
    out.shift = label.shift;
    return out;
}

ModuleLabel kl_positive(const RootDatum& rd, const ModuleLabel& label) {
    if (label.kind != LabelKind::Weyl) throw ValidationError("kl_positive acts on Weyl labels");
    if (!level_possibly_positive(rd, label.level))
        throw ValidationError("kl_positive requires a positive level");
    ModuleLabel out;
    out.kind = LabelKind::DualQuantumWeyl;
    out.weight = label.weight;
    out.quantum = true;
    out.shift = label.shift;
    return out;
}

ModuleLabel wakimoto_convolution(const RootDatum& rd, const ModuleLabel& label,
                                 const Coweight& mu_check, ConvFlavor flavor, bool up) {
    if (!rd.is_dominant_coweight(mu_check))
        throw ValidationError("wakimoto_convolution requires a dominant coweight");
    if (label.kind == LabelKind::WakimotoStar) {
        if (flavor != ConvFlavor::Star)
            throw ValidationError("*-type Wakimoto labels convolve with *-flavor");
    } else if (label.kind == LabelKind::WakimotoW0) {
        if (flavor != ConvFlavor::Shriek)
            throw ValidationError("w0-type Wakimoto labels convolve with !-flavor");
    } else {
        throw ValidationError("wakimoto_convolution acts on Wakimoto labels");
    }
    KWeight shift = rd.phi_kappa(mu_check, label.level);
    if (!up) shift = negate_kweight(shift);
    ModuleLabel out = label;
    out.weight = kweight_add(label.weight, shift);
    return out;
}

} // namespace semiq
