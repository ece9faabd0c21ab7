#include "semiq/characters.hpp"

#include "semiq/errors.hpp"

namespace semiq {

CharacterSeries::CharacterSeries(const RootDatum& rd, AffineWeight base, Trunc trunc)
    : rd_(&rd), base_(std::move(base)), trunc_(trunc) {
    if (trunc.max_energy < 0 || trunc.max_height < 0)
        throw ValidationError("truncation depths must be >= 0");
}

bool CharacterSeries::keep(const DropKey& k) const {
    if (k.n < 0 || k.n > trunc_.max_energy) return false;
    const auto& theta = rd_->highest_root_coords();
    long ht = 0;
    for (size_t i = 0; i < k.beta.size(); ++i) {
        if (k.beta[i] < -k.n * theta[i]) return false;
        ht += k.beta[i];
    }
    return ht <= trunc_.max_height + (trunc_.max_energy - k.n) * rd_->highest_root_height();
}

long long CharacterSeries::coeff(const DropKey& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? 0 : it->second;
}

long long CharacterSeries::coeff(long n, std::vector<long> beta) const {
    return coeff(DropKey{n, std::move(beta)});
}

void CharacterSeries::set_coeff(const DropKey& k, long long v) {
    if (!keep(k)) throw TruncationError("coefficient outside the truncation window");
    if (v == 0) coeffs_.erase(k);
    else coeffs_[k] = v;
}

void CharacterSeries::multiply_geometric(long m, const std::vector<long>& gamma, int mult) {
    for (int rep = 0; rep < mult; ++rep) {
        // multiply by sum_{k>=0} e^{-k(m,gamma)}; equivalently closure under
        // adding the drop (m, gamma) any number of times
        std::map<DropKey, long long> out;
        for (const auto& [key, val] : coeffs_) {
            DropKey cur = key;
            while (keep(cur)) {
                out[cur] += val;
                cur.n += m;
                for (size_t i = 0; i < cur.beta.size(); ++i) cur.beta[i] += gamma[i];
                if (m == 0) {
                    bool zero = true;
                    for (long g : gamma)
                        if (g != 0) zero = false;
                    if (zero) throw ValidationError("geometric factor with zero drop");
                }
            }
        }
        coeffs_ = std::move(out);
    }
    prune_zeros();
}

void CharacterSeries::multiply_finite(const std::map<std::vector<long>, long long>& poly) {
    std::map<DropKey, long long> out;
    for (const auto& [key, val] : coeffs_) {
        for (const auto& [beta, c] : poly) {
            DropKey k = key;
            for (size_t i = 0; i < k.beta.size(); ++i) k.beta[i] += beta[i];
            if (keep(k)) out[k] += val * c;
        }
    }
    coeffs_ = std::move(out);
    prune_zeros();
}

void CharacterSeries::add_scaled(const CharacterSeries& other, long long scale) {
    if (!same_window(other)) throw ValidationError("mixed-truncation series arithmetic");
    for (const auto& [key, val] : other.coeffs_) coeffs_[key] += scale * val;
    prune_zeros();
}

CharacterSeries CharacterSeries::rebased(const Weight& new_finite, const Trunc& target) const {
    auto shift_rat = rd_->to_root_basis(new_finite - base_.finite);
    std::vector<long> shift(shift_rat.size());
    long ht_shift = 0;
    for (size_t i = 0; i < shift.size(); ++i) {
        if (!is_integer(shift_rat[i]) || shift_rat[i] < 0)
            throw ValidationError("rebase shift must be a nonnegative root vector");
        shift[i] = rat_to_long(shift_rat[i]);
        ht_shift += shift[i];
    }
    if (trunc_.max_height < target.max_height + ht_shift || trunc_.max_energy < target.max_energy)
        throw TruncationError("rebase: source truncation too small for the target window");
    CharacterSeries out(*rd_, AffineWeight(base_.energy, new_finite, base_.level), target);
    for (const auto& [key, val] : coeffs_) {
        DropKey k = key;
        for (size_t i = 0; i < k.beta.size(); ++i) k.beta[i] += shift[i];
        if (out.keep(k)) out.coeffs_[k] += val;
    }
    out.prune_zeros();
    return out;
}

bool CharacterSeries::same_window(const CharacterSeries& other) const {
    return rd_ == other.rd_ && trunc_ == other.trunc_ && base_.energy == other.base_.energy &&
           base_.finite == other.base_.finite && base_.level == other.base_.level;
}

bool operator==(const CharacterSeries& a, const CharacterSeries& b) {
    if (!a.same_window(b)) throw ValidationError("comparing series with different windows");
    return a.coeffs_ == b.coeffs_;
}

bool CharacterSeries::nonnegative() const {
    for (const auto& [k, v] : coeffs_)
        if (v < 0) return false;
    return true;
}

void CharacterSeries::prune_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();)
        it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
}

namespace {

CharacterSeries unit_series(const RootDatum& rd, const AffineWeight& base, const Trunc& trunc) {
    CharacterSeries s(rd, base, trunc);
    s.set_coeff(DropKey{0, std::vector<long>(rd.rank(), 0)}, 1);
    return s;
}

} // namespace

CharacterSeries verma_character(const RootDatum& rd, const Weight& lambda,
                                const LevelScalar& kappa, const Trunc& trunc) {
    CharacterSeries s = unit_series(rd, AffineWeight(0, lambda, kappa), trunc);
    for (const auto& root : rd.positive_affine_roots(trunc.max_energy))
        s.multiply_geometric(root.energy, root.root_coords, root.multiplicity);
    return s;
}

CharacterSeries wakimoto_character(const RootDatum& rd, const Weight& lambda,
                                   const LevelScalar& kappa, const Trunc& trunc) {
    CharacterSeries s = unit_series(rd, AffineWeight(0, lambda, kappa), trunc);
    const auto& roots = rd.positive_root_coords();
    // generators x*_{alpha,n}, n <= 0, of weight (n, -alpha): drops (|n|, alpha)
    for (const auto& alpha : roots)
        for (long n = 0; n <= trunc.max_energy; ++n) s.multiply_geometric(n, alpha, 1);
    // generators x_{alpha,m}, m < 0, of weight (m, alpha): drops (|m|, -alpha)
    for (const auto& alpha : roots) {
        std::vector<long> neg(alpha.size());
        for (size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
        for (long m = 1; m <= trunc.max_energy; ++m) s.multiply_geometric(m, neg, 1);
    }
    // Heisenberg generators y_{i,l}, l < 0, one per Cartan direction
    std::vector<long> zero(rd.rank(), 0);
    for (long l = 1; l <= trunc.max_energy; ++l) s.multiply_geometric(l, zero, rd.rank());
    return s;
}

CharacterSeries fock_character(const RootDatum& rd, const Weight& mu, const LevelScalar& level,
                               const Trunc& trunc) {
    CharacterSeries s = unit_series(rd, AffineWeight(0, mu, level), trunc);
    std::vector<long> zero(rd.rank(), 0);
    for (long l = 1; l <= trunc.max_energy; ++l) s.multiply_geometric(l, zero, rd.rank());
    return s;
}

CharacterSeries weyl_module_character(const RootDatum& rd, const Weight& lambda,
                                      const LevelScalar& kappa, const Trunc& trunc) {
    if (!rd.is_dominant(lambda) || !lambda.is_integral())
        throw ValidationError("Weyl module requires a dominant integral weight");
    CharacterSeries s = unit_series(rd, AffineWeight(0, lambda, kappa), trunc);
    std::map<std::vector<long>, long long> finite;
    for (const auto& [beta, m] : rd.finite_multiplicities(lambda)) finite[beta] = m;
    s.multiply_finite(finite);
    for (const auto& root : rd.positive_affine_roots(trunc.max_energy)) {
        if (root.energy == 0) continue;
        s.multiply_geometric(root.energy, root.root_coords, root.multiplicity);
    }
    return s;
}

CharacterSeries contragredient_character(const CharacterSeries& c) { return c; }

bool bgg_euler_check(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                     const Trunc& trunc, bool corrupt_sign) {
    CharacterSeries weyl = weyl_module_character(rd, lambda, kappa, trunc);
    CharacterSeries acc(rd, AffineWeight(0, lambda, kappa), trunc);
    for (int w = 0; w < rd.weyl_order(); ++w) {
        Weight dotted = rd.dot(w, lambda);
        auto drop = rd.to_root_basis(lambda - dotted);
        long ht = 0;
        for (const auto& x : drop) ht += rat_to_long(x);
        Trunc wide{trunc.max_energy, trunc.max_height + ht};
        CharacterSeries term = verma_character(rd, dotted, kappa, wide).rebased(lambda, trunc);
        int len = rd.weyl()[w].length;
        long long sign = len % 2 ? -1 : 1;
        if (corrupt_sign && len == 1) sign = -sign;
        acc.add_scaled(term, sign);
    }
    return acc == weyl;
}

} // namespace semiq
