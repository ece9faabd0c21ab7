#include "semiq/kac_kazhdan.hpp"

#include <deque>
#include <map>

#include "semiq/errors.hpp"

namespace semiq {

std::optional<long> step_condition(const RootDatum& rd, const AffineWeight& mu,
                                   const AffineRoot& root) {
    Rat norm = rd.st_form(root.finite, root.finite);
    // 2 * (root, mu + rho_hat) with rho_hat = (0, rho, h_vee)
    AffineWeight rho_hat(0, rd.rho(), LevelScalar::from_int(rd.dual_coxeter()));
    AffineWeight shifted(mu.energy, mu.finite + rd.rho(), mu.level + rho_hat.level);
    AffineWeight root_wt(root.energy, root.finite, LevelScalar::from_int(0));
    LevelScalar rhs = LevelScalar::from_int(2) * rd.affine_form(root_wt, shifted);

    if (norm == 0) {
        // zero-norm root: solutions exist only when the right side vanishes,
        // and then every positive b works; report the minimal one
        if (rhs.is_zero()) return 1;
        return std::nullopt;
    }
    LevelScalar b = rhs / LevelScalar::from_rat(norm);
    if (!b.is_rational()) return std::nullopt; // kappa-dependent solutions do not count
    Rat bv = b.rational_value();
    if (!is_integer(bv)) return std::nullopt;
    long bl = rat_to_long(bv);
    if (bl <= 0) return std::nullopt;
    return bl;
}

namespace {

struct WeightKey {
    long energy;
    std::vector<Rat> coords;
    friend bool operator<(const WeightKey& a, const WeightKey& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.coords < b.coords;
    }
};

} // namespace

KKReport singular_candidates(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                             long max_energy, long max_depth) {
    if (max_energy < 0 || max_depth < 0) throw ValidationError("cutoffs must be >= 0");
    KKReport rep;
    rep.max_energy = max_energy;
    rep.max_depth = max_depth;

    auto roots = rd.positive_affine_roots(max_energy);
    AffineWeight start(0, lambda, kappa);

    auto within = [&](const AffineWeight& w) {
        if (w.energy < -max_energy || w.energy > 0) return false;
        auto drop = rd.to_root_basis(lambda - w.finite);
        for (const auto& x : drop) {
            if (x < -Rat(max_depth) || x > Rat(max_depth)) return false;
        }
        return true;
    };

    std::map<WeightKey, bool> visited;
    std::deque<AffineWeight> queue{start};
    visited[{start.energy, start.finite.c}] = true;
    rep.candidates.push_back(start);

    while (!queue.empty()) {
        AffineWeight cur = queue.front();
        queue.pop_front();
        for (const auto& root : roots) {
            auto b = step_condition(rd, cur, root);
            if (!b) continue;
            if (root.imaginary) rep.used_imaginary_steps = true;
            AffineWeight next(cur.energy - *b * root.energy,
                              cur.finite - root.finite.scaled(Rat(*b)), cur.level);
            if (!within(next)) continue;
            WeightKey key{next.energy, next.finite.c};
            if (visited.count(key)) continue;
            visited[key] = true;
            ChainStep step;
            step.root = root;
            step.b = *b;
            step.from = cur;
            step.to = next;
            rep.steps.push_back(step);
            rep.candidates.push_back(next);
            queue.push_back(next);
        }
    }

    for (const auto& c : rep.candidates) {
        auto drop = rd.to_root_basis(lambda - c.finite);
        for (const auto& x : drop)
            if (x < 0) rep.all_drops_nonnegative = false;
    }
    return rep;
}

KKReport wakimoto_verma_check(const RootDatum& rd, const Weight& lambda, const LevelScalar& kappa,
                              long max_energy, long max_depth) {
    KKReport rep = singular_candidates(rd, lambda, kappa, max_energy, max_depth);
    for (const auto& c : rep.candidates) {
        if (c.energy >= 0) continue;
        auto rise = rd.to_root_basis(c.finite - lambda);
        bool nonneg = true, nonzero = false;
        for (const auto& x : rise) {
            if (x < 0) nonneg = false;
            if (x != 0) nonzero = true;
        }
        if (nonneg && nonzero) rep.witnesses.push_back(c);
    }
    rep.passed = rep.witnesses.empty();
    return rep;
}

long sufficient_dominance_threshold(const RootDatum& rd, long /*max_energy*/, long max_depth) {
    // Enough that (lambda + rho, gamma)_st stays >= 0 after any reachable drop:
    // drops have root coordinates bounded by max_depth, so their pairing with
    // gamma is at most max_depth * sum_i |(alpha_i, gamma)_st|.
    long t = 0;
    for (const auto& gamma : rd.positive_roots()) {
        Rat bound = 0;
        for (int i = 0; i < rd.rank(); ++i) {
            Rat p = rd.st_form(rd.simple_root(i), gamma);
            bound += (p < 0 ? -p : p);
        }
        bound *= Rat(max_depth);
        // lambda >= t componentwise gives (lambda, gamma)_st >= t * sum_i (omega_i, gamma)_st
        Rat denom = 0;
        for (int i = 0; i < rd.rank(); ++i) {
            Weight omega = Weight::zero(rd.rank());
            omega.c[i] = 1;
            denom += rd.st_form(omega, gamma);
        }
        Rat need = bound / denom;
        long ti = rat_to_long(Rat(need.get_num() / need.get_den())) + 1;
        if (ti > t) t = ti;
    }
    return t;
}

} // namespace semiq
