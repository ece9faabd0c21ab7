#ifndef SEMIQ_TEST_ORACLES_HPP
#define SEMIQ_TEST_ORACLES_HPP

// Brute-force reference computations used only by tests. These never call the
// implementation paths they are checking.

#include <functional>
#include <map>
#include <vector>

#include "semiq/root_datum.hpp"

namespace semiq_test {

using namespace semiq;

// Number of multisets of positive affine roots (imaginary roots counted with
// multiplicity = rank) with total energy n and total finite part beta.
inline long long affine_kostant(const RootDatum& rd, long n, const std::vector<long>& beta) {
    if (n < 0) return 0;
    // expand multiplicities into distinct slots
    std::vector<std::pair<long, std::vector<long>>> slots;
    for (const auto& r : rd.positive_affine_roots(n))
        for (int m = 0; m < r.multiplicity; ++m) slots.emplace_back(r.energy, r.root_coords);

    long theta_ht = rd.highest_root_height();
    std::function<long long(size_t, long, std::vector<long>)> rec =
        [&](size_t idx, long rem_n, std::vector<long> rem_beta) -> long long {
        if (idx == slots.size()) {
            if (rem_n != 0) return 0;
            for (long b : rem_beta)
                if (b != 0) return 0;
            return 1;
        }
        const auto& [en, ga] = slots[idx];
        long ht_beta = 0, ht_gamma = 0;
        for (size_t i = 0; i < rem_beta.size(); ++i) {
            ht_beta += rem_beta[i];
            ht_gamma += ga[i];
        }
        long kmax;
        if (en > 0) kmax = rem_n / en;
        else kmax = ht_gamma > 0 ? (ht_beta + rem_n * theta_ht) / ht_gamma : 0;
        if (kmax < 0) kmax = 0;
        long long total = 0;
        for (long k = 0; k <= kmax; ++k) {
            std::vector<long> nb = rem_beta;
            for (size_t i = 0; i < nb.size(); ++i) nb[i] -= k * ga[i];
            total += rec(idx + 1, rem_n - k * en, nb);
        }
        return total;
    };
    return rec(0, n, beta);
}

// Number of ways to write beta (simple-root coordinates) as a nonnegative
// integer combination of the finite positive roots.
inline long long finite_kostant(const RootDatum& rd, const std::vector<long>& beta) {
    const auto& roots = rd.positive_root_coords();
    std::function<long long(size_t, std::vector<long>)> rec =
        [&](size_t idx, std::vector<long> rem) -> long long {
        bool all_zero = true;
        for (long b : rem) {
            if (b < 0) return 0;
            if (b != 0) all_zero = false;
        }
        if (idx == roots.size()) return all_zero ? 1 : 0;
        long long total = 0;
        std::vector<long> cur = rem;
        for (long k = 0;; ++k) {
            total += rec(idx + 1, cur);
            bool ok = true;
            for (size_t i = 0; i < cur.size(); ++i) {
                cur[i] -= roots[idx][i];
                if (cur[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        return total;
    };
    return rec(0, beta);
}

// Weight multiplicity of mu = lambda - beta in V_lambda by the Kostant
// multiplicity formula (alternating sum of finite partition counts);
// independent of the Freudenthal recursion in the library.
inline long long kostant_multiplicity(const RootDatum& rd, const Weight& lambda,
                                      const std::vector<long>& beta) {
    long long total = 0;
    Weight mu = lambda - rd.from_root_basis_long(beta);
    for (int w = 0; w < rd.weyl_order(); ++w) {
        // w(lambda+rho) - (mu+rho)
        Weight arg = rd.act(w, lambda + rd.rho()) - (mu + rd.rho());
        auto rc = rd.to_root_basis(arg);
        std::vector<long> v(rc.size());
        bool ok = true;
        for (size_t i = 0; i < rc.size(); ++i) {
            if (!is_integer(rc[i])) ok = false;
            else v[i] = rat_to_long(rc[i]);
        }
        if (!ok) continue;
        long long p = finite_kostant(rd, v);
        total += (rd.weyl()[w].length % 2 ? -1 : 1) * p;
    }
    return total;
}

// Integer partitions of n into parts of r colors (r = 1: ordinary partitions).
inline long long colored_partitions(long n, int colors) {
    // generating function prod_{k>=1} (1-q^k)^{-colors}
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (int c = 0; c < colors; ++c)
        for (long k = 1; k <= n; ++k)
            for (long m = k; m <= n; ++m) p[m] += p[m - k];
    return p[n];
}

} // namespace semiq_test

#endif
