#include "semiq/semiinf.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "semiq/errors.hpp"
#include "semiq/linalg.hpp"

namespace semiq {

namespace {

// sl2 structure: generators 0 = e, 1 = h, 2 = f
// bracket [x, y] = c * z, zero when c == 0
struct Bracket {
    int gen = 0;
    long coeff = 0;
};

Bracket sl2_bracket(int x, int y) {
    static const Bracket table[3][3] = {
        // e            h              f
        {{0, 0}, {0, -2}, {1, 1}},  // [e,-]
        {{0, 2}, {0, 0}, {2, -2}},  // [h,-]
        {{1, -1}, {2, 2}, {0, 0}},  // [f,-]
    };
    return table[x][y];
}

// standard invariant form, (theta,theta) = 2 normalization
long sl2_form(int x, int y) {
    if ((x == 0 && y == 2) || (x == 2 && y == 0)) return 1;
    if (x == 1 && y == 1) return 2;
    return 0;
}

long sl2_weight(int g) { return g == 0 ? 2 : (g == 1 ? 0 : -2); }

// Weyl-flavor mode key for x tensor t^n with n <= -1
int weyl_key(int gen, long n) { return static_cast<int>((-n - 1) * 3 + gen); }
void weyl_decode(int key, int& gen, long& n) {
    gen = key % 3;
    n = -(key / 3) - 1;
}

// Wakimoto species: 0 = a* (modes <= 0), 1 = a (modes < 0), 2 = b (modes < 0)
int wak_key(int species, long n) {
    if (species == 0) return static_cast<int>((-n) * 3 + 0);
    return static_cast<int>((-n - 1) * 3 + species);
}
void wak_decode(int key, int& species, long& n) {
    species = key % 3;
    n = species == 0 ? -(key / 3) : -(key / 3) - 1;
}

void add_term(SliceVector& v, const SliceMonomial& m, const LevelScalar& c) {
    if (c.is_zero()) return;
    auto it = v.find(m);
    if (it == v.end()) {
        v.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
}

SliceMonomial with_power(const SliceMonomial& m, int key, int delta) {
    SliceMonomial out = m;
    auto it = std::find_if(out.powers.begin(), out.powers.end(),
                           [&](const auto& p) { return p.first == key; });
    if (it == out.powers.end()) {
        if (delta < 0) throw ConsistencyError("negative exponent");
        out.powers.push_back({key, delta});
        std::sort(out.powers.begin(), out.powers.end());
    } else {
        it->second += delta;
        if (it->second == 0) out.powers.erase(it);
        else if (it->second < 0) throw ConsistencyError("negative exponent");
    }
    return out;
}

} // namespace

Sl2Slice::Sl2Slice(SliceFlavor flavor, long lambda, LevelScalar level, long max_energy,
                   long weight_depth)
    : flavor_(flavor), lambda_(lambda), level_(std::move(level)), max_energy_(max_energy),
      weight_depth_(weight_depth < 0 ? max_energy : weight_depth) {
    if (lambda < 0 && flavor == SliceFlavor::Weyl)
        throw ValidationError("Weyl slice needs a dominant weight");
    if (max_energy < 0) throw ValidationError("max_energy must be >= 0");
    enumerate_basis();
}

void Sl2Slice::enumerate_basis() {
    // enumerate exponent maps over the admissible mode keys with total energy
    // drop <= max_energy, tensor the top space
    std::vector<std::pair<int, long>> modes; // (key, energy drop per unit)
    if (flavor_ == SliceFlavor::Weyl) {
        for (long n = 1; n <= max_energy_; ++n)
            for (int g = 0; g < 3; ++g) modes.push_back({weyl_key(g, -n), n});
    } else {
        modes.push_back({wak_key(0, 0), 0}); // a*_0 carries no energy
        for (long n = 1; n <= max_energy_; ++n) {
            modes.push_back({wak_key(0, -n), n});
            modes.push_back({wak_key(1, -n), n});
            modes.push_back({wak_key(2, -n), n});
        }
    }
    std::sort(modes.begin(), modes.end());
    int tops = flavor_ == SliceFlavor::Weyl ? static_cast<int>(lambda_) + 1 : 1;

    SliceMonomial cur;
    std::function<void(size_t, long)> rec = [&](size_t idx, long budget) {
        if (idx == modes.size()) {
            for (int k = 0; k < tops; ++k) {
                SliceMonomial m = cur;
                m.top = k;
                basis_.push_back(std::move(m));
            }
            return;
        }
        auto [key, drop] = modes[idx];
        // a*_0 is weight-relevant but energy-free: cap its exponent so that
        // every block inside the reported weight window stays complete
        long cap = drop == 0 ? weight_depth_ + 2 * max_energy_ + 2 : budget / drop;
        for (long p = 0; p <= cap; ++p) {
            if (p > 0) cur.powers.push_back({key, static_cast<int>(p)});
            rec(idx + 1, budget - p * drop);
            if (p > 0) cur.powers.pop_back();
        }
    };
    rec(0, max_energy_);
    for (auto& m : basis_) std::sort(m.powers.begin(), m.powers.end());
    std::sort(basis_.begin(), basis_.end());
    for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = static_cast<int>(i);
}

int Sl2Slice::index_of(const SliceMonomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

long Sl2Slice::energy_drop(const SliceMonomial& m) const {
    long e = 0;
    for (const auto& [key, p] : m.powers) {
        int sp;
        long n;
        if (flavor_ == SliceFlavor::Weyl) weyl_decode(key, sp, n);
        else wak_decode(key, sp, n);
        e += -n * p;
    }
    return e;
}

long Sl2Slice::weight_coord(const SliceMonomial& m) const {
    long w;
    if (flavor_ == SliceFlavor::Weyl) w = lambda_ - 2 * m.top;
    else w = lambda_;
    for (const auto& [key, p] : m.powers) {
        int sp;
        long n;
        if (flavor_ == SliceFlavor::Weyl) {
            weyl_decode(key, sp, n);
            w += sl2_weight(sp) * p;
        } else {
            wak_decode(key, sp, n);
            w += (sp == 0 ? -2L : sp == 1 ? 2L : 0L) * p;
        }
    }
    return w;
}

SliceVector Sl2Slice::mult_negative(int key, const SliceMonomial& m,
                                    const LevelScalar& coeff) const {
    SliceVector out;
    if (energy_drop(m) + [&] {
            int g;
            long n;
            weyl_decode(key, g, n);
            return -n;
        }() > max_energy_)
        return out; // clipped in the energy-raising direction
    if (m.powers.empty() || key <= m.powers.front().first) {
        add_term(out, with_power(m, key, 1), coeff);
        return out;
    }
    auto [k1, e1] = m.powers.front();
    SliceMonomial rest = with_power(m, k1, -1);
    // x (y rest') = y (x rest') + [x, y] rest'
    for (const auto& [mono, c] : mult_negative(key, rest, coeff)) {
        for (const auto& [mono2, c2] : mult_negative(k1, mono, c)) add_term(out, mono2, c2);
    }
    int gx, gy;
    long nx, ny;
    weyl_decode(key, gx, nx);
    weyl_decode(k1, gy, ny);
    Bracket br = sl2_bracket(gx, gy);
    if (br.coeff != 0) {
        int zkey = weyl_key(br.gen, nx + ny);
        for (const auto& [mono, c] :
             mult_negative(zkey, rest, coeff * LevelScalar::from_int(br.coeff)))
            add_term(out, mono, c);
    }
    return out;
}

SliceVector Sl2Slice::apply_weyl(int gen, long n, const SliceMonomial& m,
                                 const LevelScalar& coeff) const {
    SliceVector out;
    if (n < 0) return mult_negative(weyl_key(gen, n), m, coeff);
    if (m.powers.empty()) {
        if (n > 0) return out;
        // finite action on the top vector v_k
        long k = m.top;
        SliceMonomial t = m;
        if (gen == 1) {
            add_term(out, t, coeff * LevelScalar::from_int(lambda_ - 2 * k));
        } else if (gen == 2) {
            if (k + 1 <= lambda_) {
                t.top = static_cast<int>(k + 1);
                add_term(out, t, coeff);
            }
        } else {
            if (k >= 1) {
                t.top = static_cast<int>(k - 1);
                add_term(out, t, coeff * LevelScalar::from_int(k * (lambda_ + 1 - k)));
            }
        }
        return out;
    }
    auto [k1, e1] = m.powers.front();
    SliceMonomial rest = with_power(m, k1, -1);
    int gy;
    long ny;
    weyl_decode(k1, gy, ny);
    // x_n (y rest') = y (x_n rest') + [x_n, y] rest'
    for (const auto& [mono, c] : apply_weyl(gen, n, rest, coeff)) {
        for (const auto& [mono2, c2] : mult_negative(k1, mono, c)) add_term(out, mono2, c2);
    }
    Bracket br = sl2_bracket(gen, gy);
    if (br.coeff != 0) {
        long nz = n + ny;
        LevelScalar c2 = coeff * LevelScalar::from_int(br.coeff);
        SliceVector sub;
        if (nz < 0) sub = mult_negative(weyl_key(br.gen, nz), rest, c2);
        else sub = apply_weyl(br.gen, nz, rest, c2);
        for (const auto& [mono, c] : sub) add_term(out, mono, c);
    }
    if (n + ny == 0) {
        // central 2-cocycle term n (x,y)_st kappa
        long form = sl2_form(gen, gy);
        if (form != 0) {
            LevelScalar c2 = coeff * LevelScalar::from_int(n * form) * level_;
            add_term(out, rest, c2);
        }
    }
    return out;
}

SliceVector Sl2Slice::apply_wak_op(int species, long n, const SliceMonomial& m,
                                   const LevelScalar& coeff) const {
    SliceVector out;
    if (species == 1) { // a
        if (n < 0) {
            if (energy_drop(m) + (-n) <= max_energy_)
                add_term(out, with_power(m, wak_key(1, n), 1), coeff);
        } else {
            int partner = wak_key(0, -n);
            for (const auto& [key, p] : m.powers)
                if (key == partner)
                    add_term(out, with_power(m, partner, -1), coeff * LevelScalar::from_int(p));
        }
    } else if (species == 0) { // a*
        if (n <= 0) {
            bool room = n == 0 || energy_drop(m) + (-n) <= max_energy_;
            if (room) add_term(out, with_power(m, wak_key(0, n), 1), coeff);
        } else {
            int partner = wak_key(1, -n);
            for (const auto& [key, p] : m.powers)
                if (key == partner)
                    add_term(out, with_power(m, partner, -1), coeff * LevelScalar::from_int(-p));
        }
    } else { // b
        if (n < 0) {
            if (energy_drop(m) + (-n) <= max_energy_)
                add_term(out, with_power(m, wak_key(2, n), 1), coeff);
        } else if (n == 0) {
            add_term(out, m, coeff * LevelScalar::from_int(lambda_));
        } else {
            int partner = wak_key(2, -n);
            // [b_n, b_{-n}] = 2 (kappa + 2) n
            LevelScalar cocycle =
                (level_ + LevelScalar::from_int(2)) * LevelScalar::from_int(2 * n);
            for (const auto& [key, p] : m.powers)
                if (key == partner)
                    add_term(out, with_power(m, partner, -1),
                             coeff * LevelScalar::from_int(p) * cocycle);
        }
    }
    return out;
}

SliceVector Sl2Slice::apply_wak(int gen, long n, const SliceMonomial& m) const {
    // free-field realization: e = a, h = -2 :a* a: + b,
    // f = -:a* a* a: + kappa d(a*) + a* b
    SliceVector out;
    const long N = max_energy_;
    auto is_annih = [](int species, long mode) {
        return species == 0 ? mode > 0 : mode >= (species == 1 ? 0 : 1);
    };
    // apply a normal-ordered product of field modes, annihilators first
    auto apply_product = [&](std::vector<std::pair<int, long>> ops, const LevelScalar& c) {
        std::stable_sort(ops.begin(), ops.end(), [&](const auto& x, const auto& y) {
            return is_annih(x.first, x.second) > is_annih(y.first, y.second);
        });
        SliceVector acc;
        add_term(acc, m, c);
        for (const auto& [sp, mode] : ops) {
            SliceVector next;
            for (const auto& [mono, cc] : acc)
                for (const auto& [m2, c2] : apply_wak_op(sp, mode, mono, cc)) add_term(next, m2, c2);
            acc = std::move(next);
            if (acc.empty()) break;
        }
        for (const auto& [m2, c2] : acc) add_term(out, m2, c2);
    };

    if (gen == 0) {
        for (const auto& [m2, c2] : apply_wak_op(1, n, m, LevelScalar::from_int(1)))
            add_term(out, m2, c2);
    } else if (gen == 1) {
        for (long j = -N; j <= N; ++j) {
            long l = n - j;
            if (l < -N || l > N) continue;
            apply_product({{0, j}, {1, l}}, LevelScalar::from_int(-2));
        }
        for (const auto& [m2, c2] : apply_wak_op(2, n, m, LevelScalar::from_int(1)))
            add_term(out, m2, c2);
    } else {
        for (long i = -N; i <= N; ++i) {
            for (long j = -N; j <= N; ++j) {
                long l = n - i - j;
                if (l < -N || l > N) continue;
                apply_product({{0, i}, {0, j}, {1, l}}, LevelScalar::from_int(-1));
            }
        }
        // kappa * d(a*): mode n picks up coefficient -n
        if (n >= -N && n <= N)
            for (const auto& [m2, c2] :
                 apply_wak_op(0, n, m, level_ * LevelScalar::from_int(-n)))
                add_term(out, m2, c2);
        for (long i = -N; i <= N; ++i) {
            long l = n - i;
            if (l < -N || l > N) continue;
            apply_product({{0, i}, {2, l}}, LevelScalar::from_int(1));
        }
    }
    return out;
}

SliceVector Sl2Slice::apply(int gen, long n, const SliceMonomial& m) const {
    if (flavor_ == SliceFlavor::Weyl) return apply_weyl(gen, n, m, LevelScalar::from_int(1));
    return apply_wak(gen, n, m);
}

SliceVector Sl2Slice::apply(int gen, long n, const SliceVector& v) const {
    SliceVector out;
    for (const auto& [m, c] : v) {
        for (const auto& [m2, c2] : apply(gen, n, m)) {
            LevelScalar scaled = c * c2;
            add_term(out, m2, scaled);
        }
    }
    return out;
}

bool Sl2Slice::check_commutation(long a_mode, long b_mode, int xgen, int ygen) const {
    for (const auto& m : basis_) {
        long d = energy_drop(m);
        // all intermediates must stay within the window to decide the relation
        long after_y = d - b_mode, after_x = d - a_mode, after_xy = d - a_mode - b_mode;
        if (after_y < 0 || after_y > max_energy_) continue;
        if (after_x < 0 || after_x > max_energy_) continue;
        if (after_xy < 0 || after_xy > max_energy_) continue;
        SliceVector m_vec;
        add_term(m_vec, m, LevelScalar::from_int(1));
        SliceVector xy = apply(xgen, a_mode, apply(ygen, b_mode, m_vec));
        SliceVector yx = apply(ygen, b_mode, apply(xgen, a_mode, m_vec));
        SliceVector expect;
        Bracket br = sl2_bracket(xgen, ygen);
        if (br.coeff != 0) {
            expect = apply(br.gen, a_mode + b_mode, m_vec);
            for (auto& [mm, cc] : expect) cc *= LevelScalar::from_int(br.coeff);
        }
        if (a_mode + b_mode == 0 && sl2_form(xgen, ygen) != 0) {
            LevelScalar central =
                LevelScalar::from_int(a_mode * sl2_form(xgen, ygen)) * level_;
            add_term(expect, m, central);
        }
        // xy - yx - expect must vanish
        SliceVector diff = xy;
        for (const auto& [mm, cc] : yx) add_term(diff, mm, -cc);
        for (const auto& [mm, cc] : expect) add_term(diff, mm, -cc);
        if (!diff.empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

long GhostMonomial::energy_drop() const {
    long e = 0;
    for (long i : cochain) e += i;
    for (long j : chain) e += j;
    return e;
}

long GhostMonomial::weight_coord() const {
    return -2 * static_cast<long>(cochain.size()) + 2 * static_cast<long>(chain.size());
}

std::vector<GhostMonomial> enumerate_ghosts(long max_energy) {
    // strictly increasing index sets with bounded total
    std::vector<std::vector<long>> cochains, chains;
    std::function<void(long, long, std::vector<long>&, std::vector<std::vector<long>>&)> rec =
        [&](long from, long budget, std::vector<long>& cur,
            std::vector<std::vector<long>>& out) {
            out.push_back(cur);
            for (long i = from; i <= budget; ++i) {
                cur.push_back(i);
                rec(i + 1, budget - i, cur, out);
                cur.pop_back();
            }
        };
    std::vector<long> cur;
    rec(0, max_energy, cur, cochains);
    rec(1, max_energy, cur, chains);
    std::vector<GhostMonomial> out;
    for (const auto& s : cochains)
        for (const auto& t : chains) {
            GhostMonomial g;
            g.cochain = s;
            g.chain = t;
            if (g.energy_drop() <= max_energy) out.push_back(std::move(g));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<int, GhostMonomial>> ghost_wedge(const GhostMonomial& g, long n) {
    auto it = std::lower_bound(g.cochain.begin(), g.cochain.end(), n);
    if (it != g.cochain.end() && *it == n) return std::nullopt;
    GhostMonomial out = g;
    size_t pos = static_cast<size_t>(it - g.cochain.begin());
    out.cochain.insert(out.cochain.begin() + pos, n);
    return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(out));
}

std::optional<std::pair<int, GhostMonomial>> ghost_contract(const GhostMonomial& g, long n) {
    auto it = std::lower_bound(g.chain.begin(), g.chain.end(), n);
    if (it == g.chain.end() || *it != n) return std::nullopt;
    GhostMonomial out = g;
    size_t pos = g.cochain.size() + static_cast<size_t>(it - g.chain.begin());
    out.chain.erase(out.chain.begin() + (it - g.chain.begin()));
    return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(out));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<long long> partition_numbers(long n) {
    std::vector<long long> p(n + 1, 0);
    p[0] = 1;
    for (long k = 1; k <= n; ++k)
        for (long m = k; m <= n; ++m) p[m] += p[m - k];
    return p;
}

} // namespace

BrstResult brst_complex(SliceFlavor flavor, long lambda, const LevelScalar& level,
                        const Trunc2& trunc, bool corrupt_vacuum, bool corrupt_sign) {
    if (trunc.energy < 0 || trunc.depth < 0)
        throw ValidationError("truncation must be nonnegative");
    Sl2Slice slice(flavor, lambda, level, trunc.energy, trunc.depth);
    auto ghosts = enumerate_ghosts(trunc.energy);

    BrstResult res;
    res.flavor = flavor;
    res.lambda = lambda;
    res.level = level;
    res.trunc = trunc;

    // block bases: (energy, weight) -> ghost number -> list of (slice, ghost)
    std::map<BrstBlockKey, std::map<int, std::vector<std::pair<int, int>>>> blocks;
    for (size_t si = 0; si < slice.basis().size(); ++si) {
        const auto& m = slice.basis()[si];
        long de = slice.energy_drop(m);
        long wm = slice.weight_coord(m);
        for (size_t gi = 0; gi < ghosts.size(); ++gi) {
            const auto& g = ghosts[gi];
            long e = de + g.energy_drop();
            if (e > trunc.energy) continue;
            long vac_shift = corrupt_vacuum ? 2 : 0;
            long w = wm + g.weight_coord() + vac_shift;
            blocks[{e, w}][g.ghost_number()].push_back(
                {static_cast<int>(si), static_cast<int>(gi)});
        }
    }

    std::map<GhostMonomial, int> ghost_index;
    for (size_t gi = 0; gi < ghosts.size(); ++gi) ghost_index[ghosts[gi]] = static_cast<int>(gi);

    bool corrupted_once = false;
    for (auto& [key, by_ghost] : blocks) {
        BrstBlock blk;
        // the Wakimoto flavor is only fully enumerated inside the weight
        // window (the a*_0 direction is capped); blocks outside it are marked
        // incomplete and excluded from the Fock analysis
        if (flavor == SliceFlavor::Wakimoto) {
            long drop_w = lambda - key.weight; // in <., coroot> units, so 2 per root
            blk.complete = drop_w >= -2 * trunc.depth && drop_w <= 2 * trunc.depth;
        }
        for (const auto& [g, lst] : by_ghost) blk.dims[g] = static_cast<int>(lst.size());

        // differentials g -> g+1 within this (energy, weight) block
        std::map<int, Matrix<LevelScalar>> d;
        for (const auto& [g, lst] : by_ghost) {
            auto target = by_ghost.find(g + 1);
            int rows = target == by_ghost.end() ? 0 : static_cast<int>(target->second.size());
            Matrix<LevelScalar> mat(rows, static_cast<int>(lst.size()));
            if (rows > 0) {
                std::map<std::pair<int, int>, int> target_index;
                for (size_t r = 0; r < target->second.size(); ++r)
                    target_index[target->second[r]] = static_cast<int>(r);
                for (size_t c = 0; c < lst.size(); ++c) {
                    auto [si, gi] = lst[c];
                    const auto& mono = slice.basis()[si];
                    const auto& gh = ghosts[gi];
                    // sum over modes: e_n tensor wedge(n), e_{-n} tensor contract(n)
                    for (long n = 0; n <= trunc.energy; ++n) {
                        if (auto wg = ghost_wedge(gh, n)) {
                            SliceVector img = slice.apply(0, n, SliceVector{{mono, LevelScalar::from_int(wg->first)}});
                            auto tg = ghost_index.find(wg->second);
                            if (tg == ghost_index.end()) continue;
                            for (const auto& [m2, c2] : img) {
                                int s2 = slice.index_of(m2);
                                if (s2 < 0) continue;
                                auto rit = target_index.find({s2, tg->second});
                                if (rit == target_index.end()) continue;
                                mat.at(rit->second, static_cast<int>(c)) += c2;
                            }
                        }
                    }
                    for (long n = 1; n <= trunc.energy; ++n) {
                        if (auto cg = ghost_contract(gh, n)) {
                            SliceVector img = slice.apply(0, -n, SliceVector{{mono, LevelScalar::from_int(cg->first)}});
                            auto tg = ghost_index.find(cg->second);
                            if (tg == ghost_index.end()) continue;
                            for (const auto& [m2, c2] : img) {
                                int s2 = slice.index_of(m2);
                                if (s2 < 0) continue;
                                auto rit = target_index.find({s2, tg->second});
                                if (rit == target_index.end()) continue;
                                mat.at(rit->second, static_cast<int>(c)) += c2;
                            }
                        }
                    }
                }
            }
            d[g] = std::move(mat);
        }

        if (corrupt_sign && !corrupted_once) {
            for (auto& [g, mat] : d) {
                for (int r = 0; r < mat.rows() && !corrupted_once; ++r)
                    for (int c = 0; c < mat.cols() && !corrupted_once; ++c)
                        if (!mat.at(r, c).is_zero()) {
                            mat.at(r, c) = -mat.at(r, c);
                            corrupted_once = true;
                        }
            }
        }

        // exact d*d = 0 verification blockwise
        for (const auto& [g, mat] : d) {
            auto up = d.find(g + 1);
            if (up == d.end() || up->second.rows() == 0 || mat.rows() == 0) continue;
            if (!(up->second * mat).is_zero())
                throw ConsistencyError("BRST differential does not square to zero");
        }

        for (const auto& [g, dim] : blk.dims) {
            auto dg = d.find(g);
            int rank_out = dg == d.end() ? 0 : rank_of(dg->second);
            auto dprev = d.find(g - 1);
            int rank_in = dprev == d.end() ? 0 : rank_of(dprev->second);
            blk.homology[g] = dim - rank_out - rank_in;
        }
        res.blocks[key] = std::move(blk);
    }

    // Fock decomposition per ghost number: per weight column, peel partition
    // tails from the lowest energy upward
    auto pnum = partition_numbers(trunc.energy);
    std::map<int, std::map<long, std::map<long, long>>> hdims; // g -> w -> e -> dim
    for (const auto& [key, blk] : res.blocks) {
        if (!blk.complete) continue;
        for (const auto& [g, h] : blk.homology)
            if (h != 0) hdims[g][key.weight][key.energy_drop] = h;
    }
    for (auto& [g, by_w] : hdims) {
        for (auto& [w, by_e] : by_w) {
            std::map<long, long> residual = by_e;
            for (long e0 = 0; e0 <= trunc.energy; ++e0) {
                long c = residual.count(e0) ? residual[e0] : 0;
                if (c == 0) continue;
                if (c < 0) {
                    res.fock_exact = false;
                    break;
                }
                res.fock[g].push_back({e0, w, c});
                for (long k = 0; e0 + k <= trunc.energy; ++k)
                    residual[e0 + k] -= c * pnum[k];
            }
            for (const auto& [e, r] : residual)
                if (r != 0) res.fock_exact = false;
        }
    }
    return res;
}

long fock_multiplicity(const BrstResult& r, int g, long w) {
    auto it = r.fock.find(g);
    if (it == r.fock.end()) return 0;
    long total = 0;
    for (const auto& s : it->second)
        if (s.weight == w) total += s.mult;
    return total;
}

MainFormulaReport verify_main_formula(const std::vector<long>& lambdas, const Trunc2& trunc,
                                      bool corrupt_vacuum, bool corrupt_sign) {
    MainFormulaReport rep;
    rep.passed = true;
    const RootDatum& a1 = RootDatum::preset("A1");
    LevelScalar kappa = LevelScalar::kappa();
    for (long lam : lambdas) {
        if (lam < 0) throw ValidationError("main formula needs dominant integral lambda");
        // the decomposition needs at least one energy row and enough weight
        // room to see the s.lambda head
        if (trunc.energy < 1 || trunc.depth < lam + 1)
            throw TruncationError("truncation too small for lambda (need energy >= 1, depth >= lambda + 1)");
        BrstResult brst;
        try {
            brst = brst_complex(SliceFlavor::Weyl, lam, kappa, trunc, corrupt_vacuum, corrupt_sign);
        } catch (const ConsistencyError& e) {
            rep.passed = false;
            rep.detail.push_back("lambda=" + std::to_string(lam) + ": " + e.what());
            continue;
        }
        if (!brst.fock_exact) {
            rep.passed = false;
            rep.detail.push_back("lambda=" + std::to_string(lam) +
                                 ": no exact Fock decomposition");
        }
        // expected: pi_lambda at ghost 0, pi_{s.lambda} at ghost 1, nothing else
        for (const auto& [g, summands] : brst.fock) {
            for (const auto& s : summands) {
                bool expected = (g == 0 && s.base_energy == 0 && s.weight == lam && s.mult == 1) ||
                                (g == 1 && s.base_energy == 0 && s.weight == -lam - 2 && s.mult == 1);
                if (!expected) {
                    rep.passed = false;
                    rep.detail.push_back("lambda=" + std::to_string(lam) +
                                         ": unexpected Fock summand at ghost " + std::to_string(g));
                }
            }
        }
        if (fock_multiplicity(brst, 0, lam) != 1 || fock_multiplicity(brst, 1, -lam - 2) != 1) {
            rep.passed = false;
            rep.detail.push_back("lambda=" + std::to_string(lam) + ": expected heads missing");
        }

        // quantum side under pi_mu -> C_mu
        Weight lw({Rat(lam)});
        CohTable q = coh_via_bgg(a1, lw, a1.quantum_context(), 2 * lam + 2 + 2);
        rep.quantum[lam] = q;
        for (const auto& [deg, row] : q.h) {
            for (const auto& [wk, dim] : row) {
                long wcoord = rat_to_long(Weight(wk).c[0]);
                if (fock_multiplicity(brst, deg, wcoord) != dim) {
                    rep.passed = false;
                    rep.detail.push_back("lambda=" + std::to_string(lam) +
                                         ": quantum side mismatch at degree " +
                                         std::to_string(deg));
                }
            }
        }
        rep.brst.emplace(lam, std::move(brst));
    }
    return rep;
}

Rat level_for_ell(long ell) {
    if (ell < 3 || ell % 2 == 0) throw ValidationError("ell must be odd and >= 3");
    // kappa - kappa_crit = ell / 2, so q = exp(-2 pi i / ell) is primitive
    return make_rat(ell, 2) - Rat(2);
}

SpotCheckReport positive_level_spot_check(long lambda, long ell, const Trunc2& trunc) {
    SpotCheckReport rep;
    rep.passed = true;
    if (lambda != 0)
        throw ValidationError("the root-of-unity spot check supports lambda = 0 only");
    const RootDatum& a1 = RootDatum::preset("A1");
    LevelScalar level = LevelScalar::from_rat(level_for_ell(ell));
    BrstResult brst = brst_complex(SliceFlavor::Weyl, lambda, level, trunc);
    if (!brst.fock_exact) {
        rep.passed = false;
        rep.detail.push_back("no exact Fock decomposition within the window");
    }

    // quantum side: the dual quantum Weyl module of weight 0 is the trivial
    // module over the rank-1 Lusztig algebra at a primitive ell-th root
    auto ctx = a1.quantum_context(true, ell);
    int max_deg = static_cast<int>(trunc.energy) + 1;
    CohTable q = coh_via_resolution(AMode::lusztig_rank1, trivial_module(a1, ctx),
                                    2 * trunc.depth + 2 * ell, max_deg, ell);

    // compare per (ghost degree, weight) for drops within the depth window;
    // on A1 the fundamental coordinate equals the coroot pairing
    for (int g = -static_cast<int>(trunc.energy); g <= max_deg; ++g) {
        for (long drop = 0; drop <= trunc.depth; ++drop) {
            long w = lambda - 2 * drop;
            long brst_mult = fock_multiplicity(brst, g, w);
            long qdim = g >= 0 ? q.dim(g, Weight({Rat(w)})) : 0;
            if (brst_mult != 0 || qdim != 0)
                rep.rows.push_back(std::array<long, 4>{static_cast<long>(g), w, brst_mult, qdim});
            if (brst_mult != qdim) {
                rep.passed = false;
                rep.detail.push_back("mismatch at ghost " + std::to_string(g) + ", weight " +
                                     std::to_string(w));
            }
        }
    }
    return rep;
}

} // namespace semiq
