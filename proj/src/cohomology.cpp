#include "semiq/cohomology.hpp"

#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

int CohTable::dim(int degree, const Weight& mu) const {
    auto it = h.find(degree);
    if (it == h.end()) return 0;
    auto jt = it->second.find(mu.c);
    return jt == it->second.end() ? 0 : jt->second;
}

void CohTable::set(int degree, const Weight& mu, int d) {
    if (d == 0) return;
    h[degree][mu.c] = d;
}

std::string CohTable::to_string() const {
    std::ostringstream os;
    for (const auto& [deg, row] : h) {
        os << "H^" << deg << ":";
        for (const auto& [w, d] : row) {
            os << " " << Weight(w).to_string() << "x" << d;
        }
        os << "\n";
    }
    return os.str();
}

CohTable closed_form_quantum_inv(const RootDatum& rd, const Weight& lambda) {
    CohTable t;
    for (int w = 0; w < rd.weyl_order(); ++w)
        t.set(rd.weyl()[w].length, rd.dot(w, lambda), 1);
    return t;
}

CohTable coh_via_bgg(const RootDatum& rd, const Weight& lambda, const QuantumContext& ctx,
                     long depth, bool corrupt) {
    BGGComplex bgg = quantum_bgg(rd, lambda, ctx, depth);
    if (!corrupt && !bgg.d_squared_zero())
        throw ConsistencyError("BGG differential does not square to zero");

    CohTable out;
    int L = static_cast<int>(bgg.terms.size()) - 1;
    for (const auto& mu : bgg.window()) {
        // F-coinvariant projections per term: the invariants of the dualized
        // co-resolution are the duals of these quotients
        std::vector<Rref<QScalar>> span(L + 1, Rref<QScalar>(0));
        std::vector<std::vector<int>> qcols(L + 1);
        std::vector<int> qdim(L + 1, 0);
        for (int i = 0; i <= L; ++i) {
            int d = bgg.term_dim(i, mu);
            span[i] = Rref<QScalar>(d);
            if (d == 0) continue;
            for (int j = 0; j < rd.rank(); ++j) {
                if (corrupt && j == 0) continue; // damaged coinvariants
                Weight up = mu + rd.simple_root(j);
                int du = bgg.term_dim(i, up);
                if (du == 0) continue;
                // assemble the blockwise F_j matrix from `up` into `mu`
                int roff = 0, coff = 0;
                Matrix<QScalar> f(d, du);
                for (size_t s = 0; s < bgg.terms[i].size(); ++s) {
                    const auto& summand = bgg.terms[i][s];
                    int dr = summand.dim(mu), dc = summand.dim(up);
                    if (auto fm = summand.F(j, up); fm && dr > 0 && dc > 0)
                        for (int r = 0; r < dr; ++r)
                            for (int c = 0; c < dc; ++c) f.at(roff + r, coff + c) = fm->at(r, c);
                    roff += dr;
                    coff += dc;
                }
                for (int c = 0; c < du; ++c) {
                    std::vector<QScalar> img(d);
                    for (int r = 0; r < d; ++r) img[r] = f.at(r, c);
                    span[i].add_row(std::move(img));
                }
            }
            qcols[i] = span[i].free_cols();
            qdim[i] = static_cast<int>(qcols[i].size());
        }
        // induced chain maps on the coinvariants
        std::vector<Matrix<QScalar>> dbar(L + 1); // dbar[i] : Q_i -> Q_{i-1}
        for (int i = 1; i <= L; ++i) {
            dbar[i] = Matrix<QScalar>(qdim[i - 1], qdim[i]);
            if (qdim[i] == 0 || qdim[i - 1] == 0) continue;
            auto it = bgg.diffs[i - 1].find(mu.c);
            if (it == bgg.diffs[i - 1].end()) continue;
            for (int c = 0; c < qdim[i]; ++c) {
                std::vector<QScalar> lift(bgg.term_dim(i, mu));
                lift[qcols[i][c]] = lin_one<QScalar>();
                auto img = span[i - 1].reduce(it->second.apply(lift));
                for (int r = 0; r < qdim[i - 1]; ++r) dbar[i].at(r, c) = img[qcols[i - 1][r]];
            }
        }
        for (int i = 0; i <= L; ++i) {
            int rank_out = i >= 1 ? rank_of(dbar[i]) : 0;
            int rank_in = i < L ? rank_of(dbar[i + 1]) : 0;
            out.set(i, mu, qdim[i] - rank_out - rank_in);
        }
    }
    return out;
}

namespace {

// generator weights of the minimal free resolution of the trivial module
// over the truncated polynomial algebra k[E]/(E^l), E of degree alpha
std::vector<long> periodic_gen_multiple(int degree, long ell) {
    // e_{2k} at weight (k l) alpha, e_{2k+1} at weight (k l + 1) alpha
    std::vector<long> w;
    for (int i = 0; i <= degree; ++i) {
        long k = i / 2;
        w.push_back(i % 2 == 0 ? k * ell : k * ell + 1);
    }
    return w;
}

// Chevalley-type two-term complex for the rank-1 polynomial algebra:
// C^0_mu = M_mu, C^1_mu = M_{mu+alpha} (twist by the dual generator), d = E.
CohTable rank1_koszul(const WeightModule& m, long weight_depth) {
    const RootDatum& rd = m.root_datum();
    CohTable out;
    auto in_window = [&](const Weight& nu) {
        auto drop = rd.to_root_basis(m.highest() - nu);
        long ht = 0;
        for (const auto& x : drop) {
            if (!is_integer(x)) return false;
            ht += rat_to_long(x);
        }
        return ht <= weight_depth;
    };
    for (const auto& [k, d] : m.weights()) {
        Weight mu(k);
        if (in_window(mu)) {
            auto e = m.E(0, mu);
            out.set(0, mu, d - (e ? rank_of(*e) : 0));
        }
        // H^1 at nu = mu - alpha: coker(E : M_nu -> M_mu)
        Weight nu = mu - rd.simple_root(0);
        if (in_window(nu)) {
            auto e = m.E(0, nu);
            out.set(1, nu, d - (e ? rank_of(*e) : 0));
        }
    }
    return out;
}

Matrix<QScalar> e_power(const WeightModule& m, const Weight& from, long power) {
    Matrix<QScalar> acc = Matrix<QScalar>::identity(m.dim(from));
    Weight w = from;
    const RootDatum& rd = m.root_datum();
    for (long s = 0; s < power; ++s) {
        auto e = m.E(0, w);
        Weight next = w + rd.simple_root(0);
        if (!e) {
            acc = Matrix<QScalar>(m.dim(next), acc.cols());
        } else {
            acc = *e * acc;
        }
        w = next;
    }
    return acc;
}

// H over k[E]/(E^l) from the 2-periodic resolution, twisted generators
CohTable periodic_cohomology(const WeightModule& m, long weight_depth, int max_degree, long ell) {
    const RootDatum& rd = m.root_datum();
    CohTable out;
    auto gen_mult = periodic_gen_multiple(max_degree + 1, ell);
    // C^i at nu = M_{nu + w_i alpha}; d^i = E (i even) or E^{l-1} (i odd)
    // collect candidate weights nu from every stored weight and generator
    std::map<std::vector<Rat>, bool> candidates;
    for (const auto& [k, d] : m.weights())
        for (int i = 0; i <= max_degree; ++i) {
            Weight nu = Weight(k) - rd.simple_root(0).scaled(Rat(gen_mult[i]));
            candidates[nu.c] = true;
        }
    for (const auto& [nk, unused] : candidates) {
        Weight nu(nk);
        auto drop_ok = [&](const Weight& x) {
            (void)x;
            return true;
        };
        (void)drop_ok;
        long ht_abs = 0;
        {
            auto rc = rd.to_root_basis(nu);
            for (const auto& x : rc) ht_abs += std::abs(rat_to_long(Rat(x.get_num() / x.get_den())));
        }
        if (ht_abs > weight_depth + 2 * ell) continue;
        for (int i = 0; i <= max_degree; ++i) {
            Weight src = nu + rd.simple_root(0).scaled(Rat(gen_mult[i]));
            int d = m.dim(src);
            // outgoing differential d^i : C^i -> C^{i+1}
            long step_out = i % 2 == 0 ? 1 : ell - 1;
            int rank_out_next = 0;
            if (m.dim(nu + rd.simple_root(0).scaled(Rat(gen_mult[i + 1]))) > 0 && d > 0)
                rank_out_next = rank_of(e_power(m, src, step_out));
            int rank_in = 0;
            if (i > 0 && d > 0) {
                long step_in = (i - 1) % 2 == 0 ? 1 : ell - 1;
                Weight prev = nu + rd.simple_root(0).scaled(Rat(gen_mult[i - 1]));
                if (m.dim(prev) > 0) rank_in = rank_of(e_power(m, prev, step_in));
            }
            if (d == 0) continue;
            out.set(i, nu, d - rank_out_next - rank_in);
        }
    }
    return out;
}

// minimal weight-truncated free resolution of the trivial module over the
// generic rank-2 quotient algebra; Ext into the trivial module is read off
// the generator weights
CohTable rank2_minimal_resolution(const RootDatum& rd, const QuantumContext& ctx,
                                  long weight_depth, int max_degree) {
    QuantumNil eng(rd, ctx);
    // free module = list of generator weights (as nonnegative drop vectors)
    struct Gen {
        DegVec weight;
        // syzygy: image in the previous free module, as (gen index, KD coords)
        std::map<int, std::vector<QScalar>> image;
    };
    std::vector<std::vector<Gen>> steps; // steps[k] = generators of F_k
    steps.push_back({Gen{DegVec(rd.rank(), 0), {}}});

    std::vector<DegVec> degrees{DegVec(rd.rank(), 0)};
    for (const auto& d : eng.degrees_up_to(weight_depth)) degrees.push_back(d);

    auto component_dims = [&](const std::vector<Gen>& gens, const DegVec& nu) {
        std::vector<int> dims;
        for (const auto& g : gens) {
            DegVec rem(rd.rank());
            bool ok = true;
            for (int i = 0; i < rd.rank(); ++i) {
                rem[i] = nu[i] - g.weight[i];
                if (rem[i] < 0) ok = false;
            }
            dims.push_back(ok ? eng.kd_component(rem).dim() : 0);
        }
        return dims;
    };

    // expand u * (element of F_{k-1} given as gen -> coords) where u is a word
    auto word_times = [&](const Word& u, const std::map<int, std::vector<QScalar>>& elt,
                          const std::vector<Gen>& prev_gens,
                          const DegVec& target) -> std::map<int, std::vector<QScalar>> {
        std::map<int, std::vector<QScalar>> out;
        for (const auto& [gi, coords] : elt) {
            DegVec comp_deg(rd.rank());
            for (int i = 0; i < rd.rank(); ++i) comp_deg[i] = target[i] - prev_gens[gi].weight[i];
            const auto& comp_src_words = eng.kd_component([&] {
                DegVec d(rd.rank());
                auto wdeg = word_degree(u, rd.rank());
                for (int i = 0; i < rd.rank(); ++i) d[i] = comp_deg[i] - wdeg[i];
                return d;
            }());
            std::vector<QScalar> acc(eng.kd_component(comp_deg).dim(), ctx.zero());
            for (size_t b = 0; b < coords.size(); ++b) {
                if (coords[b].is_zero()) continue;
                Word w = u;
                const Word& base = comp_src_words.words[comp_src_words.basis[b]];
                w.insert(w.end(), base.begin(), base.end());
                auto nf = eng.normal_form(w);
                for (size_t r = 0; r < nf.size(); ++r) acc[r] += coords[b] * nf[r];
            }
            bool nonzero = false;
            for (const auto& x : acc)
                if (!x.is_zero()) nonzero = true;
            if (nonzero) out[gi] = std::move(acc);
        }
        return out;
    };

    CohTable out;
    out.set(0, Weight::zero(rd.rank()), 1);

    for (int k = 1; k <= max_degree; ++k) {
        const auto& prev = steps.back();
        std::vector<Gen> next;
        for (const auto& nu : degrees) {
            // matrix of phi_k at weight nu: columns over (gen of F_{k-1}, word),
            // rows = coordinates in F_{k-2} components
            auto pdims = component_dims(prev, nu);
            int cols = 0;
            for (int x : pdims) cols += x;
            if (cols == 0) continue;
            // build the map to F_{k-2} (for k = 1 the augmentation to the
            // trivial module: nonzero degree maps to zero, so the kernel is
            // everything except the unit component)
            Matrix<QScalar> phi(0, cols);
            std::vector<int> qdims;
            if (k == 1) {
                bool is_zero_deg = deg_height(nu) == 0;
                phi = Matrix<QScalar>(is_zero_deg ? 1 : 0, cols);
                if (is_zero_deg) phi.at(0, 0) = ctx.one();
            } else {
                const auto& prev2 = steps[k - 2];
                qdims = component_dims(prev2, nu);
                int rows = 0;
                for (int x : qdims) rows += x;
                phi = Matrix<QScalar>(rows, cols);
                int coff = 0;
                for (size_t g = 0; g < prev.size(); ++g) {
                    if (pdims[g] == 0) continue;
                    DegVec comp_deg(rd.rank());
                    for (int i = 0; i < rd.rank(); ++i)
                        comp_deg[i] = nu[i] - prev[g].weight[i];
                    const auto& comp = eng.kd_component(comp_deg);
                    for (int c = 0; c < pdims[g]; ++c) {
                        const Word& u = comp.words[comp.basis[c]];
                        auto img = word_times(u, prev[g].image, prev2, nu);
                        int roff = 0;
                        for (size_t h = 0; h < prev2.size(); ++h) {
                            if (qdims[h] == 0) continue;
                            auto it = img.find(static_cast<int>(h));
                            if (it != img.end())
                                for (size_t r = 0; r < it->second.size(); ++r)
                                    phi.at(roff + static_cast<int>(r), coff + c) = it->second[r];
                            roff += qdims[h];
                        }
                    }
                    coff += pdims[g];
                }
            }
            auto kernel = nullspace(phi);
            if (kernel.empty()) continue;
            // minimal generators: kernel modulo (positive part) * (kernel at
            // lower weights, pushed up by left multiplication)
            Rref<QScalar> reducible(cols);
            for (int j = 0; j < rd.rank(); ++j) {
                DegVec lower(rd.rank());
                bool ok = true;
                for (int i = 0; i < rd.rank(); ++i) {
                    lower[i] = nu[i] - (i == j ? 1 : 0);
                    if (lower[i] < 0) ok = false;
                }
                if (!ok) continue;
                // left multiplication by E_j on F_{k-1} components
                auto ldims = component_dims(prev, lower);
                int lcols = 0;
                for (int x : ldims) lcols += x;
                if (lcols == 0) continue;
                Matrix<QScalar> lphi(cols, lcols);
                {
                    int lcoff = 0, coff = 0;
                    for (size_t g = 0; g < prev.size(); ++g) {
                        if (ldims[g] > 0) {
                            DegVec lcomp(rd.rank()), comp(rd.rank());
                            for (int i = 0; i < rd.rank(); ++i) {
                                lcomp[i] = lower[i] - prev[g].weight[i];
                                comp[i] = nu[i] - prev[g].weight[i];
                            }
                            const auto& lc = eng.kd_component(lcomp);
                            for (int c = 0; c < ldims[g]; ++c) {
                                Word w;
                                w.push_back(static_cast<std::uint8_t>(j));
                                const Word& base = lc.words[lc.basis[c]];
                                w.insert(w.end(), base.begin(), base.end());
                                auto nf = eng.normal_form(w);
                                for (size_t r = 0; r < nf.size(); ++r)
                                    lphi.at(coff + static_cast<int>(r), lcoff + c) = nf[r];
                            }
                        }
                        lcoff += ldims[g];
                        coff += pdims[g];
                    }
                }
                // kernel vectors at the lower weight
                // (recompute: cheap at desk scale)
                Matrix<QScalar> lphi_prev(0, lcols);
                if (k == 1) {
                    bool z = deg_height(lower) == 0;
                    lphi_prev = Matrix<QScalar>(z ? 1 : 0, lcols);
                    if (z) lphi_prev.at(0, 0) = ctx.one();
                } else {
                    const auto& prev2 = steps[k - 2];
                    auto q2 = component_dims(prev2, lower);
                    int rows2 = 0;
                    for (int x : q2) rows2 += x;
                    lphi_prev = Matrix<QScalar>(rows2, lcols);
                    int coff2 = 0;
                    for (size_t g = 0; g < prev.size(); ++g) {
                        if (ldims[g] == 0) continue;
                        DegVec comp_deg(rd.rank());
                        for (int i = 0; i < rd.rank(); ++i)
                            comp_deg[i] = lower[i] - prev[g].weight[i];
                        const auto& comp = eng.kd_component(comp_deg);
                        for (int c = 0; c < ldims[g]; ++c) {
                            const Word& u = comp.words[comp.basis[c]];
                            auto img = word_times(u, prev[g].image, prev2, lower);
                            int roff = 0;
                            for (size_t h = 0; h < prev2.size(); ++h) {
                                if (q2[h] == 0) continue;
                                auto it = img.find(static_cast<int>(h));
                                if (it != img.end())
                                    for (size_t r = 0; r < it->second.size(); ++r)
                                        lphi_prev.at(roff + static_cast<int>(r), coff2 + c) =
                                            it->second[r];
                                roff += q2[h];
                            }
                        }
                        coff2 += ldims[g];
                    }
                }
                for (const auto& kv : nullspace(lphi_prev)) reducible.add_row(lphi.apply(kv));
            }
            int fresh = 0;
            std::vector<std::vector<QScalar>> new_gens;
            for (const auto& kv : kernel) {
                if (!reducible.contains(kv)) {
                    reducible.add_row(kv);
                    new_gens.push_back(kv);
                    ++fresh;
                }
            }
            if (fresh == 0) continue;
            Weight w = -rd.from_root_basis_long(nu);
            out.set(k, w, fresh);
            for (auto& kv : new_gens) {
                Gen g;
                g.weight = nu;
                // split coords by generator slot
                int off = 0;
                for (size_t gi = 0; gi < prev.size(); ++gi) {
                    if (pdims[gi] == 0) continue;
                    std::vector<QScalar> part(kv.begin() + off, kv.begin() + off + pdims[gi]);
                    bool nz = false;
                    for (const auto& x : part)
                        if (!x.is_zero()) nz = true;
                    if (nz) g.image[static_cast<int>(gi)] = std::move(part);
                    off += pdims[gi];
                }
                next.push_back(std::move(g));
            }
        }
        if (next.empty()) break;
        steps.push_back(std::move(next));
    }
    return out;
}

} // namespace

CohTable coh_via_resolution(AMode mode, const WeightModule& m, long weight_depth, int max_degree,
                            long ell) {
    const RootDatum& rd = m.root_datum();
    switch (mode) {
        case AMode::generic_rank1:
            if (rd.rank() != 1) throw ValidationError("generic_rank1 needs a rank-1 datum");
            return rank1_koszul(m, weight_depth);
        case AMode::small_rank1:
            if (rd.rank() != 1 || ell < 2)
                throw ValidationError("small_rank1 needs rank 1 and ell >= 2");
            return periodic_cohomology(m, weight_depth, max_degree, ell);
        case AMode::lusztig_rank1: {
            if (rd.rank() != 1 || ell < 2)
                throw ValidationError("lusztig_rank1 needs rank 1 and ell >= 2");
            // only the trivial module is needed here: the Lusztig algebra is
            // the tensor product of the truncated part and a divided-power
            // polynomial part, and minimal resolutions tensor together
            if (m.total_dim() != 1 || m.dim(Weight::zero(1)) != 1)
                throw ValidationError("lusztig_rank1 route supports the trivial module only");
            CohTable small = periodic_cohomology(m, weight_depth, max_degree, ell);
            CohTable out;
            // Koszul factor for the divided-power generator of weight l*alpha:
            // degrees 0 and 1, weights 0 and -l alpha
            for (const auto& [deg, row] : small.h) {
                for (const auto& [wk, d] : row) {
                    out.set(deg, Weight(wk), out.dim(deg, Weight(wk)) + d);
                    if (deg + 1 <= max_degree) {
                        Weight shifted = Weight(wk) - rd.simple_root(0).scaled(Rat(ell));
                        out.set(deg + 1, shifted, out.dim(deg + 1, shifted) + d);
                    }
                }
            }
            return out;
        }
        case AMode::generic_rank2: {
            if (rd.rank() != 2) throw ValidationError("generic_rank2 needs a rank-2 datum");
            if (m.total_dim() != 1 || m.dim(Weight::zero(2)) != 1)
                throw ValidationError("generic_rank2 route supports the trivial module only");
            return rank2_minimal_resolution(rd, m.context(), weight_depth, max_degree);
        }
    }
    throw ValidationError("unknown resolution mode");
}

QInvReport verify_quantum_inv(const RootDatum& rd, const std::vector<Weight>& lambdas,
                              const QuantumContext& ctx, bool corrupt) {
    QInvReport rep;
    rep.passed = true;
    for (const auto& lambda : lambdas) {
        std::string label;
        for (size_t i = 0; i < lambda.c.size(); ++i)
            label += (i ? "," : "") + lambda.c[i].get_str();

        Weight low = rd.dot(rd.w0(), lambda);
        auto rc = rd.to_root_basis(lambda - low);
        long depth = 0;
        for (const auto& x : rc) depth += rat_to_long(x);
        depth += 1; // a little room below w0 . lambda

        CohTable closed = closed_form_quantum_inv(rd, lambda);
        CohTable bgg;
        try {
            bgg = coh_via_bgg(rd, lambda, ctx, depth, corrupt);
        } catch (const ConsistencyError& e) {
            rep.passed = false;
            rep.mismatches.push_back("lambda=" + label + ": " + e.what());
            continue;
        }
        rep.tables["bgg:" + label] = bgg;
        rep.tables["closed:" + label] = closed;
        // compare within the window of the bgg table
        for (const auto& [deg, row] : closed.h) {
            for (const auto& [wk, d] : row) {
                auto drop = rd.to_root_basis(lambda - Weight(wk));
                long ht = 0;
                for (const auto& x : drop) ht += rat_to_long(x);
                if (ht > depth) continue;
                if (bgg.dim(deg, Weight(wk)) != d) {
                    rep.passed = false;
                    rep.mismatches.push_back("lambda=" + label + " closed form vs bgg at H^" +
                                             std::to_string(deg));
                }
            }
        }
        for (const auto& [deg, row] : bgg.h)
            for (const auto& [wk, d] : row)
                if (closed.dim(deg, Weight(wk)) != d) {
                    rep.passed = false;
                    rep.mismatches.push_back("lambda=" + label + " spurious bgg class at H^" +
                                             std::to_string(deg));
                }

        // resolution route where available
        if (rd.rank() == 1 && !ctx.cyclotomic) {
            auto weyl = quantum_weyl(rd, lambda, ctx);
            CohTable res = coh_via_resolution(AMode::generic_rank1, weyl, depth, 1);
            rep.tables["resolution:" + label] = res;
            if (!(res == bgg || res.h == bgg.h)) {
                // compare entrywise within the common window
                for (int deg = 0; deg <= 1; ++deg)
                    for (const auto& [wk, d] : closed.h.count(deg) ? closed.h[deg]
                                                                   : std::map<std::vector<Rat>, int>{})
                        if (res.dim(deg, Weight(wk)) != bgg.dim(deg, Weight(wk))) {
                            rep.passed = false;
                            rep.mismatches.push_back("lambda=" + label +
                                                     " route disagreement at H^" +
                                                     std::to_string(deg));
                        }
                if (!(res.h == bgg.h)) {
                    rep.passed = false;
                    rep.mismatches.push_back("lambda=" + label + " route tables differ");
                }
            }
        }
        if (rd.rank() == 2 && !ctx.cyclotomic && lambda.is_zero()) {
            CohTable res = coh_via_resolution(AMode::generic_rank2, trivial_module(rd, ctx), 4, 4);
            rep.tables["resolution:" + label] = res;
            // compare on drops of height <= 4
            for (int deg = 0; deg <= 4; ++deg) {
                for (const auto& [wk, d] : closed.h.count(deg)
                                               ? closed.h[deg]
                                               : std::map<std::vector<Rat>, int>{}) {
                    auto drop = rd.to_root_basis(Weight::zero(2) - Weight(wk));
                    long ht = 0;
                    for (const auto& x : drop) ht += rat_to_long(x);
                    if (ht > 4) continue;
                    if (res.dim(deg, Weight(wk)) != d) {
                        rep.passed = false;
                        rep.mismatches.push_back("lambda=" + label +
                                                 " rank-2 resolution mismatch at H^" +
                                                 std::to_string(deg));
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace semiq
