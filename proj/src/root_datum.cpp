#include "semiq/root_datum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "semiq/errors.hpp"

namespace semiq {

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Weight Weight::scaled(const Rat& k) const {
    Weight r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

bool Weight::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool Weight::is_integral() const {
    for (const auto& x : c)
        if (!is_integer(x)) return false;
    return true;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i].get_str();
    }
    os << ")";
    return os.str();
}

Coweight operator+(const Coweight& a, const Coweight& b) {
    Coweight r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

Coweight Coweight::operator-() const {
    Coweight r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Coweight Coweight::scaled(const Rat& k) const {
    Coweight r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

bool Coweight::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

KWeight kweight_from(const Weight& w) {
    KWeight r;
    r.reserve(w.c.size());
    for (const auto& x : w.c) r.push_back(LevelScalar::from_rat(x));
    return r;
}

KWeight kweight_add(const KWeight& a, const KWeight& b) {
    KWeight r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool kweight_eq(const KWeight& a, const KWeight& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::string AffineWeight::to_string() const {
    std::ostringstream os;
    os << "(" << energy << ", " << finite.to_string() << ", " << level.to_string() << ")";
    return os.str();
}

namespace {

// invert a small rational matrix by Gauss-Jordan
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw ConsistencyError("singular matrix in root datum setup");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rat f = a[c][c];
        for (int j = 0; j < n; ++j) {
            a[c][j] /= f;
            inv[c][j] /= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat g = a[r][c];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= g * a[c][j];
                inv[r][j] -= g * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace

RootDatum::RootDatum(std::string name, std::vector<std::vector<long>> cartan, std::vector<long> d,
                     long hvee)
    : name_(std::move(name)), rank_(static_cast<int>(d.size())), cartan_(std::move(cartan)),
      d_(std::move(d)), hvee_(hvee) {
    build();
}

const RootDatum& RootDatum::preset(const std::string& name) {
    static const RootDatum a1("A1", {{2}}, {1}, 2);
    static const RootDatum a2("A2", {{2, -1}, {-1, 2}}, {1, 1}, 3);
    static const RootDatum b2("B2", {{2, -2}, {-1, 2}}, {1, 2}, 3);
    if (name == "A1") return a1;
    if (name == "A2") return a2;
    if (name == "B2") return b2;
    throw ValidationError("unknown root datum '" + name + "' (expected A1, A2 or B2)");
}

void RootDatum::build() {
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
                throw ValidationError("Cartan matrix is not symmetrizable by d");

    // simple roots and rho in fundamental coordinates
    simple_roots_.resize(rank_);
    for (int j = 0; j < rank_; ++j) {
        std::vector<Rat> c(rank_);
        for (int i = 0; i < rank_; ++i) c[i] = Rat(cartan_[i][j]);
        simple_roots_[j] = Weight(std::move(c));
    }
    rho_ = Weight(std::vector<Rat>(rank_, Rat(1)));

    // Weyl group by breadth-first closure of simple reflections
    auto reflect_mat = [&](int i) {
        std::vector<std::vector<long>> s(rank_, std::vector<long>(rank_, 0));
        for (int k = 0; k < rank_; ++k) {
            s[k][k] = 1;
            s[k][i] -= cartan_[k][i];
        }
        return s;
    };
    auto mat_mul = [&](const std::vector<std::vector<long>>& a,
                       const std::vector<std::vector<long>>& b) {
        std::vector<std::vector<long>> c(rank_, std::vector<long>(rank_, 0));
        for (int i = 0; i < rank_; ++i)
            for (int k = 0; k < rank_; ++k)
                for (int j = 0; j < rank_; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    std::vector<std::vector<std::vector<long>>> refl(rank_);
    for (int i = 0; i < rank_; ++i) refl[i] = reflect_mat(i);

    WeylElt id;
    id.length = 0;
    id.mat.assign(rank_, std::vector<long>(rank_, 0));
    for (int i = 0; i < rank_; ++i) id.mat[i][i] = 1;
    weyl_.push_back(id);
    std::map<std::vector<std::vector<long>>, int> seen{{id.mat, 0}};
    for (size_t head = 0; head < weyl_.size(); ++head) {
        WeylElt cur = weyl_[head];
        for (int i = 0; i < rank_; ++i) {
            auto m = mat_mul(refl[i], cur.mat); // s_i * w
            if (seen.count(m)) continue;
            WeylElt nxt;
            nxt.word = cur.word;
            nxt.word.insert(nxt.word.begin(), i);
            nxt.length = cur.length + 1;
            nxt.mat = m;
            seen.emplace(m, static_cast<int>(weyl_.size()));
            weyl_.push_back(std::move(nxt));
        }
    }
    w0_index_ = 0;
    for (size_t i = 0; i < weyl_.size(); ++i)
        if (weyl_[i].length > weyl_[w0_index_].length) w0_index_ = static_cast<int>(i);
    weyl_mult_.assign(weyl_.size(), std::vector<int>(weyl_.size(), 0));
    for (size_t a = 0; a < weyl_.size(); ++a)
        for (size_t b = 0; b < weyl_.size(); ++b)
            weyl_mult_[a][b] = seen.at(mat_mul(weyl_[a].mat, weyl_[b].mat));

    // Gram matrix of fundamental weights under the short-norm-2 form:
    // gram_q = diag(d) * cartan^{-1}
    std::vector<std::vector<Rat>> cart(rank_, std::vector<Rat>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) cart[i][j] = Rat(cartan_[i][j]);
    auto cart_inv = invert(cart);
    gram_q_.assign(rank_, std::vector<Rat>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) gram_q_[i][j] = Rat(d_[i]) * cart_inv[i][j];
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (gram_q_[i][j] != gram_q_[j][i]) throw ConsistencyError("q-form not symmetric");
    gram_q_inv_ = invert(gram_q_);

    // positive roots: Weyl orbit of the simple roots, kept if nonnegative in
    // the simple-root basis
    std::map<std::vector<Rat>, bool> root_seen;
    for (const auto& w : weyl_) {
        for (int j = 0; j < rank_; ++j) {
            Weight r = act_matrix(w.mat, simple_roots_[j]);
            if (root_seen.count(r.c)) continue;
            root_seen[r.c] = true;
            auto rc = to_root_basis(r);
            bool pos = true, integral = true;
            std::vector<long> ic(rank_);
            for (int k = 0; k < rank_; ++k) {
                if (!is_integer(rc[k])) integral = false;
                else ic[k] = rat_to_long(rc[k]);
                if (rc[k] < 0) pos = false;
            }
            if (!integral) throw ConsistencyError("non-integral root coordinates");
            if (pos) {
                positive_roots_.push_back(r);
                pos_root_coords_.push_back(ic);
            }
        }
    }
    // deterministic order: by height then lexicographic
    std::vector<size_t> idx(positive_roots_.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto height = [](const std::vector<long>& v) {
        long h = 0;
        for (long x : v) h += x;
        return h;
    };
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        long ha = height(pos_root_coords_[a]), hb = height(pos_root_coords_[b]);
        if (ha != hb) return ha < hb;
        return pos_root_coords_[a] < pos_root_coords_[b];
    });
    std::vector<Weight> pr;
    std::vector<std::vector<long>> prc;
    for (size_t i : idx) {
        pr.push_back(positive_roots_[i]);
        prc.push_back(pos_root_coords_[i]);
    }
    positive_roots_ = std::move(pr);
    pos_root_coords_ = std::move(prc);
    theta_coords_ = pos_root_coords_.back();
    theta_height_ = height(theta_coords_);

    Weight theta = positive_roots_.back();
    st_norm_ = q_form(theta, theta) / 2;
}

Weight RootDatum::act_matrix(const std::vector<std::vector<long>>& m, const Weight& mu) {
    Weight r = Weight::zero(static_cast<int>(mu.c.size()));
    for (size_t i = 0; i < mu.c.size(); ++i)
        for (size_t j = 0; j < mu.c.size(); ++j) r.c[i] += Rat(m[i][j]) * mu.c[j];
    return r;
}

Weight RootDatum::act(int w, const Weight& mu) const { return act_matrix(weyl_[w].mat, mu); }

int RootDatum::weyl_inverse(int a) const {
    for (int b = 0; b < weyl_order(); ++b)
        if (weyl_mult_[a][b] == 0) return b;
    throw ConsistencyError("Weyl element without inverse");
}

Coweight RootDatum::act_coweight(int w, const Coweight& cw) const {
    // <mu, w cw> = <w^{-1} mu, cw>, so the coroot-basis action matrix is the
    // transpose of the weight-side matrix of w^{-1}
    const auto& m = weyl_[weyl_inverse(w)].mat;
    Coweight r = Coweight::zero(rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) r.c[i] += Rat(m[j][i]) * cw.c[j];
    return r;
}

AffineWeylElt RootDatum::affine_multiply(const AffineWeylElt& a, const AffineWeylElt& b) const {
    AffineWeylElt r;
    r.translation = a.translation + act_coweight(a.weyl_index, b.translation);
    r.weyl_index = weyl_multiply(a.weyl_index, b.weyl_index);
    return r;
}

std::map<int, std::vector<int>> RootDatum::weyl_by_length() const {
    std::map<int, std::vector<int>> by_len;
    for (size_t i = 0; i < weyl_.size(); ++i) by_len[weyl_[i].length].push_back(static_cast<int>(i));
    return by_len;
}

Weight RootDatum::dot(int w, const Weight& mu) const { return act(w, mu + rho_) - rho_; }

Rat RootDatum::pairing(const Weight& mu, const Coweight& cw) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i) s += mu.c[i] * cw.c[i];
    return s;
}

Rat RootDatum::q_form(const Weight& a, const Weight& b) const {
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s += a.c[i] * gram_q_[i][j] * b.c[j];
    return s;
}

Rat RootDatum::st_form(const Weight& a, const Weight& b) const { return q_form(a, b) / st_norm_; }

LevelScalar RootDatum::kappa_form(const Weight& a, const Weight& b, const LevelScalar& kappa) const {
    return kappa * LevelScalar::from_rat(st_form(a, b));
}

Rat RootDatum::st_form_coweights(const Coweight& a, const Coweight& b) const {
    // Gram of the coroot basis for the inverse form: st_norm * cartan * diag(1/d)
    Rat s = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            s += a.c[i] * (st_norm_ * Rat(cartan_[i][j]) / Rat(d_[j])) * b.c[j];
    return s;
}

LevelScalar RootDatum::affine_form(const AffineWeight& a, const AffineWeight& b) const {
    LevelScalar r = LevelScalar::from_rat(st_form(a.finite, b.finite));
    r += LevelScalar::from_int(a.energy) * b.level;
    r += LevelScalar::from_int(b.energy) * a.level;
    return r;
}

KWeight RootDatum::phi_kappa(const Coweight& cw, const LevelScalar& kappa) const {
    LevelScalar shifted = kappa + LevelScalar::from_int(hvee_);
    if (shifted.is_zero()) throw PoleError("phi_kappa undefined at the critical level");
    KWeight out(rank_, LevelScalar());
    for (int k = 0; k < rank_; ++k) {
        Rat acc = 0;
        for (int j = 0; j < rank_; ++j) acc += gram_q_inv_[k][j] * cw.c[j];
        acc *= st_norm_;
        out[k] = LevelScalar::from_rat(acc) / shifted;
    }
    return out;
}

KWeight RootDatum::dot_action(const AffineWeylElt& we, const Weight& mu,
                              const LevelScalar& kappa) const {
    Weight finite_part = dot(we.weyl_index, mu);
    if (we.translation.is_zero()) return kweight_from(finite_part);
    return kweight_add(phi_kappa(we.translation, kappa), kweight_from(finite_part));
}

std::vector<AffineRoot> RootDatum::positive_affine_roots(long max_energy) const {
    if (max_energy < 0) throw ValidationError("max_energy must be >= 0");
    std::vector<AffineRoot> out;
    for (size_t k = 0; k < positive_roots_.size(); ++k) {
        AffineRoot r;
        r.energy = 0;
        r.finite = positive_roots_[k];
        r.root_coords = pos_root_coords_[k];
        out.push_back(std::move(r));
    }
    for (long n = 1; n <= max_energy; ++n) {
        for (size_t k = 0; k < positive_roots_.size(); ++k) {
            AffineRoot rp;
            rp.energy = n;
            rp.finite = positive_roots_[k];
            rp.root_coords = pos_root_coords_[k];
            out.push_back(std::move(rp));
            AffineRoot rm;
            rm.energy = n;
            rm.finite = -positive_roots_[k];
            rm.root_coords.resize(rank_);
            for (int i = 0; i < rank_; ++i) rm.root_coords[i] = -pos_root_coords_[k][i];
            out.push_back(std::move(rm));
        }
        AffineRoot im;
        im.energy = n;
        im.finite = Weight::zero(rank_);
        im.root_coords.assign(rank_, 0);
        im.multiplicity = rank_;
        im.imaginary = true;
        out.push_back(std::move(im));
    }
    return out;
}

bool RootDatum::is_dominant(const Weight& mu) const {
    for (const auto& x : mu.c)
        if (x < 0) return false;
    return true;
}

bool RootDatum::is_dominant_coweight(const Coweight& cw) const {
    // dominant means <alpha_j, cw> >= 0 for all j
    for (int j = 0; j < rank_; ++j) {
        Rat s = 0;
        for (int i = 0; i < rank_; ++i) s += Rat(cartan_[i][j]) * cw.c[i];
        if (s < 0) return false;
    }
    return true;
}

std::vector<Rat> RootDatum::to_root_basis(const Weight& mu) const {
    // solve cartan * c = mu coordinates
    std::vector<std::vector<Rat>> a(rank_, std::vector<Rat>(rank_ + 1));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) a[i][j] = Rat(cartan_[i][j]);
        a[i][rank_] = mu.c[i];
    }
    for (int c = 0; c < rank_; ++c) {
        int piv = -1;
        for (int r = c; r < rank_; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw ConsistencyError("Cartan matrix singular");
        std::swap(a[c], a[piv]);
        Rat f = a[c][c];
        for (int j = 0; j <= rank_; ++j) a[c][j] /= f;
        for (int r = 0; r < rank_; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat g = a[r][c];
            for (int j = 0; j <= rank_; ++j) a[r][j] -= g * a[c][j];
        }
    }
    std::vector<Rat> out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = a[i][rank_];
    return out;
}

Weight RootDatum::from_root_basis(const std::vector<Rat>& coords) const {
    Weight r = Weight::zero(rank_);
    for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) r.c[i] += coords[j] * Rat(cartan_[i][j]);
    return r;
}

std::map<std::vector<long>, long> RootDatum::finite_multiplicities(const Weight& lambda) const {
    if (!is_dominant(lambda) || !lambda.is_integral())
        throw ValidationError("finite_multiplicities requires dominant integral weight");
    // height cap: weights of V_lambda live between w0(lambda) and lambda
    Weight low = act(w0_index_, lambda);
    auto span = to_root_basis(lambda - low);
    long cap = 0;
    for (const auto& x : span) cap += rat_to_long(x);

    std::map<std::vector<long>, long> mult;
    mult[std::vector<long>(rank_, 0)] = 1;
    Rat top_norm = st_form(lambda + rho_, lambda + rho_);

    // enumerate drops by height
    std::vector<std::vector<long>> by_height_prev{std::vector<long>(rank_, 0)};
    for (long h = 1; h <= cap; ++h) {
        // all beta >= 0 with height h and beta <= span componentwise
        std::vector<std::vector<long>> level;
        std::vector<long> beta(rank_, 0);
        // simple odometer over bounded boxes
        std::function<void(int, long)> rec = [&](int pos, long rem) {
            if (pos == rank_) {
                if (rem == 0) level.push_back(beta);
                return;
            }
            long hi = std::min(rem, rat_to_long(span[pos]));
            for (long v = 0; v <= hi; ++v) {
                beta[pos] = v;
                rec(pos + 1, rem - v);
            }
            beta[pos] = 0;
        };
        rec(0, h);
        for (const auto& b : level) {
            Weight mu = lambda - from_root_basis_long(b);
            Rat denom = top_norm - st_form(mu + rho_, mu + rho_);
            if (denom == 0) continue; // not a weight of V_lambda
            Rat rhs = 0;
            for (size_t rix = 0; rix < positive_roots_.size(); ++rix) {
                const auto& ac = pos_root_coords_[rix];
                for (long k = 1;; ++k) {
                    std::vector<long> up(rank_);
                    bool ok = true;
                    for (int i = 0; i < rank_; ++i) {
                        up[i] = b[i] - k * ac[i];
                        if (up[i] < 0) ok = false;
                    }
                    if (!ok) break;
                    auto it = mult.find(up);
                    if (it == mult.end() || it->second == 0) continue;
                    Weight muk = mu + positive_roots_[rix].scaled(Rat(k));
                    rhs += Rat(2) * st_form(muk, positive_roots_[rix]) * Rat(it->second);
                }
            }
            Rat m = rhs / denom;
            if (!is_integer(m) || m < 0) throw ConsistencyError("Freudenthal gave a non-multiplicity");
            if (m != 0) mult[b] = rat_to_long(m);
        }
    }
    return mult;
}

Weight RootDatum::from_root_basis_long(const std::vector<long>& coords) const {
    std::vector<Rat> rc(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) rc[i] = Rat(coords[i]);
    return from_root_basis(rc);
}

Int RootDatum::finite_dimension(const Weight& lambda) const {
    Rat num = 1, den = 1;
    for (const auto& a : positive_roots_) {
        num *= q_form(lambda + rho_, a);
        den *= q_form(rho_, a);
    }
    Rat d = num / den;
    if (!is_integer(d)) throw ConsistencyError("Weyl dimension not integral");
    return Int(d.get_num());
}

QuantumContext RootDatum::quantum_context(bool cyclotomic, long ell) const {
    QuantumContext ctx;
    ctx.cyclotomic = cyclotomic;
    ctx.ell = ell;
    ctx.d = d_;
    if (cyclotomic) {
        if (ell <= 0) throw ValidationError("cyclotomic mode requires ell >= 1");
        for (long di : d_)
            if (ell % di != 0)
                throw ValidationError("ell must be divisible by every symmetrizer d_i");
    }
    return ctx;
}

} // namespace semiq
