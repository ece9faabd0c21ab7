#include "semiq/quantum_algebra.hpp"
#include <functional>

#include <algorithm>

#include "semiq/errors.hpp"

namespace semiq {

DegVec word_degree(const Word& w, int rank) {
    DegVec d(rank, 0);
    for (auto letter : w) d[letter]++;
    return d;
}

long deg_height(const DegVec& d) {
    long h = 0;
    for (long x : d) h += x;
    return h;
}

void FreeElt::add(const Word& w, const QScalar& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

bool FreeElt::is_zero() const { return terms.empty(); }

QuantumNil::QuantumNil(const RootDatum& rd, QuantumContext ctx) : rd_(&rd), ctx_(std::move(ctx)) {}

void QuantumNil::gen_words(const DegVec& remaining, Word& cur, std::vector<Word>& out) const {
    bool done = true;
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] > 0) {
            done = false;
            DegVec next = remaining;
            next[i]--;
            cur.push_back(static_cast<std::uint8_t>(i));
            gen_words(next, cur, out);
            cur.pop_back();
        }
    }
    if (done) out.push_back(cur);
}

const std::vector<Word>& QuantumNil::words(const DegVec& deg) {
    auto it = word_cache_.find(deg);
    if (it != word_cache_.end()) return it->second;
    std::vector<Word> out;
    Word cur;
    gen_words(deg, cur, out);
    std::sort(out.begin(), out.end());
    return word_cache_.emplace(deg, std::move(out)).first->second;
}

FreeElt QuantumNil::serre_element(int i, int j, bool corrupt) const {
    if (i == j) throw ValidationError("Serre element needs i != j");
    long n = 1 - rd_->cartan(i, j); // 1 - <alpha_j, coroot_i>
    FreeElt out;
    for (long p = 0; p <= n; ++p) {
        long pp = n - p;
        QScalar coeff = quantum_binomial(n, p, i, ctx_);
        if (corrupt && p == 1) coeff += ctx_.one();
        if (pp % 2) coeff = -coeff;
        Word w;
        for (long a = 0; a < p; ++a) w.push_back(static_cast<std::uint8_t>(i));
        w.push_back(static_cast<std::uint8_t>(j));
        for (long a = 0; a < pp; ++a) w.push_back(static_cast<std::uint8_t>(i));
        out.add(w, coeff);
    }
    return out;
}

QScalar QuantumNil::braiding(int s, int t) const {
    return ctx_.v_power(rd_->sym(s) * rd_->cartan(s, t));
}

QScalar QuantumNil::pair_words(const Word& e_side, const Word& f_side) const {
    if (e_side.size() != f_side.size()) return ctx_.zero();
    const size_t n = e_side.size();
    if (n == 0) return ctx_.one();
    if (n > 20) throw ValidationError("pairing word too long");
    // memoized over the remaining-positions mask of the F side; the E side is
    // always consumed from the left, so the mask determines the state
    std::vector<char> computed(1u << n, 0);
    std::vector<QScalar> memo(1u << n);
    std::vector<std::uint32_t> full_stack;

    std::function<QScalar(std::uint32_t)> go = [&](std::uint32_t mask) -> QScalar {
        if (computed[mask]) return memo[mask];
        computed[mask] = 1;
        size_t remaining = static_cast<size_t>(__builtin_popcount(mask));
        size_t pos_e = n - remaining; // next E letter to match
        if (remaining == 0) {
            memo[mask] = ctx_.one();
            return memo[mask];
        }
        QScalar acc = ctx_.zero();
        for (size_t k = 0; k < n; ++k) {
            if (!(mask & (1u << k))) continue;
            if (f_side[k] != e_side[pos_e]) continue;
            QScalar factor = ctx_.one();
            for (size_t l = 0; l < k; ++l) {
                if (mask & (1u << l)) factor *= braiding(f_side[l], f_side[k]);
            }
            acc += factor * go(mask & ~(1u << k));
        }
        memo[mask] = acc;
        return acc;
    };
    return go((1u << n) - 1);
}

QScalar QuantumNil::pair(const FreeElt& e_side, const Word& f_side) const {
    QScalar acc = ctx_.zero();
    for (const auto& [w, c] : e_side.terms) acc += c * pair_words(w, f_side);
    return acc;
}

Matrix<QScalar> QuantumNil::pairing_matrix(const DegVec& deg) {
    const auto& ws = words(deg);
    Matrix<QScalar> m(static_cast<int>(ws.size()), static_cast<int>(ws.size()));
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = 0; j < ws.size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = pair_words(ws[i], ws[j]);
    return m;
}

const GradedComponentBasis& QuantumNil::kd_component(const DegVec& deg) {
    auto it = kd_cache_.find(deg);
    if (it != kd_cache_.end()) return it->second;

    GradedComponentBasis comp;
    comp.degree = deg;
    comp.words = words(deg);
    for (size_t i = 0; i < comp.words.size(); ++i)
        comp.word_index[comp.words[i]] = static_cast<int>(i);
    comp.relations = Rref<QScalar>(static_cast<int>(comp.words.size()));

    // two-sided Serre ideal, truncated to this degree: x * s_{ij} * y over all
    // word pairs with matching degrees
    for (int i = 0; i < rd_->rank(); ++i) {
        for (int j = 0; j < rd_->rank(); ++j) {
            if (i == j) continue;
            FreeElt s = serre_element(i, j);
            DegVec sdeg = word_degree(s.terms.begin()->first, rd_->rank());
            DegVec rest(rd_->rank());
            bool fits = true;
            for (int k = 0; k < rd_->rank(); ++k) {
                rest[k] = deg[k] - sdeg[k];
                if (rest[k] < 0) fits = false;
            }
            if (!fits) continue;
            // enumerate left degrees gl <= rest componentwise
            std::vector<DegVec> lefts;
            DegVec gl(rd_->rank(), 0);
            std::function<void(int)> enumerate = [&](int pos) {
                if (pos == rd_->rank()) {
                    lefts.push_back(gl);
                    return;
                }
                for (long v = 0; v <= rest[pos]; ++v) {
                    gl[pos] = v;
                    enumerate(pos + 1);
                }
                gl[pos] = 0;
            };
            enumerate(0);
            for (const auto& gleft : lefts) {
                DegVec gright(rd_->rank());
                for (int k = 0; k < rd_->rank(); ++k) gright[k] = rest[k] - gleft[k];
                for (const auto& x : words(gleft)) {
                    for (const auto& y : words(gright)) {
                        std::vector<QScalar> row(comp.words.size(), ctx_.zero());
                        for (const auto& [sw, sc] : s.terms) {
                            Word w = x;
                            w.insert(w.end(), sw.begin(), sw.end());
                            w.insert(w.end(), y.begin(), y.end());
                            row[comp.word_index.at(w)] += sc;
                        }
                        comp.relations.add_row(std::move(row));
                    }
                }
            }
        }
    }
    comp.basis = comp.relations.free_cols();
    return kd_cache_.emplace(deg, std::move(comp)).first->second;
}

std::vector<QScalar> QuantumNil::normal_form(const Word& w) {
    const auto& comp = kd_component(word_degree(w, rd_->rank()));
    std::vector<QScalar> unit(comp.words.size(), ctx_.zero());
    unit[comp.word_index.at(w)] = ctx_.one();
    auto reduced = comp.relations.reduce(std::move(unit));
    std::vector<QScalar> coords(comp.basis.size(), ctx_.zero());
    for (size_t b = 0; b < comp.basis.size(); ++b) coords[b] = reduced[comp.basis[b]];
    return coords;
}

int QuantumNil::small_dimension(const DegVec& deg) {
    const auto& comp = kd_component(deg);
    Matrix<QScalar> gram(comp.dim(), comp.dim());
    for (int i = 0; i < comp.dim(); ++i)
        for (int j = 0; j < comp.dim(); ++j)
            gram.at(i, j) = pair_words(comp.words[comp.basis[i]], comp.words[comp.basis[j]]);
    return exact_rank(gram);
}

bool QuantumNil::serre_vanishing(long max_height, bool corrupt) {
    for (int i = 0; i < rd_->rank(); ++i) {
        for (int j = 0; j < rd_->rank(); ++j) {
            if (i == j) continue;
            FreeElt s = serre_element(i, j, corrupt);
            DegVec sdeg = word_degree(s.terms.begin()->first, rd_->rank());
            if (deg_height(sdeg) > max_height) continue;
            for (const auto& f : words(sdeg))
                if (!pair(s, f).is_zero()) return false;
        }
    }
    return true;
}

std::vector<DegVec> QuantumNil::degrees_up_to(long max_height) const {
    std::vector<DegVec> out;
    DegVec cur(rd_->rank(), 0);
    std::function<void(int, long)> rec = [&](int pos, long budget) {
        if (pos == rd_->rank()) {
            if (deg_height(cur) > 0) out.push_back(cur);
            return;
        }
        for (long v = 0; v <= budget; ++v) {
            cur[pos] = v;
            rec(pos + 1, budget - v);
        }
        cur[pos] = 0;
    };
    rec(0, max_height);
    std::sort(out.begin(), out.end(), [](const DegVec& a, const DegVec& b) {
        long ha = deg_height(a), hb = deg_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return out;
}

int exact_rank(const Matrix<QScalar>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    bool generic = true;
    for (int i = 0; i < m.rows() && generic; ++i)
        for (int j = 0; j < m.cols() && generic; ++j)
            if (!m.at(i, j).is_generic()) generic = false;

    if (!generic) {
        // cyclotomic field: plain exact Gaussian elimination
        Matrix<Cyclotomic> c(m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) c.at(i, j) = m.at(i, j).cyclotomic();
        return rank_of(c);
    }

    // clear denominators per row, then fraction-free elimination
    std::vector<std::vector<ZPoly>> a(m.rows(), std::vector<ZPoly>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        ZPoly common = ZPoly::constant(Int(1));
        for (int j = 0; j < m.cols(); ++j) {
            const ZPoly& den = m.at(i, j).generic().den();
            common = common * den.exact_div(zpoly_gcd(common, den));
        }
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& f = m.at(i, j).generic();
            a[i][j] = f.num() * common.exact_div(f.den());
        }
    }
    return bareiss_rank(std::move(a));
}

} // namespace semiq
