#ifndef SEMIQ_LINALG_HPP
#define SEMIQ_LINALG_HPP

#include <vector>

#include "semiq/errors.hpp"
#include "semiq/poly.hpp"

namespace semiq {

template <class F>
bool lin_is_zero(const F& x) {
    return x == F{};
}

// Customization point: multiplicative unit of the scalar type.
template <class F>
struct FieldTraits {
    static F one() { return F(1); }
};

template <class F>
F lin_one() {
    return FieldTraits<F>::one();
}

// Dense matrix over an exact field. Small sizes only; no pivoting heuristics
// beyond "first nonzero".
template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = lin_one<F>();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    F& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const F& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (lin_is_zero(a.at(i, k))) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix sum shape mismatch");
        Matrix c(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!lin_is_zero(x)) return false;
        return true;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw ValidationError("matrix apply shape mismatch");
        std::vector<F> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!lin_is_zero(at(i, j)) && !lin_is_zero(v[j])) r[i] += at(i, j) * v[j];
        return r;
    }

private:
    int rows_, cols_;
    std::vector<F> a_;
};

// Reduced row echelon form of a list of row vectors, with recorded pivot
// columns. Used for quotient bases (non-pivot columns), normal forms, and
// membership tests.
template <class F>
class Rref {
public:
    Rref() : cols_(0) {}
    explicit Rref(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    const std::vector<std::vector<F>>& rows() const { return rows_; }

    std::vector<int> free_cols() const {
        std::vector<char> used(cols_, 0);
        for (int p : pivots_) used[p] = 1;
        std::vector<int> f;
        for (int j = 0; j < cols_; ++j)
            if (!used[j]) f.push_back(j);
        return f;
    }

    // Reduce v modulo the row space; the result has zeros in pivot columns.
    std::vector<F> reduce(std::vector<F> v) const {
        if (static_cast<int>(v.size()) != cols_) throw ValidationError("Rref::reduce size mismatch");
        for (size_t r = 0; r < rows_.size(); ++r) {
            const F& c = v[pivots_[r]];
            if (lin_is_zero(c)) continue;
            F f = c;
            for (int j = 0; j < cols_; ++j) {
                if (!lin_is_zero(rows_[r][j])) v[j] -= f * rows_[r][j];
            }
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!lin_is_zero(x)) return false;
        return true;
    }

    // Insert a row; returns true if it enlarged the row space.
    bool add_row(std::vector<F> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols_; ++j) {
            if (!lin_is_zero(v[j])) {
                p = j;
                break;
            }
        }
        if (p < 0) return false;
        F inv = v[p];
        for (int j = 0; j < cols_; ++j)
            if (!lin_is_zero(v[j])) v[j] = v[j] / inv;
        // clear column p in existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            const F c = rows_[r][p];
            if (lin_is_zero(c)) continue;
            for (int j = 0; j < cols_; ++j)
                if (!lin_is_zero(v[j])) rows_[r][j] -= c * v[j];
        }
        // keep rows sorted by pivot column
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<F>> rows_;
    std::vector<int> pivots_;
};

template <class F>
int rank_of(const Matrix<F>& m) {
    Rref<F> r(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<F> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        r.add_row(std::move(row));
    }
    return r.rank();
}

// Basis of the right kernel  { v : m v = 0 }.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
    Rref<F> r(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<F> row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        r.add_row(std::move(row));
    }
    std::vector<std::vector<F>> basis;
    for (int fc : r.free_cols()) {
        std::vector<F> v(m.cols());
        v[fc] = lin_one<F>();
        // back-substitute pivot coordinates
        const auto& rows = r.rows();
        const auto& piv = r.pivot_cols();
        for (size_t k = 0; k < rows.size(); ++k) v[piv[k]] = -rows[k][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m x = b, if any.
template <class F>
bool solve(const Matrix<F>& m, const std::vector<F>& b, std::vector<F>& out) {
    // eliminate on the augmented matrix
    Rref<F> r(m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<F> row(m.cols() + 1);
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        row[m.cols()] = b[i];
        r.add_row(std::move(row));
    }
    for (int p : r.pivot_cols())
        if (p == m.cols()) return false; // inconsistent
    out.assign(m.cols(), F{});
    const auto& rows = r.rows();
    const auto& piv = r.pivot_cols();
    for (size_t k = 0; k < rows.size(); ++k) out[piv[k]] = rows[k][m.cols()];
    // free variables zero; verify only in debug builds if desired
    return true;
}

// Fraction-free rank of a matrix of integer polynomials (rank over the
// fraction field). Bareiss keeps every intermediate entry polynomial.
int bareiss_rank(std::vector<std::vector<ZPoly>> a);

} // namespace semiq

#endif
