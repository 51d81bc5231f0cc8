#pragma once

// Dense and sparse exact linear algebra over a Scalar field: matrices,
// reduced row echelon accumulation with fixed column order, rank, kernels.

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace ydw {

using Vec = std::vector<Scalar>;

inline Vec vec_zero(const FieldPtr& F, unsigned n) { return Vec(n, Scalar::zero(F)); }

inline bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

struct Mat {
    unsigned rows = 0, cols = 0;
    FieldPtr F;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(FieldPtr field, unsigned r, unsigned c)
        : rows(r), cols(c), F(std::move(field)), a(static_cast<size_t>(r) * c, Scalar::zero(F)) {}

    static Mat identity(const FieldPtr& F, unsigned n) {
        Mat m(F, n, n);
        for (unsigned i = 0; i < n; ++i)
            m.at(i, i) = Scalar::one(F);
        return m;
    }

    Scalar& at(unsigned i, unsigned j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(unsigned i, unsigned j) const {
        return a[static_cast<size_t>(i) * cols + j];
    }

    bool is_identity() const {
        if (rows != cols)
            return false;
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned j = 0; j < cols; ++j) {
                if (i == j && !at(i, j).is_one())
                    return false;
                if (i != j && !at(i, j).is_zero())
                    return false;
            }
        return true;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Mat operator*(const Mat& o) const {
        Mat r(F, rows, o.cols);
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned k = 0; k < cols; ++k) {
                const Scalar& v = at(i, k);
                if (v.is_zero())
                    continue;
                for (unsigned j = 0; j < o.cols; ++j)
                    if (!o.at(k, j).is_zero())
                        r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < a.size(); ++i)
            r.a[i] += o.a[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        Mat r = *this;
        for (size_t i = 0; i < a.size(); ++i)
            r.a[i] -= o.a[i];
        return r;
    }

    Mat scaled(const Scalar& s) const {
        Mat r = *this;
        for (auto& x : r.a)
            x *= s;
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec r = vec_zero(F, rows);
        for (unsigned j = 0; j < cols; ++j) {
            if (v[j].is_zero())
                continue;
            for (unsigned i = 0; i < rows; ++i)
                if (!at(i, j).is_zero())
                    r[i] += at(i, j) * v[j];
        }
        return r;
    }

    Mat transpose() const {
        Mat r(F, cols, rows);
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned j = 0; j < cols; ++j)
                r.at(j, i) = at(i, j);
        return r;
    }

    // Gauss-Jordan inverse; throws on singular input
    Mat inverse() const {
        if (rows != cols)
            throw Error("inverse of non-square matrix");
        Mat m = *this;
        Mat inv = identity(F, rows);
        for (unsigned col = 0; col < cols; ++col) {
            unsigned piv = rows;
            for (unsigned i = col; i < rows; ++i)
                if (!m.at(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == rows)
                throw Error("matrix is singular");
            if (piv != col)
                for (unsigned j = 0; j < cols; ++j) {
                    std::swap(m.at(piv, j), m.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            Scalar d = m.at(col, col).inv();
            for (unsigned j = 0; j < cols; ++j) {
                m.at(col, j) *= d;
                inv.at(col, j) *= d;
            }
            for (unsigned i = 0; i < rows; ++i) {
                if (i == col || m.at(i, col).is_zero())
                    continue;
                Scalar f = m.at(i, col);
                for (unsigned j = 0; j < cols; ++j) {
                    m.at(i, j) -= f * m.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }
};

// tensor (Kronecker) product with row-major pair indexing (i*dimB + j)
inline Mat kronecker(const Mat& A, const Mat& B) {
    Mat r(A.F, A.rows * B.rows, A.cols * B.cols);
    for (unsigned i = 0; i < A.rows; ++i)
        for (unsigned j = 0; j < A.cols; ++j) {
            if (A.at(i, j).is_zero())
                continue;
            for (unsigned k = 0; k < B.rows; ++k)
                for (unsigned l = 0; l < B.cols; ++l)
                    if (!B.at(k, l).is_zero())
                        r.at(i * B.rows + k, j * B.cols + l) = A.at(i, j) * B.at(k, l);
        }
    return r;
}

// Reduced-row-echelon accumulator over a fixed column order (0,1,2,...).
// Rows are kept fully reduced; the resulting basis is canonical.
class Echelon {
public:
    Echelon(FieldPtr F, unsigned ncols) : F_(std::move(F)), ncols_(ncols) {}

    // reduce v against the basis; returns the residue
    Vec reduce(Vec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& c = v[pivot_[r]];
            if (c.is_zero())
                continue;
            Scalar f = c;
            for (unsigned j = 0; j < ncols_; ++j)
                if (!rows_[r][j].is_zero())
                    v[j] -= f * rows_[r][j];
        }
        return v;
    }

    // insert a vector; returns true if it enlarged the span
    bool add(Vec v) {
        v = reduce(std::move(v));
        unsigned p = ncols_;
        for (unsigned j = 0; j < ncols_; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p == ncols_)
            return false;
        Scalar d = v[p].inv();
        for (unsigned j = 0; j < ncols_; ++j)
            if (!v[j].is_zero())
                v[j] *= d;
        // back-substitute into existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            Scalar f = rows_[r][p];
            if (f.is_zero())
                continue;
            for (unsigned j = 0; j < ncols_; ++j)
                if (!v[j].is_zero())
                    rows_[r][j] -= f * v[j];
        }
        // keep rows sorted by pivot column
        size_t pos = 0;
        while (pos < pivot_.size() && pivot_[pos] < p)
            ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivot_.insert(pivot_.begin() + pos, p);
        return true;
    }

    unsigned rank() const { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<unsigned>& pivots() const { return pivot_; }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    // coordinates of v in the row basis, if v lies in the span
    std::optional<Vec> coordinates(const Vec& v) const {
        Vec coord(rows_.size(), Scalar::zero(F_));
        for (size_t r = 0; r < rows_.size(); ++r)
            coord[r] = v[pivot_[r]];
        // verify
        Vec check = v;
        for (size_t r = 0; r < rows_.size(); ++r)
            for (unsigned j = 0; j < ncols_; ++j)
                if (!rows_[r][j].is_zero())
                    check[j] -= coord[r] * rows_[r][j];
        if (!vec_is_zero(check))
            return std::nullopt;
        return coord;
    }

private:
    FieldPtr F_;
    unsigned ncols_;
    std::vector<Vec> rows_;
    std::vector<unsigned> pivot_;
};

// Sparse elimination for large rank computations (quantum symmetrizer).
// Vectors are sorted (index, value) pairs with nonzero values.
using SVec = std::vector<std::pair<uint32_t, Scalar>>;

inline SVec svec_axpy(const SVec& x, const Scalar& c, const SVec& y) {
    // y + c*x, merged
    SVec r;
    r.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Scalar v = c * x[i].second;
            if (!v.is_zero())
                r.emplace_back(x[i].first, std::move(v));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            r.push_back(y[j]);
            ++j;
        } else {
            Scalar v = y[j].second + c * x[i].second;
            if (!v.is_zero())
                r.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

class SparseEchelon {
public:
    // returns true if the vector enlarged the span
    bool add(SVec v) {
        while (!v.empty()) {
            uint32_t lead = v.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                Scalar d = v.front().second.inv();
                for (auto& [idx, val] : v)
                    val *= d;
                pivots_.emplace(lead, std::move(v));
                return true;
            }
            Scalar c = -v.front().second;
            v = svec_axpy(it->second, c, v);
        }
        return false;
    }

    unsigned rank() const { return static_cast<unsigned>(pivots_.size()); }

private:
    std::map<uint32_t, SVec> pivots_;
};

} // namespace ydw
