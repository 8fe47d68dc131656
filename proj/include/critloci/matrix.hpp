#pragma once

// Dense exact matrices over a field and over polynomials: Bareiss
// determinants, rank/kernel via reduced echelon form, symbolic determinants
// and maximal-minor enumeration.

#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace critloci {

template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T init = T())
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, init) {}

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_)
                throw std::invalid_argument("Mat: ragged rows");
            for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const T& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    std::vector<T> row(int r) const {
        std::vector<T> out(cols_);
        for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
        return out;
    }

    Mat submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Mat m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(rs[i], cs[j]);
        return m;
    }

    Mat transposed() const {
        Mat m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

/// Strictly increasing row (or column) selection.
using MinorIndex = std::vector<int>;

inline void validate_minor_index(const MinorIndex& idx, int bound) {
    int prev = -1;
    for (int i : idx) {
        if (i <= prev || i < 0 || i >= bound)
            throw std::invalid_argument("MinorIndex: not strictly increasing in range");
        prev = i;
    }
}

/// All size-k subsets of {0..n-1} in lexicographic order.
inline std::vector<MinorIndex> combinations(int n, int k) {
    std::vector<MinorIndex> out;
    if (k < 0 || k > n) return out;
    MinorIndex cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// Fraction-free (Bareiss) determinant; divisions are exact at every step.
template <class K>
K bareiss_det(Mat<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: non-square matrix");
    const int n = m.rows();
    if (n == 0) return K::one();
    K prev = K::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { piv = i; break; }
            if (piv < 0) return K::zero();
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = K::zero();
        }
        prev = m.at(k, k);
    }
    K det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

template <class K>
struct RankKernel {
    int rank = 0;
    std::vector<std::vector<K>> kernel; // cols - rank independent vectors, M v = 0
};

/// Reduced row echelon form in place with leftmost pivots; returns pivot columns.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        K inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact rank and a reduced-echelon-derived kernel basis.
template <class K>
RankKernel<K> rank_kernel(const Mat<K>& input) {
    Mat<K> m = input;
    std::vector<int> pivots = rref(m);
    RankKernel<K> out;
    out.rank = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), K::zero());
        v[f] = K::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class K>
std::vector<K> mat_vec(const Mat<K>& m, const std::vector<K>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("mat_vec: size mismatch");
    std::vector<K> out(m.rows(), K::zero());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial matrices

template <class K>
using PolyMat = Mat<Poly<K>>;

template <class K>
Mat<K> evaluate_at(const PolyMat<K>& m, const std::vector<K>& point) {
    Mat<K> out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).evaluate(point);
    return out;
}

namespace detail {

template <class K>
Poly<K> det_poly_rec(const PolyMat<K>& m, std::vector<int> rows, std::vector<int> cols,
                     const RingPtr& ring) {
    const size_t n = rows.size();
    if (n == 0) return Poly<K>::constant(ring, K::one());
    if (n == 1) return m.at(rows[0], cols[0]);
    // expand along the column with the most zeros, then the most constants
    size_t best = 0;
    int best_zeros = -1, best_consts = -1;
    for (size_t j = 0; j < n; ++j) {
        int zeros = 0, consts = 0;
        for (size_t i = 0; i < n; ++i) {
            const auto& e = m.at(rows[i], cols[j]);
            if (e.is_zero()) ++zeros;
            else if (e.is_constant()) ++consts;
        }
        if (zeros > best_zeros || (zeros == best_zeros && consts > best_consts)) {
            best = j;
            best_zeros = zeros;
            best_consts = consts;
        }
    }
    std::vector<int> sub_cols;
    for (size_t j = 0; j < n; ++j)
        if (j != best) sub_cols.push_back(cols[j]);
    Poly<K> acc = Poly<K>::zero(ring);
    for (size_t i = 0; i < n; ++i) {
        const auto& e = m.at(rows[i], cols[best]);
        if (e.is_zero()) continue;
        std::vector<int> sub_rows;
        for (size_t r = 0; r < n; ++r)
            if (r != i) sub_rows.push_back(rows[r]);
        Poly<K> minor = det_poly_rec(m, std::move(sub_rows), sub_cols, ring);
        Poly<K> contrib = e * minor;
        acc = ((i + best) % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

} // namespace detail

/// Exact symbolic determinant; expansion prefers columns rich in zeros and
/// constants, which suits matrices with a constant block.
template <class K>
Poly<K> det_poly(const PolyMat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_poly: non-square matrix");
    if (m.rows() == 0) throw std::invalid_argument("det_poly: empty matrix");
    RingPtr ring = m.at(0, 0).ring();
    std::vector<int> rows(m.rows()), cols(m.cols());
    for (int i = 0; i < m.rows(); ++i) rows[i] = i;
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    return detail::det_poly_rec(m, rows, cols, ring);
}

/// All minors of order min(rows, cols), selected on the longer dimension and
/// listed in lexicographic index order. Zero minors are kept.
template <class K>
std::vector<std::pair<MinorIndex, Poly<K>>> maximal_minors(const PolyMat<K>& m) {
    std::vector<std::pair<MinorIndex, Poly<K>>> out;
    const int r = m.rows(), c = m.cols();
    RingPtr ring = m.at(0, 0).ring();
    if (r >= c) {
        std::vector<int> all_cols(c);
        for (int j = 0; j < c; ++j) all_cols[j] = j;
        for (const auto& sel : combinations(r, c))
            out.push_back({sel, detail::det_poly_rec(m, sel, all_cols, ring)});
    } else {
        std::vector<int> all_rows(r);
        for (int i = 0; i < r; ++i) all_rows[i] = i;
        for (const auto& sel : combinations(c, r))
            out.push_back({sel, detail::det_poly_rec(m, all_rows, sel, ring)});
    }
    return out;
}

/// Evaluated minor: determinant of the (rows x cols) selection at a point.
template <class K>
K submatrix_det(const PolyMat<K>& m, const MinorIndex& rows, const MinorIndex& cols,
                const std::vector<K>& at) {
    validate_minor_index(rows, m.rows());
    validate_minor_index(cols, m.cols());
    if (rows.size() != cols.size())
        throw std::invalid_argument("submatrix_det: selection not square");
    Mat<K> sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            sub.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]).evaluate(at);
    return bareiss_det(sub);
}

} // namespace critloci
