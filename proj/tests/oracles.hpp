#pragma once

// Test-only oracles, kept independent of the library's implementation paths:
// polynomial arithmetic on plain exponent maps and a first-row cofactor
// determinant.

#include <map>
#include <vector>

#include <critloci/hilbert.hpp>
#include <critloci/matrix.hpp>

namespace oracles {

using critloci::Mat;
using critloci::Monomial;
using critloci::Poly;
using critloci::RingPtr;
using critloci::SeededRng;

template <class K>
using TermMap = std::map<std::vector<int>, K>;

template <class K>
TermMap<K> to_map(const Poly<K>& p) {
    TermMap<K> m;
    const int nv = p.ring()->nvars();
    for (const auto& [mono, c] : p.terms()) {
        std::vector<int> e(nv);
        for (int i = 0; i < nv; ++i) e[i] = mono.e[i];
        m[e] = c;
    }
    return m;
}

template <class K>
TermMap<K> map_add(const TermMap<K>& a, const TermMap<K>& b) {
    TermMap<K> out = a;
    for (const auto& [e, c] : b) {
        auto it = out.find(e);
        if (it == out.end()) out[e] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

template <class K>
TermMap<K> map_mul(const TermMap<K>& a, const TermMap<K>& b) {
    TermMap<K> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto it = out.find(e);
            K prod = ca * cb;
            if (it == out.end()) out[e] = prod;
            else {
                it->second += prod;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

template <class K>
K cofactor_det(const Mat<K>& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    K acc = K::zero();
    std::vector<int> rows;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<int> cols;
        for (int c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        K term = m.at(0, j) * cofactor_det(m.submatrix(rows, cols));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <class K>
Poly<K> random_poly(const RingPtr& ring, int max_degree, SeededRng& rng, int terms = 6) {
    std::vector<typename Poly<K>::Term> out;
    const int nv = ring->nvars();
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = static_cast<int>(rng.next() % (max_degree + 1));
        for (int i = 0; i < nv && left > 0; ++i) {
            int e = static_cast<int>(rng.next() % (left + 1));
            m.e[i] = static_cast<std::uint8_t>(e);
            m.deg += e;
            left -= e;
        }
        long c = rng.int_in(-5, 5);
        if (c) out.push_back({m, K(c)});
    }
    return Poly<K>(ring, std::move(out));
}

template <class K>
Poly<K> random_homogeneous(const RingPtr& ring, int degree, SeededRng& rng) {
    std::vector<typename Poly<K>::Term> out;
    const int nv = ring->nvars();
    for (int t = 0; t < 8; ++t) {
        Monomial m;
        int left = degree;
        for (int i = 0; i < nv - 1; ++i) {
            int e = static_cast<int>(rng.next() % (left + 1));
            m.e[i] = static_cast<std::uint8_t>(e);
            left -= e;
        }
        m.e[nv - 1] = static_cast<std::uint8_t>(left);
        m.deg = degree;
        long c = rng.int_in(-5, 5);
        if (c) out.push_back({m, K(c)});
    }
    return Poly<K>(ring, std::move(out));
}

template <class K>
Mat<K> random_matrix(int rows, int cols, SeededRng& rng, long lo = -5, long hi = 5) {
    Mat<K> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = K(rng.int_in(lo, hi));
    return m;
}

} // namespace oracles
