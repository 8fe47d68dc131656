#pragma once

// Builders for the block matrices M_X, M_Y attached to a pair of camera
// n-tuples, the determinantal ideals they generate, and the expected
// dimension/degree formulas for the critical loci.

#include <memory>
#include <stdexcept>
#include <vector>

#include "scene.hpp"

namespace critloci {

template <class K>
struct GroebnerBasis; // groebner.hpp

/// Finite generator list in a declared ring. Generators are kept tidy (no
/// zeros, no scalar multiples of earlier entries); a reduced Groebner basis
/// is attached lazily by the groebner engine.
template <class K>
struct Ideal {
    RingPtr ring;
    std::vector<Poly<K>> gens;
    mutable std::shared_ptr<const GroebnerBasis<K>> gb_cache;

    Ideal() = default;
    explicit Ideal(RingPtr r) : ring(std::move(r)) {}
    Ideal(RingPtr r, std::vector<Poly<K>> g) : ring(std::move(r)), gens(std::move(g)) {}

    bool is_zero_ideal() const { return gens.empty(); }
};

/// Drops zero generators and scalar multiples of earlier generators.
template <class K>
std::vector<Poly<K>> tidy_generators(std::vector<Poly<K>> gens) {
    std::vector<Poly<K>> out;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        bool dup = false;
        for (const auto& h : out)
            if (g.proportional_to(h)) { dup = true; break; }
        if (!dup) out.push_back(std::move(g));
    }
    return out;
}

enum class Side { X, Y };

/// The (n + sum h_i) x (n + k + 1) block matrix: constant camera columns
/// followed by one linear column per view, supported on that view's rows.
template <class K>
struct LocusMatrix {
    PolyMat<K> m;
    Side side = Side::X;
    RingPtr ring;
    std::vector<std::pair<int, int>> block_rows; // per view: [begin, end)
    int leading_row_count = 0;                   // L = sum_{i<n} h_i + n - 1
};

/// Builds M_X (side X: P_j constants, Q_j(x) linear) or M_Y (side Y: Q_j
/// constants, P_j(y) linear) in the given ring, with variables starting at
/// var_offset. Default ring: x0..xk resp. y0..yk, grevlex.
template <class K>
LocusMatrix<K> build_locus_matrix(const ProjectionSetup<K>& s, Side side,
                                  RingPtr ring = nullptr, int var_offset = 0) {
    if (!ring) ring = coordinate_ring(side == Side::X ? 'x' : 'y', s.k + 1);
    const int n = s.n();
    const int rows = n + s.sum_h();
    const int cols = n + s.k + 1;
    LocusMatrix<K> lm;
    lm.side = side;
    lm.ring = ring;
    lm.m = PolyMat<K>(rows, cols, Poly<K>::zero(ring));
    int r0 = 0;
    for (int j = 0; j < n; ++j) {
        const Camera<K>& constant_cam = (side == Side::X) ? s.P[j] : s.Q[j];
        const Camera<K>& moving_cam = (side == Side::X) ? s.Q[j] : s.P[j];
        std::vector<Poly<K>> lin = moving_cam.linear_forms(ring, var_offset);
        for (int i = 0; i <= s.hs[j]; ++i) {
            for (int c = 0; c <= s.k; ++c) {
                const K& e = constant_cam.matrix().at(i, c);
                if (!e.is_zero()) lm.m.at(r0 + i, c) = Poly<K>::constant(ring, e);
            }
            lm.m.at(r0 + i, s.k + 1 + j) = lin[i];
        }
        lm.block_rows.push_back({r0, r0 + s.hs[j] + 1});
        r0 += s.hs[j] + 1;
    }
    lm.leading_row_count = rows - (s.hs[n - 1] + 1);
    return lm;
}

/// Ideal of the critical locus: all maximal minors of the locus matrix.
/// When the matrix has fewer rows than columns the locus is all of P^k and
/// the zero ideal is returned.
template <class K>
Ideal<K> critical_ideal(const ProjectionSetup<K>& s, Side side, RingPtr ring = nullptr) {
    LocusMatrix<K> lm = build_locus_matrix(s, side, std::move(ring));
    Ideal<K> ideal(lm.ring);
    if (lm.m.rows() < lm.m.cols()) return ideal; // zero ideal: locus is the whole space
    std::vector<Poly<K>> gens;
    for (auto& [idx, minor] : maximal_minors(lm.m)) gens.push_back(std::move(minor));
    ideal.gens = tidy_generators(std::move(gens));
    return ideal;
}

/// Bihomogeneous ideal of the unified critical locus in P^k x P^k: maximal
/// minors of M_X (x only) and M_Y (y only) plus, per view, the 2x2 minors of
/// the two-column matrix (P_j(y) | Q_j(x)).
template <class K>
Ideal<K> unified_ideal(const ProjectionSetup<K>& s) {
    RingPtr ring = product_ring(s.k);
    std::vector<Poly<K>> gens;
    LocusMatrix<K> mx = build_locus_matrix(s, Side::X, ring, 0);
    if (mx.m.rows() >= mx.m.cols())
        for (auto& [idx, minor] : maximal_minors(mx.m)) gens.push_back(std::move(minor));
    LocusMatrix<K> my = build_locus_matrix(s, Side::Y, ring, s.k + 1);
    if (my.m.rows() >= my.m.cols())
        for (auto& [idx, minor] : maximal_minors(my.m)) gens.push_back(std::move(minor));
    for (int j = 0; j < s.n(); ++j) {
        std::vector<Poly<K>> py = s.P[j].linear_forms(ring, s.k + 1);
        std::vector<Poly<K>> qx = s.Q[j].linear_forms(ring, 0);
        PolyMat<K> pair_mat(s.hs[j] + 1, 2, Poly<K>::zero(ring));
        for (int i = 0; i <= s.hs[j]; ++i) {
            pair_mat.at(i, 0) = py[i];
            pair_mat.at(i, 1) = qx[i];
        }
        for (auto& [idx, minor] : maximal_minors(pair_mat)) gens.push_back(std::move(minor));
    }
    return Ideal<K>(ring, tidy_generators(std::move(gens)));
}

/// Ideal of the j-th Q-center (side X) or P-center (side Y): the camera rows
/// as linear forms.
template <class K>
Ideal<K> center_ideal(const ProjectionSetup<K>& s, int view, Side side, RingPtr ring = nullptr) {
    if (!ring) ring = coordinate_ring(side == Side::X ? 'x' : 'y', s.k + 1);
    const Camera<K>& cam = (side == Side::X) ? s.Q[view] : s.P[view];
    return Ideal<K>(ring, tidy_generators(cam.linear_forms(ring)));
}

/// Expected dimension 2k - sum h_i; negative values signal that the locus is
/// expected to be empty away from the centers.
template <class K>
int expected_dimension(const ProjectionSetup<K>& s) {
    return 2 * s.k - s.sum_h();
}

inline long long binomial(int a, int b) {
    if (b < 0 || a < b) return 0;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

/// Expected degree C(n - k - 1 + sum h_i, n - 1), meaningful only when the
/// expected dimension is nonnegative.
template <class K>
long long expected_degree(const ProjectionSetup<K>& s) {
    if (expected_dimension(s) < 0)
        throw std::domain_error("expected_degree: expected dimension is negative");
    return binomial(s.n() - s.k - 1 + s.sum_h(), s.n() - 1);
}

} // namespace critloci
