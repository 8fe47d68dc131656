#pragma once

// The maps between the unified critical locus and the two single loci:
// fibres of the coordinate projections, conjugate points, image membership,
// center fibres, Jacobian ranks, nesting via ideal quotients, and round-trip
// verification.

#include <set>
#include <string>

#include "groebner.hpp"
#include "solve.hpp"

namespace critloci {

enum class Direction { Forward, Backward };

/// Numeric locus matrix M_X evaluated at a point (rows: P_j blocks, one
/// linear column per view holding Q_j x).
template <class K>
Mat<K> locus_matrix_at(const ProjectionSetup<K>& s, const std::vector<K>& x) {
    const int n = s.n();
    Mat<K> m(n + s.sum_h(), n + s.k + 1, K::zero());
    int r0 = 0;
    for (int j = 0; j < n; ++j) {
        std::vector<K> qx = mat_vec(s.Q[j].matrix(), x);
        for (int i = 0; i <= s.hs[j]; ++i) {
            for (int c = 0; c <= s.k; ++c) m.at(r0 + i, c) = s.P[j].matrix().at(i, c);
            m.at(r0 + i, s.k + 1 + j) = qx[i];
        }
        r0 += s.hs[j] + 1;
    }
    return m;
}

/// Membership in the critical locus: rank of M_X at the point drops below
/// the column count (loci with fewer rows than columns fill the whole space).
template <class K>
bool on_critical_locus(const ProjectionSetup<K>& s, const ProjectivePoint<K>& x) {
    Mat<K> m = locus_matrix_at(s, x.coords());
    if (m.rows() < m.cols()) return true;
    return rank_kernel(m).rank < m.cols();
}

template <class K>
struct FibreResult {
    enum class Kind { NotInLocus, Empty, Point, LinearSpace };
    Kind kind = Kind::Empty;
    std::optional<ProjectivePoint<K>> point;
    std::vector<std::vector<K>> space; // reduced basis in the target coordinates
    int case_r = -1;                   // views used: n off centers, fewer inside

    int space_projective_dim() const { return static_cast<int>(space.size()) - 1; }
    std::string describe() const {
        switch (kind) {
            case Kind::NotInLocus: return "NotInLocus";
            case Kind::Empty: return "Empty";
            case Kind::Point: return "Point " + point->str();
            case Kind::LinearSpace:
                return "LinearSpace dim " + std::to_string(space_projective_dim());
        }
        return "?";
    }
};

namespace detail {

/// Projects kernel vectors to the leading k+1 coordinates and row-reduces.
/// The projection must stay injective; a collapse would contradict the
/// solution-shape argument and is reported as an internal invariant failure.
template <class K>
std::vector<std::vector<K>> project_kernel(const std::vector<std::vector<K>>& kernel, int keep) {
    Mat<K> rows(static_cast<int>(kernel.size()), keep);
    for (size_t i = 0; i < kernel.size(); ++i)
        for (int j = 0; j < keep; ++j) rows.at(static_cast<int>(i), j) = kernel[i][j];
    std::vector<int> pivots = rref(rows);
    if (pivots.size() != kernel.size())
        throw std::logic_error("fibre kernel projected to a zero target vector");
    std::vector<std::vector<K>> out;
    for (size_t i = 0; i < pivots.size(); ++i) out.push_back(rows.row(static_cast<int>(i)));
    return out;
}

template <class K>
FibreResult<K> fibre_from_kernel(const std::vector<std::vector<K>>& kernel, int keep, int case_r) {
    FibreResult<K> res;
    res.case_r = case_r;
    if (kernel.empty()) {
        res.kind = FibreResult<K>::Kind::Empty;
        return res;
    }
    std::vector<std::vector<K>> proj = project_kernel(kernel, keep);
    if (proj.size() == 1) {
        res.kind = FibreResult<K>::Kind::Point;
        res.point = ProjectivePoint<K>(proj[0]);
    } else {
        res.kind = FibreResult<K>::Kind::LinearSpace;
        res.space = std::move(proj);
    }
    return res;
}

} // namespace detail

/// Views whose Q-center contains the point.
template <class K>
std::vector<int> centers_containing(const ProjectionSetup<K>& s, const ProjectivePoint<K>& x) {
    std::vector<int> out;
    for (int j = 0; j < s.n(); ++j)
        if (s.q_centers[j].contains(x)) out.push_back(j);
    return out;
}

/// Fibre of pi_1 over x projected into the conjugate space (Forward), or the
/// mirror computation with the roles of the camera tuples swapped (Backward).
/// Off the centers this solves M_X(x) v = 0 directly; inside centers the
/// restricted setup of the views avoiding x decides membership and supplies
/// the solution.
template <class K>
FibreResult<K> conjugate_point(const ProjectionSetup<K>& s, const ProjectivePoint<K>& x,
                               Direction dir = Direction::Forward) {
    if (dir == Direction::Backward) return conjugate_point(swapped(s), x, Direction::Forward);
    FibreResult<K> res;
    if (!on_critical_locus(s, x)) {
        res.kind = FibreResult<K>::Kind::NotInLocus;
        return res;
    }
    std::vector<int> tail = centers_containing(s, x);
    if (tail.empty()) {
        auto rk = rank_kernel(locus_matrix_at(s, x.coords()));
        return detail::fibre_from_kernel(rk.kernel, s.k + 1, s.n());
    }
    std::vector<int> rest;
    for (int j = 0; j < s.n(); ++j)
        if (!s.q_centers[j].contains(x)) rest.push_back(j);
    if (rest.empty()) {
        res.kind = FibreResult<K>::Kind::Empty; // no admissible renumbering
        return res;
    }
    ProjectionSetup<K> sub = sub_setup(s, rest);
    Mat<K> m = locus_matrix_at(sub, x.coords());
    auto rk = rank_kernel(m);
    if (m.rows() >= m.cols() && rk.rank == m.cols()) {
        res.kind = FibreResult<K>::Kind::Empty; // x misses the restricted locus
        return res;
    }
    return detail::fibre_from_kernel(rk.kernel, s.k + 1, static_cast<int>(rest.size()));
}

enum class MembershipTag { OffCenters, InCentersWithSubcriticality, Excluded };

template <class K>
struct MembershipResult {
    bool member = false;
    MembershipTag tag = MembershipTag::Excluded;
    int r = -1;

    std::string describe() const {
        switch (tag) {
            case MembershipTag::OffCenters: return "off-centers";
            case MembershipTag::InCentersWithSubcriticality:
                return "in-centers-with-subcriticality(r=" + std::to_string(r) + ")";
            case MembershipTag::Excluded: return "excluded";
        }
        return "?";
    }
};

/// Image characterization: x (already on the locus) lies in the image of the
/// unified locus iff it avoids all centers, or the views whose centers avoid
/// it form a setup whose critical locus still contains it.
template <class K>
MembershipResult<K> image_membership(const ProjectionSetup<K>& s, const ProjectivePoint<K>& x) {
    if (!on_critical_locus(s, x))
        throw std::domain_error("image_membership: point not on the critical locus");
    MembershipResult<K> out;
    std::vector<int> tail = centers_containing(s, x);
    if (tail.empty()) {
        out.member = true;
        out.tag = MembershipTag::OffCenters;
        out.r = s.n();
        return out;
    }
    std::vector<int> rest;
    for (int j = 0; j < s.n(); ++j)
        if (!s.q_centers[j].contains(x)) rest.push_back(j);
    if (rest.empty()) return out; // excluded
    ProjectionSetup<K> sub = sub_setup(s, rest);
    Mat<K> m = locus_matrix_at(sub, x.coords());
    bool inside = (m.rows() < m.cols()) || rank_kernel(m).rank < m.cols();
    if (inside) {
        out.member = true;
        out.tag = MembershipTag::InCentersWithSubcriticality;
        out.r = static_cast<int>(rest.size());
    }
    return out;
}

/// Two views only: the fibre over a point of a center is the linear space of
/// solutions of (P_o | Q_o(x)), projected to the conjugate coordinates.
template <class K>
FibreResult<K> center_fibre_two_views(const ProjectionSetup<K>& s, int center_index_1based,
                                      const ProjectivePoint<K>& x,
                                      Direction dir = Direction::Forward) {
    if (dir == Direction::Backward)
        return center_fibre_two_views(swapped(s), center_index_1based, x, Direction::Forward);
    if (s.n() != 2) throw std::invalid_argument("center_fibre_two_views: needs exactly 2 views");
    if (center_index_1based < 1 || center_index_1based > 2)
        throw std::invalid_argument("center_fibre_two_views: center index must be 1 or 2");
    const int c = center_index_1based - 1, o = 1 - c;
    if (!s.q_centers[c].contains(x))
        throw std::invalid_argument("center_fibre_two_views: point not in the named center");
    std::vector<K> qx = mat_vec(s.Q[o].matrix(), x.coords());
    Mat<K> m(s.hs[o] + 1, s.k + 2, K::zero());
    for (int i = 0; i <= s.hs[o]; ++i) {
        for (int j = 0; j <= s.k; ++j) m.at(i, j) = s.P[o].matrix().at(i, j);
        m.at(i, s.k + 1) = qx[i];
    }
    auto rk = rank_kernel(m);
    FibreResult<K> res = detail::fibre_from_kernel(rk.kernel, s.k + 1, 1);
    return res;
}

/// Cutting linear forms of a linear space given by spanning vectors.
template <class K>
std::vector<std::vector<K>> cutting_forms(const std::vector<std::vector<K>>& basis) {
    Mat<K> rows(static_cast<int>(basis.size()), static_cast<int>(basis[0].size()));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis[i].size(); ++j)
            rows.at(static_cast<int>(i), static_cast<int>(j)) = basis[i][j];
    return rank_kernel(rows).kernel;
}

/// Row-space equality of two spanning sets.
template <class K>
bool same_subspace(const std::vector<std::vector<K>>& a, const std::vector<std::vector<K>>& b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    auto reduce = [](const std::vector<std::vector<K>>& rows) {
        Mat<K> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
        rref(m);
        return m;
    };
    return reduce(a) == reduce(b);
}

// ---------------------------------------------------------------------------
// Center image map (three or more views)

template <class K>
struct CenterImageMap {
    RingPtr param_ring;          // t0..t_{m-1} parameterizing the center
    std::vector<Poly<K>> coords; // k+1 forms of degree n-1, gcd removed
    MinorIndex row_selection;
};

/// Restriction of the conjugate map to the center of view `view`: the center
/// is parameterized linearly, the remaining views' matrix is solved by
/// Cramer minors on a full-rank row selection, and the common factor of the
/// coordinate forms is removed.
template <class K>
CenterImageMap<K> center_image_map(const ProjectionSetup<K>& s, int view,
                                   std::uint64_t seed = 17) {
    if (s.n() < 3) throw std::invalid_argument("center_image_map: needs at least 3 views");
    if (view < 0 || view >= s.n()) throw std::invalid_argument("center_image_map: bad view");
    int other_h = s.sum_h() - s.hs[view];
    if (other_h < s.k)
        throw std::domain_error(
            "center_image_map: hypothesis failed: remaining views have sum h < k");

    std::vector<int> rest;
    for (int j = 0; j < s.n(); ++j)
        if (j != view) rest.push_back(j);
    ProjectionSetup<K> sub = sub_setup(s, rest);

    const auto& basis = s.q_centers[view].basis; // m spanning vectors
    const int m = static_cast<int>(basis.size());
    std::vector<std::string> pnames;
    for (int i = 0; i < m; ++i) pnames.push_back("t" + std::to_string(i));
    RingPtr param = make_ring(pnames);

    // matrix of the remaining views with the center parameterization plugged
    // into the linear columns
    const int rows = sub.n() + sub.sum_h();
    const int cols = sub.n() + s.k + 1;
    PolyMat<K> W(rows, cols, Poly<K>::zero(param));
    std::vector<std::pair<int, int>> blocks;
    int r0 = 0;
    for (int j = 0; j < sub.n(); ++j) {
        for (int i = 0; i <= sub.hs[j]; ++i) {
            for (int c = 0; c <= s.k; ++c) {
                const K& e = sub.P[j].matrix().at(i, c);
                if (!e.is_zero()) W.at(r0 + i, c) = Poly<K>::constant(param, e);
            }
            Poly<K> lin = Poly<K>::zero(param);
            for (int a = 0; a < m; ++a) {
                std::vector<K> qb = mat_vec(sub.Q[j].matrix(), basis[a]);
                if (!qb[i].is_zero()) lin += Poly<K>::term(param, Monomial::var(a), qb[i]);
            }
            W.at(r0 + i, s.k + 1 + j) = lin;
        }
        blocks.push_back({r0, r0 + sub.hs[j] + 1});
        r0 += sub.hs[j] + 1;
    }

    // hypothesis check at sampled parameter values: the system must have a
    // unique solution, i.e. rank k+n-1
    const int target_rank = s.k + s.n() - 1; // = cols - 1
    SeededRng rng(seed);
    for (int probe = 0; probe < 5; ++probe) {
        std::vector<K> theta(m);
        bool nonzero = false;
        for (int a = 0; a < m; ++a) {
            long v = rng.int_in(-9, 9);
            theta[a] = K(v);
            if (v) nonzero = true;
        }
        if (!nonzero) { --probe; continue; }
        if (rank_kernel(evaluate_at(W, theta)).rank != target_rank)
            throw std::domain_error(
                "center_image_map: hypothesis failed: sampled rank is not k+n-1");
    }

    // first full-rank row selection using at least one row per view
    for (const auto& sel : combinations(rows, target_rank)) {
        bool covers = true;
        for (const auto& [b, e] : blocks) {
            bool hit = false;
            for (int r : sel)
                if (r >= b && r < e) { hit = true; break; }
            if (!hit) { covers = false; break; }
        }
        if (!covers) continue;
        std::vector<Poly<K>> v(cols, Poly<K>::zero(param));
        bool nonzero = false;
        for (int c = 0; c < cols; ++c) {
            std::vector<int> keep_cols;
            for (int j = 0; j < cols; ++j)
                if (j != c) keep_cols.push_back(j);
            Poly<K> d = det_poly(W.submatrix(sel, keep_cols));
            if (c % 2 == 1) d = -d;
            if (!d.is_zero()) nonzero = true;
            v[c] = std::move(d);
        }
        if (!nonzero) continue;
        // the Cramer vector must annihilate every row, not just the selected
        // ones; failure means the center leaves the smaller critical locus
        for (int r = 0; r < rows; ++r) {
            Poly<K> dot = Poly<K>::zero(param);
            for (int c = 0; c < cols; ++c) dot += W.at(r, c) * v[c];
            if (!dot.is_zero())
                throw std::domain_error(
                    "center_image_map: hypothesis failed: center not inside the smaller locus");
        }
        CenterImageMap<K> out;
        out.param_ring = param;
        out.row_selection = sel;
        std::vector<Poly<K>> coords(v.begin(), v.begin() + s.k + 1);
        Poly<K> g = Poly<K>::zero(param);
        for (const auto& f : coords) g = poly_gcd(g, f);
        if (g.is_zero()) throw std::logic_error("center_image_map: zero conjugate coordinates");
        if (!g.is_constant())
            for (auto& f : coords) f = f.is_zero() ? f : exact_divide(f, g);
        out.coords = std::move(coords);
        return out;
    }
    throw std::domain_error("center_image_map: hypothesis failed: no full-rank row selection");
}

// ---------------------------------------------------------------------------
// Tangent spaces

template <class K>
struct TangentReport {
    ProjectivePoint<K> point;
    int jacobian_rank = 0;
    int tangent_dim = 0; // projective: ambient k minus rank
    std::optional<int> rank_sub;            // rank of the matrix of the first n-1 views
    std::optional<int> rank_without_last;   // rank of M_X without its last column
};

/// Rank of the generator gradients at a point of the locus.
template <class K>
TangentReport<K> jacobian_rank(const Ideal<K>& ideal, const ProjectivePoint<K>& x) {
    const int nv = ideal.ring->nvars();
    for (const auto& g : ideal.gens)
        if (!g.evaluate(x.coords()).is_zero())
            throw std::domain_error("jacobian_rank: point not on the locus");
    Mat<K> jac(static_cast<int>(ideal.gens.size()), nv, K::zero());
    for (size_t i = 0; i < ideal.gens.size(); ++i)
        for (int j = 0; j < nv; ++j)
            jac.at(static_cast<int>(i), j) = ideal.gens[i].partial_derivative(j).evaluate(x.coords());
    TangentReport<K> rep{x, 0, 0, {}, {}};
    rep.jacobian_rank = rank_kernel(jac).rank;
    rep.tangent_dim = (nv - 1) - rep.jacobian_rank;
    return rep;
}

/// Tangent report against the critical ideal of a setup, with the rank flags
/// of the leading sub-setup and of the matrix without its last column.
template <class K>
TangentReport<K> critical_tangent_report(const ProjectionSetup<K>& s,
                                         const ProjectivePoint<K>& x) {
    TangentReport<K> rep = jacobian_rank(critical_ideal(s, Side::X), x);
    if (s.n() >= 2) {
        std::vector<int> lead(s.n() - 1);
        for (int i = 0; i + 1 < s.n(); ++i) lead[i] = i;
        rep.rank_sub = rank_kernel(locus_matrix_at(sub_setup(s, lead), x.coords())).rank;
        Mat<K> full = locus_matrix_at(s, x.coords());
        std::vector<int> all_rows(full.rows());
        for (int i = 0; i < full.rows(); ++i) all_rows[i] = i;
        std::vector<int> cols(full.cols() - 1);
        for (int j = 0; j + 1 < full.cols(); ++j) cols[j] = j;
        rep.rank_without_last = rank_kernel(full.submatrix(all_rows, cols)).rank;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Nesting

template <class K>
struct NestingReport {
    std::vector<int> subset; // 0-based view indices
    bool verdict = false;
    std::vector<Poly<K>> normal_forms; // one per generator of the smaller ideal
};

/// Checks that I of the restricted locus lies in the quotient of the full
/// ideal by the product of the complementary center ideals, by
/// normal forms against the quotient's basis.
template <class K>
NestingReport<K> nesting_check(const ProjectionSetup<K>& s, const std::vector<int>& subset,
                               BuchbergerOptions opts = {}) {
    NestingReport<K> rep;
    rep.subset = subset;
    Ideal<K> big = critical_ideal(s, Side::X);
    Ideal<K> small = critical_ideal(sub_setup(s, subset), Side::X);
    small = Ideal<K>(big.ring, small.gens); // same variable names by construction
    std::vector<int> complement;
    for (int j = 0; j < s.n(); ++j)
        if (std::find(subset.begin(), subset.end(), j) == subset.end()) complement.push_back(j);
    Ideal<K> divisor(big.ring, {Poly<K>::constant(big.ring, K::one())});
    for (int j : complement) divisor = ideal_product(divisor, center_ideal(s, j, Side::X));
    Ideal<K> quot = ideal_quotient(big, divisor, opts);
    const GroebnerBasis<K>& gb = groebner_of(quot, opts);
    rep.verdict = true;
    for (const auto& g : small.gens) {
        Poly<K> nf = normal_form(g, gb);
        if (!nf.is_zero()) rep.verdict = false;
        rep.normal_forms.push_back(std::move(nf));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Round trips

template <class K>
struct RoundtripEntry {
    ProjectivePoint<K> input;
    bool applicable = false;
    std::string flag;  // reason when not applicable
    bool success = false;
    std::optional<ProjectivePoint<K>> image;
};

template <class K>
struct RoundtripReport {
    std::vector<RoundtripEntry<K>> entries;
    int successes = 0;
    int distinct_images = 0;
    bool all_applicable_succeeded = true;
};

/// For each point: forward to the conjugate point, back again, and compare.
/// Points off the locus, inside a center, or with a rank drop are flagged
/// rather than failed.
template <class K>
RoundtripReport<K> roundtrip_check(const ProjectionSetup<K>& s,
                                   const std::vector<ProjectivePoint<K>>& points) {
    RoundtripReport<K> rep;
    std::set<std::string> images;
    for (const auto& x : points) {
        RoundtripEntry<K> e{x, false, {}, false, {}};
        if (!on_critical_locus(s, x)) {
            e.flag = "not on locus";
        } else if (!centers_containing(s, x).empty()) {
            e.flag = "inside a projection center";
        } else {
            Mat<K> m = locus_matrix_at(s, x.coords());
            if (rank_kernel(m).rank != m.cols() - 1) {
                e.flag = "rank drop: fibre not a single point";
            } else {
                e.applicable = true;
                FibreResult<K> fwd = conjugate_point(s, x, Direction::Forward);
                if (fwd.kind == FibreResult<K>::Kind::Point) {
                    e.image = fwd.point;
                    FibreResult<K> back = conjugate_point(s, *fwd.point, Direction::Backward);
                    e.success = back.kind == FibreResult<K>::Kind::Point && *back.point == x;
                }
                if (e.success) {
                    ++rep.successes;
                    images.insert(fwd.point->str());
                } else {
                    rep.all_applicable_succeeded = false;
                }
            }
        }
        rep.entries.push_back(std::move(e));
    }
    rep.distinct_images = static_cast<int>(images.size());
    return rep;
}

} // namespace critloci
