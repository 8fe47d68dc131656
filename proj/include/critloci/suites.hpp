#pragma once

// Self-contained verification suites run by the CLI `verify` subcommand. The
// golden data of the two bundled configurations, the formula spot checks and
// the randomized property checks all live here, independent of any input
// files.

#include <functional>
#include <sstream>

#include "bundled.hpp"
#include "geometry.hpp"
#include "io.hpp"

namespace critloci::suites {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail; // expected vs got on failure, notes on pass
};

inline CheckResult check(const std::string& name, bool pass, const std::string& detail = "") {
    return CheckResult{name, pass, false, detail};
}

namespace detail {

template <class K>
std::string expect_got(const K& expected, const K& got) {
    std::ostringstream os;
    os << "expected " << expected << ", got " << got;
    return os.str();
}
inline std::string expect_got(long long expected, long long got) {
    return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
}

/// Cofactor-expansion determinant, the independent oracle for bareiss_det.
template <class K>
K laplace_det(const Mat<K>& m) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    K acc = K::zero();
    for (int i = 0; i < n; ++i) {
        if (m.at(i, 0).is_zero()) continue;
        std::vector<int> rows;
        for (int r = 0; r < n; ++r)
            if (r != i) rows.push_back(r);
        std::vector<int> cols;
        for (int c = 1; c < n; ++c) cols.push_back(c);
        K term = m.at(i, 0) * laplace_det(m.submatrix(rows, cols));
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Random homogeneous polynomial with small integer coefficients.
template <class K>
Poly<K> random_homogeneous(const RingPtr& ring, int degree, SeededRng& rng) {
    std::vector<typename Poly<K>::Term> terms;
    const int nv = ring->nvars();
    std::function<void(Monomial, int, int)> emit = [&](Monomial m, int var, int left) {
        if (var == nv - 1) {
            m.e[var] = static_cast<std::uint8_t>(left);
            m.deg = degree;
            long c = rng.int_in(-5, 5);
            if (c) terms.push_back({m, K(c)});
            return;
        }
        for (int e = 0; e <= left; ++e) {
            Monomial next = m;
            next.e[var] = static_cast<std::uint8_t>(e);
            emit(next, var + 1, left - e);
        }
    };
    emit(Monomial{}, 0, degree);
    return Poly<K>(ring, std::move(terms));
}

template <class K>
Camera<K> random_camera(int h, int k, SeededRng& rng) {
    while (true) {
        std::vector<std::vector<K>> rows(h + 1, std::vector<K>(k + 1));
        for (auto& row : rows)
            for (auto& e : row) e = K(rng.int_in(-9, 9));
        try {
            return Camera<K>::make(Mat<K>::from_rows(rows));
        } catch (const std::invalid_argument&) {
            // degenerate draw, try again
        }
    }
}

template <class K>
ProjectionSetup<K> random_setup(int k, const std::vector<int>& hs, SeededRng& rng) {
    while (true) {
        std::vector<Camera<K>> Q, P;
        for (int h : hs) {
            Q.push_back(random_camera<K>(h, k, rng));
            P.push_back(random_camera<K>(h, k, rng));
        }
        ProjectionSetup<K> s = make_setup(std::move(Q), std::move(P));
        if (centers_pairwise_disjoint(s)) return s;
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// Suite: the two-view configuration ("paper-ex-5.1")

template <class K = Rational>
std::vector<CheckResult> suite_two_view() {
    std::vector<CheckResult> out;
    auto s = bundled::two_view_setup<K>();
    auto pt = [](const std::vector<long>& v) { return ProjectivePoint<K>::from_ints(v); };

    Ideal<K> ix = critical_ideal(s, Side::X);
    Ideal<K> iy = critical_ideal(s, Side::Y);
    Poly<K> gx = Poly<K>::parse(ix.ring, bundled::kXQuadric);
    Poly<K> gy = Poly<K>::parse(iy.ring, bundled::kYQuadric);
    out.push_back(check("x-quadric matches printed form (up to scalar)",
                        ix.gens.size() == 1 && ix.gens[0].proportional_to(gx)));
    out.push_back(check("y-quadric matches printed form (up to scalar)",
                        iy.gens.size() == 1 && iy.gens[0].proportional_to(gy)));

    auto cq1 = pt(bundled::kCenterQ1), cq2 = pt(bundled::kCenterQ2);
    auto cp1 = pt(bundled::kCenterP1), cp2 = pt(bundled::kCenterP2);
    out.push_back(check("centers of Q on the x-quadric",
                        gx.evaluate(cq1.coords()).is_zero() &&
                            gx.evaluate(cq2.coords()).is_zero()));
    out.push_back(check("centers of P on the y-quadric",
                        gy.evaluate(cp1.coords()).is_zero() &&
                            gy.evaluate(cp2.coords()).is_zero()));
    out.push_back(check("computed centers match the printed ones",
                        ProjectivePoint<K>(s.q_centers[0].basis[0]) == cq1 &&
                            ProjectivePoint<K>(s.q_centers[1].basis[0]) == cq2 &&
                            ProjectivePoint<K>(s.p_centers[0].basis[0]) == cp1 &&
                            ProjectivePoint<K>(s.p_centers[1].basis[0]) == cp2));

    // fibre lines over the four centers
    auto check_line = [&](const char* name, int center, Direction dir,
                          const ProjectivePoint<K>& at, const std::vector<const char*>& forms,
                          const ProjectivePoint<K>& incident) {
        FibreResult<K> f = center_fibre_two_views(s, center, at, dir);
        bool ok = f.kind == FibreResult<K>::Kind::LinearSpace && f.space_projective_dim() == 1;
        RingPtr ring = (dir == Direction::Forward) ? iy.ring : ix.ring;
        for (const auto* text : forms) {
            Poly<K> form = Poly<K>::parse(ring, text);
            for (const auto& v : f.space)
                if (!form.evaluate(v).is_zero()) ok = false;
        }
        Center<K> as_center{f.space, cutting_forms(f.space)};
        bool inc = as_center.contains(incident);
        out.push_back(check(std::string(name) + " is the printed line of dimension k-h", ok));
        out.push_back(check(std::string(name) + " contains the conjugate center", inc));
    };
    check_line("r1 = fibre over C_Q1", 1, Direction::Forward, cq1, bundled::kLineR1, cp2);
    check_line("r2 = fibre over C_Q2", 2, Direction::Forward, cq2, bundled::kLineR2, cp1);
    check_line("s1 = fibre over C_P1", 1, Direction::Backward, cp1, bundled::kLineS1, cq2);
    check_line("s2 = fibre over C_P2", 2, Direction::Backward, cp2, bundled::kLineS2, cq1);

    // generic fibres are single points, both directions
    auto keep_off_centers = [&](const ProjectivePoint<K>& p) {
        return centers_containing(s, p).empty();
    };
    auto xs = sample_points_on_quadric<K>(ix.gens[0], cq1, 10, 7, keep_off_centers);
    bool all_points = xs.size() == 10;
    for (const auto& x : xs) {
        FibreResult<K> f = conjugate_point(s, x);
        if (f.kind != FibreResult<K>::Kind::Point) all_points = false;
    }
    out.push_back(check("fibres over 10 generic quadric points are single points", all_points));
    auto sw = swapped(s);
    auto keep_off_p = [&](const ProjectivePoint<K>& p) {
        return centers_containing(sw, p).empty();
    };
    auto ys = sample_points_on_quadric<K>(iy.gens[0], cp1, 10, 8, keep_off_p);
    all_points = ys.size() == 10;
    for (const auto& y : ys) {
        FibreResult<K> f = conjugate_point(s, y, Direction::Backward);
        if (f.kind != FibreResult<K>::Kind::Point) all_points = false;
    }
    out.push_back(check("backward fibres over 10 generic points are single points", all_points));

    // unified ideal shape
    Ideal<K> u = unified_ideal(s);
    int quadrics = 0, bilinear = 0;
    for (const auto& g : u.gens) {
        auto info = g.degree_info();
        if (info.bidegree == std::make_pair(2, 0) || info.bidegree == std::make_pair(0, 2))
            ++quadrics;
        else if (info.bidegree == std::make_pair(1, 1))
            ++bilinear;
    }
    out.push_back(check("unified ideal: 2 quadrics + 6 bilinear forms",
                        u.gens.size() == 8 && quadrics == 2 && bilinear == 6,
                        "got " + std::to_string(quadrics) + "+" + std::to_string(bilinear)));
    return out;
}

// ---------------------------------------------------------------------------
// Suite: the three-view configuration ("paper-ex-5.2")

template <class K = Rational>
std::vector<CheckResult> suite_three_view() {
    std::vector<CheckResult> out;
    auto s = bundled::three_view_setup<K>();
    auto pt = [](const std::vector<long>& v) { return ProjectivePoint<K>::from_ints(v); };
    auto A = pt(bundled::kPointA), B = pt(bundled::kPointB);
    auto C = pt(bundled::kPointC), D = pt(bundled::kPointD);
    auto cq1 = pt(bundled::kCenterQ1), cq2 = pt(bundled::kCenterQ2);
    auto cp1 = pt(bundled::kCenterP1), cp2 = pt(bundled::kCenterP2);

    Ideal<K> ix = critical_ideal(s, Side::X);
    Ideal<K> iy = critical_ideal(s, Side::Y);
    out.push_back(check("dim/deg of the x-side sextic locus = (1, 6)",
                        dimension(ix) == std::optional<int>(1) && degree(ix) == 6));
    out.push_back(check("dim/deg of the y-side sextic locus = (1, 6)",
                        dimension(iy) == std::optional<int>(1) && degree(iy) == 6));

    // center membership, generator-wise; the third center is a whole line
    bool centers_ok = true;
    for (const auto& g : ix.gens) {
        if (!g.evaluate(cq1.coords()).is_zero()) centers_ok = false;
        if (!g.evaluate(cq2.coords()).is_zero()) centers_ok = false;
    }
    {
        static const RingPtr param = make_ring({"s@", "u@"});
        std::vector<Poly<K>> images;
        for (size_t i = 0; i < 4; ++i) {
            Poly<K> f = Poly<K>::zero(param);
            const auto& b = s.q_centers[2].basis;
            if (!b[0][i].is_zero()) f += Poly<K>::term(param, Monomial::var(0), b[0][i]);
            if (!b[1][i].is_zero()) f += Poly<K>::term(param, Monomial::var(1), b[1][i]);
            images.push_back(std::move(f));
        }
        for (const auto& g : ix.gens)
            if (!g.substitute(images).is_zero()) centers_ok = false;
    }
    out.push_back(check("all Q-centers satisfy the x-side ideal generator-wise", centers_ok));

    // residual curves: saturation equals the printed determinantal ideals
    Ideal<K> lq3 = center_ideal(s, 2, Side::X);
    Ideal<K> lp3 = center_ideal(s, 2, Side::Y);
    Ideal<K> sat_x = saturation(ix, lq3);
    Ideal<K> sat_y = saturation(iy, lp3);
    out.push_back(check("residual x-curve has dim/deg (1, 5)",
                        dimension(sat_x) == std::optional<int>(1) && degree(sat_x) == 5));
    out.push_back(check("residual y-curve has dim/deg (1, 5)",
                        dimension(sat_y) == std::optional<int>(1) && degree(sat_y) == 5));
    {
        auto nx = bundled::parse_matrix<K>(ix.ring, bundled::kResidualMatrixX);
        std::vector<Poly<K>> mg;
        for (auto& [i, m] : maximal_minors(nx)) mg.push_back(std::move(m));
        Ideal<K> nxi(ix.ring, tidy_generators(std::move(mg)));
        out.push_back(check("x-saturation equals the printed residual matrix minors",
                            ideal_equal(sat_x, nxi)));
        auto ny = bundled::parse_matrix<K>(iy.ring, bundled::kResidualMatrixY);
        std::vector<Poly<K>> mgy;
        for (auto& [i, m] : maximal_minors(ny)) mgy.push_back(std::move(m));
        Ideal<K> nyi(iy.ring, tidy_generators(std::move(mgy)));
        out.push_back(check("y-saturation equals the printed residual matrix minors",
                            ideal_equal(sat_y, nyi)));
    }

    // intersections with the line centers
    {
        auto li = intersect_with_center_line(sat_x, s.q_centers[2]);
        bool ok = li.points.size() == 2 && li.unresolved_degree == 0;
        if (ok) {
            bool hasA = li.points[0].first == A || li.points[1].first == A;
            bool hasB = li.points[0].first == B || li.points[1].first == B;
            ok = hasA && hasB;
        }
        out.push_back(check("residual x-curve meets its line center exactly in {A, B}", ok));
        auto li2 = intersect_with_center_line(sat_y, s.p_centers[2]);
        bool ok2 = li2.points.size() == 2 && li2.unresolved_degree == 0;
        if (ok2) {
            bool hasC = li2.points[0].first == C || li2.points[1].first == C;
            bool hasD = li2.points[0].first == D || li2.points[1].first == D;
            ok2 = hasC && hasD;
        }
        out.push_back(check("residual y-curve meets its line center exactly in {C, D}", ok2));
        // the two-view quadric also meets the line center exactly in {A, B}
        Ideal<K> ix2 = critical_ideal(sub_setup(s, {0, 1}), Side::X);
        auto li3 = intersect_with_center_line(ix2, s.q_centers[2]);
        bool ok3 = li3.points.size() == 2 && li3.unresolved_degree == 0;
        out.push_back(check("two-view quadric meets the line center in two points", ok3));
    }

    // fibre facts
    auto expect_point = [&](const char* name, const ProjectivePoint<K>& x,
                            const ProjectivePoint<K>& img, Direction dir = Direction::Forward) {
        FibreResult<K> f = conjugate_point(s, x, dir);
        bool ok = f.kind == FibreResult<K>::Kind::Point && *f.point == img;
        out.push_back(check(name, ok, ok ? "" : f.describe()));
    };
    expect_point("fibre over A is (1:1:1:-2)", A, pt(bundled::kImageOfA));
    expect_point("fibre over B is the first P-center", B, cp1);
    expect_point("fibre over C_Q1 is D", cq1, D);
    expect_point("fibre over C_Q2 is C", cq2, C);
    expect_point("fibre over (2:0:-1:-2) is the second P-center",
                 pt(bundled::kPlainCurvePoint), cp2);
    expect_point("backward fibre over (1:1:1:-2) is A", pt(bundled::kImageOfA), A,
                 Direction::Backward);
    expect_point("backward fibre over the first P-center is B", cp1, B, Direction::Backward);
    expect_point("backward fibre over D is C_Q1", D, cq1, Direction::Backward);
    expect_point("backward fibre over C is C_Q2", C, cq2, Direction::Backward);
    expect_point("backward fibre over the second P-center is (2:0:-1:-2)", cp2,
                 pt(bundled::kPlainCurvePoint), Direction::Backward);
    {
        bool empty_ok = true;
        for (const auto& v : {std::vector<long>{1, 0, 2, 0}, std::vector<long>{0, 0, 1, 0},
                              std::vector<long>{1, 0, -1, 0}}) {
            FibreResult<K> f = conjugate_point(s, pt(v));
            if (f.kind != FibreResult<K>::Kind::Empty) empty_ok = false;
        }
        out.push_back(check("line-center points away from A, B have empty fibres", empty_ok));
        bool member_tags = image_membership(s, B).tag ==
                               MembershipTag::InCentersWithSubcriticality &&
                           image_membership(s, B).r == 2 &&
                           !image_membership(s, pt({1, 0, 2, 0})).member;
        out.push_back(check("image membership tags on the line center", member_tags));
    }

    // singular point: full rank of the locus matrix, rank-deficient Jacobian
    {
        Mat<K> mA = locus_matrix_at(s, A.coords());
        TangentReport<K> tr = critical_tangent_report(s, A);
        out.push_back(check("locus matrix at A has rank k+n = 6 while A is singular",
                            rank_kernel(mA).rank == 6 && tr.tangent_dim > 1));
    }

    // nesting
    out.push_back(check("two-view ideal nests into the quotient by the line center",
                        nesting_check(s, {0, 1}).verdict));

    // unified locus: dimension and the degree interpretations
    {
        Ideal<K> u = unified_ideal(s);
        out.push_back(check("unified ideal is bihomogeneous dimension 1",
                            dimension(u) == std::optional<int>(1)));
        SeededRng rng(401);
        std::vector<Poly<K>> sx = {random_linear_form<K>(u.ring, 0, 4, rng)};
        std::vector<Poly<K>> sy = {random_linear_form<K>(u.ring, 4, 8, rng)};
        std::vector<Poly<K>> sb = {random_bilinear_form<K>(u.ring, rng)};
        long long cx = affine_slice_count(u, sx, 402);
        long long cy = affine_slice_count(u, sy, 403);
        long long cb = affine_slice_count(u, sb, 404);
        out.push_back(check(
            "unified curve degree 5 (factorwise slice; Segre slice is the sum)",
            cx == 5 && cy == 5 && cb == cx + cy,
            "x-slice " + std::to_string(cx) + ", y-slice " + std::to_string(cy) +
                ", (1,1)-slice " + std::to_string(cb) +
                " [degree = factorwise hyperplane count; both projections are"
                " degree-5 isomorphisms, so the Segre count doubles it]"));
    }

    // round trips on the residual curve: the one plain rational point, and a
    // sample over GF(32003) where curve points are plentiful
    {
        auto rt = roundtrip_check(s, {pt(bundled::kPlainCurvePoint)});
        out.push_back(check("round trip at (2:0:-1:-2)",
                            rt.successes == 1 && rt.all_applicable_succeeded));
        using F = PrimeField;
        auto sp = bundled::three_view_setup<F>();
        Ideal<F> ixp = critical_ideal(sp, Side::X);
        Ideal<F> satp = saturation(ixp, center_ideal(sp, 2, Side::X));
        Ideal<F> quad = critical_ideal(sub_setup(sp, {0, 1}), Side::X);
        auto basep = ProjectivePoint<F>::from_ints(bundled::kCenterQ1);
        auto keep = [&](const ProjectivePoint<F>& p) {
            for (const auto& g : satp.gens)
                if (!g.evaluate(p.coords()).is_zero()) return false;
            if (!centers_containing(sp, p).empty()) return false;
            Mat<F> m = locus_matrix_at(sp, p.coords());
            return rank_kernel(m).rank == m.cols() - 1;
        };
        auto curve_pts = sample_points_on_quadric<F>(quad.gens[0], basep, 10, 11, keep);
        auto rtp = roundtrip_check(sp, curve_pts);
        out.push_back(check("10 GF(32003) round trips on the residual curve, distinct images",
                            curve_pts.size() == 10 && rtp.successes == 10 &&
                                rtp.distinct_images == 10,
                            "sampled " + std::to_string(curve_pts.size()) + ", ok " +
                                std::to_string(rtp.successes)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: formula spot checks

template <class K = Rational>
std::vector<CheckResult> suite_formulas() {
    std::vector<CheckResult> out;
    auto two = bundled::two_view_setup<K>();
    auto three = bundled::three_view_setup<K>();
    out.push_back(check("expected (dim, deg) for k=3, h=(2,2) is (2, 2)",
                        expected_dimension(two) == 2 && expected_degree(two) == 2));
    out.push_back(check("expected (dim, deg) for k=3, h=(2,2,1) is (1, 6)",
                        expected_dimension(three) == 1 && expected_degree(three) == 6));
    {
        SeededRng rng(5);
        auto s = detail::random_setup<K>(4, {2, 2, 2}, rng);
        out.push_back(check("expected (dim, deg) for k=4, h=(2,2,2) is (2, 6)",
                            expected_dimension(s) == 2 && expected_degree(s) == 6));
    }
    {
        bool threw = false;
        SeededRng rng(6);
        auto s = detail::random_setup<K>(2, {1, 1, 1, 1, 1}, rng); // expected dim 4-5 < 0
        try {
            expected_degree(s);
        } catch (const std::domain_error&) {
            threw = true;
        }
        out.push_back(check("negative expected dimension rejects the degree formula", threw));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite: randomized property checks

template <class K = Rational>
std::vector<CheckResult> suite_properties(std::uint64_t seed = 1) {
    std::vector<CheckResult> out;
    SeededRng rng(seed);

    // Buchberger self-check on every bundled ideal
    {
        auto s2 = bundled::two_view_setup<K>();
        auto s3 = bundled::three_view_setup<K>();
        std::vector<std::pair<std::string, Ideal<K>>> ideals;
        ideals.push_back({"two-view x", critical_ideal(s2, Side::X)});
        ideals.push_back({"two-view y", critical_ideal(s2, Side::Y)});
        ideals.push_back({"two-view unified", unified_ideal(s2)});
        ideals.push_back({"three-view x", critical_ideal(s3, Side::X)});
        ideals.push_back({"three-view y", critical_ideal(s3, Side::Y)});
        ideals.push_back({"three-view unified", unified_ideal(s3)});
        ideals.push_back(
            {"residual x", saturation(critical_ideal(s3, Side::X), center_ideal(s3, 2, Side::X))});
        bool all_ok = true;
        std::string bad;
        for (auto& [name, ideal] : ideals) {
            const GroebnerBasis<K>& gb = groebner_of(ideal);
            for (size_t i = 0; i < gb.gens.size() && all_ok; ++i)
                for (size_t j = i + 1; j < gb.gens.size(); ++j) {
                    Poly<K> s = s_polynomial(gb.gens[i], gb.gens[j]);
                    if (!normal_form(s, gb).is_zero()) {
                        all_ok = false;
                        bad = name;
                        break;
                    }
                }
            for (const auto& g : ideal.gens)
                if (!normal_form(g, gb).is_zero()) { all_ok = false; bad = name; }
        }
        out.push_back(check("all S-pairs of every bundled basis reduce to zero", all_ok, bad));
    }

    // Euler identity on random homogeneous polynomials
    {
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int nv = 2 + static_cast<int>(rng.next() % 3);
            int deg = 1 + static_cast<int>(rng.next() % 4);
            RingPtr ring = coordinate_ring('x', nv);
            Poly<K> f = detail::random_homogeneous<K>(ring, deg, rng);
            if (f.is_zero()) continue;
            Poly<K> lhs = Poly<K>::zero(ring);
            for (int i = 0; i < nv; ++i)
                lhs += Poly<K>::variable(ring, i) * f.partial_derivative(i);
            if (lhs != f.scaled(K(deg))) ok = false;
        }
        out.push_back(check("Euler identity on 100 random homogeneous polynomials", ok));
    }

    // rank-nullity and kernel exactness on random matrices
    {
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int r = 1 + static_cast<int>(rng.next() % 5);
            int c = 1 + static_cast<int>(rng.next() % 5);
            Mat<K> m(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = K(rng.int_in(-5, 5));
            auto rk = rank_kernel(m);
            if (rk.rank + static_cast<int>(rk.kernel.size()) != c) ok = false;
            for (const auto& v : rk.kernel)
                for (const auto& e : mat_vec(m, v))
                    if (!e.is_zero()) ok = false;
        }
        out.push_back(check("rank-nullity and exact kernels on 100 random matrices", ok));
    }

    // Bareiss determinant against the cofactor oracle
    {
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            Mat<K> m(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) m.at(i, j) = K(rng.int_in(-5, 5));
            if (bareiss_det(m) != detail::laplace_det(m)) ok = false;
        }
        out.push_back(check("Bareiss determinant equals the cofactor oracle on 100 matrices", ok));
    }

    // quotient law: f*g back inside the ideal
    {
        auto s3 = bundled::three_view_setup<K>();
        Ideal<K> ix = critical_ideal(s3, Side::X);
        Ideal<K> lq3 = center_ideal(s3, 2, Side::X);
        Ideal<K> quot = ideal_quotient(ix, lq3);
        const GroebnerBasis<K>& gb = groebner_of(ix);
        bool ok = !quot.gens.empty();
        for (const auto& f : quot.gens)
            for (const auto& g : lq3.gens)
                if (!normal_form(f * g, gb).is_zero()) ok = false;
        out.push_back(check("quotient law: quotient times divisor lands in the ideal", ok));
    }

    // seeded GF(p) nesting on random setups
    {
        bool ok = true;
        SeededRng prng(seed + 1000);
        for (int trial = 0; trial < 5 && ok; ++trial) {
            auto s = detail::random_setup<PrimeField>(3, {2, 2, 1}, prng);
            if (!nesting_check(s, {0, 1}).verdict) ok = false;
        }
        out.push_back(check("nesting verdict on 5 random GF(32003) setups with h=(2,2,1)", ok));
    }

    // conjugate map restricted to a line center: degree n-1 forms that match
    // the pointwise kernel solve (three views of P^4)
    {
        SeededRng crng(seed + 2000);
        auto s = detail::random_setup<K>(4, {2, 2, 2}, crng);
        CheckResult res = check("center image map: degree-2 forms matching the kernel solve", false);
        try {
            CenterImageMap<K> map = center_image_map(s, 2, seed + 3000);
            bool ok = map.coords.size() == 5;
            int deg = -1;
            for (const auto& f : map.coords) {
                if (f.is_zero()) continue;
                auto info = f.degree_info();
                if (!info.homogeneous) ok = false;
                deg = std::max(deg, info.total_degree.value());
            }
            if (deg != s.n() - 1) ok = false;
            // cross-check at 5 parameter points
            SeededRng prng(seed + 4000);
            const auto& basis = s.q_centers[2].basis;
            for (int probe = 0; probe < 5 && ok; ++probe) {
                std::vector<K> theta = {K(prng.int_in(-9, 9)), K(prng.int_in(-9, 9))};
                if (theta[0].is_zero() && theta[1].is_zero()) { --probe; continue; }
                std::vector<K> xc(5, K::zero());
                for (int i = 0; i < 5; ++i)
                    xc[i] = theta[0] * basis[0][i] + theta[1] * basis[1][i];
                std::vector<K> img(5);
                bool img_zero = true;
                for (int i = 0; i < 5; ++i) {
                    img[i] = map.coords[i].evaluate(theta);
                    if (!img[i].is_zero()) img_zero = false;
                }
                if (img_zero) { ok = false; break; }
                FibreResult<K> f = conjugate_point(s, ProjectivePoint<K>(xc));
                if (f.kind != FibreResult<K>::Kind::Point ||
                    !(*f.point == ProjectivePoint<K>(img)))
                    ok = false;
            }
            // the image of the line is a conic: the coordinate forms span a
            // 3-dimensional space of binary quadrics
            {
                Mat<K> coeffs(5, 3, K::zero());
                for (int i = 0; i < 5; ++i)
                    for (const auto& [m, c] : map.coords[i].terms())
                        coeffs.at(i, m.e[1]) = c; // exponent of t1 indexes t0^2, t0t1, t1^2
                if (rank_kernel(coeffs).rank != 3) ok = false;
            }
            res = check("center image map: degree-2 forms matching the kernel solve", ok);
        } catch (const std::domain_error& e) {
            res.detail = e.what();
        }
        out.push_back(res);
    }

    // tangent dimension at qualifying center points (skipped when the seeded
    // search finds no point satisfying the rank flags)
    {
        auto s3 = bundled::three_view_setup<K>();
        Ideal<K> ix2 = critical_ideal(sub_setup(s3, {0, 1}), Side::X);
        auto li = intersect_with_center_line(ix2, s3.q_centers[2]);
        CheckResult res = check("tangent dimension k - h_n at rank-flagged center points", true);
        bool found = false;
        for (const auto& [p, mult] : li.points) {
            TangentReport<K> tr = critical_tangent_report(s3, p);
            const int k = s3.k, n = s3.n();
            if (tr.rank_sub == k + n - 1 && tr.rank_without_last == k + n) {
                found = true;
                if (tr.tangent_dim != k - s3.hs[n - 1]) res.pass = false;
            }
        }
        if (!found) {
            res.skipped = true;
            res.detail = "no qualifying point found in the search budget";
        }
        out.push_back(res);
    }

    // two-view center fibre union stays inside the predicted linear span
    {
        auto s2 = bundled::two_view_setup<K>();
        std::vector<std::vector<K>> stacked;
        const auto& basis = s2.q_centers[0].basis;
        for (const auto& b : basis) {
            FibreResult<K> f = center_fibre_two_views(s2, 1, ProjectivePoint<K>(b));
            for (const auto& v : f.space) stacked.push_back(v);
        }
        Mat<K> m(static_cast<int>(stacked.size()), s2.k + 1);
        for (size_t i = 0; i < stacked.size(); ++i)
            for (int j = 0; j <= s2.k; ++j) m.at(static_cast<int>(i), j) = stacked[i][j];
        int span_dim = rank_kernel(m).rank - 1; // projective
        int bound = 2 * s2.k - s2.hs[0] - s2.hs[1] - 1;
        out.push_back(check("union of center fibres has projective dimension within the bound",
                            span_dim <= bound,
                            "dim " + std::to_string(span_dim) + " <= " + std::to_string(bound)));
    }
    return out;
}

inline std::vector<std::string> suite_names() {
    return {"paper-ex-5.1", "paper-ex-5.2", "formulas", "properties"};
}

inline std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed = 1) {
    if (name == "paper-ex-5.1") return suite_two_view<Rational>();
    if (name == "paper-ex-5.2") return suite_three_view<Rational>();
    if (name == "formulas") return suite_formulas<Rational>();
    if (name == "properties") return suite_properties<Rational>(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace critloci::suites
