#include <catch2/catch_amalgamated.hpp>

#include <critloci/bundled.hpp>
#include <critloci/locus.hpp>

#include "oracles.hpp"

using namespace critloci;
using K = Rational;

TEST_CASE("Bareiss determinant basics") {
    Mat<K> id(4, 4);
    for (int i = 0; i < 4; ++i) id.at(i, i) = K(1);
    CHECK(bareiss_det(id) == K(1));

    SeededRng rng(3);
    Mat<K> rep = oracles::random_matrix<K>(4, 4, rng);
    for (int j = 0; j < 4; ++j) rep.at(2, j) = rep.at(0, j);
    CHECK(bareiss_det(rep).is_zero());

    CHECK_THROWS_AS(bareiss_det(Mat<K>(2, 3)), std::invalid_argument);
}

TEST_CASE("Bareiss equals the cofactor oracle on random matrices") {
    SeededRng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        Mat<K> m = oracles::random_matrix<K>(4, 4, rng);
        CHECK(bareiss_det(m) == oracles::cofactor_det(m));
    }
    for (int trial = 0; trial < 20; ++trial) {
        Mat<K> m = oracles::random_matrix<K>(3, 3, rng);
        CHECK(bareiss_det(m) == oracles::cofactor_det(m));
    }
}

TEST_CASE("rank and kernel on degenerate and random matrices") {
    Mat<K> zero(3, 5);
    auto rk = rank_kernel(zero);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 5);

    SeededRng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + static_cast<int>(rng.next() % 5);
        int c = 1 + static_cast<int>(rng.next() % 5);
        Mat<K> m = oracles::random_matrix<K>(r, c, rng);
        auto result = rank_kernel(m);
        CHECK(result.rank + static_cast<int>(result.kernel.size()) == c);
        for (const auto& v : result.kernel)
            for (const auto& e : mat_vec(m, v)) CHECK(e.is_zero());
    }
}

TEST_CASE("the locus matrix of the three-view setup has rank 6 at the singular point") {
    auto s = bundled::three_view_setup<K>();
    Mat<K> m(8, 7);
    {
        auto lm = build_locus_matrix(s, Side::X);
        std::vector<K> a = {K(1), K(0), K(0), K(0)};
        m = evaluate_at(lm.m, a);
    }
    CHECK(rank_kernel(m).rank == 6);
}

TEST_CASE("symbolic determinants") {
    RingPtr r2 = coordinate_ring('x', 2);
    PolyMat<K> diag(2, 2, Poly<K>::zero(r2));
    diag.at(0, 0) = Poly<K>::variable(r2, 0);
    diag.at(1, 1) = Poly<K>::variable(r2, 1);
    CHECK(det_poly(diag) == Poly<K>::parse(r2, "x0*x1"));
    CHECK_THROWS_AS(det_poly(PolyMat<K>(2, 3, Poly<K>::zero(r2))), std::invalid_argument);
}

TEST_CASE("symbolic determinant commutes with evaluation") {
    RingPtr r3 = coordinate_ring('x', 3);
    SeededRng rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        PolyMat<K> m(3, 3, Poly<K>::zero(r3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = oracles::random_poly<K>(r3, 2, rng, 3);
        std::vector<K> p = {K(rng.int_in(-3, 3)), K(rng.int_in(-3, 3)), K(rng.int_in(-3, 3))};
        Mat<K> at = evaluate_at(m, p);
        CHECK(det_poly(m).evaluate(p) == bareiss_det(at));
    }
}

TEST_CASE("maximal minors: counts and degrees") {
    auto s = bundled::three_view_setup<K>();
    auto lm = build_locus_matrix(s, Side::X);
    REQUIRE(lm.m.rows() == 8);
    REQUIRE(lm.m.cols() == 7);
    auto minors = maximal_minors(lm.m);
    CHECK(minors.size() == 8); // C(8,7)
    for (const auto& [idx, p] : minors) {
        CHECK(idx.size() == 7);
        if (p.is_zero()) continue;
        auto info = p.degree_info();
        CHECK(info.homogeneous);
        CHECK(info.total_degree <= s.n());
        CHECK(info.total_degree == s.n()); // every selection keeps one row per block here
    }

    RingPtr r2 = coordinate_ring('x', 2);
    PolyMat<K> m22(2, 2, Poly<K>::zero(r2));
    m22.at(0, 0) = Poly<K>::variable(r2, 0);
    m22.at(1, 1) = Poly<K>::variable(r2, 1);
    auto single = maximal_minors(m22);
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == det_poly(m22));

    // combinatorial count on a wide matrix
    PolyMat<K> wide(2, 4, Poly<K>::constant(r2, K(1)));
    CHECK(maximal_minors(wide).size() == 6); // C(4,2)
}

TEST_CASE("evaluated minors match extract-then-determinant") {
    auto s = bundled::three_view_setup<K>();
    auto lm = build_locus_matrix(s, Side::X);
    SeededRng rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        MinorIndex rows, cols;
        // random strictly increasing selections of size 4
        int r = 0, c = 0;
        while (static_cast<int>(rows.size()) < 4) {
            if (rng.next() % 2 && 8 - r > 4 - static_cast<int>(rows.size())) ++r;
            rows.push_back(r++);
        }
        while (static_cast<int>(cols.size()) < 4) {
            if (rng.next() % 2 && 7 - c > 4 - static_cast<int>(cols.size())) ++c;
            cols.push_back(c++);
        }
        std::vector<K> at = {K(rng.int_in(-3, 3)), K(rng.int_in(-3, 3)), K(rng.int_in(-3, 3)),
                             K(rng.int_in(-3, 3))};
        Mat<K> sub(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) sub.at(i, j) = lm.m.at(rows[i], cols[j]).evaluate(at);
        CHECK(submatrix_det(lm.m, rows, cols, at) == bareiss_det(sub));
    }
    CHECK_THROWS_AS(submatrix_det(lm.m, {0, 1}, {0, 1, 2}, std::vector<K>(4, K(0))),
                    std::invalid_argument);
    CHECK_THROWS_AS(submatrix_det(lm.m, {1, 0}, {0, 1}, std::vector<K>(4, K(0))),
                    std::invalid_argument);
}

TEST_CASE("minors supported on the leading rows vanish at rank-deficient points") {
    // at A the first two views' matrix has rank k+n-1 = 5, so every order-6
    // minor taken inside the first L = 6 rows vanishes
    auto s = bundled::three_view_setup<K>();
    auto lm = build_locus_matrix(s, Side::X);
    REQUIRE(lm.leading_row_count == 6);
    std::vector<K> A = {K(1), K(0), K(0), K(0)};
    MinorIndex first_cols = {0, 1, 2, 3, 4, 5};
    for (const auto& rows : combinations(lm.leading_row_count, 6))
        CHECK(submatrix_det(lm.m, rows, first_cols, A).is_zero());
}

TEST_CASE("Bareiss equals the cofactor oracle on every size up to four") {
    SeededRng rng(25);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            Mat<K> m = oracles::random_matrix<K>(n, n, rng);
            CHECK(bareiss_det(m) == oracles::cofactor_det(m));
        }
}

TEST_CASE("minor enumeration is ordered lexicographically") {
    auto s = bundled::three_view_setup<K>();
    auto lm = build_locus_matrix(s, Side::X);
    auto minors = maximal_minors(lm.m);
    for (size_t i = 1; i < minors.size(); ++i)
        CHECK(std::lexicographical_compare(minors[i - 1].first.begin(),
                                           minors[i - 1].first.end(),
                                           minors[i].first.begin(), minors[i].first.end()));
}
