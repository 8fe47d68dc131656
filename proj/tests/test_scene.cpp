#include <catch2/catch_amalgamated.hpp>

#include <critloci/bundled.hpp>
#include <critloci/hilbert.hpp>

using namespace critloci;
using K = Rational;

namespace {
ProjectivePoint<K> pt(const std::vector<long>& v) { return ProjectivePoint<K>::from_ints(v); }
} // namespace

TEST_CASE("camera validation") {
    auto p1 = Camera<K>::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    CHECK(p1.h() == 2);
    CHECK(p1.k() == 3);

    CHECK_THROWS_AS(Camera<K>::from_ints({{1, 2, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0}}),
                    std::invalid_argument); // repeated row: rank deficient

    auto q3 = Camera<K>::from_ints({{0, 0, 0, 1}, {0, 1, 0, 0}});
    CHECK(q3.h() == 1);

    // a square matrix is not a projection
    CHECK_THROWS_AS(Camera<K>::from_ints({{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("projective points normalize and compare projectively") {
    CHECK(pt({2, 4, 6, 0}) == pt({1, 2, 3, 0}));
    CHECK(pt({0, -2, 0, 4}) == pt({0, 1, 0, -2}));
    CHECK(pt({1, 0, 0, 0}) != pt({0, 1, 0, 0}));
    CHECK_THROWS_AS(ProjectivePoint<K>({K(0), K(0)}), std::invalid_argument);
    CHECK(pt({5, 2, 6, -6}).str() == "(5:2:6:-6)");
    CHECK(pt({-1, 3, 2, 1}).str() == "(1:-3:-2:-1)"); // sign fixed by normalization
}

TEST_CASE("centers of the bundled cameras match the printed points and lines") {
    auto s = bundled::two_view_setup<K>();
    CHECK(ProjectivePoint<K>(s.q_centers[0].basis[0]) == pt(bundled::kCenterQ1));
    CHECK(ProjectivePoint<K>(s.q_centers[1].basis[0]) == pt(bundled::kCenterQ2));
    CHECK(ProjectivePoint<K>(s.p_centers[0].basis[0]) == pt(bundled::kCenterP1));
    CHECK(ProjectivePoint<K>(s.p_centers[1].basis[0]) == pt(bundled::kCenterP2));

    auto s3 = bundled::three_view_setup<K>();
    const Center<K>& lq3 = s3.q_centers[2];
    CHECK(lq3.basis.size() == 2); // a line: projective dimension 1
    CHECK(lq3.projective_dim() == 1);
    for (const auto& v : lq3.basis) {
        CHECK(v[1].is_zero()); // x1 = 0
        CHECK(v[3].is_zero()); // x3 = 0
    }
    CHECK(lq3.contains(pt({1, 0, 0, 0})));
    CHECK(lq3.contains(pt({1, 0, 2, 0})));
    CHECK(!lq3.contains(pt({1, 1, 0, 0})));
}

TEST_CASE("camera application and the center outcome") {
    auto s = bundled::two_view_setup<K>();
    CHECK(!s.Q[0].apply(pt(bundled::kCenterQ1)).has_value()); // kernel maps to zero
    auto img = s.P[0].apply(pt({3, 5, 7, 9}));
    REQUIRE(img.has_value());
    CHECK(*img == ProjectivePoint<K>({K(3), K(5), K(7)})); // coordinate projection
    auto img2 = s.Q[1].apply(pt({1, 1, 1, 1}));
    REQUIRE(img2.has_value());
    CHECK(*img2 == ProjectivePoint<K>({K(0), K(2), K(0)}));
    CHECK_THROWS_AS(s.Q[0].apply(ProjectivePoint<K>({K(1), K(0)})), std::invalid_argument);
}

TEST_CASE("apply lands in the center exactly on the kernel") {
    auto s = bundled::three_view_setup<K>();
    for (int j = 0; j < s.n(); ++j) {
        for (const auto& b : s.q_centers[j].basis)
            CHECK(!s.Q[j].apply(ProjectivePoint<K>(b)).has_value());
        // random points stay out of the centers almost surely
        SeededRng rng(31 + j);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<K> v;
            for (int i = 0; i <= s.k; ++i) v.push_back(K(rng.int_in(1, 9)));
            ProjectivePoint<K> p(v);
            CHECK(s.Q[j].apply(p).has_value() == !s.q_centers[j].contains(p));
        }
    }
}

TEST_CASE("pairwise disjoint centers") {
    auto s2 = bundled::two_view_setup<K>();
    CHECK(centers_pairwise_disjoint(s2));
    auto s3 = bundled::three_view_setup<K>();
    CHECK(centers_pairwise_disjoint(s3));

    auto dup = make_setup<K>({s2.Q[0], s2.Q[0]}, {s2.P[0], s2.P[1]});
    CHECK(!centers_pairwise_disjoint(dup));
}

TEST_CASE("sub-setups restrict and the full subset is the identity") {
    auto s3 = bundled::three_view_setup<K>();
    auto s2 = bundled::two_view_setup<K>();
    auto first_two = sub_setup(s3, {0, 1});
    REQUIRE(first_two.n() == 2);
    for (int j = 0; j < 2; ++j) {
        CHECK(first_two.Q[j].matrix() == s2.Q[j].matrix());
        CHECK(first_two.P[j].matrix() == s2.P[j].matrix());
    }
    auto full = sub_setup(s3, {0, 1, 2});
    CHECK(full.n() == 3);
    CHECK_THROWS_AS(sub_setup(s3, {}), std::invalid_argument);
    CHECK_THROWS_AS(sub_setup(s3, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sub_setup(s3, {3}), std::invalid_argument);
}

TEST_CASE("setup validation rejects mismatched camera pairs") {
    auto s2 = bundled::two_view_setup<K>();
    auto q3 = Camera<K>::from_ints({{0, 0, 0, 1}, {0, 1, 0, 0}});
    CHECK_THROWS_AS(make_setup<K>({s2.Q[0], q3}, {s2.P[0], s2.P[1]}), std::invalid_argument);
}
