#include <catch2/catch_amalgamated.hpp>

#include <critloci/bundled.hpp>
#include <critloci/groebner.hpp>
#include <critloci/hilbert.hpp>

#include "oracles.hpp"

using namespace critloci;
using K = Rational;

namespace {
Poly<K> P(const RingPtr& r, const std::string& s) { return Poly<K>::parse(r, s); }
} // namespace

TEST_CASE("reduced basis of a hand-computed example") {
    // S(x0^2, x0x1 + x1^2) reduces to x1^3 and nothing further appears
    RingPtr r = coordinate_ring('x', 2);
    Ideal<K> I(r, {P(r, "x0^2"), P(r, "x0*x1 + x1^2")});
    auto gb = buchberger(I);
    REQUIRE(gb.gens.size() == 3);
    CHECK(gb.gens[0] == P(r, "x1^3"));
    CHECK(gb.gens[1] == P(r, "x0^2"));
    CHECK(gb.gens[2] == P(r, "x0*x1 + x1^2"));
}

TEST_CASE("a principal ideal reduces to its monic generator") {
    RingPtr r = coordinate_ring('x', 3);
    Ideal<K> I(r, {P(r, "4*x0^2 - 2*x1*x2")});
    auto gb = buchberger(I);
    REQUIRE(gb.gens.size() == 1);
    CHECK(gb.gens[0] == P(r, "x0^2 - 1/2*x1*x2"));
}

TEST_CASE("every S-pair of a computed basis reduces to zero") {
    auto s = bundled::two_view_setup<K>();
    Ideal<K> u = unified_ideal(s);
    const auto& gb = groebner_of(u);
    for (size_t i = 0; i < gb.gens.size(); ++i)
        for (size_t j = i + 1; j < gb.gens.size(); ++j)
            CHECK(normal_form(s_polynomial(gb.gens[i], gb.gens[j]), gb).is_zero());
    for (const auto& g : u.gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("normal form separates members from non-members") {
    RingPtr r = coordinate_ring('x', 3);
    Ideal<K> I(r, {P(r, "x0*x1 - x2^2"), P(r, "x1^2 - x0*x2")});
    const auto& gb = groebner_of(I);
    CHECK(normal_form(P(r, "x0*x1 - x2^2"), gb).is_zero());
    CHECK(!normal_form(Poly<K>::constant(r, K::one()), gb).is_zero());
    RingPtr other = coordinate_ring('y', 3);
    CHECK_THROWS_AS(normal_form(Poly<K>::parse(other, "y0"), gb), std::invalid_argument);
}

TEST_CASE("ideal quotient basics") {
    RingPtr r = coordinate_ring('x', 3);
    Ideal<K> xy(r, {P(r, "x0*x1")});
    Ideal<K> x(r, {P(r, "x0")});
    CHECK(ideal_equal(ideal_quotient(xy, x), Ideal<K>(r, {P(r, "x1")})));
    Ideal<K> unit(r, {Poly<K>::constant(r, K::one())});
    CHECK(ideal_equal(ideal_quotient(xy, unit), xy));
    // quotient by the zero ideal is the unit ideal
    CHECK(groebner_of(ideal_quotient(xy, Ideal<K>(r))).is_unit_ideal());
}

TEST_CASE("quotient law on the three-view ideal") {
    auto s = bundled::three_view_setup<K>();
    Ideal<K> ix = critical_ideal(s, Side::X);
    Ideal<K> lq3 = center_ideal(s, 2, Side::X);
    Ideal<K> quot = ideal_quotient(ix, lq3);
    const auto& gb = groebner_of(ix);
    REQUIRE(!quot.gens.empty());
    for (const auto& f : quot.gens)
        for (const auto& g : lq3.gens) CHECK(normal_form(f * g, gb).is_zero());
    // the quotient strictly grows here: the line center is a component
    bool grew = false;
    for (const auto& f : quot.gens)
        if (!normal_form(f, gb).is_zero()) grew = true;
    CHECK(grew);
}

TEST_CASE("ideal products") {
    RingPtr r = coordinate_ring('x', 3);
    CHECK(ideal_equal(ideal_product(Ideal<K>(r, {P(r, "x0")}), Ideal<K>(r, {P(r, "x1")})),
                      Ideal<K>(r, {P(r, "x0*x1")})));
    auto s = bundled::two_view_setup<K>();
    Ideal<K> c1 = center_ideal(s, 0, Side::X);
    Ideal<K> c2 = center_ideal(s, 1, Side::X);
    Ideal<K> prod = ideal_product(c1, c2);
    CHECK(prod.gens.size() == 9); // 3 x 3 pairwise products, none proportional
    for (size_t a = 0; a < c1.gens.size(); ++a)
        for (size_t b = 0; b < c2.gens.size(); ++b) {
            bool found = false;
            for (const auto& g : prod.gens)
                if (g == c1.gens[a] * c2.gens[b]) found = true;
            CHECK(found);
        }
    Ideal<K> unit(r, {Poly<K>::constant(r, K::one())});
    Ideal<K> x(r, {P(r, "x0")});
    CHECK(ideal_equal(ideal_product(x, unit), x));
}

TEST_CASE("intersection via the auxiliary variable") {
    RingPtr r = coordinate_ring('x', 2);
    Ideal<K> a(r, {P(r, "x0")});
    Ideal<K> b(r, {P(r, "x1")});
    CHECK(ideal_equal(ideal_intersection(a, b), Ideal<K>(r, {P(r, "x0*x1")})));
    Ideal<K> same(r, {P(r, "x0")});
    CHECK(ideal_equal(ideal_intersection(a, same), a));
}

TEST_CASE("saturation removes embedded and component factors") {
    RingPtr r = coordinate_ring('x', 2);
    Ideal<K> I(r, {P(r, "x0^2*x1")});
    Ideal<K> by(r, {P(r, "x0")});
    CHECK(ideal_equal(saturation(I, by), Ideal<K>(r, {P(r, "x1")})));
    // a prime ideal is saturated with respect to any non-member
    Ideal<K> prime(r, {P(r, "x0")});
    Ideal<K> nm(r, {P(r, "x1")});
    CHECK(ideal_equal(saturation(prime, nm), prime));
}

TEST_CASE("exact polynomial division") {
    RingPtr r = coordinate_ring('x', 2);
    Poly<K> f = P(r, "x0^2 - x1^2");
    CHECK(exact_divide(f, P(r, "x0 + x1")) == P(r, "x0 - x1"));
    CHECK_THROWS_AS(exact_divide(f, P(r, "x0 + 1")), std::domain_error);
}

TEST_CASE("gcd through principal intersections") {
    RingPtr r = coordinate_ring('x', 2);
    Poly<K> a = P(r, "x0^2 - x1^2") * P(r, "x0");
    Poly<K> b = P(r, "x0 + x1") * P(r, "x1");
    Poly<K> g = poly_gcd(a, b);
    CHECK(g == P(r, "x0 + x1"));
    CHECK(poly_gcd(a, Poly<K>::zero(r)) == a.monic());
}

TEST_CASE("membership of the two-view quadric in the quotient of the three-view ideal") {
    auto s3 = bundled::three_view_setup<K>();
    Ideal<K> ix3 = critical_ideal(s3, Side::X);
    Ideal<K> lq3 = center_ideal(s3, 2, Side::X);
    Ideal<K> quot = ideal_quotient(ix3, lq3);
    Ideal<K> ix2 = critical_ideal(sub_setup(s3, {0, 1}), Side::X);
    Poly<K> quadric(quot.ring, ix2.gens[0].terms());
    CHECK(normal_form(quadric, groebner_of(quot)).is_zero());
}

TEST_CASE("dimension and degree of reference ideals") {
    auto s2 = bundled::two_view_setup<K>();
    Ideal<K> q = critical_ideal(s2, Side::X);
    CHECK(dimension(q) == std::optional<int>(2));
    CHECK(degree(q) == 2);

    auto s3 = bundled::three_view_setup<K>();
    Ideal<K> ix3 = critical_ideal(s3, Side::X);
    CHECK(dimension(ix3) == std::optional<int>(1));
    CHECK(degree(ix3) == 6);

    RingPtr r = coordinate_ring('x', 4);
    Ideal<K> hyper(r, {P(r, "x0")});
    CHECK(dimension(hyper) == std::optional<int>(2));
    CHECK(degree(hyper) == 1);

    Ideal<K> irrelevant(r, {P(r, "x0"), P(r, "x1"), P(r, "x2"), P(r, "x3")});
    CHECK(!dimension(irrelevant).has_value());
    CHECK_THROWS_AS(degree(irrelevant), std::domain_error);

    Ideal<K> unit(r, {Poly<K>::constant(r, K::one())});
    CHECK(!dimension(unit).has_value());
}

TEST_CASE("dimension and degree ignore generator order and scaling") {
    auto s3 = bundled::three_view_setup<K>();
    Ideal<K> ix3 = critical_ideal(s3, Side::X);
    std::vector<Poly<K>> gens = ix3.gens;
    std::reverse(gens.begin(), gens.end());
    for (size_t i = 0; i < gens.size(); ++i)
        gens[i] = gens[i].scaled(K(static_cast<long>(2 * i + 3)));
    Ideal<K> shuffled(ix3.ring, std::move(gens));
    CHECK(dimension(shuffled) == dimension(ix3));
    CHECK(degree(shuffled) == degree(ix3));
}

TEST_CASE("prime field runs agree with the rational ones") {
    auto s3q = bundled::three_view_setup<K>();
    auto s3p = bundled::three_view_setup<PrimeField>();
    Ideal<K> q = critical_ideal(s3q, Side::X);
    Ideal<PrimeField> p = critical_ideal(s3p, Side::X);
    CHECK(dimension(q) == dimension(p));
    CHECK(degree(q) == degree(p));
    Ideal<K> qs = saturation(q, center_ideal(s3q, 2, Side::X));
    Ideal<PrimeField> ps = saturation(p, center_ideal(s3p, 2, Side::X));
    CHECK(dimension(qs) == dimension(ps));
    CHECK(degree(qs) == degree(ps));
}

TEST_CASE("work budget aborts a rational run on demand") {
    auto s3 = bundled::three_view_setup<K>();
    Ideal<K> u = unified_ideal(s3);
    BuchbergerOptions tiny;
    tiny.max_reductions = 2;
    CHECK_THROWS_AS(buchberger(u, tiny), BudgetExceeded);
}

TEST_CASE("elimination keeps exactly the generators without auxiliaries") {
    RingPtr r = coordinate_ring('x', 2);
    RingPtr ext = extend_for_elimination(r, {"t@"});
    // t*x0 - x1, t*x1 - x0  ==>  intersection with k[x0,x1] contains x0^2 - x1^2
    auto t_times = [&](int var) {
        return Poly<K>::term(ext, Monomial::var(2) * Monomial::var(var), K::one());
    };
    Ideal<K> I(ext, {t_times(0) - Poly<K>::variable(ext, 1),
                     t_times(1) - Poly<K>::variable(ext, 0)});
    Ideal<K> eliminated = eliminate_aux(I, r);
    REQUIRE(!eliminated.gens.empty());
    CHECK(ideal_contains(eliminated, P(r, "x0^2 - x1^2")));
    for (const auto& g : eliminated.gens)
        CHECK(ideal_contains(Ideal<K>(r, {P(r, "x0^2 - x1^2")}), g));
}

TEST_CASE("grevlex and lex bases generate the same ideal on random input") {
    SeededRng rng(301);
    RingPtr grev = coordinate_ring('x', 3);
    RingPtr lex = coordinate_ring('x', 3, MonomialOrder::lex());
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Poly<K>> gens;
        for (int i = 0; i < 3; ++i) {
            Poly<K> f = oracles::random_poly<K>(grev, 2, rng, 4);
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        Ideal<K> a(grev, gens);
        std::vector<Poly<K>> relex;
        for (const auto& g : gens) relex.push_back(g.in_ring(lex));
        Ideal<K> b(lex, relex);
        const auto& gb_a = groebner_of(a);
        const auto& gb_b = groebner_of(b);
        for (const auto& g : gb_b.gens) CHECK(normal_form(g.in_ring(grev), gb_a).is_zero());
        for (const auto& g : gb_a.gens) CHECK(normal_form(g.in_ring(lex), gb_b).is_zero());
    }
}

TEST_CASE("intersections sit inside both ideals and absorb products") {
    SeededRng rng(302);
    RingPtr r = coordinate_ring('x', 3);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Poly<K>> ga, gb;
        for (int i = 0; i < 2; ++i) {
            Poly<K> f = oracles::random_poly<K>(r, 2, rng, 3);
            Poly<K> g = oracles::random_poly<K>(r, 2, rng, 3);
            if (!f.is_zero()) ga.push_back(f);
            if (!g.is_zero()) gb.push_back(g);
        }
        if (ga.empty() || gb.empty()) continue;
        Ideal<K> a(r, ga), b(r, gb);
        Ideal<K> cap = ideal_intersection(a, b);
        for (const auto& f : cap.gens) {
            CHECK(ideal_contains(a, f));
            CHECK(ideal_contains(b, f));
        }
        for (const auto& f : ga)
            for (const auto& g : gb) CHECK(ideal_contains(cap, f * g));
    }
}

TEST_CASE("the chain I inside quotient inside saturation holds generator-wise") {
    auto s3 = bundled::three_view_setup<K>();
    Ideal<K> ix = critical_ideal(s3, Side::X);
    Ideal<K> lq3 = center_ideal(s3, 2, Side::X);
    Ideal<K> quot = ideal_quotient(ix, lq3);
    Ideal<K> sat = saturation(ix, lq3);
    for (const auto& g : ix.gens) CHECK(ideal_contains(quot, g));
    for (const auto& g : quot.gens) CHECK(ideal_contains(sat, g));
}
