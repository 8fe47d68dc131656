#include <catch2/catch_amalgamated.hpp>

#include <critloci/bundled.hpp>
#include <critloci/polynomial.hpp>

#include "oracles.hpp"

using namespace critloci;
using K = Rational;

namespace {
const RingPtr R3 = coordinate_ring('x', 3);
const RingPtr R4 = coordinate_ring('x', 4);

Poly<K> P(const RingPtr& r, const std::string& s) { return Poly<K>::parse(r, s); }
} // namespace

TEST_CASE("addition basics") {
    CHECK((P(R3, "x0") + P(R3, "-x0")).is_zero());
    CHECK(P(R3, "x0*x1") + P(R3, "x0*x1") == P(R3, "2*x0*x1"));
    RingPtr other = coordinate_ring('y', 3);
    CHECK_THROWS_AS(P(R3, "x0") + Poly<K>::parse(other, "y0"), std::invalid_argument);
}

TEST_CASE("multiplication basics") {
    CHECK(P(R3, "x0 + x1") * P(R3, "x0 - x1") == P(R3, "x0^2 - x1^2"));
    Poly<K> a = P(R3, "3*x0^2*x1 - x2 + 7");
    CHECK(a * Poly<K>::constant(R3, K::one()) == a);
}

TEST_CASE("arithmetic matches the term-map oracle on random inputs") {
    SeededRng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Poly<K> a = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> b = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> c = oracles::random_poly<K>(R3, 2, rng);
        CHECK(oracles::to_map(a + b) == oracles::map_add(oracles::to_map(a), oracles::to_map(b)));
        CHECK(oracles::to_map(a * b) == oracles::map_mul(oracles::to_map(a), oracles::to_map(b)));
        // distributivity through the oracle's independent expansion
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - a - b == Poly<K>::zero(R3));
    }
}

TEST_CASE("canonical form never stores zero coefficients") {
    SeededRng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Poly<K> a = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> b = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> sum = a + b;
        Poly<K> prod = a * b;
        for (const auto& [m, c] : sum.terms()) CHECK(!c.is_zero());
        for (const auto& [m, c] : prod.terms()) CHECK(!c.is_zero());
    }
}

TEST_CASE("evaluation at the bundled centers kills the quadric") {
    Poly<K> q = P(R4, bundled::kXQuadric);
    std::vector<K> cq1 = {K(-1), K(3), K(2), K(1)};
    std::vector<K> cq2 = {K(-1), K(-1), K(1), K(1)};
    CHECK(q.evaluate(cq1).is_zero());
    CHECK(q.evaluate(cq2).is_zero());
    // a non-critical point stays nonzero
    CHECK(q.evaluate({K(1), K(0), K(2), K(0)}) == K(4));
    // zero vector picks out the constant term
    Poly<K> f = P(R4, "x0^2 - 3*x3 + 5/2");
    CHECK(f.evaluate({K(0), K(0), K(0), K(0)}) == Rational(5, 2));
    CHECK_THROWS_AS(q.evaluate({K(1)}), std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism") {
    SeededRng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Poly<K> a = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> b = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> c = oracles::random_poly<K>(R3, 3, rng);
        std::vector<K> p = {K(rng.int_in(-4, 4)), K(rng.int_in(-4, 4)), K(rng.int_in(-4, 4))};
        CHECK((a * b + c).evaluate(p) == a.evaluate(p) * b.evaluate(p) + c.evaluate(p));
    }
}

TEST_CASE("formal partial derivatives") {
    Poly<K> q = P(R4, bundled::kXQuadric);
    CHECK(q.partial_derivative(0) == P(R4, "2*x1 - 2*x2 + 2*x3"));
    CHECK(Poly<K>::constant(R4, K(9)).partial_derivative(1).is_zero());
    CHECK_THROWS_AS(q.partial_derivative(7), std::out_of_range);
}

TEST_CASE("Euler identity on random homogeneous polynomials") {
    SeededRng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = 1 + static_cast<int>(rng.next() % 4);
        Poly<K> f = oracles::random_homogeneous<K>(R3, deg, rng);
        if (f.is_zero()) continue;
        Poly<K> lhs = Poly<K>::zero(R3);
        for (int i = 0; i < 3; ++i) lhs += Poly<K>::variable(R3, i) * f.partial_derivative(i);
        CHECK(lhs == f.scaled(K(deg)));
    }
}

TEST_CASE("degree info covers gradings and bigradings") {
    Poly<K> q = P(R4, bundled::kXQuadric);
    auto info = q.degree_info();
    CHECK(info.total_degree == 2);
    CHECK(info.homogeneous);

    auto mixed = P(R4, "x0 + x1^2").degree_info();
    CHECK(mixed.total_degree == 2);
    CHECK(!mixed.homogeneous);

    CHECK(!Poly<K>::zero(R4).degree_info().total_degree.has_value());

    RingPtr pr = product_ring(1); // x0, x1 | y0, y1
    auto bi = Poly<K>::parse(pr, "x0^2*y1").degree_info();
    CHECK(bi.bidegree == std::make_pair(2, 1));
    auto not_bi = Poly<K>::parse(pr, "x0^2*y1 + x0*x1^2").degree_info();
    CHECK(!not_bi.bidegree.has_value());
}

TEST_CASE("printing and parsing are inverse on random polynomials") {
    SeededRng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        Poly<K> f = oracles::random_poly<K>(R4, 4, rng);
        if (f.is_zero()) continue;
        CHECK(Poly<K>::parse(R4, f.str()) == f);
    }
    CHECK(P(R4, "-x0 - 1/2").str() == "-x0 - 1/2");
    CHECK_THROWS_AS(P(R4, "x9"), std::invalid_argument);
    CHECK_THROWS_AS(P(R4, ""), std::invalid_argument);
}

TEST_CASE("printing follows descending order under the declared order") {
    Poly<K> f = P(R4, "x3 + x0 + x1*x2");
    CHECK(f.str() == "x1*x2 + x0 + x3"); // grevlex: degree first, then reverse-lex ties
}

TEST_CASE("variable substitution composes linear parameterizations") {
    RingPtr param = make_ring({"s", "t"});
    // the line (s, 0, t, 0)
    std::vector<Poly<K>> images = {
        Poly<K>::variable(param, 0), Poly<K>::zero(param),
        Poly<K>::variable(param, 1), Poly<K>::zero(param)};
    Poly<K> q = P(R4, bundled::kXQuadric);
    Poly<K> restricted = q.substitute(images);
    CHECK(restricted == Poly<K>::parse(param, "-2*s*t + 2*t^2"));
}

TEST_CASE("degrees add under multiplication of nonzero polynomials") {
    SeededRng rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        Poly<K> a = oracles::random_poly<K>(R4, 3, rng);
        Poly<K> b = oracles::random_poly<K>(R4, 3, rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(*(a * b).degree_info().total_degree ==
              *a.degree_info().total_degree + *b.degree_info().total_degree);
    }
}

TEST_CASE("ring axioms on random triples") {
    SeededRng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Poly<K> a = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> b = oracles::random_poly<K>(R3, 3, rng);
        Poly<K> c = oracles::random_poly<K>(R3, 3, rng);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
    }
}
