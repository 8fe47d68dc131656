#pragma once

// The two camera configurations bundled with the library: a pair of two
// views P^3 -> P^2 whose critical loci are smooth quadrics, and its
// extension by a third view P^3 -> P^1 whose critical loci are sextic
// curves splitting off degree-5 residual components. Shared by the CLI
// verification suites and the test fixtures.

#include "scene.hpp"

namespace critloci::bundled {

template <class K>
ProjectionSetup<K> two_view_setup() {
    auto P1 = Camera<K>::from_ints({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    auto Q1 = Camera<K>::from_ints({{1, 0, 0, 1}, {1, 0, 1, -1}, {1, 1, -1, 0}});
    auto P2 = Camera<K>::from_ints({{0, 1, 0, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
    auto Q2 = Camera<K>::from_ints({{1, -1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, -1}});
    return make_setup<K>({Q1, Q2}, {P1, P2});
}

template <class K>
ProjectionSetup<K> three_view_setup() {
    ProjectionSetup<K> two = two_view_setup<K>();
    auto P3 = Camera<K>::from_ints({{0, 3, 0, 1}, {0, 0, 1, 1}});
    auto Q3 = Camera<K>::from_ints({{0, 0, 0, 1}, {0, 1, 0, 0}});
    std::vector<Camera<K>> Q = two.Q, P = two.P;
    Q.push_back(Q3);
    P.push_back(P3);
    return make_setup<K>(std::move(Q), std::move(P));
}

// Golden values for the two-view configuration.
inline const char* kXQuadric =
    "2*x0*x1 - x1^2 - 2*x0*x2 + x1*x2 + 2*x2^2 + 2*x0*x3 + x1*x3 - 3*x2*x3 + 2*x3^2";
inline const char* kYQuadric =
    "-4*y0^2 - 5*y0*y1 - y0*y2 + 3*y1*y2 - y2^2 - 6*y0*y3 + 3*y1*y3 - y2*y3";

inline const std::vector<long> kCenterP1 = {0, 0, 0, 1};
inline const std::vector<long> kCenterP2 = {0, -1, -1, 1};
inline const std::vector<long> kCenterQ1 = {-1, 3, 2, 1};
inline const std::vector<long> kCenterQ2 = {-1, -1, 1, 1};

// Fibre lines over the centers, given by their cutting forms.
inline const std::vector<const char*> kLineR1 = {"4*y0 + 5*y1 + 5*y3", "y2 + y3"};
inline const std::vector<const char*> kLineR2 = {"y0", "3*y1 - y2"};
inline const std::vector<const char*> kLineS1 = {"x1 + x3", "x0 - x2 + 2*x3"};
inline const std::vector<const char*> kLineS2 = {"x1 - 2*x2 + x3", "x0 + x3"};

// Golden values for the three-view configuration.
inline const std::vector<const char*> kLineCenterQ3 = {"x1", "x3"}; // L_Q3
inline const std::vector<const char*> kLineCenterP3 = {"3*y1 + y3", "y2 + y3"}; // L_P3

// Hilbert-Burch style matrices whose maximal minors cut out the residual
// degree-5 curves.
inline const std::vector<std::vector<const char*>> kResidualMatrixX = {
    {"2*x0*x2 + x1*x2 - 3*x2^2 + x2*x3 + 4*x3^2",
     "x1^2 + 7*x1*x2 - x2^2 - 11*x1*x3 - 5*x2*x3"},
    {"-x1 + x2 - x3", "x2"},
    {"-2*x2 + x3", "-2*x0 + x1 - 2*x3"},
};
inline const std::vector<std::vector<const char*>> kResidualMatrixY = {
    {"24*y1*y2 - 3*y1*y3 + 3*y2*y3 - 6*y3^2",
     "18*y1^2 + 6*y2^2 + 15*y1*y3 + 9*y2*y3 + 6*y3^2"},
    {"6*y0 - 2*y2 - 2*y3", "2*y0 + 2*y2 + 2*y3"},
    {"-6*y1 + 8*y2 + 11*y3", "-8*y0 - 12*y1 - 2*y2 - 11*y3"},
};

// Intersection points of the residual curves with the line centers.
inline const std::vector<long> kPointA = {1, 0, 0, 0};  // residual X curve meets L_Q3
inline const std::vector<long> kPointB = {1, 0, 1, 0};
inline const std::vector<long> kPointC = {0, 1, 3, -3}; // residual Y curve meets L_P3
inline const std::vector<long> kPointD = {5, 2, 6, -6};

// Further fibre data of the three-view configuration.
inline const std::vector<long> kImageOfA = {1, 1, 1, -2};
inline const std::vector<long> kPlainCurvePoint = {2, 0, -1, -2}; // maps to C_P2

template <class K>
ProjectivePoint<K> point(const std::vector<long>& v) {
    return ProjectivePoint<K>::from_ints(v);
}

template <class K>
PolyMat<K> parse_matrix(const RingPtr& ring, const std::vector<std::vector<const char*>>& rows) {
    PolyMat<K> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()),
                 Poly<K>::zero(ring));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = Poly<K>::parse(ring, rows[i][j]);
    return m;
}

} // namespace critloci::bundled
