#pragma once

// Point extraction: intersections of a locus with a projective line via
// parameterization and binary-form gcds, rational root finding, and rational
// point sampling on quadrics through a base point.

#include <functional>
#include <set>
#include <vector>

#include "hilbert.hpp"
#include "scene.hpp"

namespace critloci {

// ---------------------------------------------------------------------------
// Univariate helpers (dense, index = degree)

template <class K>
int uni_degree(const std::vector<K>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[i].is_zero()) return i;
    return -1;
}

template <class K>
K uni_eval(const std::vector<K>& p, const K& x) {
    K acc = K::zero();
    for (int i = uni_degree(p); i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

/// Synthetic division of p by (s - r); requires r to be a root.
template <class K>
std::vector<K> uni_deflate(const std::vector<K>& p, const K& r) {
    int d = uni_degree(p);
    std::vector<K> out(d, K::zero());
    K acc = K::zero();
    for (int i = d; i >= 1; --i) {
        acc = (i == d) ? p[i] : p[i] + acc * r;
        out[i - 1] = acc;
    }
    return out;
}

struct RootReport {
    int multiplicity_at_infinity = 0;
    int unresolved_degree = 0; // degree left after removing all roots found
};

namespace detail {

inline std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> out;
    if (n == 0) return out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
        if (d > 2000000) break; // coefficients beyond trial-division reach
    }
    return out;
}

} // namespace detail

/// All rational roots (with multiplicity) of a univariate polynomial over Q.
inline std::vector<std::pair<Rational, int>> rational_roots(std::vector<Rational> p,
                                                            RootReport* report = nullptr) {
    std::vector<std::pair<Rational, int>> roots;
    int d = uni_degree(p);
    if (d <= 0) {
        if (report) report->unresolved_degree = 0;
        return roots;
    }
    // root at zero
    int zmult = 0;
    while (uni_degree(p) > 0 && p[0].is_zero()) {
        p.erase(p.begin());
        ++zmult;
    }
    if (zmult) roots.push_back({Rational(0), zmult});
    d = uni_degree(p);
    if (d > 0) {
        // clear denominators
        mpz_class den = 1;
        for (int i = 0; i <= d; ++i) den = lcm(den, p[i].raw().get_den());
        std::vector<mpz_class> z(d + 1);
        for (int i = 0; i <= d; ++i)
            z[i] = p[i].raw().get_num() * (den / p[i].raw().get_den());
        std::vector<mpz_class> nums = detail::divisors_of(z[0]);
        std::vector<mpz_class> dens = detail::divisors_of(z[d]);
        for (const auto& a : nums) {
            for (const auto& b : dens) {
                for (int sign : {1, -1}) {
                    Rational cand(mpq_class(sign * a, b));
                    if (!uni_eval(p, cand).is_zero()) continue;
                    int mult = 0;
                    while (uni_degree(p) > 0 && uni_eval(p, cand).is_zero()) {
                        p = uni_deflate(p, cand);
                        ++mult;
                    }
                    if (mult) roots.push_back({cand, mult});
                    // refresh candidate lists only implicitly: remaining roots
                    // still divide the original edge coefficients
                }
            }
        }
    }
    if (report) report->unresolved_degree = std::max(0, uni_degree(p));
    return roots;
}

/// All roots in GF(p) by exhaustive scan (the modulus is small by design).
inline std::vector<std::pair<PrimeField, int>> prime_field_roots(std::vector<PrimeField> p,
                                                                 RootReport* report = nullptr) {
    std::vector<std::pair<PrimeField, int>> roots;
    if (PrimeField::modulus() > (1 << 22))
        throw std::domain_error("prime_field_roots: modulus too large for scanning");
    for (long v = 0; v < PrimeField::modulus() && uni_degree(p) > 0; ++v) {
        PrimeField cand(v);
        if (!uni_eval(p, cand).is_zero()) continue;
        int mult = 0;
        while (uni_degree(p) > 0 && uni_eval(p, cand).is_zero()) {
            p = uni_deflate(p, cand);
            ++mult;
        }
        roots.push_back({cand, mult});
    }
    if (report) report->unresolved_degree = std::max(0, uni_degree(p));
    return roots;
}

template <class K>
std::vector<std::pair<K, int>> field_roots(const std::vector<K>& p, RootReport* report) {
    if constexpr (K::is_prime_field) return prime_field_roots(p, report);
    else return rational_roots(p, report);
}

// ---------------------------------------------------------------------------
// Locus meets line

template <class K>
struct LineIntersection {
    bool line_contained = false; // every generator vanishes on the whole line
    std::vector<std::pair<ProjectivePoint<K>, int>> points; // with multiplicity
    int unresolved_degree = 0; // positive when non-rational points remain
};

/// Intersection of V(ideal) with the line spanned by b0, b1, computed from
/// the gcd of the restricted generators as a binary form.
template <class K>
LineIntersection<K> intersect_with_line(const Ideal<K>& ideal, const std::vector<K>& b0,
                                        const std::vector<K>& b1) {
    static const RingPtr param = make_ring({"s@", "u@"});
    LineIntersection<K> out;
    std::vector<Poly<K>> images;
    for (size_t i = 0; i < b0.size(); ++i) {
        Poly<K> f = Poly<K>::zero(param);
        if (!b0[i].is_zero()) f += Poly<K>::term(param, Monomial::var(0), b0[i]);
        if (!b1[i].is_zero()) f += Poly<K>::term(param, Monomial::var(1), b1[i]);
        images.push_back(std::move(f));
    }
    // gcd of the restrictions: decompose as s^a u^b * core and use the
    // univariate Euclidean algorithm on the cores
    int min_s = -1, min_u = -1;
    std::vector<K> core_gcd; // univariate in s (u = 1)
    bool any = false;
    for (const auto& g : ideal.gens) {
        Poly<K> r = g.substitute(images);
        if (r.is_zero()) continue;
        any = true;
        int vs = 255, vu = 255, ds = 0;
        for (const auto& [m, c] : r.terms()) {
            vs = std::min<int>(vs, m.e[0]);
            vu = std::min<int>(vu, m.e[1]);
        }
        for (const auto& [m, c] : r.terms()) ds = std::max<int>(ds, m.e[0] - vs);
        std::vector<K> core(ds + 1, K::zero());
        for (const auto& [m, c] : r.terms()) core[m.e[0] - vs] = c;
        min_s = (min_s < 0) ? vs : std::min(min_s, vs);
        min_u = (min_u < 0) ? vu : std::min(min_u, vu);
        if (core_gcd.empty() && uni_degree(core) >= 0) {
            core_gcd = core;
        } else {
            // Euclid
            std::vector<K> a = core_gcd, b = core;
            while (uni_degree(b) >= 0) {
                int da = uni_degree(a), db = uni_degree(b);
                if (da < db) { std::swap(a, b); continue; }
                if (db < 0) break;
                K f = a[da] / b[db];
                for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
                while (!a.empty() && a.back().is_zero()) a.pop_back();
                if (uni_degree(a) < uni_degree(b)) std::swap(a, b);
            }
            core_gcd = a;
        }
    }
    if (!any) {
        out.line_contained = true;
        return out;
    }
    auto add_point = [&](const K& s, const K& u, int mult) {
        std::vector<K> coords(b0.size());
        for (size_t i = 0; i < b0.size(); ++i) coords[i] = s * b0[i] + u * b1[i];
        out.points.push_back({ProjectivePoint<K>(coords), mult});
    };
    if (min_s > 0) add_point(K::zero(), K::one(), min_s); // common factor s^a: root (0:1)
    if (min_u > 0) add_point(K::one(), K::zero(), min_u); // common factor u^b: root (1:0)
    RootReport rep;
    for (const auto& [r, mult] : field_roots(core_gcd, &rep)) add_point(r, K::one(), mult);
    out.unresolved_degree = rep.unresolved_degree;
    return out;
}

/// Line intersection against a Center (uses its two spanning points).
template <class K>
LineIntersection<K> intersect_with_center_line(const Ideal<K>& ideal, const Center<K>& line) {
    if (line.basis.size() != 2)
        throw std::invalid_argument("intersect_with_center_line: center is not a line");
    return intersect_with_line(ideal, line.basis[0], line.basis[1]);
}

// ---------------------------------------------------------------------------
// Quadric sampling

/// Symmetric matrix of a quadric (characteristic != 2).
template <class K>
Mat<K> quadric_matrix(const Poly<K>& q) {
    const int n = q.ring()->nvars();
    Mat<K> a(n, n, K::zero());
    const K half = K::one() / K(2);
    for (const auto& [m, c] : q.terms()) {
        if (m.deg != 2) throw std::invalid_argument("quadric_matrix: not a quadratic form");
        int i = -1, j = -1;
        for (int v = 0; v < n; ++v) {
            if (m.e[v] == 2) { i = j = v; break; }
            if (m.e[v] == 1) { (i < 0 ? i : j) = v; }
        }
        if (i == j) {
            a.at(i, i) = c;
        } else {
            a.at(i, j) = c * half;
            a.at(j, i) = c * half;
        }
    }
    return a;
}

/// Rational points on an irreducible quadric through lines from a smooth base
/// point: for a seeded direction d, the second intersection of base + t*d.
/// Tangent and degenerate directions are skipped; duplicates and points
/// rejected by `keep` are filtered out.
template <class K>
std::vector<ProjectivePoint<K>> sample_points_on_quadric(
    const Poly<K>& q, const ProjectivePoint<K>& base, int count, std::uint64_t seed,
    const std::function<bool(const ProjectivePoint<K>&)>& keep = {},
    long max_draws = 2000000) {
    const int n = q.ring()->nvars();
    if (q.evaluate(base.coords()) != K::zero())
        throw std::invalid_argument("sample_points_on_quadric: base not on the quadric");
    Mat<K> A = quadric_matrix(q);
    std::vector<K> Ab = mat_vec(A, base.coords());
    bool grad_zero = true;
    for (const auto& c : Ab)
        if (!c.is_zero()) { grad_zero = false; break; }
    if (grad_zero) throw std::domain_error("sample_points_on_quadric: base is a vertex");

    SeededRng rng(seed);
    std::set<std::string> seen;
    std::vector<ProjectivePoint<K>> out;
    for (long draw = 0; draw < max_draws && static_cast<int>(out.size()) < count; ++draw) {
        std::vector<K> d(n);
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            // small heights over Q; the whole field over GF(p), where small
            // directions would reach only a handful of chord points
            long c;
            if constexpr (K::is_prime_field)
                c = rng.int_in(0, PrimeField::modulus() - 1);
            else
                c = rng.int_in(-9, 9);
            d[i] = K(c);
            if (c) nonzero = true;
        }
        if (!nonzero) continue;
        K alpha = K::zero(), beta = K::zero();
        std::vector<K> Ad = mat_vec(A, d);
        for (int i = 0; i < n; ++i) {
            alpha += d[i] * Ad[i];
            beta += base.coords()[i] * Ad[i];
        }
        if (alpha.is_zero() || beta.is_zero()) continue; // degenerate or tangent line
        std::vector<K> p(n);
        const K two(2);
        for (int i = 0; i < n; ++i) p[i] = alpha * base.coords()[i] - two * beta * d[i];
        bool allzero = true;
        for (const auto& c : p)
            if (!c.is_zero()) { allzero = false; break; }
        if (allzero) continue;
        ProjectivePoint<K> pt(p);
        if (pt == base) continue;
        if (!q.evaluate(pt.coords()).is_zero())
            throw std::logic_error("sample_points_on_quadric: chord construction failed");
        if (keep && !keep(pt)) continue;
        std::string key = pt.str();
        if (seen.count(key)) continue;
        seen.insert(key);
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace critloci
