#pragma once

// Buchberger engine with Gebauer-Moeller pair pruning, plus the ideal
// operations built on it: membership, intersection, quotient, product,
// saturation and elimination. Deterministic throughout: fixed pair
// selection (degree of the lcm, then indices) and reduced monic output.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "locus.hpp"

namespace critloci {

/// Thrown when a rational run exceeds its configured work budget; callers
/// may retry over GF(p).
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("Groebner work budget exceeded") {}
};

struct BuchbergerOptions {
    size_t max_reductions = static_cast<size_t>(-1);
};

/// Reduced Groebner basis: monic, interreduced, sorted descending by
/// leading monomial. Equal ideals (same ring and order) yield equal bases.
template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly<K>> gens;

    bool is_unit_ideal() const {
        return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
    }
};

namespace detail {

/// Full multivariate division remainder: no term of the result is divisible
/// by any leading monomial of the (monic or not) divisors.
template <class K>
Poly<K> reduce_full(Poly<K> f, const std::vector<Poly<K>>& divisors) {
    if (divisors.empty() || f.is_zero()) return f;
    const RingPtr ring = f.ring();
    const int nv = ring->nvars();
    Poly<K> rem = Poly<K>::zero(ring);
    while (!f.is_zero()) {
        const Monomial& lm = f.leading_monomial();
        bool reduced = false;
        for (const auto& g : divisors) {
            if (g.is_zero()) continue;
            if (!g.leading_monomial().divides(lm)) continue;
            Monomial q = lm.quotient_by(g.leading_monomial());
            K c = f.leading_coefficient() / g.leading_coefficient();
            f = f - g.times_term(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem = rem + Poly<K>::term(ring, lm, f.leading_coefficient());
            f = f - Poly<K>::term(ring, lm, f.leading_coefficient());
        }
    }
    (void)nv;
    return rem;
}

} // namespace detail

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g) {
    Monomial l = f.leading_monomial().lcm(g.leading_monomial());
    Poly<K> a = f.times_term(l.quotient_by(f.leading_monomial()),
                             f.leading_coefficient().inverse());
    Poly<K> b = g.times_term(l.quotient_by(g.leading_monomial()),
                             g.leading_coefficient().inverse());
    return a - b;
}

/// Remainder of f on division by the basis; zero iff f lies in the ideal.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb) {
    if (*f.ring() != *gb.ring)
        throw std::invalid_argument("normal_form: polynomial and basis rings differ");
    return detail::reduce_full(f, gb.gens);
}

/// Reduced Groebner basis of the generators under the ring's order.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, BuchbergerOptions opts = {}) {
    const RingPtr ring = ideal.ring;
    const int nv = ring->nvars();
    const auto& ord = ring->order;

    GroebnerBasis<K> out;
    out.ring = ring;

    std::vector<Poly<K>> basis;
    for (const auto& g : ideal.gens) {
        if (g.is_zero()) continue;
        Poly<K> r = detail::reduce_full(g, basis);
        if (!r.is_zero()) basis.push_back(r.monic());
    }
    if (basis.empty()) return out;

    struct Pair {
        int i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
        if (a.j != b.j) return a.j < b.j;
        return a.i < b.i;
    };

    // Gebauer-Moeller update when element t joins the basis.
    auto update_pairs = [&](int t) {
        const Monomial& lt = basis[t].leading_monomial();
        std::vector<Pair> fresh;
        for (int i = 0; i < t; ++i)
            fresh.push_back({i, t, basis[i].leading_monomial().lcm(lt)});
        // chain criterion on surviving old pairs
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            const Monomial& lij = p.lcm;
            if (lt.divides(lij) && fresh[p.i].lcm != lij && fresh[p.j].lcm != lij) continue;
            kept.push_back(std::move(p));
        }
        pairs = std::move(kept);
        // prune the new pairs against each other (strict divisors win, equal
        // lcms keep the lowest index), then drop coprime pairs
        std::vector<char> drop(fresh.size(), 0);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (fresh[b].lcm == fresh[a].lcm) {
                    if (b < a) { drop[a] = 1; break; }
                } else if (fresh[b].lcm.divides(fresh[a].lcm)) {
                    drop[a] = 1;
                    break;
                }
            }
        }
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (drop[a]) continue;
            if (basis[fresh[a].i].leading_monomial().coprime(lt)) continue;
            pairs.push_back(std::move(fresh[a]));
        }
    };

    for (int t = 0; t < static_cast<int>(basis.size()); ++t) update_pairs(t);

    size_t reductions = 0;
    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        pairs.erase(it);
        if (++reductions > opts.max_reductions) throw BudgetExceeded();
        Poly<K> s = s_polynomial(basis[p.i], basis[p.j]);
        Poly<K> r = detail::reduce_full(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        update_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: keep only elements whose leading monomial is not divisible
    // by another survivor's
    std::vector<char> alive(basis.size(), 1);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !alive[i] || !alive[j]) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) { alive[i] = 0; break; }
        }
    std::vector<Poly<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce each element against the others
    std::vector<Poly<K>> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<K> r = detail::reduce_full(minimal[i], others);
        reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial(), nv) > 0;
    });
    out.gens = std::move(reduced);
    return out;
}

/// Lazily computed reduced basis attached to the ideal.
template <class K>
const GroebnerBasis<K>& groebner_of(const Ideal<K>& ideal, BuchbergerOptions opts = {}) {
    if (!ideal.gb_cache)
        ideal.gb_cache = std::make_shared<const GroebnerBasis<K>>(buchberger(ideal, opts));
    return *ideal.gb_cache;
}

template <class K>
bool ideal_contains(const Ideal<K>& ideal, const Poly<K>& f) {
    return normal_form(f, groebner_of(ideal)).is_zero();
}

/// Reduced bases are unique, so ideal equality is basis equality.
template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
    if (*a.ring != *b.ring) throw std::invalid_argument("ideal_equal: rings differ");
    return groebner_of(a).gens == groebner_of(b).gens;
}

template <class K>
Ideal<K> ideal_product(const Ideal<K>& a, const Ideal<K>& b) {
    if (*a.ring != *b.ring) throw std::invalid_argument("ideal_product: rings differ");
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens)
        for (const auto& g : b.gens) gens.push_back(f * g);
    return Ideal<K>(a.ring, tidy_generators(std::move(gens)));
}

namespace detail {

/// Sends a polynomial into the elimination extension of its ring.
template <class K>
Poly<K> lift_to_extension(const Poly<K>& f, const RingPtr& ext) {
    std::vector<int> id(f.ring()->nvars());
    for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    return f.map_vars(ext, id);
}

} // namespace detail

/// Generators of the intersection with k[kept vars]: basis elements free of the
/// eliminated block, mapped back to the base ring.
template <class K>
Ideal<K> eliminate_aux(const Ideal<K>& extended, const RingPtr& base,
                       BuchbergerOptions opts = {}) {
    const int keep = base->nvars();
    const GroebnerBasis<K> gb = buchberger(extended, opts);
    std::vector<Poly<K>> kept;
    for (const auto& g : gb.gens) {
        bool pure = true;
        for (const auto& [m, c] : g.terms())
            if (m.deg_range(keep, extended.ring->nvars()) > 0) { pure = false; break; }
        if (!pure) continue;
        std::vector<int> id(extended.ring->nvars(), -1);
        for (int i = 0; i < keep; ++i) id[i] = i;
        kept.push_back(g.map_vars(base, id));
    }
    return Ideal<K>(base, tidy_generators(std::move(kept)));
}

/// Intersection of two ideals via the auxiliary variable: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> ideal_intersection(const Ideal<K>& a, const Ideal<K>& b,
                            BuchbergerOptions opts = {}) {
    if (*a.ring != *b.ring) throw std::invalid_argument("ideal_intersection: rings differ");
    if (a.is_zero_ideal()) return a;
    if (b.is_zero_ideal()) return b;
    RingPtr ext = extend_for_elimination(a.ring, {"t@"});
    const int t_index = ext->nvars() - 1;
    Poly<K> t = Poly<K>::variable(ext, t_index);
    Poly<K> one_minus_t = Poly<K>::constant(ext, K::one()) - t;
    std::vector<Poly<K>> gens;
    for (const auto& f : a.gens) gens.push_back(t * detail::lift_to_extension(f, ext));
    for (const auto& g : b.gens) gens.push_back(one_minus_t * detail::lift_to_extension(g, ext));
    return eliminate_aux(Ideal<K>(ext, std::move(gens)), a.ring, opts);
}

/// Exact division f / g; throws if g does not divide f.
template <class K>
Poly<K> exact_divide(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
    Poly<K> quotient = Poly<K>::zero(f.ring());
    Poly<K> rest = f;
    while (!rest.is_zero()) {
        const Monomial& lm = rest.leading_monomial();
        if (!g.leading_monomial().divides(lm))
            throw std::domain_error("exact_divide: not divisible");
        Monomial q = lm.quotient_by(g.leading_monomial());
        K c = rest.leading_coefficient() / g.leading_coefficient();
        quotient = quotient + Poly<K>::term(f.ring(), q, c);
        rest = rest - g.times_term(q, c);
    }
    return quotient;
}

/// I : (g), computed as the intersection with (g) divided by g.
template <class K>
Ideal<K> ideal_quotient_by_poly(const Ideal<K>& ideal, const Poly<K>& g,
                                BuchbergerOptions opts = {}) {
    if (g.is_zero()) {
        // f * 0 = 0 lies in I for every f, so the quotient is the unit ideal
        return Ideal<K>(ideal.ring, {Poly<K>::constant(ideal.ring, K::one())});
    }
    if (g.is_constant()) return ideal;
    Ideal<K> principal(ideal.ring, {g});
    Ideal<K> cap = ideal_intersection(ideal, principal, opts);
    std::vector<Poly<K>> gens;
    for (const auto& f : cap.gens) gens.push_back(exact_divide(f, g));
    return Ideal<K>(ideal.ring, tidy_generators(std::move(gens)));
}

/// I : J as the intersection of the quotients by J's generators.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& ideal, const Ideal<K>& by,
                        BuchbergerOptions opts = {}) {
    if (*ideal.ring != *by.ring) throw std::invalid_argument("ideal_quotient: rings differ");
    if (by.is_zero_ideal())
        return Ideal<K>(ideal.ring, {Poly<K>::constant(ideal.ring, K::one())});
    std::optional<Ideal<K>> acc;
    for (const auto& g : by.gens) {
        Ideal<K> q = ideal_quotient_by_poly(ideal, g, opts);
        acc = acc ? ideal_intersection(*acc, q, opts) : std::move(q);
    }
    return *acc;
}

/// I : J^inf via iterated quotients until the chain stabilizes.
template <class K>
Ideal<K> saturation(const Ideal<K>& ideal, const Ideal<K>& by, BuchbergerOptions opts = {}) {
    Ideal<K> current = ideal;
    while (true) {
        Ideal<K> next = ideal_quotient(current, by, opts);
        if (ideal_equal(next, current)) return current;
        current = std::move(next);
    }
}

/// gcd via lcm: the intersection of (f) and (g) is principal, generated by lcm(f, g), and
/// gcd = f*g / lcm. Result is monic.
template <class K>
Poly<K> poly_gcd(const Poly<K>& f, const Poly<K>& g, BuchbergerOptions opts = {}) {
    if (f.is_zero()) return g.is_zero() ? g : g.monic();
    if (g.is_zero()) return f.monic();
    Ideal<K> cap = ideal_intersection(Ideal<K>(f.ring(), {f}), Ideal<K>(g.ring(), {g}), opts);
    const GroebnerBasis<K>& gb = groebner_of(cap);
    if (gb.gens.size() != 1)
        throw std::logic_error("poly_gcd: intersection of principal ideals not principal");
    return exact_divide(f * g, gb.gens[0]).monic();
}

} // namespace critloci
