#pragma once

// Dimension and degree from the leading-term ideal: combinatorial Krull
// dimension via maximal independent variable sets, degree via the Hilbert
// series numerator, and solution counting for zero-dimensional slices.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "groebner.hpp"

namespace critloci {

/// Deterministic small RNG (splitmix64); stdlib distributions are avoided so
/// seeded runs are reproducible across platforms.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long int_in(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

/// Minimal generators of the leading-term ideal of a reduced basis.
template <class K>
std::vector<Monomial> leading_term_ideal(const GroebnerBasis<K>& gb) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.gens) lts.push_back(g.leading_monomial());
    std::vector<Monomial> minimal;
    for (size_t i = 0; i < lts.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < lts.size(); ++j)
            if (i != j && lts[j].divides(lts[i]) && (lts[j] != lts[i] || j < i)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(lts[i]);
    }
    return minimal;
}

/// Krull dimension of R/(monomial ideal): the largest variable subset S such
/// that no generator is supported inside S. Returns -1 for the unit ideal.
inline int affine_dimension_of_monomials(const std::vector<Monomial>& gens, int nvars) {
    for (const auto& m : gens)
        if (m.is_unit()) return -1;
    std::vector<std::uint32_t> supports;
    for (const auto& m : gens) supports.push_back(m.support_mask());
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
        int size = __builtin_popcount(s);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t sup : supports)
            if ((sup & ~s) == 0) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

namespace detail {

/// Numerator of the Hilbert series of R/(monomial ideal) over (1-t)^nvars,
/// by the variable-pivot recursion
///   N(I) = N(I + (x)) + t * N(I : x).
inline std::vector<long long> hilbert_numerator(std::vector<Monomial> gens) {
    // strip redundant generators
    std::vector<Monomial> min;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < gens.size(); ++j)
            if (i != j && gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) {
                red = true;
                break;
            }
        if (!red) min.push_back(gens[i]);
    }
    gens = std::move(min);

    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_unit()) return {0};

    // pairwise coprime: product of (1 - t^deg)
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!gens[i].coprime(gens[j])) { coprime = false; break; }
    if (coprime) {
        std::vector<long long> acc{1};
        for (const auto& m : gens) {
            std::vector<long long> next(acc.size() + m.deg, 0);
            for (size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + m.deg] -= acc[i];
            }
            acc = std::move(next);
        }
        return acc;
    }

    // pivot on the most frequent variable
    int counts[kMaxVars] = {0};
    for (const auto& m : gens)
        for (int v = 0; v < kMaxVars; ++v)
            if (m.e[v]) ++counts[v];
    int pivot = 0;
    for (int v = 1; v < kMaxVars; ++v)
        if (counts[v] > counts[pivot]) pivot = v;

    std::vector<Monomial> plus;   // I + (x_pivot), generators without the pivot
    std::vector<Monomial> colon;  // I : x_pivot
    plus.push_back(Monomial::var(pivot));
    for (const auto& m : gens) {
        Monomial q = m;
        if (q.e[pivot]) {
            q.e[pivot] -= 1;
            q.deg -= 1;
        } else {
            plus.push_back(m);
        }
        colon.push_back(q);
    }
    std::vector<long long> a = hilbert_numerator(std::move(plus));
    std::vector<long long> b = hilbert_numerator(std::move(colon));
    std::vector<long long> out(std::max(a.size(), b.size() + 1), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i + 1] += b[i];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

/// Divides a polynomial in t exactly by (1-t)^power.
inline std::vector<long long> divide_by_one_minus_t(std::vector<long long> f, int power) {
    for (int r = 0; r < power; ++r) {
        // f / (1-t): partial sums; the final sum must vanish
        long long run = 0;
        for (size_t i = 0; i < f.size(); ++i) {
            run += f[i];
            f[i] = run;
        }
        if (f.empty() || f.back() != 0)
            throw std::logic_error("Hilbert numerator not divisible by (1-t)");
        f.pop_back();
    }
    return f;
}

} // namespace detail

/// Projective dimension of the vanishing locus: Krull dimension of the
/// quotient ring minus one per projective factor (one for P^k, two for the
/// blocked P^k x P^k ring). nullopt means the locus is empty.
template <class K>
std::optional<int> dimension(const GroebnerBasis<K>& gb) {
    const int factors = gb.ring->blocked() ? 2 : 1;
    if (gb.gens.empty()) return gb.ring->nvars() - factors;
    if (gb.is_unit_ideal()) return std::nullopt;
    int affine = affine_dimension_of_monomials(leading_term_ideal(gb), gb.ring->nvars());
    if (affine < factors) return std::nullopt;
    return affine - factors;
}

/// Degree via the Hilbert polynomial of the leading-term ideal. Requires a
/// nonempty locus in a single-graded ring.
template <class K>
long long degree(const GroebnerBasis<K>& gb) {
    if (gb.ring->blocked())
        throw std::invalid_argument("degree: use affine_slice_count for product rings");
    if (!dimension(gb))
        throw std::domain_error("degree: empty locus");
    const int n = gb.ring->nvars();
    int affine = gb.gens.empty() ? n
                                 : affine_dimension_of_monomials(leading_term_ideal(gb), n);
    std::vector<long long> num =
        gb.gens.empty() ? std::vector<long long>{1}
                        : detail::hilbert_numerator(leading_term_ideal(gb));
    std::vector<long long> reduced = detail::divide_by_one_minus_t(std::move(num), n - affine);
    long long deg = 0;
    for (long long c : reduced) deg += c;
    return deg;
}

template <class K>
std::optional<int> dimension(const Ideal<K>& ideal) {
    return dimension(groebner_of(ideal));
}
template <class K>
long long degree(const Ideal<K>& ideal) {
    return degree(groebner_of(ideal));
}

/// Random linear form in the variable range [lo, hi) with small integer
/// coefficients in [-10, 10], never identically zero.
template <class K>
Poly<K> random_linear_form(const RingPtr& ring, int lo, int hi, SeededRng& rng) {
    while (true) {
        Poly<K> f = Poly<K>::zero(ring);
        for (int i = lo; i < hi; ++i) {
            long c = rng.int_in(-10, 10);
            if (c) f += Poly<K>::term(ring, Monomial::var(i), K(c));
        }
        if (!f.is_zero()) return f;
    }
}

/// Random bidegree-(1,1) form on a blocked ring, coefficients in [-10, 10].
template <class K>
Poly<K> random_bilinear_form(const RingPtr& ring, SeededRng& rng) {
    if (!ring->blocked()) throw std::invalid_argument("random_bilinear_form: ring not blocked");
    const int s = ring->block_split, n = ring->nvars();
    while (true) {
        Poly<K> f = Poly<K>::zero(ring);
        for (int i = 0; i < s; ++i)
            for (int j = s; j < n; ++j) {
                long c = rng.int_in(-10, 10);
                if (c) f += Poly<K>::term(ring, Monomial::var(i) * Monomial::var(j), K(c));
            }
        if (!f.is_zero()) return f;
    }
}

/// True iff the reduced basis of an affine (dehomogenized) ideal is
/// zero-dimensional: every variable carries a pure-power leading term.
template <class K>
bool is_zero_dimensional_affine(const GroebnerBasis<K>& gb) {
    const int n = gb.ring->nvars();
    std::vector<bool> covered(n, false);
    for (const auto& g : gb.gens) {
        const Monomial& lm = g.leading_monomial();
        std::uint32_t sup = lm.support_mask();
        if (lm.is_unit()) return true; // unit ideal: vacuously finite
        if (__builtin_popcount(sup) == 1) covered[__builtin_ctz(sup)] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!covered[i]) return false;
    return true;
}

/// Number of standard monomials (a vector-space dimension) of a
/// zero-dimensional affine basis.
template <class K>
long long standard_monomial_count(const GroebnerBasis<K>& gb) {
    if (!is_zero_dimensional_affine(gb))
        throw std::domain_error("standard_monomial_count: basis not zero-dimensional");
    if (gb.is_unit_ideal()) return 0;
    const int n = gb.ring->nvars();
    std::vector<Monomial> lts = leading_term_ideal(gb);
    std::vector<int> bound(n, -1);
    for (const auto& m : lts) {
        std::uint32_t sup = m.support_mask();
        if (__builtin_popcount(sup) == 1) {
            int v = __builtin_ctz(sup);
            if (bound[v] < 0 || m.e[v] < bound[v]) bound[v] = m.e[v];
        }
    }
    // enumerate the box below the pure-power bounds
    long long count = 0;
    Monomial probe;
    std::vector<int> cur(n, 0);
    while (true) {
        bool standard = true;
        for (const auto& m : lts)
            if (m.divides(probe)) { standard = false; break; }
        if (standard) ++count;
        int i = 0;
        for (; i < n; ++i) {
            if (cur[i] + 1 < bound[i]) {
                ++cur[i];
                probe.e[i] += 1;
                probe.deg += 1;
                break;
            }
            probe.deg -= cur[i];
            probe.e[i] = 0;
            cur[i] = 0;
        }
        if (i == n) break;
    }
    return count;
}

/// Solutions-with-multiplicity of the locus sliced by the given forms: the
/// quotient algebra dimension after generic seeded dehomogenization (one
/// affine chart per projective factor). Throws when the slice is not
/// zero-dimensional.
template <class K>
long long affine_slice_count(const Ideal<K>& ideal, const std::vector<Poly<K>>& forms,
                             std::uint64_t seed = 1, BuchbergerOptions opts = {}) {
    const RingPtr ring = ideal.ring;
    SeededRng rng(seed);
    const Poly<K> one = Poly<K>::constant(ring, K::one());
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Poly<K>> gens = ideal.gens;
        for (const auto& f : forms) gens.push_back(f);
        if (ring->blocked()) {
            gens.push_back(random_linear_form<K>(ring, 0, ring->block_split, rng) - one);
            gens.push_back(random_linear_form<K>(ring, ring->block_split, ring->nvars(), rng) - one);
        } else {
            gens.push_back(random_linear_form<K>(ring, 0, ring->nvars(), rng) - one);
        }
        GroebnerBasis<K> gb = buchberger(Ideal<K>(ring, std::move(gens)), opts);
        if (is_zero_dimensional_affine(gb)) return standard_monomial_count(gb);
    }
    throw std::domain_error("affine_slice_count: slice is not zero-dimensional");
}

} // namespace critloci
