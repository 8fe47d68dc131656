#pragma once

// Exponent vectors, monomial orders and ring descriptors shared by all
// polynomial machinery.

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace critloci {

inline constexpr int kMaxVars = 16;

/// Exponent vector with cached total degree. The ambient variable count is
/// owned by the Ring; unused slots stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    int deg = 0;

    static Monomial unit() { return Monomial{}; }
    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(power);
        m.deg = power;
        return m;
    }

    bool is_unit() const { return deg == 0; }

    int deg_range(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i) d += e[i];
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        r.deg = deg + o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o; caller guarantees divisibility.
    Monomial quotient_by(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        r.deg = deg - o.deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = std::max(e[i], o.e[i]);
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) m |= (1u << i);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg == b.deg && a.e == b.e;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

/// Total orders on monomials. ElimLast is a block order whose second block
/// (variables at index >= split) is compared first; it eliminates those
/// variables, which by convention are appended at the end of the ring.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, ElimLast };
    Kind kind = Kind::Grevlex;
    int split = 0; // ElimLast only: first index of the eliminated block

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elim_last(int split) { return {Kind::ElimLast, split}; }

    std::string tag() const {
        switch (kind) {
            case Kind::Grevlex: return "grevlex";
            case Kind::Lex: return "lex";
            case Kind::ElimLast: return "elim@" + std::to_string(split);
        }
        return "?";
    }
    static MonomialOrder from_tag(const std::string& t) {
        if (t == "grevlex") return grevlex();
        if (t == "lex") return lex();
        if (t.rfind("elim@", 0) == 0) return elim_last(std::stoi(t.substr(5)));
        throw std::invalid_argument("unknown monomial order '" + t + "'");
    }

    // 1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b, int nvars) const {
        switch (kind) {
            case Kind::Grevlex:
                return grevlex_range(a, b, 0, nvars);
            case Kind::Lex:
                for (int i = 0; i < nvars; ++i) {
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                }
                return 0;
            case Kind::ElimLast: {
                int c = grevlex_range(a, b, split, nvars);
                if (c) return c;
                return grevlex_range(a, b, 0, split);
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b, int nvars) const {
        return compare(a, b, nvars) < 0;
    }

private:
    static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
        int da = a.deg_range(lo, hi), db = b.deg_range(lo, hi);
        if (da != db) return da > db ? 1 : -1;
        for (int i = hi - 1; i >= lo; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        }
        return 0;
    }
};

/// Ring descriptor: named variables, an optional (x|y) block split, and the
/// monomial order used for canonical term layout.
struct Ring {
    std::vector<std::string> vars;
    int block_split = 0; // 0 = single block; else size of the leading block
    MonomialOrder order{};

    int nvars() const { return static_cast<int>(vars.size()); }
    bool blocked() const { return block_split > 0; }

    int var_index(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.vars == b.vars && a.block_split == b.block_split &&
               a.order.kind == b.order.kind && a.order.split == b.order.split;
    }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         int block_split = 0) {
    if (static_cast<int>(names.size()) > kMaxVars)
        throw std::invalid_argument("Ring: too many variables");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw std::invalid_argument("Ring: duplicate variable '" + names[i] + "'");
    auto r = std::make_shared<Ring>();
    r->vars = std::move(names);
    r->block_split = block_split;
    r->order = order;
    return r;
}

/// x0..xk style coordinate ring.
inline RingPtr coordinate_ring(char letter, int count,
                               MonomialOrder order = MonomialOrder::grevlex()) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 0; i < count; ++i) names.push_back(std::string(1, letter) + std::to_string(i));
    return make_ring(std::move(names), order);
}

/// Blocked ring x0..xk, y0..yk for bihomogeneous work; order is still a
/// single total-degree grevlex.
inline RingPtr product_ring(int k) {
    std::vector<std::string> names;
    for (int i = 0; i <= k; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 0; i <= k; ++i) names.push_back("y" + std::to_string(i));
    return make_ring(std::move(names), MonomialOrder::grevlex(), k + 1);
}

/// Same variables, different order.
inline RingPtr with_order(const RingPtr& r, MonomialOrder order) {
    auto s = std::make_shared<Ring>(*r);
    s->order = order;
    return s;
}

/// Appends auxiliary variables and switches to the order eliminating them.
inline RingPtr extend_for_elimination(const RingPtr& r, const std::vector<std::string>& aux) {
    auto names = r->vars;
    for (const auto& a : aux) names.push_back(a);
    return make_ring(std::move(names), MonomialOrder::elim_last(r->nvars()), r->block_split);
}

} // namespace critloci
