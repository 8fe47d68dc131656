#pragma once

// Sparse multivariate polynomials over an exact field. Terms are kept in
// strictly descending order under the ring's monomial order, with no zero
// coefficients, so equal polynomials have identical representations.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"
#include "monomial.hpp"

namespace critloci {

struct DegreeInfo {
    std::optional<int> total_degree; // nullopt for the zero polynomial
    bool homogeneous = false;
    std::optional<std::pair<int, int>> bidegree; // blocked rings, bihomogeneous only
};

template <class K>
class Poly {
public:
    using Term = std::pair<Monomial, K>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
        for (auto& t : terms)
            if (!t.second.is_zero()) terms_.push_back(std::move(t));
        normalize();
    }

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, K c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({Monomial::unit(), std::move(c)});
        return p;
    }
    static Poly variable(RingPtr ring, int i, int power = 1) {
        if (i < 0 || i >= ring->nvars()) throw std::out_of_range("Poly: variable index");
        Poly p(std::move(ring));
        p.terms_.push_back({Monomial::var(i, power), K::one()});
        return p;
    }
    static Poly term(RingPtr ring, Monomial m, K c) {
        Poly p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        require_nonzero();
        return terms_.front().first;
    }
    const K& leading_coefficient() const {
        require_nonzero();
        return terms_.front().second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit());
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.require_same_ring(b);
        Poly r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        const int nv = a.ring_->nvars();
        const auto& ord = a.ring_->order;
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = ord.compare(a.terms_[i].first, b.terms_[j].first, nv);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                K s = a.terms_[i].second + b.terms_[j].second;
                if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
                ++i; ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same_ring(b);
        Poly r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        const int nv = a.ring_->nvars();
        const auto& ord = a.ring_->order;
        auto cmp = [&](const Monomial& x, const Monomial& y) { return ord.compare(x, y, nv) > 0; };
        std::map<Monomial, K, decltype(cmp)> acc(cmp);
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m = ta.first * tb.first;
                K c = ta.second * tb.second;
                auto it = acc.find(m);
                if (it == acc.end()) acc.emplace(std::move(m), std::move(c));
                else it->second += c;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, std::move(c)});
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& c) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.second = t.second * c;
        return r;
    }

    /// Multiplication by a single term, preserving term order.
    Poly times_term(const Monomial& m, const K& c) const {
        Poly r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
        return r;
    }

    Poly monic() const {
        require_nonzero();
        return scaled(leading_coefficient().inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!a.ring_ || !b.ring_) return a.is_zero() && b.is_zero();
        return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// True when a and b generate the same principal ideal (a = c*b, c != 0).
    bool proportional_to(const Poly& o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        if (terms_.size() != o.terms_.size()) return false;
        K ratio = terms_[0].second / o.terms_[0].second;
        for (size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].first != o.terms_[i].first) return false;
            if (terms_[i].second != o.terms_[i].second * ratio) return false;
        }
        return true;
    }

    K evaluate(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != ring_->nvars())
            throw std::invalid_argument("Poly::evaluate: point length mismatch");
        K total = K::zero();
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (int i = 0; i < ring_->nvars(); ++i)
                for (int p = 0; p < m.e[i]; ++p) v *= point[i];
            total += v;
        }
        return total;
    }

    Poly partial_derivative(int var) const {
        if (var < 0 || var >= ring_->nvars())
            throw std::out_of_range("Poly::partial_derivative: variable index");
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            d.e[var] -= 1;
            d.deg -= 1;
            out.push_back({d, c * K(m.e[var])});
        }
        return Poly(ring_, std::move(out));
    }

    DegreeInfo degree_info() const {
        DegreeInfo info;
        if (terms_.empty()) return info; // zero polynomial: no degree
        int dmax = 0;
        bool homog = true;
        for (const auto& [m, c] : terms_) {
            dmax = std::max(dmax, m.deg);
            if (m.deg != terms_[0].first.deg) homog = false;
        }
        info.total_degree = dmax;
        info.homogeneous = homog;
        if (ring_->blocked()) {
            int s = ring_->block_split, nv = ring_->nvars();
            int bx = terms_[0].first.deg_range(0, s);
            int by = terms_[0].first.deg_range(s, nv);
            bool bihom = true;
            for (const auto& [m, c] : terms_)
                if (m.deg_range(0, s) != bx || m.deg_range(s, nv) != by) { bihom = false; break; }
            if (bihom) info.bidegree = {bx, by};
        }
        return info;
    }

    int total_degree_or(int fallback) const {
        return terms_.empty() ? fallback : degree_info().total_degree.value();
    }

    /// Reinterprets into a structurally different ring via an injective
    /// variable map: exponent of var i goes to new index var_map[i].
    Poly map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) {
            Monomial t;
            for (int i = 0; i < ring_->nvars(); ++i) {
                if (!m.e[i]) continue;
                int j = var_map[i];
                if (j < 0 || j >= target->nvars())
                    throw std::out_of_range("Poly::map_vars: bad target index");
                t.e[j] = m.e[i];
            }
            t.deg = m.deg;
            out.push_back({t, c});
        }
        return Poly(target, std::move(out));
    }

    /// Same variables, new order: re-sorts the terms.
    Poly in_ring(const RingPtr& target) const {
        if (target->nvars() != ring_->nvars())
            throw std::invalid_argument("Poly::in_ring: variable count mismatch");
        Poly r(target);
        r.terms_ = terms_;
        r.normalize();
        return r;
    }

    /// Substitutes images[i] for variable i; all images share one ring.
    Poly substitute(const std::vector<Poly>& images) const {
        if (static_cast<int>(images.size()) != ring_->nvars())
            throw std::invalid_argument("Poly::substitute: image count mismatch");
        RingPtr target = images.empty() ? ring_ : images[0].ring();
        Poly total = Poly::zero(target);
        for (const auto& [m, c] : terms_) {
            Poly prod = Poly::constant(target, c);
            for (int i = 0; i < ring_->nvars(); ++i)
                for (int p = 0; p < m.e[i]; ++p) prod = prod * images[i];
            total = total + prod;
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mag = neg ? cs.substr(1) : cs;
            if (m.is_unit()) {
                os << mag;
            } else {
                bool unit_coeff = (mag == "1");
                if (!unit_coeff) os << mag << "*";
                bool first_var = true;
                for (int i = 0; i < ring_->nvars(); ++i) {
                    if (!m.e[i]) continue;
                    if (!first_var) os << "*";
                    os << ring_->vars[i];
                    if (m.e[i] > 1) os << "^" << int(m.e[i]);
                    first_var = false;
                }
            }
        }
        return os.str();
    }

    /// Parses the format produced by str(): signed terms of the shape
    /// "c", "c*x0^2*x1" or "x0*x1" with rational (or integer) coefficients.
    static Poly parse(const RingPtr& ring, const std::string& text) {
        Parser p{ring, text, 0};
        Poly result = Poly::zero(ring);
        p.skip_ws();
        if (p.done()) throw std::invalid_argument("Poly::parse: empty input");
        bool lead_minus = p.accept('-');
        if (!lead_minus) p.accept('+');
        result += p.parse_term(lead_minus);
        p.skip_ws();
        while (!p.done()) {
            bool minus;
            if (p.accept('+')) minus = false;
            else if (p.accept('-')) minus = true;
            else throw std::invalid_argument("Poly::parse: expected '+' or '-' near offset " +
                                             std::to_string(p.pos));
            result += p.parse_term(minus);
            p.skip_ws();
        }
        return result;
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("Poly: zero polynomial has no leading term");
    }
    void require_same_ring(const Poly& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_ || *ring_ != *o.ring_)
            throw std::invalid_argument("Poly: operands live in different rings");
    }

    void normalize() {
        const int nv = ring_->nvars();
        const auto& ord = ring_->order;
        std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return ord.compare(a.first, b.first, nv) > 0;
        });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first) {
                merged.back().second += t.second;
                if (merged.back().second.is_zero()) merged.pop_back();
            } else if (!t.second.is_zero()) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

    struct Parser {
        RingPtr ring;
        const std::string& s;
        size_t pos;

        bool done() const { return pos >= s.size(); }
        void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }
        bool accept(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) { ++pos; return true; }
            return false;
        }

        Poly parse_term(bool negate) {
            skip_ws();
            K coeff = K::one();
            bool saw_coeff = false;
            if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
                coeff = K::from_string(parse_number());
                saw_coeff = true;
            }
            Monomial mono;
            bool saw_var = false;
            while (true) {
                skip_ws();
                if (saw_coeff || saw_var) {
                    size_t save = pos;
                    if (!accept('*')) {
                        // allow juxtaposition: next must start a variable
                        skip_ws();
                        if (done() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                            pos = save;
                            break;
                        }
                    }
                }
                skip_ws();
                if (done() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
                    if (saw_coeff || saw_var) break;
                    throw std::invalid_argument("Poly::parse: expected term near offset " +
                                                std::to_string(pos));
                }
                std::string name = parse_name();
                int idx = ring->var_index(name);
                if (idx < 0) throw std::invalid_argument("Poly::parse: unknown variable '" + name + "'");
                int power = 1;
                if (accept('^')) power = std::stoi(parse_number());
                mono.e[idx] = static_cast<std::uint8_t>(mono.e[idx] + power);
                mono.deg += power;
                saw_var = true;
            }
            if (negate) coeff = -coeff;
            return Poly::term(ring, mono, coeff);
        }

        std::string parse_number() {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("Poly::parse: expected number");
            size_t save = pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) { pos = save; } // trailing "3/": leave the slash alone
            }
            return s.substr(start, pos - start);
        }

        std::string parse_name() {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return s.substr(start, pos - start);
        }
    };
};

} // namespace critloci
