#pragma once

// Exact coefficient fields: arbitrary-precision rationals (GMP-backed) and a
// prime field GF(p) with a process-wide runtime modulus.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace critloci {

/// Exact rational number. Always stored reduced with a positive denominator.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static const char* field_name() { return "Q"; }
    static constexpr bool is_prime_field = false;

    /// Parses "a", "-a" or "a/b".
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// Reduced "a/b"; the "/1" of integers is omitted.
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// GF(p) with a process-wide modulus (default 32003). Set the modulus once,
/// before any elements are created; elements do not carry it.
class PrimeField {
public:
    PrimeField() : v_(0) {}
    PrimeField(long n) : v_(reduce(n)) {}

    static void set_modulus(std::int64_t p) {
        if (p < 2 || p > (std::int64_t(1) << 31))
            throw std::domain_error("PrimeField: modulus out of range");
        modulus_ = p;
    }
    static std::int64_t modulus() { return modulus_; }

    static PrimeField zero() { return PrimeField(0); }
    static PrimeField one() { return PrimeField(1); }
    static std::string field_name() { return "GF(" + std::to_string(modulus_) + ")"; }
    static constexpr bool is_prime_field = true;

    /// Parses "a" or "a/b" and reduces into the field.
    static PrimeField from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return PrimeField(parse_int(s));
        PrimeField num(parse_int(s.substr(0, slash)));
        PrimeField den(parse_int(s.substr(slash + 1)));
        return num / den;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::int64_t value() const { return v_; }

    PrimeField operator-() const { return from_raw(v_ == 0 ? 0 : modulus_ - v_); }
    PrimeField& operator+=(const PrimeField& o) {
        v_ += o.v_;
        if (v_ >= modulus_) v_ -= modulus_;
        return *this;
    }
    PrimeField& operator-=(const PrimeField& o) {
        v_ -= o.v_;
        if (v_ < 0) v_ += modulus_;
        return *this;
    }
    PrimeField& operator*=(const PrimeField& o) {
        v_ = (v_ * o.v_) % modulus_;
        return *this;
    }
    PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }

    friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }
    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.v_ == b.v_; }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return a.v_ != b.v_; }

    PrimeField inverse() const {
        if (v_ == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = modulus_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (a != 1) throw std::domain_error("PrimeField: modulus not prime?");
        return PrimeField(x0);
    }

    std::string str() const { return std::to_string(v_); }

private:
    static inline std::int64_t modulus_ = 32003;
    std::int64_t v_;

    static std::int64_t reduce(std::int64_t n) {
        n %= modulus_;
        if (n < 0) n += modulus_;
        return n;
    }
    static PrimeField from_raw(std::int64_t v) {
        PrimeField f;
        f.v_ = v;
        return f;
    }
    static std::int64_t parse_int(const std::string& s) {
        size_t pos = 0;
        long long n = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("PrimeField: cannot parse '" + s + "'");
        return n;
    }
};

} // namespace critloci
