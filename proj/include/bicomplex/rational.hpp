// Arbitrary-precision rational numbers, always reduced, denominator > 0.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace bcx {

// Thin value wrapper around mpq_class. Canonical form (gcd 1, positive
// denominator) is established at construction and preserved by every
// operation, so equality is representational equality.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    Rational(mpz_class num, mpz_class den) : q_(std::move(num), std::move(den)) { canonicalize(); }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }

    // Accepts "p", "p/q", optional leading sign on either part; normalizes
    // non-reduced and negative-denominator forms. Returns nullopt on garbage
    // or a zero denominator.
    static std::optional<Rational> from_string(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const { return Rational(mpq_class(1 / q_)); }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { q_ /= o.q_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void canonicalize() { q_.canonicalize(); }

    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::optional<Rational> Rational::from_string(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return std::nullopt;

    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = trim(text.substr(0, slash));
        den_part = trim(text.substr(slash + 1));
        if (num_part.empty() || den_part.empty()) return std::nullopt;
        if (den_part.find('/') != std::string_view::npos) return std::nullopt;
    }

    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid_int(num_part) || !valid_int(den_part)) return std::nullopt;

    // mpz_set_str rejects a leading '+'.
    if (num_part.front() == '+') num_part.remove_prefix(1);
    if (den_part.front() == '+') den_part.remove_prefix(1);
    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (den == 0) return std::nullopt;
    return Rational(std::move(num), std::move(den));
}

} // namespace bcx
